#include "sfperm/receiver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "sfperm/assignment.hpp"
#include "sfperm/errors.hpp"

namespace sfperm {

CorrelationMatrix::CorrelationMatrix(int m) : m_(m) {
  if (m < 1) throw ValidationError("correlation matrix must be at least 1x1");
  data_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0.0);
}

CorrelationMatrix::CorrelationMatrix(int m, std::vector<double> row_major)
    : m_(m), data_(std::move(row_major)) {
  if (m < 1) throw ValidationError("correlation matrix must be at least 1x1");
  if (data_.size() != static_cast<std::size_t>(m) * static_cast<std::size_t>(m)) {
    throw ValidationError("correlation matrix data has wrong size");
  }
  for (double x : data_) {
    if (!std::isfinite(x)) throw ValidationError("correlation matrix has a non-finite entry");
  }
}

CorrelationMatrix CorrelationMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int m = static_cast<int>(rows.size());
  std::vector<double> data;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != m) {
      throw ValidationError("correlation matrix must be square: row of length " +
                            std::to_string(row.size()) + " in a " + std::to_string(m) +
                            "-row matrix");
    }
    data.insert(data.end(), row.begin(), row.end());
  }
  return CorrelationMatrix(m, std::move(data));
}

double CorrelationMatrix::objective(const Permutation& perm) const {
  if (perm.size() != m_) throw ValidationError("permutation size does not match matrix");
  double sum = 0.0;
  for (int n = 0; n < m_; ++n) sum += (*this)(n, perm[n]);
  return sum;
}

CorrelationMatrix correlation_matrix(std::span<const ComplexSignal> received,
                                     const FadingRealization& fading, const WaveformParams& params) {
  params.validate();
  if (received.size() != fading.h.size()) {
    throw ValidationError("received " + std::to_string(received.size()) +
                          " antenna signals but channel has " + std::to_string(fading.h.size()));
  }
  const int m = params.m;
  const int per_pulse = params.samples_per_pulse();
  const std::size_t expected = static_cast<std::size_t>(m) * static_cast<std::size_t>(per_pulse);
  const double fs = params.sample_rate_hz();
  for (const ComplexSignal& rx : received) {
    if (rx.size() != expected || std::abs(rx.sample_rate_hz - fs) > 1e-9 * fs ||
        std::abs(rx.t0_s) > 0.5 / fs) {
      throw ValidationError("received signal grid does not match the waveform grid");
    }
  }

  // Channel-combined signal h^H r(t).
  std::vector<cplx> combined(expected, cplx{0.0, 0.0});
  for (std::size_t a = 0; a < received.size(); ++a) {
    const cplx hc = std::conj(fading.h[a]);
    for (std::size_t k = 0; k < expected; ++k) combined[k] += hc * received[a].samples[k];
  }

  // conj(phi_m) on one pulse, unit energy.
  const double dt = 1.0 / fs;
  const double basis_amp = 1.0 / std::sqrt(params.pulse_width_s);
  std::vector<cplx> basis(static_cast<std::size_t>(m) * static_cast<std::size_t>(per_pulse));
  for (int tone = 0; tone < m; ++tone) {
    const double w = 2.0 * std::numbers::pi * (params.f0_hz + tone * params.delta_f_hz);
    for (int k = 0; k < per_pulse; ++k) {
      basis[static_cast<std::size_t>(tone) * per_pulse + k] = std::polar(basis_amp, -w * (k * dt));
    }
  }

  CorrelationMatrix r(m);
  for (int slot = 0; slot < m; ++slot) {
    const cplx* y = combined.data() + static_cast<std::size_t>(slot) * per_pulse;
    for (int tone = 0; tone < m; ++tone) {
      const cplx* phi = basis.data() + static_cast<std::size_t>(tone) * per_pulse;
      cplx acc{0.0, 0.0};
      for (int k = 0; k < per_pulse; ++k) acc += y[k] * phi[k];
      r(slot, tone) = acc.real() * dt;
    }
  }
  return r;
}

CorrelationMatrix statistic_matrix(const Permutation& perm, const FadingRealization& fading,
                                   double energy, double n0, RngStream& rng) {
  if (!(energy > 0.0)) throw ValidationError("energy must be positive");
  if (!(n0 >= 0.0)) throw ValidationError("N0 must be non-negative");
  const int m = perm.size();
  const double signal = energy / m * fading.gain;
  const double sigma = std::sqrt(energy * n0 / (2.0 * m) * fading.gain);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CorrelationMatrix r(m);
  for (int slot = 0; slot < m; ++slot) {
    for (int tone = 0; tone < m; ++tone) {
      r(slot, tone) = sigma * gauss(rng) + (tone == perm[slot] ? signal : 0.0);
    }
  }
  return r;
}

Permutation hungarian_detect(const CorrelationMatrix& r) {
  // Maximising the selected sum is minimising it on -R.
  std::vector<double> cost(r.data().begin(), r.data().end());
  for (double& c : cost) c = -c;
  Assignment best = solve_min_assignment(cost, r.size());
  return Permutation(std::move(best.row_to_col));
}

Permutation exhaustive_detect(const CorrelationMatrix& r) {
  const int m = r.size();
  if (m > kMaxExhaustiveM) {
    throw CapabilityError("exhaustive detection supports M <= " + std::to_string(kMaxExhaustiveM) +
                          ", got M = " + std::to_string(m));
  }
  std::vector<int> order(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) order[static_cast<std::size_t>(i)] = i;
  std::vector<int> best = order;
  double best_value = -std::numeric_limits<double>::infinity();
  do {
    double value = 0.0;
    for (int n = 0; n < m; ++n) value += r(n, order[static_cast<std::size_t>(n)]);
    if (value > best_value) {
      best_value = value;
      best = order;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return Permutation(std::move(best));
}

}  // namespace sfperm
