#include "sfperm/radar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <omp.h>

#include "sfperm/errors.hpp"
#include "sfperm/quadrature.hpp"

namespace sfperm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// sin(x)/x with a short series near zero, where the quotient is 0/0.
double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

std::vector<double> pulse_omegas(const Permutation& perm, const WaveformParams& params) {
  std::vector<double> w = tone_frequencies(perm, params);
  for (double& x : w) x *= kTwoPi;
  return w;
}

cplx complex_af_with(std::span<const double> omegas, double T, double tau, double omega) {
  const int m_count = static_cast<int>(omegas.size());
  const double duration = m_count * T;
  if (std::abs(tau) >= duration) return {0.0, 0.0};

  cplx sum{0.0, 0.0};
  for (int m = 0; m < m_count; ++m) {
    // Pulse n of the delayed copy overlaps pulse m only when
    // |tau + (n - m) T| <= T.
    const double centre = m - tau / T;
    const int n_lo = std::max(0, static_cast<int>(std::ceil(centre - 1.0)));
    const int n_hi = std::min(m_count - 1, static_cast<int>(std::floor(centre + 1.0)));
    const double wm = omegas[static_cast<std::size_t>(m)];
    for (int n = n_lo; n <= n_hi; ++n) {
      const double wn = omegas[static_cast<std::size_t>(n)];
      const cplx pulse = pulse_af(tau + (n - m) * T, omega - wn + wm, T);
      if (pulse == cplx{0.0, 0.0}) continue;
      const double phase = omega * m * T - wn * ((m - n) * T - tau);
      sum += pulse * std::polar(1.0, phase);
    }
  }
  return sum / duration;
}

}  // namespace

cplx pulse_af(double tau, double omega, double pulse_width_s) {
  const double T = pulse_width_s;
  const double overlap = T - std::abs(tau);
  if (overlap <= 0.0) return {0.0, 0.0};
  // Both delay branches reduce to e^{j omega (T + tau)/2} (T - |tau|) sinc(omega (T - |tau|)/2).
  return std::polar(overlap * sinc(0.5 * omega * overlap), 0.5 * omega * (T + tau));
}

cplx complex_af(const Permutation& perm, const WaveformParams& params, double tau, double omega) {
  const std::vector<double> w = pulse_omegas(perm, params);
  return complex_af_with(w, params.pulse_width_s, tau, omega);
}

cplx af_numeric_oracle(const Permutation& perm, const WaveformParams& params, double tau,
                       double omega) {
  WaveformParams unit = params;
  unit.energy = 1.0;
  unit.validate();
  if (perm.size() != unit.m) throw ValidationError("permutation length does not match M");
  const double T = unit.pulse_width_s;
  const double duration = unit.m * T;
  const double lo = std::max(0.0, tau);
  const double hi = std::min(duration, duration + tau);
  if (hi <= lo) return {0.0, 0.0};

  std::vector<double> edges{lo, hi};
  for (int k = 0; k <= unit.m; ++k) {
    for (double e : {k * T, tau + k * T}) {
      if (e > lo && e < hi) edges.push_back(e);
    }
  }
  std::sort(edges.begin(), edges.end());

  // Highest phase rate of the integrand: omega plus the widest tone gap.
  const double rate = std::abs(omega) + kTwoPi * (unit.m - 1) * unit.delta_f_hz + kTwoPi / T;
  const auto integrand = [&](double u) {
    return waveform_value(perm, unit, u) * std::conj(waveform_value(perm, unit, u - tau)) *
           std::polar(1.0, omega * u);
  };
  cplx total{0.0, 0.0};
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double a = edges[i];
    const double b = edges[i + 1];
    if (b - a <= 1e-15 * T) continue;
    const int pieces = 1 + static_cast<int>(std::ceil((b - a) * rate));
    total += gauss_legendre(integrand, a, b, pieces);
  }
  return total;
}

std::vector<double> linear_axis(double lo, double hi, int points) {
  if (points < 1) throw ValidationError("axis needs at least one point");
  std::vector<double> axis(static_cast<std::size_t>(points));
  if (points == 1) {
    axis[0] = lo;
    return axis;
  }
  const double step = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) axis[static_cast<std::size_t>(i)] = lo + i * step;
  axis.back() = hi;
  return axis;
}

AFGrid af_grid_serial(const Permutation& perm, const WaveformParams& params,
                      std::span<const double> tau_axis, std::span<const double> omega_axis) {
  const std::vector<double> w = pulse_omegas(perm, params);
  AFGrid grid{{tau_axis.begin(), tau_axis.end()}, {omega_axis.begin(), omega_axis.end()}, {}};
  grid.values.resize(tau_axis.size() * omega_axis.size());
  for (std::size_t i = 0; i < tau_axis.size(); ++i) {
    for (std::size_t j = 0; j < omega_axis.size(); ++j) {
      grid.values[i * omega_axis.size() + j] =
          std::abs(complex_af_with(w, params.pulse_width_s, tau_axis[i], omega_axis[j]));
    }
  }
  return grid;
}

AFGrid af_grid(const Permutation& perm, const WaveformParams& params,
               std::span<const double> tau_axis, std::span<const double> omega_axis, int workers) {
  const std::vector<double> w = pulse_omegas(perm, params);
  AFGrid grid{{tau_axis.begin(), tau_axis.end()}, {omega_axis.begin(), omega_axis.end()}, {}};
  const auto n_omega = static_cast<std::ptrdiff_t>(omega_axis.size());
  const auto cells = static_cast<std::ptrdiff_t>(tau_axis.size()) * n_omega;
  grid.values.resize(static_cast<std::size_t>(cells));
  const int threads = workers > 0 ? workers : omp_get_max_threads();
  const double T = params.pulse_width_s;
#pragma omp parallel for schedule(static) num_threads(threads)
  for (std::ptrdiff_t cell = 0; cell < cells; ++cell) {
    const auto i = static_cast<std::size_t>(cell / n_omega);
    const auto j = static_cast<std::size_t>(cell % n_omega);
    grid.values[static_cast<std::size_t>(cell)] =
        std::abs(complex_af_with(w, T, tau_axis[i], omega_axis[j]));
  }
  return grid;
}

std::vector<double> zero_doppler_cut(const Permutation& perm, const WaveformParams& params,
                                     std::span<const double> tau_axis) {
  const std::vector<double> w = pulse_omegas(perm, params);
  std::vector<double> out;
  out.reserve(tau_axis.size());
  for (double tau : tau_axis) out.push_back(std::abs(complex_af_with(w, params.pulse_width_s, tau, 0.0)));
  return out;
}

std::vector<double> zero_delay_cut(const Permutation& perm, const WaveformParams& params,
                                   std::span<const double> omega_axis) {
  const std::vector<double> w = pulse_omegas(perm, params);
  std::vector<double> out;
  out.reserve(omega_axis.size());
  for (double omega : omega_axis) {
    out.push_back(std::abs(complex_af_with(w, params.pulse_width_s, 0.0, omega)));
  }
  return out;
}

double ridge_covariance(const AFGrid& grid, double threshold, DopplerAxis axis) {
  if (grid.tau_axis.empty() || grid.omega_axis.empty()) {
    throw ValidationError("ridge covariance needs a non-empty grid");
  }
  const auto [tau_lo, tau_hi] = std::minmax_element(grid.tau_axis.begin(), grid.tau_axis.end());
  const auto [om_lo, om_hi] = std::minmax_element(grid.omega_axis.begin(), grid.omega_axis.end());
  const double tau_scale = std::max(std::abs(*tau_lo), std::abs(*tau_hi));
  const double om_scale = std::max(std::abs(*om_lo), std::abs(*om_hi));
  const double sign = axis == DopplerAxis::kMismatch ? 1.0 : -1.0;

  double count = 0.0;
  double sx = 0.0;
  double sy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < grid.tau_axis.size(); ++i) {
    for (std::size_t j = 0; j < grid.omega_axis.size(); ++j) {
      if (grid.at(i, j) <= threshold) continue;
      const double x = tau_scale > 0.0 ? grid.tau_axis[i] / tau_scale : 0.0;
      const double y = om_scale > 0.0 ? sign * grid.omega_axis[j] / om_scale : 0.0;
      count += 1.0;
      sx += x;
      sy += y;
      sxy += x * y;
    }
  }
  if (count == 0.0) return 0.0;
  return sxy / count - (sx / count) * (sy / count);
}

double noise_constant(double n0) {
  if (!(n0 > 0.0)) throw ValidationError("N0 must be positive");
  return (2.0 / n0) * (1.0 / (1.0 + n0));
}

double tone_sweep_moment(const Permutation& perm, const WaveformParams& params) {
  const std::vector<double> w = pulse_omegas(perm, params);
  double sum = 0.0;
  for (std::size_t m = 0; m < w.size(); ++m) sum += (2.0 * static_cast<double>(m) + 1.0) * w[m];
  return sum;
}

DelayMoments delay_moments(const WaveformParams& params) {
  params.validate();
  const double span = params.duration_s();
  return DelayMoments{span / 2.0, span * span / 3.0};
}

FisherMatrix fisher_matrix(const Permutation& perm, const WaveformParams& params, double n0,
                           double bandwidth_hz) {
  params.validate();
  if (!(bandwidth_hz > 0.0)) throw ValidationError("receiver bandwidth B must be positive");
  const double T = params.pulse_width_s;
  const double m = params.m;
  FisherMatrix f;
  f.c = noise_constant(n0);
  f.bandwidth_hz = bandwidth_hz;
  f.omega0 = kTwoPi * params.f0_hz;
  f.low_bt = bandwidth_hz * T < 10.0;
  f.j11 = (2.0 * bandwidth_hz * f.c / T) * (1.0 - ((m - 1.0) / m) * std::cos(f.omega0 * T));
  f.j12 = -(f.c * T * T / 2.0) * tone_sweep_moment(perm, params);
  f.j22 = f.c * m * m * T * T / 12.0;
  return f;
}

Crlb crlb_full(const FisherMatrix& fisher) {
  const double det = fisher.determinant();
  if (!(fisher.j11 > 0.0) || !(fisher.j22 > 0.0) || !(det > 0.0)) {
    throw NumericError("Fisher matrix is not positive definite: J11=" + std::to_string(fisher.j11) +
                       " J12=" + std::to_string(fisher.j12) + " J22=" + std::to_string(fisher.j22) +
                       " det=" + std::to_string(det));
  }
  return Crlb{fisher.j22 / det, fisher.j11 / det};
}

Crlb crlb_full_closed_form(const Permutation& perm, const WaveformParams& params, double n0,
                           double bandwidth_hz) {
  params.validate();
  const double c = noise_constant(n0);
  const double T = params.pulse_width_s;
  const double m = params.m;
  const double B = bandwidth_hz;
  const double g = 1.0 - ((m - 1.0) / m) * std::cos(kTwoPi * params.f0_hz * T);
  const double s = tone_sweep_moment(perm, params);
  const double tau_den = 2.0 * m * m * B * g - 3.0 * T * T * T * s * s;
  const double omega_den = m * m * B * T / 6.0 * g - T * T * T * T / 4.0 * s * s;
  if (!(tau_den > 0.0) || !(omega_den > 0.0)) {
    throw NumericError("closed-form CRLB denominator is not positive");
  }
  return Crlb{(m * m * T / tau_den) / c, (2.0 * B / T * g / omega_den) / c};
}

Crlb crlb_simplified(const WaveformParams& params, double n0, double bandwidth_hz) {
  params.validate();
  if (!(bandwidth_hz > 0.0)) throw ValidationError("receiver bandwidth B must be positive");
  const double c = noise_constant(n0);
  const double T = params.pulse_width_s;
  const double m = params.m;
  const double cosine = std::cos(kTwoPi * params.f0_hz * T);
  return Crlb{(m * T / (2.0 * bandwidth_hz * (m - (m - 1.0) * cosine))) / c,
              (12.0 / (m * m * T * T)) / c};
}

}  // namespace sfperm
