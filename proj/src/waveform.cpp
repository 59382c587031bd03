#include "sfperm/waveform.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sfperm/errors.hpp"

namespace sfperm {

int WaveformParams::tone_spacing_multiple() const {
  if (!(pulse_width_s > 0.0)) throw ValidationError("pulse width T must be positive");
  const double product = delta_f_hz * pulse_width_s;
  const double rounded = std::round(product);
  if (rounded < 1.0 || std::abs(product - rounded) > 1e-9 * std::max(1.0, product)) {
    throw ValidationError("delta_f*T = " + std::to_string(product) +
                          " must be a positive integer for orthogonal tones");
  }
  return static_cast<int>(rounded);
}

int default_oversampling(int m, int spacing_multiple) { return 8 * m * spacing_multiple; }

int WaveformParams::samples_per_pulse() const {
  const int n = tone_spacing_multiple();
  return oversampling > 0 ? oversampling : default_oversampling(m, n);
}

double WaveformParams::amplitude() const { return std::sqrt(energy / (m * pulse_width_s)); }

void WaveformParams::validate() const {
  if (m < 1) throw ValidationError("tone count M must be >= 1");
  if (!(energy > 0.0)) throw ValidationError("energy E must be positive");
  if (!std::isfinite(f0_hz)) throw ValidationError("f0 must be finite");
  const int n = tone_spacing_multiple();
  if (oversampling < 0) throw ValidationError("oversampling must be non-negative (0 = default)");
  if (oversampling > 0 && oversampling < 2 * m * n) {
    throw ValidationError("oversampling " + std::to_string(oversampling) +
                          " below Nyquist minimum 2*M*(delta_f*T) = " + std::to_string(2 * m * n));
  }
}

double ComplexSignal::energy() const {
  double sum = 0.0;
  for (const cplx& s : samples) sum += std::norm(s);
  return sum * dt();
}

std::vector<double> tone_frequencies(const Permutation& perm, const WaveformParams& params) {
  params.validate();
  if (perm.size() != params.m) {
    throw ValidationError("permutation length " + std::to_string(perm.size()) +
                          " does not match M = " + std::to_string(params.m));
  }
  std::vector<double> freqs(static_cast<std::size_t>(params.m));
  for (int pulse = 0; pulse < params.m; ++pulse) {
    freqs[static_cast<std::size_t>(pulse)] = params.f0_hz + perm[pulse] * params.delta_f_hz;
  }
  return freqs;
}

ComplexSignal synthesize(const Permutation& perm, const WaveformParams& params) {
  const std::vector<double> freqs = tone_frequencies(perm, params);
  const int per_pulse = params.samples_per_pulse();
  const double amp = params.amplitude();
  const double dt = params.pulse_width_s / per_pulse;

  ComplexSignal out;
  out.sample_rate_hz = params.sample_rate_hz();
  out.t0_s = 0.0;
  out.samples.resize(static_cast<std::size_t>(params.m) * static_cast<std::size_t>(per_pulse));
  for (int pulse = 0; pulse < params.m; ++pulse) {
    const double w = 2.0 * std::numbers::pi * freqs[static_cast<std::size_t>(pulse)];
    for (int k = 0; k < per_pulse; ++k) {
      const auto idx = static_cast<std::size_t>(pulse) * static_cast<std::size_t>(per_pulse) +
                       static_cast<std::size_t>(k);
      out.samples[idx] = std::polar(amp, w * (k * dt));
    }
  }
  return out;
}

cplx waveform_value(const Permutation& perm, const WaveformParams& params, double t) {
  if (perm.size() != params.m) throw ValidationError("permutation length does not match M");
  const double T = params.pulse_width_s;
  if (t < 0.0 || t >= params.m * T) return {0.0, 0.0};
  int pulse = static_cast<int>(std::floor(t / T));
  pulse = std::min(pulse, params.m - 1);
  const double local = t - pulse * T;
  const double f = params.f0_hz + perm[pulse] * params.delta_f_hz;
  return std::polar(params.amplitude(), 2.0 * std::numbers::pi * f * local);
}

}  // namespace sfperm
