#pragma once

#include <complex>
#include <vector>

#include "sfperm/lehmer.hpp"

namespace sfperm {

using cplx = std::complex<double>;

/// Stepped-frequency waveform parameters. Tones are f0 + k*delta_f for
/// k = 0..M-1; delta_f*T must be a positive integer so that the tones are
/// orthogonal over one pulse.
struct WaveformParams {
  int m = 4;
  double pulse_width_s = 1.0;
  double delta_f_hz = 1.0;
  double f0_hz = 0.0;
  double energy = 1.0;
  int oversampling = 0;  ///< samples per pulse; 0 selects the default

  /// delta_f * T as an integer; throws if it is not one.
  int tone_spacing_multiple() const;
  /// Resolved samples per pulse (default 8*M*(delta_f*T)).
  int samples_per_pulse() const;
  double sample_rate_hz() const { return samples_per_pulse() / pulse_width_s; }
  double duration_s() const { return m * pulse_width_s; }
  /// Peak amplitude sqrt(E/(M T)).
  double amplitude() const;
  void validate() const;
};

int default_oversampling(int m, int spacing_multiple);

/// Uniformly sampled complex baseband signal starting at t0.
struct ComplexSignal {
  std::vector<cplx> samples;
  double sample_rate_hz = 1.0;
  double t0_s = 0.0;

  double dt() const { return 1.0 / sample_rate_hz; }
  std::size_t size() const { return samples.size(); }
  /// Sum |s|^2 dt.
  double energy() const;
};

/// f0 + order[m]*delta_f for every pulse m.
std::vector<double> tone_frequencies(const Permutation& perm, const WaveformParams& params);

/// Samples of the waveform on [0, M T); sample k sits at t = k/fs and the
/// sample at t = mT belongs to pulse m.
ComplexSignal synthesize(const Permutation& perm, const WaveformParams& params);

/// Continuous-time value s(t) with the same left-closed pulse convention.
cplx waveform_value(const Permutation& perm, const WaveformParams& params, double t);

}  // namespace sfperm
