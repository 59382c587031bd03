#pragma once

#include <span>
#include <vector>

#include "sfperm/lehmer.hpp"
#include "sfperm/waveform.hpp"

namespace sfperm {

// Delays are in seconds and Doppler in rad/s throughout this module. The
// waveform is normalised to unit energy; params.energy is ignored.

/// Complex ambiguity function of the rectangular pulse of width T:
/// integral of s_p(s) s_p(s - tau) e^{j omega s} ds.
cplx pulse_af(double tau, double omega, double pulse_width_s);

/// Complex ambiguity function A(tau, omega) = integral s(u) s*(u - tau)
/// e^{j omega u} du, assembled from pulse ambiguity functions. Only pulse
/// pairs whose supports overlap are visited.
cplx complex_af(const Permutation& perm, const WaveformParams& params, double tau, double omega);

/// Same integral by direct quadrature of the continuous waveform, split at
/// every pulse edge of s(u) and s(u - tau). Reference for complex_af.
cplx af_numeric_oracle(const Permutation& perm, const WaveformParams& params, double tau,
                       double omega);

/// |A| sampled on a delay x Doppler grid; values are row-major by delay.
struct AFGrid {
  std::vector<double> tau_axis;
  std::vector<double> omega_axis;
  std::vector<double> values;

  double at(std::size_t i_tau, std::size_t i_omega) const {
    return values[i_tau * omega_axis.size() + i_omega];
  }
};

/// Evenly spaced axis of `points` values over [lo, hi].
std::vector<double> linear_axis(double lo, double hi, int points);

/// Grid evaluation, OpenMP-parallel over cells. `workers` <= 0 keeps the
/// OpenMP default. Bit-identical to af_grid_serial.
AFGrid af_grid(const Permutation& perm, const WaveformParams& params,
               std::span<const double> tau_axis, std::span<const double> omega_axis,
               int workers = 0);
AFGrid af_grid_serial(const Permutation& perm, const WaveformParams& params,
                      std::span<const double> tau_axis, std::span<const double> omega_axis);

/// |A(tau, 0)|: range response without Doppler mismatch.
std::vector<double> zero_doppler_cut(const Permutation& perm, const WaveformParams& params,
                                     std::span<const double> tau_axis);
/// |A(0, omega)|: velocity response without delay mismatch. Equals
/// |sinc(omega M T / 2)| for every permutation.
std::vector<double> zero_delay_cut(const Permutation& perm, const WaveformParams& params,
                                   std::span<const double> omega_axis);

/// Sign convention of the Doppler axis when reading the delay-Doppler plane.
enum class DopplerAxis {
  kMismatch,     ///< omega as in A(tau, omega) above
  kTargetError,  ///< estimate-minus-truth Doppler for an echo s(t - tau) e^{j omega t}
};

/// Signed covariance of the (delay, Doppler) coordinates of cells with
/// |A| > threshold. Positive means the ambiguous ridge occupies quadrants
/// I/III of the chosen plane, negative II/IV. Coordinates are normalised by
/// the axis half-spans so the value is dimensionless.
double ridge_covariance(const AFGrid& grid, double threshold, DopplerAxis axis);

/// First and second moments of time weighted by |s(u)|^2 for the
/// unit-energy waveform: mean = MT/2, second = (MT)^2/3. Their variance
/// (MT)^2/12 is what sets J22.
struct DelayMoments {
  double mean = 0.0;    ///< s
  double second = 0.0;  ///< s^2
  double variance() const { return second - mean * mean; }
};
DelayMoments delay_moments(const WaveformParams& params);

/// 2x2 Fisher information for (delay, Doppler) of the echo model
/// r(t) = b s(t - tau) e^{j omega t} + n(t), closed form for large B T.
struct FisherMatrix {
  double j11 = 0.0;
  double j12 = 0.0;
  double j22 = 0.0;
  double c = 0.0;             ///< (2/N0) / (1 + N0)
  double bandwidth_hz = 0.0;  ///< receiver filter bandwidth B
  double omega0 = 0.0;        ///< 2 pi f0
  bool low_bt = false;        ///< B T < 10: closed form not trustworthy

  double j21() const { return j12; }
  double determinant() const { return j11 * j22 - j12 * j12; }
};

double noise_constant(double n0);

/// sum_m (2m + 1) omega_m over the pulses of the waveform.
double tone_sweep_moment(const Permutation& perm, const WaveformParams& params);

/// J11 = (2BC/T)(1 - ((M-1)/M) cos(omega0 T)),
/// J12 = -(C T^2 / 2) sum_m (2m+1) omega_m,
/// J22 = C M^2 T^2 / 12.
FisherMatrix fisher_matrix(const Permutation& perm, const WaveformParams& params, double n0,
                           double bandwidth_hz);

struct Crlb {
  double tau = 0.0;    ///< s^2
  double omega = 0.0;  ///< (rad/s)^2
};

/// Diagonal of J^-1 by 2x2 inversion. Throws NumericError when J is not
/// positive definite.
Crlb crlb_full(const FisherMatrix& fisher);

/// The same bounds written out as explicit ratios in (M, T, B, omega0,
/// sweep moment). Kept as a regression cross-check of crlb_full.
Crlb crlb_full_closed_form(const Permutation& perm, const WaveformParams& params, double n0,
                           double bandwidth_hz);

/// Bounds with the delay-Doppler cross term dropped; independent of the
/// permutation.
Crlb crlb_simplified(const WaveformParams& params, double n0, double bandwidth_hz);

}  // namespace sfperm
