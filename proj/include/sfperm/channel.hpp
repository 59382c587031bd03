#pragma once

#include <string>
#include <vector>

#include "sfperm/rng.hpp"
#include "sfperm/waveform.hpp"

namespace sfperm {

enum class ChannelKind { kAwgn, kRician, kRayleigh };

ChannelKind parse_channel_kind(const std::string& name);
std::string to_string(ChannelKind kind);

/// Receive-side channel description. SNR throughout is E/N0 per receive
/// antenna.
struct ChannelParams {
  ChannelKind kind = ChannelKind::kAwgn;
  int n_antennas = 1;
  double rician_k = 0.0;  ///< linear; ignored for AWGN, forced to 0 for Rayleigh
  double n0 = 1.0;        ///< complex noise variance N0

  void validate() const;
  /// K actually used when drawing (0 for Rayleigh).
  double effective_k() const;
};

double snr_db_from(double energy, double n0);
double n0_from_snr_db(double energy, double snr_db);

/// Block-constant channel vector h and its cached gain |h|^2.
struct FadingRealization {
  std::vector<cplx> h;
  double gain = 0.0;

  static FadingRealization from(std::vector<cplx> h);
  int n_antennas() const { return static_cast<int>(h.size()); }
};

/// h = sqrt(K/(K+1)) 1 + sqrt(1/(K+1)) u with u_i ~ CN(0,1). The LOS phases
/// are all one; |h|^2 does not depend on them. AWGN returns h = 1 (gain N).
FadingRealization draw_fading(const ChannelParams& params, RngStream& rng);

/// Per-sample complex noise variance that makes a unit-energy correlation
/// against the sampled signal see variance N0, as in continuous time.
double sampled_noise_variance(double n0, double sample_rate_hz);

/// One received signal per antenna: h_k s(t) + n_k(t).
std::vector<ComplexSignal> apply_channel(const ComplexSignal& signal, const FadingRealization& fading,
                                         double n0, RngStream& rng);

}  // namespace sfperm
