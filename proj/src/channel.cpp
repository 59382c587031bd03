#include "sfperm/channel.hpp"

#include <cmath>
#include <random>

#include "sfperm/errors.hpp"

namespace sfperm {

ChannelKind parse_channel_kind(const std::string& name) {
  if (name == "awgn") return ChannelKind::kAwgn;
  if (name == "rician") return ChannelKind::kRician;
  if (name == "rayleigh") return ChannelKind::kRayleigh;
  throw ValidationError("unknown channel '" + name + "' (expected awgn|rician|rayleigh)");
}

std::string to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::kAwgn:
      return "awgn";
    case ChannelKind::kRician:
      return "rician";
    case ChannelKind::kRayleigh:
      return "rayleigh";
  }
  return "unknown";
}

void ChannelParams::validate() const {
  if (n_antennas < 1) throw ValidationError("antenna count N must be >= 1");
  if (!(rician_k >= 0.0)) throw ValidationError("Rician K must be >= 0");
  if (!(n0 > 0.0)) throw ValidationError("noise variance N0 must be positive");
}

double ChannelParams::effective_k() const {
  return kind == ChannelKind::kRayleigh ? 0.0 : rician_k;
}

double snr_db_from(double energy, double n0) { return 10.0 * std::log10(energy / n0); }

double n0_from_snr_db(double energy, double snr_db) {
  return energy / std::pow(10.0, snr_db / 10.0);
}

FadingRealization FadingRealization::from(std::vector<cplx> h) {
  FadingRealization out;
  out.gain = 0.0;
  for (const cplx& x : h) out.gain += std::norm(x);
  out.h = std::move(h);
  return out;
}

FadingRealization draw_fading(const ChannelParams& params, RngStream& rng) {
  params.validate();
  const auto n = static_cast<std::size_t>(params.n_antennas);
  if (params.kind == ChannelKind::kAwgn) {
    return FadingRealization::from(std::vector<cplx>(n, cplx{1.0, 0.0}));
  }
  const double k = params.effective_k();
  const double los = std::sqrt(k / (k + 1.0));
  const double scatter = std::sqrt(1.0 / (k + 1.0));
  // CN(0,1): independent real and imaginary parts of variance 1/2.
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  std::vector<cplx> h(n);
  for (auto& hi : h) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    hi = cplx{los + scatter * re, scatter * im};
  }
  return FadingRealization::from(std::move(h));
}

double sampled_noise_variance(double n0, double sample_rate_hz) { return n0 * sample_rate_hz; }

std::vector<ComplexSignal> apply_channel(const ComplexSignal& signal, const FadingRealization& fading,
                                         double n0, RngStream& rng) {
  if (!(n0 >= 0.0)) throw ValidationError("noise variance N0 must be non-negative");
  const double sigma = std::sqrt(0.5 * sampled_noise_variance(n0, signal.sample_rate_hz));
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<ComplexSignal> out;
  out.reserve(fading.h.size());
  for (const cplx& hk : fading.h) {
    ComplexSignal rx;
    rx.sample_rate_hz = signal.sample_rate_hz;
    rx.t0_s = signal.t0_s;
    rx.samples.resize(signal.samples.size());
    for (std::size_t i = 0; i < signal.samples.size(); ++i) {
      rx.samples[i] = hk * signal.samples[i];
      if (sigma > 0.0) rx.samples[i] += cplx{sigma * gauss(rng), sigma * gauss(rng)};
    }
    out.push_back(std::move(rx));
  }
  return out;
}

}  // namespace sfperm
