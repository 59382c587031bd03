#include "sfperm/simkit.hpp"

#include <cmath>
#include <random>

#include <omp.h>

#include "sfperm/errors.hpp"
#include "sfperm/lehmer.hpp"
#include "sfperm/receiver.hpp"
#include "sfperm/rng.hpp"

namespace sfperm {

ReceiverKind parse_receiver_kind(const std::string& name) {
  if (name == "hungarian") return ReceiverKind::kHungarian;
  if (name == "exhaustive") return ReceiverKind::kExhaustive;
  throw ValidationError("unknown receiver '" + name + "' (expected hungarian|exhaustive)");
}

SimMode parse_sim_mode(const std::string& name) {
  if (name == "statistic") return SimMode::kStatistic;
  if (name == "sampled") return SimMode::kSampled;
  throw ValidationError("unknown mode '" + name + "' (expected statistic|sampled)");
}

std::string to_string(ReceiverKind kind) {
  return kind == ReceiverKind::kHungarian ? "hungarian" : "exhaustive";
}

std::string to_string(SimMode mode) { return mode == SimMode::kStatistic ? "statistic" : "sampled"; }

void SimConfig::validate() const {
  if (m < 1 || m > kMaxLehmerM) throw ValidationError("M must be in [1, 20]");
  if (n_antennas < 1) throw ValidationError("antenna count N must be >= 1");
  if (!(rician_k >= 0.0)) throw ValidationError("Rician K must be >= 0");
  if (snr_db.empty()) throw ValidationError("SNR grid must not be empty");
  for (double s : snr_db) {
    if (!std::isfinite(s)) throw ValidationError("SNR values must be finite");
  }
  if (trials < 1) throw ValidationError("trials must be >= 1");
  if (receiver == ReceiverKind::kExhaustive && m > kMaxExhaustiveM) {
    throw CapabilityError("exhaustive receiver supports M <= " + std::to_string(kMaxExhaustiveM));
  }
  WaveformParams w = waveform;
  w.m = m;
  w.validate();
}

WilsonInterval wilson_interval(std::uint64_t errors, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(errors) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

bool simulate_trial(const SimConfig& cfg, std::uint64_t point_index, std::uint64_t trial_index,
                    double n0) {
  RngStream symbol_rng(cfg.master_seed, point_index, trial_index, DrawTag::kSymbol);
  RngStream fading_rng(cfg.master_seed, point_index, trial_index, DrawTag::kFading);
  RngStream noise_rng(cfg.master_seed, point_index, trial_index, DrawTag::kNoise);

  // Equally likely symbols over the whole rank space.
  std::uniform_int_distribution<std::uint64_t> pick(0, factorial(cfg.m) - 1);
  const SymbolRank sent{pick(symbol_rng), cfg.m};
  const Permutation perm = rank_to_permutation(sent);

  ChannelParams channel{cfg.channel, cfg.n_antennas, cfg.rician_k, n0};
  const FadingRealization fading = draw_fading(channel, fading_rng);

  WaveformParams wp = cfg.waveform;
  wp.m = cfg.m;
  const CorrelationMatrix r = [&] {
    if (cfg.mode == SimMode::kStatistic) return statistic_matrix(perm, fading, wp.energy, n0, noise_rng);
    const ComplexSignal tx = synthesize(perm, wp);
    const std::vector<ComplexSignal> rx = apply_channel(tx, fading, n0, noise_rng);
    return correlation_matrix(rx, fading, wp);
  }();

  const Permutation detected =
      cfg.receiver == ReceiverKind::kHungarian ? hungarian_detect(r) : exhaustive_detect(r);
  return permutation_to_rank(detected).value != sent.value;
}

namespace {

template <typename BatchCounter>
std::vector<BlerPoint> sweep(const SimConfig& cfg, BatchCounter&& count_batch) {
  cfg.validate();
  std::vector<BlerPoint> out;
  out.reserve(cfg.snr_db.size());
  const double energy = cfg.waveform.energy;
  for (std::size_t p = 0; p < cfg.snr_db.size(); ++p) {
    const double n0 = n0_from_snr_db(energy, cfg.snr_db[p]);
    BlerPoint point;
    point.snr_db = cfg.snr_db[p];
    std::uint64_t done = 0;
    while (done < cfg.trials) {
      const std::uint64_t batch = std::min(kTrialBatch, cfg.trials - done);
      point.errors += count_batch(p, done, batch, n0);
      done += batch;
      if (cfg.target_errors > 0 && point.errors >= cfg.target_errors) {
        point.target_reached = true;
        break;
      }
    }
    point.trials = done;
    point.bler = static_cast<double>(point.errors) / static_cast<double>(done);
    const WilsonInterval ci = wilson_interval(point.errors, done);
    point.ci_lo = ci.lo;
    point.ci_hi = ci.hi;
    out.push_back(point);
  }
  return out;
}

}  // namespace

std::vector<BlerPoint> run_bler_sweep_serial(const SimConfig& cfg) {
  return sweep(cfg, [&](std::size_t point, std::uint64_t first, std::uint64_t count, double n0) {
    std::uint64_t errors = 0;
    for (std::uint64_t t = first; t < first + count; ++t) {
      errors += simulate_trial(cfg, point, t, n0) ? 1 : 0;
    }
    return errors;
  });
}

std::vector<BlerPoint> run_bler_sweep(const SimConfig& cfg) {
  const int threads = cfg.workers > 0 ? cfg.workers : omp_get_max_threads();
  return sweep(cfg, [&](std::size_t point, std::uint64_t first, std::uint64_t count, double n0) {
    std::uint64_t errors = 0;
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static) reduction(+ : errors) num_threads(threads)
    for (std::int64_t i = 0; i < n; ++i) {
      errors += simulate_trial(cfg, point, first + static_cast<std::uint64_t>(i), n0) ? 1 : 0;
    }
    return errors;
  });
}

}  // namespace sfperm
