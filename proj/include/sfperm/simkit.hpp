#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sfperm/channel.hpp"
#include "sfperm/waveform.hpp"

namespace sfperm {

enum class ReceiverKind { kHungarian, kExhaustive };
enum class SimMode { kStatistic, kSampled };

ReceiverKind parse_receiver_kind(const std::string& name);
SimMode parse_sim_mode(const std::string& name);
std::string to_string(ReceiverKind kind);
std::string to_string(SimMode mode);

/// Block-error-rate sweep configuration. Waveform energy stays at
/// `waveform.energy` (1 by default) for every M; SNR is E/N0 per antenna.
struct SimConfig {
  int m = 4;
  int n_antennas = 2;
  ChannelKind channel = ChannelKind::kAwgn;
  double rician_k = 0.0;
  std::vector<double> snr_db{0.0};
  std::uint64_t trials = 100000;     ///< per SNR point (cap when target_errors > 0)
  std::uint64_t target_errors = 0;   ///< 0: fixed trial count; else stop once reached
  std::uint64_t master_seed = 1;
  ReceiverKind receiver = ReceiverKind::kHungarian;
  SimMode mode = SimMode::kStatistic;
  int workers = 0;                   ///< OpenMP threads; <= 0 keeps the default
  WaveformParams waveform{};         ///< M is overwritten by `m`

  void validate() const;
};

/// Trials are processed in batches of this size; early stopping is only
/// checked between batches, which keeps results independent of workers.
inline constexpr std::uint64_t kTrialBatch = 4096;

struct BlerPoint {
  double snr_db = 0.0;
  double bler = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t errors = 0;
  double ci_lo = 0.0;  ///< Wilson 95%
  double ci_hi = 0.0;
  bool target_reached = false;
};

struct WilsonInterval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Wilson score interval for a binomial proportion; z = 1.96 gives 95%.
WilsonInterval wilson_interval(std::uint64_t errors, std::uint64_t trials,
                               double z = 1.959963984540054);

/// One transmission: draw the symbol, encode, fade, form the receiver
/// statistics, detect, decode. Returns true on a block error. Every random
/// draw comes from streams keyed by (seed, point, trial).
bool simulate_trial(const SimConfig& cfg, std::uint64_t point_index, std::uint64_t trial_index,
                    double n0);

/// OpenMP sweep over trials; deterministic for a given config and seed
/// regardless of worker count.
std::vector<BlerPoint> run_bler_sweep(const SimConfig& cfg);

/// Single-threaded reference of run_bler_sweep; identical output.
std::vector<BlerPoint> run_bler_sweep_serial(const SimConfig& cfg);

}  // namespace sfperm
