#pragma once

#include <span>
#include <vector>

#include "sfperm/channel.hpp"
#include "sfperm/lehmer.hpp"
#include "sfperm/rng.hpp"
#include "sfperm/waveform.hpp"

namespace sfperm {

/// Square matrix of per-pulse, per-tone correlation statistics: entry
/// (n, m) is the correlation of the channel-combined received signal in
/// pulse slot n with tone m. Detection picks one tone per slot and one slot
/// per tone maximising the sum of selected entries.
class CorrelationMatrix {
 public:
  explicit CorrelationMatrix(int m);
  CorrelationMatrix(int m, std::vector<double> row_major);
  static CorrelationMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int size() const { return m_; }
  double operator()(int slot, int tone) const { return data_[index(slot, tone)]; }
  double& operator()(int slot, int tone) { return data_[index(slot, tone)]; }
  std::span<const double> data() const { return data_; }

  /// Sum of entries (n, perm[n]).
  double objective(const Permutation& perm) const;

 private:
  std::size_t index(int slot, int tone) const {
    return static_cast<std::size_t>(slot) * static_cast<std::size_t>(m_) +
           static_cast<std::size_t>(tone);
  }

  int m_;
  std::vector<double> data_;
};

/// Correlation receiver on sampled signals. r(n, m) = Re sum_k h^H r(t_k)
/// phi_m*(t_k - nT) dt over pulse slot n, with phi_m the unit-energy tone
/// of frequency f0 + m delta_f on one pulse. In the noiseless case the
/// matched entry is sqrt(E/M) |h|^2.
CorrelationMatrix correlation_matrix(std::span<const ComplexSignal> received,
                                     const FadingRealization& fading, const WaveformParams& params);

/// Draws the correlation statistics directly:
/// r(n, m) = (E/M)|h|^2 [m == perm[n]] + g, g ~ N(0, E N0 |h|^2 / (2M)).
/// Equal in law to correlation_matrix() scaled by sqrt(E/M).
CorrelationMatrix statistic_matrix(const Permutation& perm, const FadingRealization& fading,
                                   double energy, double n0, RngStream& rng);

/// Optimal permutation by the Hungarian method on -R, O(M^3). Ties go to
/// the lexicographically smallest permutation.
Permutation hungarian_detect(const CorrelationMatrix& r);

/// Largest M accepted by exhaustive_detect.
inline constexpr int kMaxExhaustiveM = 10;

/// Reference detector: scans all M! permutations in lexicographic order and
/// keeps the first maximiser.
Permutation exhaustive_detect(const CorrelationMatrix& r);

}  // namespace sfperm
