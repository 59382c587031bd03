#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sfperm {

/// Largest block size whose M! fits in 64 bits.
inline constexpr int kMaxLehmerM = 20;

/// An ordering of the M tone indices 0..M-1. Entry m is the tone used in
/// pulse m. Construction validates that the entries form a permutation.
class Permutation {
 public:
  explicit Permutation(std::vector<int> order);

  static Permutation identity(int m);
  static Permutation descending(int m);

  int size() const { return static_cast<int>(order_.size()); }
  int operator[](int pulse) const { return order_[static_cast<std::size_t>(pulse)]; }
  std::span<const int> order() const { return order_; }

  Permutation reversed() const;
  std::string to_string() const;  // space separated, e.g. "0 3 2 1"

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.order_ <=> b.order_;
  }

 private:
  std::vector<int> order_;
};

/// Parses whitespace/comma separated tone indices.
Permutation parse_permutation(const std::string& text);

/// A data symbol in [0, M!).
struct SymbolRank {
  std::uint64_t value = 0;
  int m = 1;
};

/// n! for 0 <= n <= 20.
std::uint64_t factorial(int n);

/// Permutation at lexicographic index `symbol.value` among all permutations
/// of {0..M-1}. O(M^2), no permutation table.
Permutation rank_to_permutation(SymbolRank symbol);

/// Inverse of rank_to_permutation.
SymbolRank permutation_to_rank(const Permutation& perm);

/// floor(log2(M!)), exact. Number of data bits per waveform in bit mode.
int bits_per_block(int m);

/// Number of ranks usable in bit mode: 2^bits_per_block(m). Ranks at or
/// above this value are valid symbols but never produced from bit input.
std::uint64_t bit_mode_symbol_count(int m);

}  // namespace sfperm
