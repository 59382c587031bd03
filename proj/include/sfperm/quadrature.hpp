#pragma once

#include <array>
#include <cmath>

namespace sfperm {

/// Composite 8-point Gauss-Legendre rule on [a, b] split into `pieces`
/// equal panels. Nodes are interior, so integrands with jumps at a or b are
/// handled as long as the caller splits at every discontinuity.
template <typename F>
auto gauss_legendre(F&& f, double a, double b, int pieces) {
  static constexpr std::array<double, 4> kNodes = {0.1834346424956498, 0.5255324099163290,
                                                   0.7966664774136267, 0.9602898564975363};
  static constexpr std::array<double, 4> kWeights = {0.3626837833783620, 0.3137066458778873,
                                                     0.2223810344533745, 0.1012285362903763};
  using Result = decltype(f(a));
  Result total{};
  const double width = (b - a) / pieces;
  for (int p = 0; p < pieces; ++p) {
    const double mid = a + (p + 0.5) * width;
    const double half = 0.5 * width;
    Result panel{};
    for (std::size_t i = 0; i < kNodes.size(); ++i) {
      panel += kWeights[i] * (f(mid - half * kNodes[i]) + f(mid + half * kNodes[i]));
    }
    total += panel * half;
  }
  return total;
}

}  // namespace sfperm
