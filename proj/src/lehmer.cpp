#include "sfperm/lehmer.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "sfperm/errors.hpp"

namespace sfperm {

namespace {

void require_block_size(int m) {
  if (m < 1 || m > kMaxLehmerM) {
    throw ValidationError("block size M must be in [1, " + std::to_string(kMaxLehmerM) +
                          "], got " + std::to_string(m));
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> order) : order_(std::move(order)) {
  if (order_.empty()) throw ValidationError("permutation must have at least one entry");
  const int m = size();
  std::vector<char> seen(order_.size(), 0);
  for (int v : order_) {
    if (v < 0 || v >= m) {
      throw ValidationError("permutation entry " + std::to_string(v) + " outside [0, " +
                            std::to_string(m - 1) + "]");
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw ValidationError("permutation entry " + std::to_string(v) + " repeated");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> order(static_cast<std::size_t>(std::max(m, 0)));
  for (int i = 0; i < m; ++i) order[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(order));
}

Permutation Permutation::descending(int m) { return identity(m).reversed(); }

Permutation Permutation::reversed() const {
  std::vector<int> order(order_.rbegin(), order_.rend());
  return Permutation(std::move(order));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(order_[i]);
  }
  return out;
}

Permutation parse_permutation(const std::string& text) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::vector<int> order;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw ValidationError("not a tone index: '" + token + "'");
    order.push_back(v);
  }
  return Permutation(std::move(order));
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > kMaxLehmerM) {
    throw ValidationError("factorial argument must be in [0, 20], got " + std::to_string(n));
  }
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Permutation rank_to_permutation(SymbolRank symbol) {
  require_block_size(symbol.m);
  const std::uint64_t count = factorial(symbol.m);
  if (symbol.value >= count) {
    throw std::domain_error("symbol " + std::to_string(symbol.value) + " outside [0, " +
                            std::to_string(count - 1) + "] for M=" + std::to_string(symbol.m));
  }
  std::vector<int> remaining(static_cast<std::size_t>(symbol.m));
  for (int i = 0; i < symbol.m; ++i) remaining[static_cast<std::size_t>(i)] = i;

  std::vector<int> order;
  order.reserve(remaining.size());
  std::uint64_t rest = symbol.value;
  for (int pos = 0; pos < symbol.m; ++pos) {
    const std::uint64_t radix = factorial(symbol.m - 1 - pos);
    const auto digit = static_cast<std::ptrdiff_t>(rest / radix);
    rest %= radix;
    order.push_back(remaining[static_cast<std::size_t>(digit)]);
    remaining.erase(remaining.begin() + digit);
  }
  return Permutation(std::move(order));
}

SymbolRank permutation_to_rank(const Permutation& perm) {
  const int m = perm.size();
  require_block_size(m);
  std::uint64_t value = 0;
  for (int pos = 0; pos < m; ++pos) {
    // Lehmer digit: later entries smaller than this one.
    std::uint64_t digit = 0;
    for (int later = pos + 1; later < m; ++later) {
      if (perm[later] < perm[pos]) ++digit;
    }
    value += digit * factorial(m - 1 - pos);
  }
  return SymbolRank{value, m};
}

int bits_per_block(int m) {
  require_block_size(m);
  return static_cast<int>(std::bit_width(factorial(m))) - 1;
}

std::uint64_t bit_mode_symbol_count(int m) { return std::uint64_t{1} << bits_per_block(m); }

}  // namespace sfperm
