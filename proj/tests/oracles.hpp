#pragma once

// Independent reference computations used only by the test suites.

#include "bergerspec/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

/// Pascal's triangle, no multiplicative formula.
inline std::uint64_t pascal(int n, int k) {
  if (k < 0 || n < k) return 0;
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(row.size() + 1, 1);
    for (std::size_t j = 1; j < row.size(); ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

/// Number of monomials of total degree `degree` in `vars` variables, by
/// explicit enumeration of exponent vectors.
inline std::uint64_t count_monomials(int vars, int degree) {
  if (degree < 0) return 0;
  std::function<std::uint64_t(int, int)> rec = [&](int remaining_vars, int remaining_deg) -> std::uint64_t {
    if (remaining_vars == 1) return 1;
    std::uint64_t total = 0;
    for (int e = 0; e <= remaining_deg; ++e) total += rec(remaining_vars - 1, remaining_deg - e);
    return total;
  };
  return rec(vars, degree);
}

/// Sorted distinct values of k(k+2) - q² + q²x over every (k, q) with k <= k_max,
/// with summed multiplicities 2(k+1) (q > 0) or k+1 (q = 0).
inline std::map<bergerspec::Rational, std::uint64_t> brute_levels(const bergerspec::Rational& x,
                                                                  unsigned k_max) {
  std::map<bergerspec::Rational, std::uint64_t> out;
  for (unsigned k = 0; k <= k_max; ++k) {
    for (unsigned q = 0; q <= k; ++q) {
      if ((k - q) % 2 != 0) continue;
      const bergerspec::Rational a = static_cast<long long>(k) * (k + 2) - static_cast<long long>(q) * q;
      const bergerspec::Rational b = static_cast<long long>(q) * q;
      out[a + b * x] += q == 0 ? k + 1 : 2 * (k + 1);
    }
  }
  return out;
}

}  // namespace oracle

namespace oracle {

/// The `position`-th (0-based, zero value first) distinct value, enumerating
/// every mode up to a k_max large enough that 2(k_max+1) exceeds it.
inline bergerspec::Rational brute_position(const bergerspec::Rational& x, std::size_t position) {
  unsigned k_max = static_cast<unsigned>(2 * position + 2);
  for (;;) {
    const auto levels = brute_levels(x, k_max);
    if (levels.size() > position) {
      auto it = levels.begin();
      std::advance(it, static_cast<std::ptrdiff_t>(position));
      if (bergerspec::Rational(2 * (k_max + 1)) > it->first) return it->first;
    }
    k_max *= 2;
  }
}

}  // namespace oracle
