#pragma once

// Brute-force reference computations used as independent oracles. None of
// these go through the recurrences or root machinery under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "rootlace/polynomial.hpp"
#include "rootlace/rational.hpp"

namespace rootlace::oracle {

using Counts = std::vector<std::uint64_t>;

/// counts[d] = permutations of {1..n} with exactly d descents.
inline Counts descent_counts(unsigned n) {
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 1U);
  Counts counts(n == 0 ? 1 : n, 0);
  do {
    unsigned d = 0;
    for (unsigned i = 0; i + 1 < n; ++i) d += perm[i] > perm[i + 1] ? 1 : 0;
    ++counts[d];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return counts;
}

/// counts[k] = set partitions of {1..n} into exactly k blocks, enumerated
/// as restricted growth strings.
inline Counts set_partition_counts(unsigned n) {
  Counts counts(n + 1, 0);
  std::vector<unsigned> rgs(n, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned blocks) {
    if (pos == n) {
      ++counts[blocks];
      return;
    }
    for (unsigned b = 0; b <= blocks; ++b) {
      rgs[pos] = b;
      rec(pos + 1, std::max(blocks, b + 1));
    }
  };
  rec(0, 0);
  return counts;
}

/// counts[k] = ordered sequences of k nonempty sub-multisets whose union is
/// the multiset with the given multiplicities.
inline Counts composition_counts(const std::vector<unsigned>& mult) {
  unsigned total = 0;
  for (unsigned m : mult) total += m;
  std::map<std::vector<unsigned>, Counts> memo;
  std::function<Counts(const std::vector<unsigned>&)> rec = [&](const std::vector<unsigned>& rest) -> Counts {
    if (std::all_of(rest.begin(), rest.end(), [](unsigned v) { return v == 0; })) {
      Counts c(total + 1, 0);
      c[0] = 1;
      return c;
    }
    if (auto it = memo.find(rest); it != memo.end()) return it->second;
    Counts out(total + 1, 0);
    // First part: every nonzero sub-vector of `rest`.
    std::vector<unsigned> part(rest.size(), 0);
    while (true) {
      std::size_t i = 0;
      while (i < part.size() && part[i] == rest[i]) part[i++] = 0;
      if (i == part.size()) break;
      ++part[i];
      std::vector<unsigned> next(rest);
      for (std::size_t j = 0; j < rest.size(); ++j) next[j] -= part[j];
      const Counts sub = rec(next);
      for (std::size_t k = 0; k + 1 <= total; ++k) out[k + 1] += sub[k];
    }
    memo[rest] = out;
    return out;
  };
  return rec(mult);
}

/// Rows of Pascal's triangle by repeated addition.
inline std::vector<Counts> pascal(unsigned n_max) {
  std::vector<Counts> rows{{1}};
  for (unsigned n = 1; n <= n_max; ++n) {
    Counts row(n + 1, 1);
    for (unsigned k = 1; k < n; ++k) row[k] = rows[n - 1][k - 1] + rows[n - 1][k];
    rows.push_back(row);
  }
  return rows;
}

inline std::uint64_t factorial(unsigned k) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

/// Discriminant sign of a quadratic c0 + c1 x + c2 x^2.
inline int quadratic_discriminant_sign(const Polynomial& p) {
  const Rational d = p.coeff(1) * p.coeff(1) - Rational(4) * p.coeff(0) * p.coeff(2);
  return d.sign();
}

/// Seeded rational generator for property tests.
class RationalGen {
 public:
  explicit RationalGen(std::uint64_t seed) : eng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }

  Rational rational(long lo, long hi, long max_den = 5) {
    return Rational(mpz_class(integer(lo, hi)), mpz_class(integer(1, max_den)));
  }

  Polynomial poly(std::size_t degree, long lo = -9, long hi = 9) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i <= degree; ++i) c.push_back(rational(lo, hi));
    if (c.back().is_zero()) c.back() = 1;
    return Polynomial(c);
  }

  /// Distinct sorted values num/den with num in [lo, hi] and den in 1..max_den.
  std::vector<Rational> distinct_sorted(std::size_t count, long lo, long hi, long max_den = 5) {
    std::vector<Rational> v;
    while (v.size() < count) {
      const Rational r = rational(lo, hi, max_den);
      if (std::find(v.begin(), v.end(), r) == v.end()) v.push_back(r);
    }
    std::sort(v.begin(), v.end());
    return v;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace rootlace::oracle
