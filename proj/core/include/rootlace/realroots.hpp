#pragma once

#include <cstddef>
#include <vector>

#include "rootlace/polynomial.hpp"
#include "rootlace/rational.hpp"

namespace rootlace {

/// A rational number or one of the two infinities.
struct Bound {
  enum class Kind { kNegInf, kFinite, kPosInf };
  Kind kind = Kind::kFinite;
  Rational value;

  static Bound neg_inf() { return {Kind::kNegInf, 0}; }
  static Bound pos_inf() { return {Kind::kPosInf, 0}; }
  static Bound at(const Rational& v) { return {Kind::kFinite, v}; }
};

/// Sturm sequence of the square-free part of a polynomial: p0, p0', then
/// negated remainders down to a nonzero constant.
class SturmChain {
 public:
  /// Throws std::invalid_argument for constant or zero input.
  explicit SturmChain(const Polynomial& p);

  const std::vector<Polynomial>& polys() const { return polys_; }

  int variations(const Bound& x) const;

  /// Distinct real roots in (lo, hi].
  int count(const Bound& lo, const Bound& hi) const;

 private:
  std::vector<Polynomial> polys_;
};

SturmChain sturm_chain(const Polynomial& p);

/// Number of distinct real roots of p in (lo, hi]. Zero throws; a nonzero
/// constant has none.
int count_real_roots(const Polynomial& p, const Bound& lo, const Bound& hi);

/// 1 + max |c_i| / |c_lead|; every real root lies strictly inside (-B, B).
Rational cauchy_bound(const Polynomial& p);

/// An open interval (lo, hi) holding exactly one distinct real root, or the
/// exact root itself when lo == hi.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;

  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  friend bool operator==(const IsolatingInterval&, const IsolatingInterval&) = default;
};

/// Factors f_k (k = 1, 2, ...) whose roots are exactly the roots of p of
/// multiplicity k. Entries with no roots are constant 1.
std::vector<Polynomial> multiplicity_factors(const Polynomial& p);

/// Sorted, pairwise disjoint isolating intervals, one per distinct real root.
/// Rational roots are always reported as points.
std::vector<IsolatingInterval> isolate_roots(const Polynomial& p);

struct RealRootCertificate {
  bool is_real_rooted = false;
  std::size_t degree = 0;
  std::size_t distinct_real_roots = 0;
  std::vector<IsolatingInterval> roots;
};

/// Certifies membership in RZ. Constants are vacuously real-rooted; the zero
/// polynomial throws std::invalid_argument.
RealRootCertificate is_real_rooted(const Polynomial& p);

/// Narrows an isolating interval of p to width <= `width`. Throws
/// std::invalid_argument when the interval does not isolate a root of p.
IsolatingInterval refine(const IsolatingInterval& interval, const Polynomial& p,
                         const Rational& width);

namespace detail {

/// One bisection step on an open isolating interval of the square-free
/// polynomial `sqf`; collapses to a point if the midpoint is the root.
void bisect(IsolatingInterval& iv, const Polynomial& sqf);

/// Simplest rational (smallest denominator) strictly inside (lo, hi).
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace detail

}  // namespace rootlace
