#include "rootlace/realroots.hpp"

#include <optional>
#include <stdexcept>

namespace rootlace {

namespace {

int sign_at_bound(const Polynomial& p, const Bound& b) {
  switch (b.kind) {
    case Bound::Kind::kPosInf:
      return p.leading_sign();
    case Bound::Kind::kNegInf: {
      const bool odd = (*p.degree() % 2) == 1;
      return odd ? -p.leading_sign() : p.leading_sign();
    }
    case Bound::Kind::kFinite:
      break;
  }
  return sign_at(p, b.value);
}

Rational floor_of(const Rational& q) {
  mpz_class f;
  const mpz_class num = q.numerator();
  const mpz_class den = q.denominator();
  mpz_fdiv_q(f.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return Rational(f);
}

// Simplest rational in the open interval (lo, hi) with 0 <= lo; no hi means +inf.
Rational simplest_nonneg(const Rational& lo, const std::optional<Rational>& hi) {
  const Rational n = floor_of(lo);
  const Rational next = n + Rational(1);
  if (!hi || next < *hi) return next;
  // (lo, hi) lies inside [n, n+1]; recurse on 1 / (x - n).
  const Rational inv_lo = Rational(1) / (*hi - n);
  if (lo == n) return n + Rational(1) / simplest_nonneg(inv_lo, std::nullopt);
  return n + Rational(1) / simplest_nonneg(inv_lo, Rational(1) / (lo - n));
}

void isolate_range(const SturmChain& chain, const Polynomial& sqf, const Rational& lo,
                   const Rational& hi, int count, std::vector<IsolatingInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    if (sign_at(sqf, hi) == 0) {
      out.push_back({hi, hi, 1});
      return;
    }
    if (sign_at(sqf, lo) != 0) {
      out.push_back({lo, hi, 1});
      return;
    }
  }
  const Rational mid = (lo + hi) * Rational(mpz_class(1), mpz_class(2));
  const int left = chain.count(Bound::at(lo), Bound::at(mid));
  isolate_range(chain, sqf, lo, mid, left, out);
  isolate_range(chain, sqf, mid, hi, count - left, out);
}

// Rational roots of a square-free polynomial with primitive integer leading
// coefficient L have denominators dividing L, so two of them are at least
// 1/L^2 apart. Once an interval is narrower than that, the only rational root
// it can hold is its simplest rational.
void snap_rational_root(IsolatingInterval& iv, const Polynomial& sqf, const Rational& max_width) {
  while (!iv.is_point() && iv.width() >= max_width) detail::bisect(iv, sqf);
  if (iv.is_point()) return;
  const Rational candidate = detail::simplest_between(iv.lo, iv.hi);
  if (sign_at(sqf, candidate) == 0) iv.lo = iv.hi = candidate;
}

bool root_in(const IsolatingInterval& iv, const Polynomial& factor) {
  if (factor.is_constant()) return false;
  if (iv.is_point()) return sign_at(factor, iv.lo) == 0;
  return sign_at(factor, iv.lo) * sign_at(factor, iv.hi) < 0;
}

}  // namespace

SturmChain::SturmChain(const Polynomial& p) {
  if (p.is_constant()) throw std::invalid_argument("no chain for constants");
  polys_.push_back(squarefree_part(p));
  polys_.push_back(derivative(polys_.front()));
  while (!polys_.back().is_constant()) {
    const auto& a = polys_[polys_.size() - 2];
    const auto& b = polys_.back();
    Polynomial r = -divmod(a, b).second;
    // Square-free input guarantees the chain ends in a nonzero constant.
    if (r.is_zero()) throw std::logic_error("Sturm chain hit zero remainder");
    polys_.push_back(std::move(r));
  }
}

int SturmChain::variations(const Bound& x) const {
  int changes = 0;
  int prev = 0;
  for (const auto& p : polys_) {
    const int s = sign_at_bound(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int SturmChain::count(const Bound& lo, const Bound& hi) const {
  return variations(lo) - variations(hi);
}

SturmChain sturm_chain(const Polynomial& p) { return SturmChain(p); }

int count_real_roots(const Polynomial& p, const Bound& lo, const Bound& hi) {
  if (p.is_zero()) throw std::invalid_argument("root count of zero polynomial");
  if (p.is_constant()) return 0;
  return SturmChain(p).count(lo, hi);
}

Rational cauchy_bound(const Polynomial& p) {
  if (p.is_constant()) throw std::invalid_argument("root bound of a constant");
  const auto& c = p.coeffs();
  const Rational lead = c.back().abs();
  Rational best = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    const Rational ratio = c[i].abs() / lead;
    if (ratio > best) best = ratio;
  }
  return Rational(1) + best;
}

std::vector<Polynomial> multiplicity_factors(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("multiplicities of zero polynomial");
  // g_k = gcd(g_{k-1}, g_{k-1}'), and g_{k-1} / g_k collects the roots of
  // multiplicity >= k.
  std::vector<Polynomial> at_least;
  Polynomial g = p.monic();
  while (!g.is_constant()) {
    Polynomial next = gcd(g, derivative(g));
    at_least.push_back(exact_div(g, next).monic());
    g = std::move(next);
  }
  std::vector<Polynomial> exact;
  for (std::size_t k = 0; k < at_least.size(); ++k) {
    if (k + 1 < at_least.size()) {
      exact.push_back(exact_div(at_least[k], at_least[k + 1]));
    } else {
      exact.push_back(at_least[k]);
    }
  }
  return exact;
}

std::vector<IsolatingInterval> isolate_roots(const Polynomial& p) {
  if (p.is_constant()) throw std::invalid_argument("no roots to isolate for constants");
  const SturmChain chain(p);
  const Polynomial& sqf = chain.polys().front();
  const Rational bound = cauchy_bound(sqf);
  std::vector<IsolatingInterval> out;
  const int total = chain.count(Bound::at(-bound), Bound::at(bound));
  isolate_range(chain, sqf, -bound, bound, total, out);

  const mpz_class lead = primitive_integer_coeffs(sqf).back();
  const Rational snap_width(mpz_class(1), lead * lead);
  const auto factors = multiplicity_factors(p);
  for (auto& iv : out) {
    snap_rational_root(iv, sqf, snap_width);
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (root_in(iv, factors[k])) {
        iv.multiplicity = static_cast<int>(k + 1);
        break;
      }
    }
  }
  return out;
}

RealRootCertificate is_real_rooted(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("ambiguous: zero polynomial");
  RealRootCertificate cert;
  cert.degree = *p.degree();
  if (p.is_constant()) {
    cert.is_real_rooted = true;
    return cert;
  }
  cert.roots = isolate_roots(p);
  cert.distinct_real_roots = cert.roots.size();
  std::size_t weighted = 0;
  for (const auto& r : cert.roots) weighted += static_cast<std::size_t>(r.multiplicity);
  cert.is_real_rooted = weighted == cert.degree;
  return cert;
}

IsolatingInterval refine(const IsolatingInterval& interval, const Polynomial& p,
                         const Rational& width) {
  if (width.sign() <= 0) throw std::invalid_argument("refinement width must be positive");
  if (p.is_constant()) throw std::invalid_argument("interval does not contain a root");
  const Polynomial sqf = squarefree_part(p);
  IsolatingInterval iv = interval;
  if (iv.is_point()) {
    if (sign_at(sqf, iv.lo) != 0) throw std::invalid_argument("interval does not contain a root");
    return iv;
  }
  if (iv.lo > iv.hi || sign_at(sqf, iv.lo) * sign_at(sqf, iv.hi) >= 0 ||
      count_real_roots(sqf, Bound::at(iv.lo), Bound::at(iv.hi)) != 1) {
    throw std::invalid_argument("interval does not contain a root");
  }
  while (!iv.is_point() && iv.width() > width) detail::bisect(iv, sqf);
  return iv;
}

namespace detail {

void bisect(IsolatingInterval& iv, const Polynomial& sqf) {
  if (iv.is_point()) return;
  const Rational mid = (iv.lo + iv.hi) * Rational(mpz_class(1), mpz_class(2));
  const int sm = sign_at(sqf, mid);
  if (sm == 0) {
    iv.lo = iv.hi = mid;
  } else if (sm == sign_at(sqf, iv.lo)) {
    iv.lo = mid;
  } else {
    iv.hi = mid;
  }
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("empty interval");
  if (lo.sign() < 0 && hi.sign() > 0) return 0;
  if (hi.sign() <= 0) return -simplest_nonneg(-hi, -lo);
  return simplest_nonneg(lo, hi);
}

}  // namespace detail

}  // namespace rootlace
