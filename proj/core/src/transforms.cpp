#include "rootlace/transforms.hpp"

#include <algorithm>
#include <stdexcept>

#include "rootlace/errors.hpp"
#include "rootlace/interlace.hpp"
#include "rootlace/pfseq.hpp"

namespace rootlace {

namespace {

void certify_output(TransformResult& res) {
  if (res.output.is_zero()) {
    // The zero polynomial is a constant and constants are in RZ.
    res.certificate = RealRootCertificate{true, 0, 0, {}};
    res.notes.push_back("output is the zero polynomial");
  } else {
    res.certificate = is_real_rooted(res.output);
  }
  if (res.hypothesis_ok && !res.certificate.is_real_rooted) {
    throw InternalContradiction("hypotheses hold but output " + res.output.to_string() +
                                " is not real-rooted");
  }
}

bool in_rz(const Polynomial& p) { return p.is_zero() || is_real_rooted(p).is_real_rooted; }

// Raises the first hard error when not forced.
void enforce(const std::vector<std::string>& violations, bool force) {
  if (violations.empty() || force) return;
  for (const auto& v : violations) {
    if (v == "real-rooted(f)") throw NotRealRooted("f");
    if (v == "real-rooted(g)") throw NotRealRooted("g");
    if (v == "pf(f)") throw NotPF("f");
    if (v == "pf(g)") throw NotPF("g");
  }
  throw HypothesisViolation(violations);
}

}  // namespace

TransformResult theorem_transform(const Polynomial& f, const Polynomial& g,
                                  const TransformParams& p, bool force) {
  if (f.is_zero()) throw ZeroPolynomial("f");
  TransformResult res;
  const bool f_rz = in_rz(f);
  const bool g_rz = in_rz(g);
  if (!f_rz) res.violations.push_back("real-rooted(f)");
  if (!g_rz) res.violations.push_back("real-rooted(g)");
  if (!g.is_zero() && f.leading_sign() != g.leading_sign()) {
    res.violations.push_back("leading-sign");
  }
  if (f_rz && g_rz && !leadsto(g, f)) res.violations.push_back("leadsto");
  if (p.gate().sign() < 0) res.violations.push_back("gate");
  enforce(res.violations, force);

  res.hypothesis_ok = res.violations.empty();
  res.output = combine(f, g, p.b, p.a, p.d, p.c);
  certify_output(res);
  return res;
}

TransformResult sum_rz(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero()) throw ZeroPolynomial("f");
  if (!in_rz(f)) throw NotRealRooted("f");
  if (!in_rz(g)) throw NotRealRooted("g");
  if (!leadsto(g, f)) throw HypothesisViolation({"leadsto"});

  TransformResult res;
  res.hypothesis_ok = true;
  res.output = f + g;
  certify_output(res);
  if (!g.is_zero() && f.leading_sign() == g.leading_sign()) {
    const bool left = leadsto(g, res.output);
    const bool right = leadsto(res.output, f);
    if (!left || !right) {
      throw InternalContradiction("chain g ~> f+g ~> f fails for " + res.output.to_string());
    }
    res.notes.push_back("verified g ~> f+g");
    res.notes.push_back("verified f+g ~> f");
  }
  return res;
}

TransformResult corollary_abcd(const Polynomial& f, const Polynomial& g,
                               const TransformParams& p, bool force) {
  if (f.is_zero()) throw ZeroPolynomial("f");
  TransformResult res;
  const bool f_pf = is_pf_polynomial(f);
  const bool g_pf = g.is_zero() || is_pf_polynomial(g);
  if (!f_pf) res.violations.push_back("pf(f)");
  if (!g_pf) res.violations.push_back("pf(g)");
  if (f_pf && g_pf && !g.is_zero()) {
    const auto rel = classify(g, f);
    const bool degenerate_ok = rel.kind == InterlaceKind::kDegenerateConstant &&
                               *g.degree() + 1 == *f.degree();
    if (rel.kind != InterlaceKind::kInterlaces && !degenerate_ok) {
      res.violations.push_back("interlaces");
    }
  }
  if (p.gate().sign() < 0) res.violations.push_back("gate");
  enforce(res.violations, force);

  res.hypothesis_ok = res.violations.empty();
  res.output = combine(f, g.shifted_up(1), p.a, p.b, p.c, p.d);
  certify_output(res);
  return res;
}

std::vector<Rational> pf_linear_map(std::span<const Rational> xs, const TransformParams& p) {
  if (xs.empty()) throw std::invalid_argument("empty sequence");
  if (std::any_of(xs.begin(), xs.end(), [](const Rational& x) { return x.sign() < 0; }) ||
      asw_check(xs, 0).verdict != PfVerdict::kPF) {
    throw NotPF("xs");
  }
  if (p.gate().sign() < 0) throw GateViolation();

  const std::size_t n = xs.size();
  auto x = [&](long k) -> Rational {
    return (k < 0 || k >= static_cast<long>(n)) ? Rational(0) : xs[static_cast<std::size_t>(k)];
  };
  std::vector<Rational> ys;
  ys.reserve(n + 1);
  for (long k = 0; k <= static_cast<long>(n); ++k) {
    const Rational kk(k);
    Rational y = (p.a + p.c * (kk - Rational(1))) * x(k - 1) + (p.b + p.d * kk) * x(k);
    if (y.sign() < 0) throw NegativeOutput(static_cast<std::size_t>(k));
    ys.push_back(std::move(y));
  }
  if (asw_check(ys, 0).verdict != PfVerdict::kPF) {
    throw InternalContradiction("linear map output is not PF");
  }
  return ys;
}

std::vector<Polynomial> orthogonal_sequence(std::span<const ThreeTermCoeffs> coeffs, std::size_t n) {
  if (coeffs.size() < n) throw std::invalid_argument("not enough recurrence coefficients");
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].a.sign() <= 0 || (k >= 1 && coeffs[k].c.sign() <= 0)) {
      throw CoefficientSignViolation(k + 1);
    }
  }
  std::vector<Polynomial> ps{Polynomial::constant(1)};
  Polynomial prev;  // p_{-1} = 0
  for (std::size_t k = 1; k <= n; ++k) {
    const auto& cf = coeffs[k - 1];
    Polynomial next = Polynomial({cf.b, cf.a}) * ps.back() - cf.c * prev;
    prev = ps.back();
    ps.push_back(std::move(next));
  }
  for (std::size_t k = 1; k <= n; ++k) {
    const auto cert = is_real_rooted(ps[k]);
    if (!cert.is_real_rooted || cert.distinct_real_roots != cert.degree || cert.degree != k) {
      throw InternalContradiction("p_" + std::to_string(k) + " lacks simple real roots");
    }
    if (k + 1 <= n && classify(ps[k], ps[k + 1]).kind != InterlaceKind::kInterlaces) {
      throw InternalContradiction("p_" + std::to_string(k) + " does not interlace p_" +
                                  std::to_string(k + 1));
    }
  }
  return ps;
}

Polynomial simion_step(const Polynomial& f, unsigned n_j) {
  if (!f.has_nonnegative_coeffs()) throw std::invalid_argument("simion_step needs nonnegative coefficients");
  const Rational nj(static_cast<unsigned long>(n_j));
  Polynomial out = Polynomial({nj, 1}) * f + Polynomial({0, 1, 1}) * derivative(f);
  return out * (Rational(1) / (nj + Rational(1)));
}

Polynomial simion_polynomial(std::span<const unsigned> multiset) {
  Polynomial f = Polynomial::constant(1);
  for (const unsigned copies : multiset) {
    for (unsigned have = 0; have < copies; ++have) f = simion_step(f, have);
  }
  if (!f.is_constant() && !is_real_rooted(f).is_real_rooted) {
    throw InternalContradiction("composition polynomial " + f.to_string() + " is not real-rooted");
  }
  return f;
}

}  // namespace rootlace
