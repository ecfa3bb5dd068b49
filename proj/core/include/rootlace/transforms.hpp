#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rootlace/polynomial.hpp"
#include "rootlace/realroots.hpp"

namespace rootlace {

/// The four scalars of a real-rootedness preserving transform.
struct TransformParams {
  Rational a;
  Rational b;
  Rational c;
  Rational d;

  /// ad - bc; the transforms require it to be >= 0.
  Rational gate() const { return a * d - b * c; }
};

struct TransformResult {
  Polynomial output;
  bool hypothesis_ok = false;
  std::vector<std::string> violations;
  RealRootCertificate certificate;
  std::vector<std::string> notes;
};

/// F = (bx + a) f + (dx + c) g.
///
/// Hypotheses: f, g in RZ with leading coefficients of the same sign, g ~> f
/// and ad >= bc. Without `force` a failed hypothesis throws
/// HypothesisViolation (or NotRealRooted for inputs outside RZ); with `force`
/// the output is still computed and hypothesis_ok is false. The output is
/// always certified, and a non-real-rooted output under satisfied hypotheses
/// throws InternalContradiction.
TransformResult theorem_transform(const Polynomial& f, const Polynomial& g,
                                  const TransformParams& p, bool force = false);

/// f + g for g ~> f. When the leading coefficients agree in sign, also checks
/// g ~> f+g ~> f and records the result in the notes.
TransformResult sum_rz(const Polynomial& f, const Polynomial& g);

/// F = (ax + b) f + x (cx + d) g for f, g in PF with g interlacing f.
/// Throws NotPF for inputs outside PF unless forced.
TransformResult corollary_abcd(const Polynomial& f, const Polynomial& g,
                               const TransformParams& p, bool force = false);

/// y_k = [a + c(k-1)] x_{k-1} + (b + dk) x_k for k = 0..n, with
/// x_{-1} = x_n = 0. Returns all n+1 values, zeros included.
/// Throws NotPF("xs"), HypothesisViolation({"gate"}) or NegativeOutput{k}.
std::vector<Rational> pf_linear_map(std::span<const Rational> xs, const TransformParams& p);

/// Coefficients (a_n, b_n, c_n) of p_n = (a_n x + b_n) p_{n-1} - c_n p_{n-2}.
struct ThreeTermCoeffs {
  Rational a;
  Rational b;
  Rational c;
};

/// p_0 .. p_n from coeffs[0] = (a_1, b_1, c_1), coeffs[1] = (a_2, ...), ...
/// with p_{-1} = 0 and p_0 = 1. Requires a_k > 0 for every supplied k and
/// c_k > 0 for k >= 2 (c_1 only ever multiplies p_{-1}); otherwise throws
/// CoefficientSignViolation{k}. Verifies that every p_k (k >= 1) has simple
/// real roots and interlaces p_{k+1}; throws InternalContradiction if not.
std::vector<Polynomial> orthogonal_sequence(std::span<const ThreeTermCoeffs> coeffs, std::size_t n);

/// [(x + n_j) f + x (x + 1) f'] / (n_j + 1): adjoins one more copy of an
/// element type already present n_j times.
Polynomial simion_step(const Polynomial& f, unsigned n_j);

/// Generating function of compositions of the multiset with the given
/// multiplicities, counted by number of parts. Certified real-rooted.
Polynomial simion_polynomial(std::span<const unsigned> multiset);

}  // namespace rootlace
