#pragma once

#include <string>
#include <vector>

#include "rootlace/polynomial.hpp"
#include "rootlace/realroots.hpp"

namespace rootlace {

enum class InterlaceKind { kInterlaces, kAlternatesLeft, kNeither, kDegenerateConstant };

std::string to_string(InterlaceKind kind);

/// One distinct real root of f*g, with its multiplicity in each factor.
struct ChainEntry {
  IsolatingInterval where;
  int mult_f = 0;
  int mult_g = 0;
};

struct InterlacingRelation {
  InterlaceKind kind = InterlaceKind::kNeither;
  /// Distinct roots of f and g merged in increasing order.
  std::vector<ChainEntry> chain;
  std::string reason;
};

/// Decides whether g interlaces f, g alternates left of f, or neither, using
/// the non-strict chain conditions. A constant (or zero) g against f of
/// degree <= 1 is DegenerateConstant.
///
/// Throws ZeroPolynomial if f is zero and NotRealRooted("f"/"g") when an
/// input is outside RZ.
InterlacingRelation classify(const Polynomial& g, const Polynomial& f);

/// g ~> f: Interlaces, AlternatesLeft or DegenerateConstant.
bool leadsto(const Polynomial& g, const Polynomial& f);

/// Merged root chain of f and g. Equal roots are detected exactly through
/// gcd(f, g); distinct ones are ordered by refining until disjoint.
std::vector<ChainEntry> merged_root_chain(const Polynomial& g, const Polynomial& f);

}  // namespace rootlace
