#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rootlace/polynomial.hpp"
#include "rootlace/realroots.hpp"

namespace rootlace {

struct SequenceProfile {
  std::vector<Rational> values;
  bool unimodal = true;
  bool log_concave = true;
  bool internal_zeros = false;
};

/// Throws std::invalid_argument on a negative entry.
SequenceProfile sequence_profile(std::span<const Rational> xs);

struct NewtonEntry {
  std::size_t i = 0;
  Rational lhs;  // a_i^2
  Rational rhs;  // a_{i-1} a_{i+1} (i+1)/i (n-i+1)/(n-i)
  bool pass = false;
};

/// Newton's inequalities at i = 1..n-1; empty for fewer than three terms.
std::vector<NewtonEntry> newton_check(std::span<const Rational> xs);

struct MinorWitness {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Rational value;
};

struct MinorReport {
  std::size_t max_order = 0;
  std::size_t truncation = 0;
  std::size_t checked = 0;
  std::optional<MinorWitness> first_negative;
};

/// Enumerates minors of order <= max_order of the truncation x truncation
/// Toeplitz matrix (a_{i-j}), in order of size, then rows, then columns.
/// Minors that vanish identically because of the band structure are skipped
/// and not counted. With fail_fast the scan stops at the first negative one.
MinorReport toeplitz_minors(std::span<const Rational> xs, std::size_t max_order,
                            std::size_t truncation, bool fail_fast = true);

enum class PfVerdict { kPF, kNotPF };

struct PfReport {
  SequenceProfile profile;
  std::vector<NewtonEntry> newton;
  RealRootCertificate gen_poly_certificate;
  MinorReport minors;
  PfVerdict verdict = PfVerdict::kNotPF;
  std::vector<std::string> notes;
  /// A real-rooted generating polynomial with a negative minor. Never
  /// expected; reported rather than thrown so sweeps can finish.
  bool contradiction = false;
};

inline constexpr std::size_t kDefaultMaxOrder = 4;
inline constexpr std::size_t kDefaultTruncationPad = 4;

/// PF verdict from the generating polynomial's real-root certificate, with
/// Newton's inequalities and a bounded minor search as corroboration.
/// The default truncation is length + 4.
PfReport asw_check(std::span<const Rational> xs, std::size_t max_order = kDefaultMaxOrder,
                   std::optional<std::size_t> truncation = std::nullopt);

Polynomial generating_polynomial(std::span<const Rational> xs);

/// Real-rooted with nonnegative coefficients; zero and positive constants
/// count as PF.
bool is_pf_polynomial(const Polynomial& p);

std::string to_string(PfVerdict v);

}  // namespace rootlace
