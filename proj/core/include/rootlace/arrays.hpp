#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rootlace/pfseq.hpp"
#include "rootlace/rational.hpp"

namespace rootlace {

/// A(n,k) = (rn + sk + t) A(n-1,k-1) + (an + bk + c) A(n-1,k).
struct RecurrenceParams {
  Rational r, s, t;
  Rational a, b, c;

  Rational diagonal(std::size_t n, std::size_t k) const;
  Rational vertical(std::size_t n, std::size_t k) const;
  friend bool operator==(const RecurrenceParams&, const RecurrenceParams&) = default;
};

struct GateCheck {
  bool ok = false;
  Rational rb_minus_as;  // rb - as
  Rational second;       // (r+s+t)b - (a+c)s
};

/// The two sufficient conditions for every row to be PF.
GateCheck check_conditions(const RecurrenceParams& p);

/// (rn + s + t)b - (an + c)s, the quantity that must stay nonnegative at
/// every step of the row-by-row induction.
Rational induction_quantity(const RecurrenceParams& p, std::size_t n);

struct ArrayWarning {
  std::size_t n = 0;
  std::size_t k = 0;
  std::string message;
};

struct TriangularArray {
  RecurrenceParams params;
  std::vector<std::vector<Rational>> rows;  // rows[n][k], k = 0..n
  std::vector<ArrayWarning> warnings;

  bool all_integral() const;
};

/// Rows 0..n_max from A(0,0) = 1. Throws NegativeEntry{n,k} as soon as an
/// entry comes out negative.
TriangularArray generate(const RecurrenceParams& p, std::size_t n_max);

/// Named parameter sets: binomial, stirling1, stirling2, eulerian, lah(m),
/// assoc-stirling-1, assoc-stirling-2, holiday-1, holiday-2, whitney(m),
/// factorial-whitney(m). Throws std::invalid_argument for unknown names or
/// when m is missing or unexpected.
RecurrenceParams preset(std::string_view name, std::optional<unsigned> m = std::nullopt);
bool preset_takes_m(std::string_view name);
const std::vector<std::string>& preset_names();

/// Minor order used when corroborating array rows. Rows of a large array
/// make order >= 3 scans expensive; the verdict never depends on this.
inline constexpr std::size_t kArrayMinorOrder = 2;

/// One PfReport per row n in [n_from, n_to]. Throws InternalContradiction if
/// the conditions hold but some row is not PF.
std::vector<PfReport> certify(const TriangularArray& arr, std::size_t n_from, std::size_t n_to,
                              std::size_t max_order = kArrayMinorOrder);

/// (n!/k!) sum_{i=1..k} (-1)^{k-i} C(k,i) C(n+mi-1, n). Note the empty sum
/// gives 0 at n = k = 0, where the recurrence starts from 1.
Rational lah_closed_form(unsigned n, unsigned k, unsigned m);

}  // namespace rootlace
