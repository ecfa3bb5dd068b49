#include "rootlace/pfseq.hpp"

#include <stdexcept>
#include <utility>

namespace rootlace {

namespace {

void require_nonnegative(std::span<const Rational> xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].sign() < 0) {
      throw std::invalid_argument("negative entry at index " + std::to_string(i));
    }
  }
}

// Fraction-free Gaussian elimination.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

struct MinorScan {
  const std::vector<mpz_class>& seq;  // integer multiple of the input
  const mpz_class& scale;
  std::size_t truncation;
  std::size_t band;  // length - 1
  bool fail_fast;
  MinorReport& report;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  bool stop = false;

  mpz_class entry(std::size_t i, std::size_t j) const {
    if (i < j || i - j >= seq.size()) return 0;
    return seq[i - j];
  }

  void evaluate() {
    const std::size_t k = rows.size();
    std::vector<std::vector<mpz_class>> m(k, std::vector<mpz_class>(k));
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t q = 0; q < k; ++q) m[p][q] = entry(rows[p], cols[q]);
    }
    ++report.checked;
    const mpz_class det = bareiss_det(std::move(m));
    if (det < 0 && !report.first_negative) {
      mpz_class denom = 1;
      for (std::size_t p = 0; p < k; ++p) denom *= scale;
      report.first_negative = MinorWitness{rows, cols, Rational(det, denom)};
      if (fail_fast) stop = true;
    }
  }

  // A minor with rows_p < cols_p or rows_p - cols_p > band for some p has a
  // zero block too large to be nonsingular, so columns are drawn from
  // [rows_p - band, rows_p] only.
  void pick_cols(std::size_t p) {
    if (stop) return;
    if (p == rows.size()) {
      evaluate();
      return;
    }
    std::size_t lo = rows[p] >= band ? rows[p] - band : 0;
    if (p > 0 && cols[p - 1] + 1 > lo) lo = cols[p - 1] + 1;
    for (std::size_t c = lo; c <= rows[p] && !stop; ++c) {
      cols[p] = c;
      pick_cols(p + 1);
    }
  }

  void pick_rows(std::size_t p, std::size_t from) {
    if (stop) return;
    if (p == rows.size()) {
      pick_cols(0);
      return;
    }
    for (std::size_t r = from; r + (rows.size() - p) <= truncation && !stop; ++r) {
      rows[p] = r;
      pick_rows(p + 1, r + 1);
    }
  }
};

}  // namespace

SequenceProfile sequence_profile(std::span<const Rational> xs) {
  require_nonnegative(xs);
  SequenceProfile prof;
  prof.values.assign(xs.begin(), xs.end());
  bool descending = false;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] < xs[i - 1]) descending = true;
    if (descending && xs[i] > xs[i - 1]) prof.unimodal = false;
  }
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    if (xs[i - 1] * xs[i + 1] > xs[i] * xs[i]) prof.log_concave = false;
  }
  std::optional<std::size_t> first_nz;
  std::optional<std::size_t> last_nz;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].is_zero()) continue;
    if (!first_nz) first_nz = i;
    last_nz = i;
  }
  if (first_nz) {
    for (std::size_t i = *first_nz; i < *last_nz; ++i) {
      if (xs[i].is_zero()) prof.internal_zeros = true;
    }
  }
  return prof;
}

std::vector<NewtonEntry> newton_check(std::span<const Rational> xs) {
  std::vector<NewtonEntry> out;
  if (xs.size() < 3) return out;
  const long n = static_cast<long>(xs.size()) - 1;
  for (long i = 1; i < n; ++i) {
    NewtonEntry e;
    e.i = static_cast<std::size_t>(i);
    e.lhs = xs[e.i] * xs[e.i];
    e.rhs = xs[e.i - 1] * xs[e.i + 1] * Rational(mpz_class(i + 1), mpz_class(i)) *
            Rational(mpz_class(n - i + 1), mpz_class(n - i));
    e.pass = e.lhs >= e.rhs;
    out.push_back(std::move(e));
  }
  return out;
}

MinorReport toeplitz_minors(std::span<const Rational> xs, std::size_t max_order,
                            std::size_t truncation, bool fail_fast) {
  if (max_order < 1) throw std::invalid_argument("max_order must be >= 1");
  if (truncation < xs.size()) throw std::invalid_argument("truncation shorter than sequence");
  require_nonnegative(xs);
  MinorReport report;
  report.max_order = max_order;
  report.truncation = truncation;
  if (xs.empty()) return report;

  // Minors scale by L^k when every entry is multiplied by L > 0.
  mpz_class scale = 1;
  for (const auto& x : xs) {
    const mpz_class den = x.denominator();
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<mpz_class> seq;
  seq.reserve(xs.size());
  for (const auto& x : xs) seq.push_back(x.numerator() * (scale / x.denominator()));

  MinorScan scan{seq, scale, truncation, xs.size() - 1, fail_fast, report, {}, {}};
  for (std::size_t k = 1; k <= max_order && k <= truncation && !scan.stop; ++k) {
    scan.rows.assign(k, 0);
    scan.cols.assign(k, 0);
    scan.pick_rows(0, 0);
  }
  return report;
}

Polynomial generating_polynomial(std::span<const Rational> xs) {
  return Polynomial(std::vector<Rational>(xs.begin(), xs.end()));
}

bool is_pf_polynomial(const Polynomial& p) {
  if (!p.has_nonnegative_coeffs()) return false;
  if (p.is_constant()) return true;
  return is_real_rooted(p).is_real_rooted;
}

PfReport asw_check(std::span<const Rational> xs, std::size_t max_order,
                   std::optional<std::size_t> truncation) {
  PfReport rep;
  rep.profile = sequence_profile(xs);
  rep.newton = newton_check(xs);
  const Polynomial gen = generating_polynomial(xs);
  if (gen.is_zero()) {
    // The zero sequence: its generating function is the constant 0, which
    // is PF by the convention that all nonnegative constants are.
    rep.gen_poly_certificate.is_real_rooted = true;
    rep.notes.push_back("zero sequence: generating function is the constant 0");
  } else {
    rep.gen_poly_certificate = is_real_rooted(gen);
  }
  rep.verdict = rep.gen_poly_certificate.is_real_rooted ? PfVerdict::kPF : PfVerdict::kNotPF;

  if (max_order > 0) {
    const std::size_t trunc = truncation.value_or(xs.size() + kDefaultTruncationPad);
    rep.minors = toeplitz_minors(xs, max_order, trunc);
    if (rep.verdict == PfVerdict::kPF && rep.minors.first_negative) {
      rep.contradiction = true;
      rep.notes.push_back("internal-error: real-rooted generating polynomial but a negative minor");
    } else if (rep.verdict == PfVerdict::kNotPF && !rep.minors.first_negative) {
      rep.notes.push_back("bounded-search notice: no negative minor of order <= " +
                          std::to_string(max_order) + " in truncation " + std::to_string(trunc));
    }
  }
  return rep;
}

std::string to_string(PfVerdict v) { return v == PfVerdict::kPF ? "PF" : "NotPF"; }

}  // namespace rootlace
