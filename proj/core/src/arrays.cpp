#include "rootlace/arrays.hpp"

#include <stdexcept>

#include "rootlace/errors.hpp"

namespace rootlace {

namespace {

Rational r_of(std::size_t v) { return Rational(static_cast<unsigned long>(v)); }

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

mpz_class factorial(unsigned long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

RecurrenceParams make(int r, int s, int t, int a, int b, int c) { return {r, s, t, a, b, c}; }

}  // namespace

Rational RecurrenceParams::diagonal(std::size_t n, std::size_t k) const {
  return r * r_of(n) + s * r_of(k) + t;
}

Rational RecurrenceParams::vertical(std::size_t n, std::size_t k) const {
  return a * r_of(n) + b * r_of(k) + c;
}

GateCheck check_conditions(const RecurrenceParams& p) {
  GateCheck g;
  g.rb_minus_as = p.r * p.b - p.a * p.s;
  g.second = (p.r + p.s + p.t) * p.b - (p.a + p.c) * p.s;
  g.ok = g.rb_minus_as.sign() >= 0 && g.second.sign() >= 0;
  return g;
}

Rational induction_quantity(const RecurrenceParams& p, std::size_t n) {
  return (p.r * r_of(n) + p.s + p.t) * p.b - (p.a * r_of(n) + p.c) * p.s;
}

bool TriangularArray::all_integral() const {
  for (const auto& row : rows) {
    for (const auto& v : row) {
      if (!v.is_integer()) return false;
    }
  }
  return true;
}

TriangularArray generate(const RecurrenceParams& p, std::size_t n_max) {
  TriangularArray arr;
  arr.params = p;
  arr.rows.push_back({Rational(1)});
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto& prev = arr.rows.back();
    std::vector<Rational> row(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
      Rational v = 0;
      if (k >= 1 && !prev[k - 1].is_zero()) {
        const Rational coef = p.diagonal(n, k);
        if (coef.sign() < 0) {
          arr.warnings.push_back({n, k, "negative diagonal coefficient " + coef.to_string()});
        }
        v += coef * prev[k - 1];
      }
      if (k < n && !prev[k].is_zero()) {
        const Rational coef = p.vertical(n, k);
        if (coef.sign() < 0) {
          arr.warnings.push_back({n, k, "negative vertical coefficient " + coef.to_string()});
        }
        v += coef * prev[k];
      }
      if (v.sign() < 0) throw NegativeEntry(n, k);
      row[k] = std::move(v);
    }
    arr.rows.push_back(std::move(row));
  }
  return arr;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "binomial",  "stirling1", "stirling2", "eulerian", "lah",     "assoc-stirling-1",
      "assoc-stirling-2", "holiday-1", "holiday-2", "whitney", "factorial-whitney"};
  return names;
}

bool preset_takes_m(std::string_view name) {
  return name == "lah" || name == "whitney" || name == "factorial-whitney";
}

RecurrenceParams preset(std::string_view name, std::optional<unsigned> m) {
  bool known = false;
  for (const auto& n : preset_names()) known = known || n == name;
  if (!known) throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
  if (preset_takes_m(name)) {
    if (!m || *m == 0) {
      throw std::invalid_argument("preset '" + std::string(name) + "' needs a positive m");
    }
  } else if (m) {
    throw std::invalid_argument("preset '" + std::string(name) + "' takes no m");
  }
  const int mm = m ? static_cast<int>(*m) : 0;

  if (name == "binomial") return make(0, 0, 1, 0, 0, 1);
  // c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)
  if (name == "stirling1") return make(0, 0, 1, 1, 0, -1);
  // S(n,k) = S(n-1,k-1) + k S(n-1,k)
  if (name == "stirling2") return make(0, 0, 1, 0, 1, 0);
  // A(n,k) = (n-k+1) A(n-1,k-1) + k A(n-1,k)
  if (name == "eulerian") return make(1, -1, 1, 0, 1, 0);
  // L(n,k) = m L(n-1,k-1) + (mk+n-1) L(n-1,k)
  if (name == "lah") return make(0, 0, mm, 1, mm, -1);
  // c*(n,k) = (2n-k-1) (c*(n-1,k-1) + c*(n-1,k))
  if (name == "assoc-stirling-1") return make(2, -1, -1, 2, -1, -1);
  // S*(n,k) = (n-k) S*(n-1,k-1) + (2n-k-1) S*(n-1,k)
  if (name == "assoc-stirling-2") return make(1, -1, 0, 2, -1, -1);
  if (name == "holiday-1") return make(0, 0, 1, 2, 1, -1);
  if (name == "holiday-2") return make(0, 0, 1, 2, 1, 0);
  if (name == "whitney") return make(0, 0, 1, 0, mm, 1);
  // k! W_m(n,k): A(n,k) = k A(n-1,k-1) + (1+mk) A(n-1,k)
  return make(0, 1, 0, 0, mm, 1);
}

std::vector<PfReport> certify(const TriangularArray& arr, std::size_t n_from, std::size_t n_to,
                              std::size_t max_order) {
  if (n_to >= arr.rows.size() || n_from > n_to) {
    throw std::invalid_argument("row range outside the generated array");
  }
  const bool gate = check_conditions(arr.params).ok;
  std::vector<PfReport> out;
  for (std::size_t n = n_from; n <= n_to; ++n) {
    out.push_back(asw_check(arr.rows[n], max_order));
    if (gate && out.back().verdict != PfVerdict::kPF) {
      throw InternalContradiction("conditions hold but row " + std::to_string(n) + " is not PF");
    }
  }
  return out;
}

Rational lah_closed_form(unsigned n, unsigned k, unsigned m) {
  if (k > n) throw std::invalid_argument("lah_closed_form needs 0 <= k <= n");
  if (m == 0) throw std::invalid_argument("lah_closed_form needs m >= 1");
  mpz_class sum = 0;
  for (unsigned i = 1; i <= k; ++i) {
    const mpz_class term = binomial(k, i) * binomial(n + static_cast<unsigned long>(m) * i - 1, n);
    if ((k - i) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return Rational(factorial(n) * sum, factorial(k));
}

}  // namespace rootlace
