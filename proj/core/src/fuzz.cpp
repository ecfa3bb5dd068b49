#include "rootlace/fuzz.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <stdexcept>

#include "rootlace/pfseq.hpp"

namespace rootlace {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Draws are taken with plain modular reduction so that the stream is the
// same with every standard library.
class Draw {
 public:
  Draw(std::uint64_t seed, std::size_t index)
      : eng_(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(index) + 1))) {}

  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(eng_() % span);
  }
  bool chance(long num, long den) { return uniform(0, den - 1) < num; }

  /// Grid point num/den with num in [lo, hi] and den in {1..5}.
  Rational grid(long lo, long hi) {
    const long num = uniform(lo, hi);
    const long den = uniform(1, 5);
    return Rational(mpz_class(num), mpz_class(den));
  }

  Rational scalar() { return chance(1, 5) ? Rational(0) : grid(-10, 10); }

  Rational positive() {
    const long num = uniform(1, 10);
    const long den = uniform(1, 3);
    return Rational(mpz_class(num), mpz_class(den));
  }

 private:
  std::mt19937_64 eng_;
};

// `count` sorted grid values in [lo, hi]/den; occasionally repeats a
// neighbour so that shared roots and non-strict chains come up.
std::vector<Rational> sorted_roots(Draw& rng, std::size_t count, long lo, long hi) {
  std::vector<Rational> v;
  v.reserve(count);
  for (std::size_t i = 0; i < count; ++i) v.push_back(rng.grid(lo, hi));
  std::sort(v.begin(), v.end());
  if (count >= 2 && rng.chance(1, 4)) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(count) - 2));
    v[i + 1] = v[i];
  }
  return v;
}

// Splits merged ascending roots alternately, starting with `first_to_f`.
void split_roots(const std::vector<Rational>& merged, bool first_to_f, std::vector<Rational>& f,
                 std::vector<Rational>& g) {
  for (std::size_t i = 0; i < merged.size(); ++i) {
    const bool to_f = ((i % 2) == 0) == first_to_f;
    (to_f ? f : g).push_back(merged[i]);
  }
}

TransformParams gated_params(Draw& rng) {
  while (true) {
    TransformParams p{rng.scalar(), rng.scalar(), rng.scalar(), rng.scalar()};
    if (p.gate().sign() >= 0) return p;
  }
}

// ad = bc with (d, c) a multiple of (b, a); occasionally (b, a) = (0, 0).
TransformParams boundary_params(Draw& rng) {
  TransformParams p;
  if (rng.chance(1, 10)) {
    p.a = 0;
    p.b = 0;
    p.c = rng.scalar();
    p.d = rng.scalar();
    return p;
  }
  do {
    p.a = rng.scalar();
    p.b = rng.scalar();
  } while (p.a.is_zero() && p.b.is_zero());
  const Rational lambda = rng.scalar();
  p.c = lambda * p.a;
  p.d = lambda * p.b;
  return p;
}

std::vector<Rational> map_sequence(const std::vector<Rational>& xs, const TransformParams& p) {
  const long n = static_cast<long>(xs.size());
  auto x = [&](long k) { return (k < 0 || k >= n) ? Rational(0) : xs[static_cast<std::size_t>(k)]; };
  std::vector<Rational> ys;
  for (long k = 0; k <= n; ++k) {
    const Rational kk(k);
    ys.push_back((p.a + p.c * (kk - Rational(1))) * x(k - 1) + (p.b + p.d * kk) * x(k));
  }
  return ys;
}

}  // namespace

std::string to_string(FuzzKind kind) {
  switch (kind) {
    case FuzzKind::kTheorem:
      return "theorem";
    case FuzzKind::kCorollary31:
      return "corollary31";
    case FuzzKind::kCorollary32:
      return "corollary32";
  }
  return "theorem";
}

std::optional<FuzzKind> parse_fuzz_kind(std::string_view name) {
  if (name == "theorem") return FuzzKind::kTheorem;
  if (name == "corollary31") return FuzzKind::kCorollary31;
  if (name == "corollary32") return FuzzKind::kCorollary32;
  return std::nullopt;
}

FuzzInstance make_instance(const FuzzConfig& config, std::size_t index) {
  if (config.min_degree < 1 || config.max_degree < config.min_degree) {
    throw std::invalid_argument("bad degree bounds");
  }
  Draw rng(config.seed, index);
  FuzzInstance inst;
  inst.index = index;
  inst.kind = config.kind;
  const auto n = static_cast<std::size_t>(
      rng.uniform(static_cast<long>(config.min_degree), static_cast<long>(config.max_degree)));

  switch (config.kind) {
    case FuzzKind::kTheorem: {
      inst.relation = config.relation.value_or(index % 2 == 0 ? InterlaceKind::kInterlaces
                                                              : InterlaceKind::kAlternatesLeft);
      const bool alternates = inst.relation == InterlaceKind::kAlternatesLeft;
      const auto merged = sorted_roots(rng, alternates ? 2 * n : 2 * n - 1, -50, 50);
      std::vector<Rational> fr;
      std::vector<Rational> gr;
      split_roots(merged, /*first_to_f=*/!alternates, fr, gr);
      const Rational sign = rng.chance(1, 2) ? Rational(1) : Rational(-1);
      inst.f = Polynomial::from_roots(fr, sign * rng.positive());
      inst.g = Polynomial::from_roots(gr, sign * rng.positive());
      inst.params = config.boundary ? boundary_params(rng) : gated_params(rng);
      break;
    }
    case FuzzKind::kCorollary31: {
      inst.relation = InterlaceKind::kInterlaces;
      const auto merged = sorted_roots(rng, 2 * n - 1, -50, 0);
      std::vector<Rational> fr;
      std::vector<Rational> gr;
      split_roots(merged, /*first_to_f=*/true, fr, gr);
      inst.f = Polynomial::from_roots(fr, rng.positive());
      inst.g = Polynomial::from_roots(gr, rng.positive());
      inst.params = gated_params(rng);
      break;
    }
    case FuzzKind::kCorollary32: {
      // A PF sequence of length n+1 from a polynomial with nonpositive roots.
      const auto roots = sorted_roots(rng, n, -50, 0);
      inst.xs = Polynomial::from_roots(roots, rng.positive()).coeffs();
      inst.xs.resize(n + 1);
      bool found = false;
      for (int attempt = 0; attempt < 64 && !found; ++attempt) {
        inst.params = gated_params(rng);
        const auto ys = map_sequence(inst.xs, inst.params);
        found = std::all_of(ys.begin(), ys.end(), [](const Rational& y) { return y.sign() >= 0; });
      }
      while (!found) {
        inst.params = {rng.scalar().abs(), rng.scalar().abs(), rng.scalar().abs(), rng.scalar().abs()};
        found = inst.params.gate().sign() >= 0;
      }
      break;
    }
  }
  return inst;
}

std::string check_instance(const FuzzInstance& inst, bool boundary) {
  try {
    switch (inst.kind) {
      case FuzzKind::kTheorem: {
        const auto res = theorem_transform(inst.f, inst.g, inst.params, false);
        if (!res.certificate.is_real_rooted) return "output not real-rooted";
        const Polynomial factor({inst.params.a, inst.params.b});
        if (boundary && !factor.is_zero() && !res.output.is_zero() &&
            !divmod(res.output, factor).second.is_zero()) {
          return "boundary output not divisible by bx + a";
        }
        return {};
      }
      case FuzzKind::kCorollary31: {
        const auto res = corollary_abcd(inst.f, inst.g, inst.params, false);
        if (!res.certificate.is_real_rooted) return "output not real-rooted";
        return {};
      }
      case FuzzKind::kCorollary32: {
        const auto ys = pf_linear_map(inst.xs, inst.params);
        if (asw_check(ys, 0).verdict != PfVerdict::kPF) return "mapped sequence not PF";
        return {};
      }
    }
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

FuzzSummary run_fuzz(const FuzzConfig& config) {
  FuzzSummary summary;
  summary.count = config.count;
  for (std::size_t i = 0; i < config.count; ++i) {
    FuzzInstance inst = make_instance(config, i);
    std::string msg = check_instance(inst, config.boundary);
    if (msg.empty()) {
      ++summary.passed;
    } else {
      summary.failures.push_back({std::move(inst), std::move(msg)});
    }
  }
  return summary;
}

}  // namespace rootlace
