#include "rootlace/interlace.hpp"

#include <cstddef>

#include "rootlace/errors.hpp"

namespace rootlace {

namespace {

struct TaggedRoot {
  IsolatingInterval iv;
  const Polynomial* sqf = nullptr;
  int common_id = -1;  // index among the roots shared with the other polynomial
};

std::vector<TaggedRoot> tagged_roots(const Polynomial& p, const Polynomial& sqf,
                                     const Polynomial& shared_sqf) {
  std::vector<TaggedRoot> out;
  if (p.is_constant()) return out;
  int next_common = 0;
  for (const auto& iv : isolate_roots(p)) {
    TaggedRoot t{iv, &sqf, -1};
    if (!shared_sqf.is_constant()) {
      const bool shared = iv.is_point()
                              ? sign_at(shared_sqf, iv.lo) == 0
                              : sign_at(shared_sqf, iv.lo) * sign_at(shared_sqf, iv.hi) < 0;
      if (shared) t.common_id = next_common++;
    }
    out.push_back(std::move(t));
  }
  return out;
}

// True when every point of `a` lies strictly left of every point of `b`,
// reading open intervals as open.
bool entirely_left(const IsolatingInterval& a, const IsolatingInterval& b) {
  if (a.is_point() && b.is_point()) return a.lo < b.lo;
  return a.hi <= b.lo;
}

// -1 if a's root is smaller, +1 if larger, 0 if they are the same root.
int compare_roots(TaggedRoot& a, TaggedRoot& b) {
  if (a.common_id >= 0 && b.common_id >= 0) {
    if (a.common_id == b.common_id) return 0;
    return a.common_id < b.common_id ? -1 : 1;
  }
  // Distinct roots: refinement terminates.
  while (true) {
    if (entirely_left(a.iv, b.iv)) return -1;
    if (entirely_left(b.iv, a.iv)) return 1;
    if (!a.iv.is_point() && (b.iv.is_point() || a.iv.width() >= b.iv.width())) {
      detail::bisect(a.iv, *a.sqf);
    } else {
      detail::bisect(b.iv, *b.sqf);
    }
  }
}

// Number of F slots in positions [pos, pos+len) of the alternating pattern
// whose slot 0 is an F when `f_first`.
int f_slots(std::size_t pos, std::size_t len, bool f_first) {
  int count = 0;
  for (std::size_t i = pos; i < pos + len; ++i) {
    const bool even = (i % 2) == 0;
    if (even == f_first) ++count;
  }
  return count;
}

bool matches_pattern(const std::vector<ChainEntry>& chain, bool f_first) {
  std::size_t pos = 0;
  for (const auto& e : chain) {
    const std::size_t len = static_cast<std::size_t>(e.mult_f + e.mult_g);
    if (f_slots(pos, len, f_first) != e.mult_f) return false;
    pos += len;
  }
  return true;
}

}  // namespace

std::string to_string(InterlaceKind kind) {
  switch (kind) {
    case InterlaceKind::kInterlaces:
      return "Interlaces";
    case InterlaceKind::kAlternatesLeft:
      return "AlternatesLeft";
    case InterlaceKind::kNeither:
      return "Neither";
    case InterlaceKind::kDegenerateConstant:
      return "DegenerateConstant";
  }
  return "Neither";
}

std::vector<ChainEntry> merged_root_chain(const Polynomial& g, const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("f");
  if (g.is_zero()) throw ZeroPolynomial("g");
  const Polynomial f_sqf = f.is_constant() ? Polynomial::constant(1) : squarefree_part(f);
  const Polynomial g_sqf = g.is_constant() ? Polynomial::constant(1) : squarefree_part(g);
  const Polynomial h = gcd(f, g);
  const Polynomial h_sqf = h.is_constant() ? Polynomial::constant(1) : squarefree_part(h);

  auto fr = tagged_roots(f, f_sqf, h_sqf);
  auto gr = tagged_roots(g, g_sqf, h_sqf);

  std::vector<ChainEntry> chain;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fr.size() || j < gr.size()) {
    if (j == gr.size()) {
      chain.push_back({fr[i].iv, fr[i].iv.multiplicity, 0});
      ++i;
    } else if (i == fr.size()) {
      chain.push_back({gr[j].iv, 0, gr[j].iv.multiplicity});
      ++j;
    } else {
      const int c = compare_roots(fr[i], gr[j]);
      if (c == 0) {
        chain.push_back({fr[i].iv, fr[i].iv.multiplicity, gr[j].iv.multiplicity});
        ++i;
        ++j;
      } else if (c < 0) {
        chain.push_back({fr[i].iv, fr[i].iv.multiplicity, 0});
        ++i;
      } else {
        chain.push_back({gr[j].iv, 0, gr[j].iv.multiplicity});
        ++j;
      }
    }
  }
  return chain;
}

InterlacingRelation classify(const Polynomial& g, const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("f");
  if (!is_real_rooted(f).is_real_rooted) throw NotRealRooted("f");
  InterlacingRelation rel;
  if (g.is_zero()) {
    rel.kind = InterlaceKind::kDegenerateConstant;
    rel.reason = "g is the zero polynomial";
    return rel;
  }
  if (!is_real_rooted(g).is_real_rooted) throw NotRealRooted("g");

  rel.chain = merged_root_chain(g, f);
  const std::size_t df = *f.degree();
  const std::size_t dg = *g.degree();
  if (dg == 0 && df <= 1) {
    rel.kind = InterlaceKind::kDegenerateConstant;
    rel.reason = "constant g against f of degree <= 1";
  } else if (dg + 1 == df) {
    // r_n <= s_{n-1} <= r_{n-1} <= ... <= s_1 <= r_1, ascending F G F ... F.
    const bool ok = matches_pattern(rel.chain, /*f_first=*/true);
    rel.kind = ok ? InterlaceKind::kInterlaces : InterlaceKind::kNeither;
    rel.reason = ok ? "deg g = deg f - 1 and roots interlace" : "interlacing chain violated";
  } else if (dg == df) {
    // s_n <= r_n <= ... <= s_1 <= r_1, ascending G F G F ... G F.
    const bool ok = matches_pattern(rel.chain, /*f_first=*/false);
    rel.kind = ok ? InterlaceKind::kAlternatesLeft : InterlaceKind::kNeither;
    rel.reason = ok ? "deg g = deg f and g alternates left of f" : "alternating chain violated";
  } else {
    rel.kind = InterlaceKind::kNeither;
    rel.reason = "degree condition fails";
  }
  return rel;
}

bool leadsto(const Polynomial& g, const Polynomial& f) {
  return classify(g, f).kind != InterlaceKind::kNeither;
}

}  // namespace rootlace
