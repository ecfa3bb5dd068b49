#include "report.hpp"

#include <sstream>
#include <stdexcept>

namespace rootlace::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(trim(j.get<std::string>()));
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw std::invalid_argument("coefficient must be an integer or a \"p/q\" string: " + j.dump());
}

}  // namespace

Rational display_width() { return pow2(-20); }

json coeffs_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.to_string());
  return out;
}

json values_json(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

json certificate_json(const RealRootCertificate& cert, const Polynomial& p) {
  json roots = json::array();
  for (const auto& iv : cert.roots) {
    const IsolatingInterval shown = iv.is_point() ? iv : refine(iv, p, display_width());
    roots.push_back({{"lo", shown.lo.to_string()}, {"hi", shown.hi.to_string()}, {"mult", iv.multiplicity}});
  }
  return {{"real_rooted", cert.is_real_rooted},
          {"degree", cert.degree},
          {"distinct_real_roots", cert.distinct_real_roots},
          {"roots", roots}};
}

json transform_json(const TransformResult& res) {
  return {{"schema", kSchemaVersion},
          {"output", coeffs_json(res.output)},
          {"hypothesis_ok", res.hypothesis_ok},
          {"violations", res.violations},
          {"certificate", certificate_json(res.certificate, res.output)},
          {"notes", res.notes}};
}

json relation_json(const InterlacingRelation& rel) {
  json chain = json::array();
  for (const auto& e : rel.chain) {
    chain.push_back({{"lo", e.where.lo.to_string()},
                     {"hi", e.where.hi.to_string()},
                     {"mult_f", e.mult_f},
                     {"mult_g", e.mult_g}});
  }
  return {{"schema", kSchemaVersion},
          {"kind", to_string(rel.kind)},
          {"leadsto", rel.kind != InterlaceKind::kNeither},
          {"chain", chain},
          {"reason", rel.reason}};
}

json pf_report_json(const PfReport& rep) {
  json newton = json::array();
  for (const auto& e : rep.newton) {
    newton.push_back({{"i", e.i}, {"lhs", e.lhs.to_string()}, {"rhs", e.rhs.to_string()}, {"pass", e.pass}});
  }
  json minors = {{"max_order", rep.minors.max_order},
                 {"truncation", rep.minors.truncation},
                 {"checked", rep.minors.checked},
                 {"first_negative", nullptr}};
  if (rep.minors.first_negative) {
    const auto& w = *rep.minors.first_negative;
    minors["first_negative"] = {{"rows", w.rows}, {"cols", w.cols}, {"value", w.value.to_string()}};
  }
  return {{"schema", kSchemaVersion},
          {"values", values_json(rep.profile.values)},
          {"profile",
           {{"unimodal", rep.profile.unimodal},
            {"log_concave", rep.profile.log_concave},
            {"internal_zeros", rep.profile.internal_zeros}}},
          {"newton", newton},
          {"certificate", certificate_json(rep.gen_poly_certificate, generating_polynomial(rep.profile.values))},
          {"minors", minors},
          {"verdict", to_string(rep.verdict)},
          {"contradiction", rep.contradiction},
          {"notes", rep.notes}};
}

json params_json(const RecurrenceParams& p) {
  return {{"r", p.r.to_string()}, {"s", p.s.to_string()}, {"t", p.t.to_string()},
          {"a", p.a.to_string()}, {"b", p.b.to_string()}, {"c", p.c.to_string()}};
}

json gate_json(const GateCheck& g) {
  return {{"ok", g.ok}, {"rb_minus_as", g.rb_minus_as.to_string()}, {"second", g.second.to_string()}};
}

json array_json(const TriangularArray& arr) {
  json rows = json::array();
  for (const auto& row : arr.rows) rows.push_back(values_json(row));
  json warnings = json::array();
  for (const auto& w : arr.warnings) warnings.push_back({{"n", w.n}, {"k", w.k}, {"message", w.message}});
  return {{"schema", kSchemaVersion},
          {"params", params_json(arr.params)},
          {"gate", gate_json(check_conditions(arr.params))},
          {"rows", rows},
          {"warnings", warnings}};
}

json reproducer_json(const FuzzInstance& inst) {
  json j = {{"kind", to_string(inst.kind)},
            {"a", inst.params.a.to_string()},
            {"b", inst.params.b.to_string()},
            {"c", inst.params.c.to_string()},
            {"d", inst.params.d.to_string()}};
  if (inst.kind == FuzzKind::kCorollary32) {
    j["xs"] = values_json(inst.xs);
  } else {
    j["f"] = coeffs_json(inst.f);
    j["g"] = coeffs_json(inst.g);
  }
  return j;
}

Polynomial poly_from_json(const json& j) { return Polynomial(values_from_json(j)); }

std::vector<Rational> values_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of coefficients");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

Polynomial parse_poly_arg(const std::string& text) {
  return Polynomial(parse_values({text}));
}

std::vector<Rational> parse_values(const std::vector<std::string>& tokens) {
  std::vector<Rational> out;
  for (const auto& raw : tokens) {
    const std::string tok = trim(raw);
    if (!tok.empty() && tok.front() == '[') {
      json j;
      try {
        j = json::parse(tok);
      } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed coefficient list: ") + e.what());
      }
      for (auto& v : values_from_json(j)) out.push_back(std::move(v));
      continue;
    }
    std::stringstream ss(tok);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      piece = trim(piece);
      if (piece.empty()) throw std::invalid_argument("empty coefficient in '" + tok + "'");
      out.push_back(Rational::parse(piece));
    }
  }
  return out;
}

}  // namespace rootlace::cli
