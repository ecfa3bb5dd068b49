#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "rootlace/arrays.hpp"
#include "rootlace/fuzz.hpp"
#include "rootlace/interlace.hpp"
#include "rootlace/pfseq.hpp"
#include "rootlace/realroots.hpp"
#include "rootlace/transforms.hpp"

namespace rootlace::cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Intervals shown to users are refined to this width; decisions never are.
Rational display_width();

json coeffs_json(const Polynomial& p);
json values_json(const std::vector<Rational>& xs);
json certificate_json(const RealRootCertificate& cert, const Polynomial& p);
json transform_json(const TransformResult& res);
json relation_json(const InterlacingRelation& rel);
json pf_report_json(const PfReport& rep);
json params_json(const RecurrenceParams& p);
json gate_json(const GateCheck& g);
json array_json(const TriangularArray& arr);
json reproducer_json(const FuzzInstance& inst);

/// Polynomial from either a JSON array of coefficient strings/integers or
/// a comma-separated list, ascending powers. Throws std::invalid_argument.
Polynomial parse_poly_arg(const std::string& text);
Polynomial poly_from_json(const json& j);
std::vector<Rational> values_from_json(const json& j);
/// Joins positional tokens; a single token may itself be a list.
std::vector<Rational> parse_values(const std::vector<std::string>& tokens);

}  // namespace rootlace::cli
