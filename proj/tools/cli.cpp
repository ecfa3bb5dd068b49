#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "report.hpp"
#include "rootlace/errors.hpp"

namespace rootlace::cli {

namespace {

enum class Format { kText, kJson, kCsv };

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Context {
  Format format = Format::kText;
  std::ostream& out;
  std::ostream& err;

  void emit(const json& j) const { out << j.dump(2) << "\n"; }
  void require_not_csv(const char* command) const {
    if (format == Format::kCsv) throw InputError(std::string("csv output is not available for ") + command);
  }
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

Rational field(const json& j, const char* key) {
  if (!j.contains(key)) return 0;
  const auto vals = values_from_json(json::array({j.at(key)}));
  return vals.front();
}

std::string bool_word(bool b) { return b ? "yes" : "no"; }

void print_certificate_text(std::ostream& os, const RealRootCertificate& cert, const Polynomial& p) {
  os << "real-rooted: " << bool_word(cert.is_real_rooted) << "\n";
  os << "degree: " << cert.degree << "\n";
  os << "distinct real roots: " << cert.distinct_real_roots << "\n";
  for (const auto& iv : cert.roots) {
    if (iv.is_point()) {
      os << "  root " << iv.lo;
    } else {
      const auto shown = refine(iv, p, display_width());
      os << "  root in (" << shown.lo << ", " << shown.hi << ")"
         << "  ~" << ((shown.lo + shown.hi) * Rational(mpz_class(1), mpz_class(2))).to_double();
    }
    os << "  multiplicity " << iv.multiplicity << "\n";
  }
}

// ---------------------------------------------------------------- poly check

int cmd_poly_check(const Context& ctx, const std::vector<std::string>& coeffs) {
  ctx.require_not_csv("poly check");
  const Polynomial p = Polynomial(parse_values(coeffs));
  if (p.is_zero()) throw InputError("ambiguous: zero polynomial");
  const auto cert = is_real_rooted(p);
  if (ctx.format == Format::kJson) {
    ctx.emit({{"schema", kSchemaVersion}, {"polynomial", coeffs_json(p)}, {"certificate", certificate_json(cert, p)}});
  } else {
    ctx.out << "p(x) = " << p.to_string() << "\n";
    print_certificate_text(ctx.out, cert, p);
  }
  return cert.is_real_rooted ? kOk : kPropertyFailure;
}

// ----------------------------------------------------------------- interlace

int cmd_interlace(const Context& ctx, const std::string& g_text, const std::string& f_text) {
  ctx.require_not_csv("interlace");
  const Polynomial g = parse_poly_arg(g_text);
  const Polynomial f = parse_poly_arg(f_text);
  const auto rel = classify(g, f);
  if (ctx.format == Format::kJson) {
    ctx.emit(relation_json(rel));
  } else {
    ctx.out << to_string(rel.kind) << "\n" << rel.reason << "\n";
    for (const auto& e : rel.chain) {
      ctx.out << "  [" << e.where.lo << ", " << e.where.hi << "] f:" << e.mult_f << " g:" << e.mult_g << "\n";
    }
  }
  return rel.kind == InterlaceKind::kNeither ? kPropertyFailure : kOk;
}

// ----------------------------------------------------------------- transforms

struct TransformArgs {
  std::string f = "1";
  std::string g = "0";
  std::string a = "0", b = "0", c = "0", d = "0";
  std::string input;
  bool force = false;
};

TransformParams params_of(const TransformArgs& t) {
  return {Rational::parse(t.a), Rational::parse(t.b), Rational::parse(t.c), Rational::parse(t.d)};
}

void print_transform(const Context& ctx, const TransformResult& res) {
  if (ctx.format == Format::kJson) {
    ctx.emit(transform_json(res));
    return;
  }
  ctx.out << "F(x) = " << res.output.to_string() << "\n";
  ctx.out << "hypotheses: " << (res.hypothesis_ok ? "ok" : "violated");
  for (const auto& v : res.violations) ctx.out << " [" << v << "]";
  ctx.out << "\n";
  print_certificate_text(ctx.out, res.certificate, res.output);
  for (const auto& n : res.notes) ctx.out << "note: " << n << "\n";
}

int run_pfmap(const Context& ctx, const std::vector<Rational>& xs, const TransformParams& p);

int cmd_transform(const Context& ctx, const TransformArgs& args, FuzzKind kind) {
  ctx.require_not_csv("transform");
  TransformParams p;
  Polynomial f;
  Polynomial g;
  std::vector<Rational> xs;
  if (!args.input.empty()) {
    const json j = read_json_file(args.input);
    if (j.contains("kind")) {
      const auto k = parse_fuzz_kind(j.at("kind").get<std::string>());
      if (!k) throw InputError("unknown kind in reproducer");
      kind = *k;
    }
    p = {field(j, "a"), field(j, "b"), field(j, "c"), field(j, "d")};
    if (kind == FuzzKind::kCorollary32) {
      xs = values_from_json(j.at("xs"));
    } else {
      f = poly_from_json(j.at("f"));
      g = j.contains("g") ? poly_from_json(j.at("g")) : Polynomial{};
    }
  } else {
    p = params_of(args);
    f = parse_poly_arg(args.f);
    g = parse_poly_arg(args.g);
  }
  switch (kind) {
    case FuzzKind::kTheorem:
      print_transform(ctx, theorem_transform(f, g, p, args.force));
      return kOk;
    case FuzzKind::kCorollary31:
      print_transform(ctx, corollary_abcd(f, g, p, args.force));
      return kOk;
    case FuzzKind::kCorollary32:
      return run_pfmap(ctx, xs, p);
  }
  return kOk;
}

int cmd_sum(const Context& ctx, const TransformArgs& args) {
  ctx.require_not_csv("sum");
  print_transform(ctx, sum_rz(parse_poly_arg(args.f), parse_poly_arg(args.g)));
  return kOk;
}

int run_pfmap(const Context& ctx, const std::vector<Rational>& xs, const TransformParams& p) {
  const auto ys = pf_linear_map(xs, p);
  if (ctx.format == Format::kJson) {
    ctx.emit({{"schema", kSchemaVersion},
              {"input", values_json(xs)},
              {"output", values_json(ys)},
              {"gate", p.gate().to_string()},
              {"pf", true}});
  } else {
    ctx.out << "y =";
    for (const auto& y : ys) ctx.out << " " << y;
    ctx.out << "\nPF: yes\n";
  }
  return kOk;
}

// ------------------------------------------------------------------ sequences

struct SeqArgs {
  std::vector<std::string> values;
  std::string file;
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t truncation = 0;  // 0: length + 4
  unsigned max_entry = 3;
  std::size_t max_length = 4;
};

std::string csv_values(const std::vector<Rational>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + xs[i].to_string();
  return s;
}

std::string csv_report_row(const PfReport& r) {
  const bool newton_ok = std::all_of(r.newton.begin(), r.newton.end(), [](const auto& e) { return e.pass; });
  std::ostringstream os;
  os << csv_values(r.profile.values) << "," << to_string(r.verdict) << "," << bool_word(r.profile.unimodal) << ","
     << bool_word(r.profile.log_concave) << "," << bool_word(r.profile.internal_zeros) << ","
     << bool_word(newton_ok) << ","
     << (r.minors.first_negative ? std::to_string(r.minors.first_negative->rows.size()) : std::string("-"));
  return os.str();
}

constexpr const char* kCsvReportHeader =
    "sequence,verdict,unimodal,log_concave,internal_zeros,newton_pass,first_negative_order";

void print_report_text(std::ostream& os, const PfReport& r) {
  os << "sequence: " << csv_values(r.profile.values) << "\n";
  os << "verdict: " << to_string(r.verdict) << "\n";
  os << "unimodal: " << bool_word(r.profile.unimodal) << ", log-concave: " << bool_word(r.profile.log_concave)
     << ", internal zeros: " << bool_word(r.profile.internal_zeros) << "\n";
  for (const auto& e : r.newton) {
    os << "  newton i=" << e.i << ": " << e.lhs << (e.pass ? " >= " : " < ") << e.rhs << "\n";
  }
  os << "minors: order <= " << r.minors.max_order << ", truncation " << r.minors.truncation << ", checked "
     << r.minors.checked;
  if (r.minors.first_negative) os << ", first negative " << r.minors.first_negative->value;
  os << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
}

int cmd_seq_certify(const Context& ctx, const SeqArgs& args) {
  std::vector<std::vector<Rational>> seqs;
  if (!args.file.empty()) {
    const json j = read_json_file(args.file);
    if (!j.is_array()) throw InputError("sequence file must hold an array of arrays");
    for (const auto& s : j) seqs.push_back(values_from_json(s));
  }
  if (!args.values.empty()) seqs.push_back(parse_values(args.values));
  if (seqs.empty()) throw InputError("no sequence given");

  std::vector<PfReport> reports;
  for (const auto& s : seqs) {
    std::optional<std::size_t> trunc;
    if (args.truncation > 0) trunc = args.truncation;
    reports.push_back(asw_check(s, args.max_order, trunc));
  }
  if (ctx.format == Format::kJson) {
    if (reports.size() == 1) {
      ctx.emit(pf_report_json(reports.front()));
    } else {
      json all = json::array();
      for (const auto& r : reports) all.push_back(pf_report_json(r));
      ctx.emit({{"schema", kSchemaVersion}, {"reports", all}});
    }
  } else if (ctx.format == Format::kCsv) {
    ctx.out << kCsvReportHeader << "\n";
    for (const auto& r : reports) ctx.out << csv_report_row(r) << "\n";
  } else {
    for (const auto& r : reports) print_report_text(ctx.out, r);
  }
  if (std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.contradiction; })) {
    return kInternalContradiction;
  }
  const bool all_pf =
      std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.verdict == PfVerdict::kPF; });
  return all_pf ? kOk : kPropertyFailure;
}

// Every sequence with entries in [0, max_entry] and length 1..max_length.
int cmd_seq_sweep(const Context& ctx, const SeqArgs& args) {
  if (args.max_length < 1) throw InputError("--max-length must be >= 1");
  const std::size_t trunc = args.truncation > 0 ? args.truncation : 2 * args.max_length;
  if (trunc < args.max_length) throw InputError("--truncation shorter than --max-length");
  std::size_t total = 0;
  std::size_t pf = 0;
  json mismatches = json::array();
  std::vector<std::string> csv_rows;
  for (std::size_t len = 1; len <= args.max_length; ++len) {
    std::vector<unsigned> digits(len, 0);
    while (true) {
      std::vector<Rational> xs;
      for (unsigned v : digits) xs.emplace_back(static_cast<unsigned long>(v));
      const auto rep = asw_check(xs, args.max_order, trunc);
      ++total;
      const bool rz = rep.verdict == PfVerdict::kPF;
      pf += rz ? 1 : 0;
      if (rz == rep.minors.first_negative.has_value()) mismatches.push_back(values_json(xs));
      if (ctx.format == Format::kCsv) csv_rows.push_back(csv_report_row(rep));
      std::size_t pos = 0;
      while (pos < len && digits[pos] == args.max_entry) digits[pos++] = 0;
      if (pos == len) break;
      ++digits[pos];
    }
  }
  if (ctx.format == Format::kJson) {
    ctx.emit({{"schema", kSchemaVersion},
              {"total", total},
              {"pf", pf},
              {"not_pf", total - pf},
              {"max_order", args.max_order},
              {"truncation", trunc},
              {"mismatches", mismatches}});
  } else if (ctx.format == Format::kCsv) {
    ctx.out << kCsvReportHeader << "\n";
    for (const auto& r : csv_rows) ctx.out << r << "\n";
  } else {
    ctx.out << "sequences: " << total << " (PF " << pf << ", not PF " << total - pf << ")\n";
    ctx.out << "mismatches between real-rootedness and minors: " << mismatches.size() << "\n";
  }
  return mismatches.empty() ? kOk : kPropertyFailure;
}

// --------------------------------------------------------------------- arrays

struct ArrayArgs {
  std::string preset;
  std::string params_file;
  unsigned m = 0;
  std::size_t n = 0;
  std::size_t max_order = kArrayMinorOrder;
};

RecurrenceParams resolve_params(const ArrayArgs& args) {
  if (!args.params_file.empty()) {
    if (!args.preset.empty()) throw InputError("give a preset or --params, not both");
    const json j = read_json_file(args.params_file);
    return {field(j, "r"), field(j, "s"), field(j, "t"), field(j, "a"), field(j, "b"), field(j, "c")};
  }
  if (args.preset.empty()) throw InputError("a preset name or --params file is required");
  std::optional<unsigned> m;
  if (args.m > 0) m = args.m;
  return preset(args.preset, m);
}

int cmd_array_gen(const Context& ctx, const ArrayArgs& args) {
  const auto arr = generate(resolve_params(args), args.n);
  if (ctx.format == Format::kJson) {
    ctx.emit(array_json(arr));
  } else if (ctx.format == Format::kCsv) {
    ctx.out << "n,k,value\n";
    for (std::size_t n = 0; n < arr.rows.size(); ++n) {
      for (std::size_t k = 0; k < arr.rows[n].size(); ++k) ctx.out << n << "," << k << "," << arr.rows[n][k] << "\n";
    }
  } else {
    for (std::size_t n = 0; n < arr.rows.size(); ++n) {
      ctx.out << n << ":";
      for (const auto& v : arr.rows[n]) ctx.out << " " << v;
      ctx.out << "\n";
    }
    for (const auto& w : arr.warnings) ctx.err << "warning: n=" << w.n << " k=" << w.k << ": " << w.message << "\n";
  }
  return kOk;
}

int cmd_array_certify(const Context& ctx, const ArrayArgs& args) {
  const auto arr = generate(resolve_params(args), args.n);
  const auto gate = check_conditions(arr.params);
  const auto reports = certify(arr, 0, args.n, args.max_order);
  if (ctx.format == Format::kJson) {
    json j = array_json(arr);
    json reps = json::array();
    for (const auto& r : reports) reps.push_back(pf_report_json(r));
    j["reports"] = reps;
    ctx.emit(j);
  } else if (ctx.format == Format::kCsv) {
    ctx.out << "n," << kCsvReportHeader << "\n";
    for (std::size_t n = 0; n < reports.size(); ++n) ctx.out << n << "," << csv_report_row(reports[n]) << "\n";
  } else {
    ctx.out << "gate: " << (gate.ok ? "ok" : "fails") << " (rb-as = " << gate.rb_minus_as
            << ", (r+s+t)b-(a+c)s = " << gate.second << ")\n";
    for (std::size_t n = 0; n < reports.size(); ++n) {
      ctx.out << "row " << n << ": " << to_string(reports[n].verdict) << "\n";
    }
  }
  if (std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.contradiction; })) {
    return kInternalContradiction;
  }
  const bool all_pf =
      std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.verdict == PfVerdict::kPF; });
  return all_pf ? kOk : kPropertyFailure;
}

// ----------------------------------------------------------------------- fuzz

struct FuzzArgs {
  std::string kind;
  std::size_t count = 100;
  std::uint64_t seed = 0;
  std::size_t min_degree = 1;
  std::size_t max_degree = 8;
  std::string relation = "mixed";
  bool boundary = false;
};

int cmd_fuzz(const Context& ctx, const FuzzArgs& args) {
  const auto kind = parse_fuzz_kind(args.kind);
  if (!kind) throw InputError("unknown fuzz kind '" + args.kind + "'");
  if (args.count < 1) throw InputError("--count must be >= 1");
  if (args.min_degree < 1 || args.max_degree < args.min_degree) throw InputError("bad degree bounds");
  FuzzConfig cfg;
  cfg.kind = *kind;
  cfg.count = args.count;
  cfg.seed = args.seed;
  cfg.min_degree = args.min_degree;
  cfg.max_degree = args.max_degree;
  cfg.boundary = args.boundary;
  if (args.relation == "interlaces") cfg.relation = InterlaceKind::kInterlaces;
  if (args.relation == "alternates") cfg.relation = InterlaceKind::kAlternatesLeft;

  const auto summary = run_fuzz(cfg);
  if (ctx.format == Format::kJson) {
    json failures = json::array();
    for (const auto& fl : summary.failures) {
      failures.push_back({{"index", fl.instance.index}, {"message", fl.message}, {"reproducer", reproducer_json(fl.instance)}});
    }
    ctx.emit({{"schema", kSchemaVersion},
              {"kind", args.kind},
              {"seed", args.seed},
              {"count", summary.count},
              {"passed", summary.passed},
              {"failed", summary.failures.size()},
              {"boundary", args.boundary},
              {"failures", failures}});
  } else if (ctx.format == Format::kCsv) {
    ctx.out << "index,status,message\n";
    std::size_t next = 0;
    for (std::size_t i = 0; i < summary.count; ++i) {
      if (next < summary.failures.size() && summary.failures[next].instance.index == i) {
        ctx.out << i << ",fail," << summary.failures[next].message << "\n";
        ++next;
      } else {
        ctx.out << i << ",pass,\n";
      }
    }
  } else {
    ctx.out << args.kind << ": " << summary.passed << "/" << summary.count << " pass (seed " << args.seed << ")\n";
    if (!summary.failures.empty()) {
      const auto& fl = summary.failures.front();
      ctx.out << "first failure at index " << fl.instance.index << ": " << fl.message << "\n";
      ctx.out << "reproducer: " << reproducer_json(fl.instance).dump() << "\n";
    }
  }
  return summary.failures.empty() ? kOk : kPropertyFailure;
}

// ----------------------------------------------------------------- orthogonal

std::vector<ThreeTermCoeffs> family_coeffs(const std::string& family, std::size_t n) {
  std::vector<ThreeTermCoeffs> out;
  for (std::size_t k = 1; k <= n; ++k) {
    const Rational kk(static_cast<unsigned long>(k));
    if (family == "chebyshev") {
      out.push_back({2, 0, 1});
    } else if (family == "hermite") {
      out.push_back({2, 0, Rational(2) * (kk - Rational(1))});
    } else if (family == "legendre") {
      // k P_k = (2k-1) x P_{k-1} - (k-1) P_{k-2}
      out.push_back({(Rational(2) * kk - Rational(1)) / kk, 0, (kk - Rational(1)) / kk});
    } else {
      throw InputError("unknown family '" + family + "'");
    }
  }
  return out;
}

int cmd_orthogonal(const Context& ctx, const std::string& family, const std::string& coeff_file, std::size_t n) {
  ctx.require_not_csv("orthogonal");
  std::vector<ThreeTermCoeffs> coeffs;
  if (!coeff_file.empty()) {
    const json j = read_json_file(coeff_file);
    if (!j.is_array()) throw InputError("coefficient file must hold an array of [a, b, c]");
    for (const auto& row : j) {
      const auto v = values_from_json(row);
      if (v.size() != 3) throw InputError("each recurrence row needs [a, b, c]");
      coeffs.push_back({v[0], v[1], v[2]});
    }
  } else {
    coeffs = family_coeffs(family, n);
  }
  const auto ps = orthogonal_sequence(coeffs, n);
  if (ctx.format == Format::kJson) {
    json polys = json::array();
    for (const auto& p : ps) polys.push_back(coeffs_json(p));
    ctx.emit({{"schema", kSchemaVersion}, {"polynomials", polys}, {"interlacing_verified", true}});
  } else {
    for (std::size_t k = 0; k < ps.size(); ++k) ctx.out << "p_" << k << "(x) = " << ps[k].to_string() << "\n";
    ctx.out << "simple real roots and p_k interlaces p_{k+1}: verified\n";
  }
  return kOk;
}

// --------------------------------------------------------------------- simion

int cmd_simion(const Context& ctx, const std::vector<unsigned>& multiset) {
  ctx.require_not_csv("simion");
  const Polynomial f = simion_polynomial(multiset);
  int mult_minus_one = 0;
  const auto factors = f.is_constant() ? std::vector<Polynomial>{} : multiplicity_factors(f);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (!factors[k].is_constant() && evaluate(factors[k], Rational(-1)).is_zero()) {
      mult_minus_one = static_cast<int>(k + 1);
    }
  }
  const auto cert = f.is_constant() ? RealRootCertificate{true, 0, 0, {}} : is_real_rooted(f);
  if (ctx.format == Format::kJson) {
    ctx.emit({{"schema", kSchemaVersion},
              {"multiset", multiset},
              {"polynomial", coeffs_json(f)},
              {"certificate", certificate_json(cert, f)},
              {"multiplicity_of_minus_one", mult_minus_one}});
  } else {
    ctx.out << "f(x) = " << f.to_string() << "\n";
    ctx.out << "multiplicity of -1: " << mult_minus_one << "\n";
    print_certificate_text(ctx.out, cert, f);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact real-root, interlacing and Polya frequency toolkit", "rootlace"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->envname("ROOTLACE_FORMAT");

  std::function<int(const Context&)> action;

  // poly check
  auto* poly = app.add_subcommand("poly", "Polynomial checks");
  poly->require_subcommand(1);
  auto* poly_check = poly->add_subcommand("check", "Certify real-rootedness");
  std::vector<std::string> poly_coeffs;
  poly_check->add_option("coeffs", poly_coeffs, "Ascending coefficients")->required()->allow_extra_args();
  poly_check->callback([&] { action = [&](const Context& c) { return cmd_poly_check(c, poly_coeffs); }; });

  // interlace
  auto* inter = app.add_subcommand("interlace", "Classify g against f");
  std::string ig;
  std::string if_;
  inter->add_option("--g", ig, "Coefficients of g")->required();
  inter->add_option("--f", if_, "Coefficients of f")->required();
  inter->callback([&] { action = [&](const Context& c) { return cmd_interlace(c, ig, if_); }; });

  // transform / corollary / sum
  TransformArgs targs;
  auto add_transform_opts = [&](CLI::App* sub, bool with_params) {
    sub->add_option("--f", targs.f, "Coefficients of f");
    sub->add_option("--g", targs.g, "Coefficients of g");
    if (with_params) {
      sub->add_option("--a", targs.a);
      sub->add_option("--b", targs.b);
      sub->add_option("--c", targs.c);
      sub->add_option("--d", targs.d);
      sub->add_flag("--force", targs.force, "Compute even if a hypothesis fails");
      sub->add_option("--input", targs.input, "Reproducer JSON file");
    }
  };
  auto* transform = app.add_subcommand("transform", "(bx+a)f + (dx+c)g");
  add_transform_opts(transform, true);
  transform->callback([&] { action = [&](const Context& c) { return cmd_transform(c, targs, FuzzKind::kTheorem); }; });
  auto* corollary = app.add_subcommand("corollary", "(ax+b)f + x(cx+d)g for PF f, g");
  add_transform_opts(corollary, true);
  corollary->callback(
      [&] { action = [&](const Context& c) { return cmd_transform(c, targs, FuzzKind::kCorollary31); }; });
  auto* sum = app.add_subcommand("sum", "f + g for g ~> f");
  add_transform_opts(sum, false);
  sum->callback([&] { action = [&](const Context& c) { return cmd_sum(c, targs); }; });

  // pfmap
  auto* pfmap = app.add_subcommand("pfmap", "PF-preserving linear map of a sequence");
  std::vector<std::string> pf_values;
  pfmap->add_option("values", pf_values, "Sequence x_0 .. x_{n-1}")->required();
  pfmap->add_option("--a", targs.a);
  pfmap->add_option("--b", targs.b);
  pfmap->add_option("--c", targs.c);
  pfmap->add_option("--d", targs.d);
  pfmap->callback([&] {
    action = [&](const Context& c) {
      c.require_not_csv("pfmap");
      return run_pfmap(c, parse_values(pf_values), params_of(targs));
    };
  });

  // seq certify / sweep
  SeqArgs sargs;
  auto* seq = app.add_subcommand("seq", "Sequence certification");
  seq->require_subcommand(1);
  auto* seq_certify = seq->add_subcommand("certify", "PF report for one or more sequences");
  seq_certify->add_option("values", sargs.values, "Sequence entries");
  seq_certify->add_option("--file", sargs.file, "JSON array of sequences");
  seq_certify->add_option("--max-order", sargs.max_order, "Largest minor order")->check(CLI::PositiveNumber);
  seq_certify->add_option("--truncation", sargs.truncation, "Toeplitz truncation size");
  seq_certify->callback([&] { action = [&](const Context& c) { return cmd_seq_certify(c, sargs); }; });
  auto* seq_sweep = seq->add_subcommand("sweep", "Exhaustive real-rootedness vs minors sweep");
  seq_sweep->add_option("--max-entry", sargs.max_entry, "Entries range over 0..E");
  seq_sweep->add_option("--max-length", sargs.max_length, "Lengths 1..L");
  seq_sweep->add_option("--max-order", sargs.max_order, "Largest minor order")->check(CLI::PositiveNumber);
  seq_sweep->add_option("--truncation", sargs.truncation, "Toeplitz truncation size (default 2L)");
  seq_sweep->callback([&] { action = [&](const Context& c) { return cmd_seq_sweep(c, sargs); }; });

  // array gen / certify
  ArrayArgs aargs;
  std::size_t n_positional = 0;
  auto* array = app.add_subcommand("array", "Triangular arrays from the bilinear recurrence");
  array->require_subcommand(1);
  auto add_array_opts = [&](CLI::App* sub) {
    sub->add_option("preset", aargs.preset, "Preset name");
    sub->add_option("n_max", n_positional, "Last row (same as --n)");
    sub->add_option("--params", aargs.params_file, "JSON file with r, s, t, a, b, c");
    sub->add_option("--m", aargs.m, "Preset parameter m");
    sub->add_option("--n", aargs.n, "Last row to generate");
  };
  auto* array_gen = array->add_subcommand("gen", "Generate rows 0..n");
  add_array_opts(array_gen);
  array_gen->callback([&] {
    action = [&](const Context& c) {
      if (n_positional > 0) aargs.n = n_positional;
      return cmd_array_gen(c, aargs);
    };
  });
  auto* array_certify = array->add_subcommand("certify", "Certify rows 0..n as PF");
  add_array_opts(array_certify);
  array_certify->add_option("--max-order", aargs.max_order, "Largest minor order")->check(CLI::PositiveNumber);
  array_certify->callback([&] {
    action = [&](const Context& c) {
      if (n_positional > 0) aargs.n = n_positional;
      return cmd_array_certify(c, aargs);
    };
  });

  // fuzz
  FuzzArgs fargs;
  auto* fuzz = app.add_subcommand("fuzz", "Seeded property harness");
  fuzz->add_option("kind", fargs.kind, "theorem | corollary31 | corollary32")->required();
  fuzz->add_option("--count", fargs.count, "Number of instances");
  fuzz->add_option("--seed", fargs.seed, "RNG seed");
  fuzz->add_option("--min-degree", fargs.min_degree);
  fuzz->add_option("--max-degree", fargs.max_degree);
  fuzz->add_option("--relation", fargs.relation, "interlaces | alternates | mixed")
      ->check(CLI::IsMember({"interlaces", "alternates", "mixed"}));
  fuzz->add_flag("--boundary", fargs.boundary, "Draw parameters with ad = bc");
  fuzz->callback([&] { action = [&](const Context& c) { return cmd_fuzz(c, fargs); }; });

  // orthogonal
  std::string family = "chebyshev";
  std::string coeff_file;
  std::size_t ortho_n = 5;
  auto* ortho = app.add_subcommand("orthogonal", "Three-term recurrence p_0 .. p_n");
  ortho->add_option("--family", family, "chebyshev | hermite | legendre");
  ortho->add_option("--coeffs", coeff_file, "JSON file of [a, b, c] rows for n = 1..N");
  ortho->add_option("--n", ortho_n, "Last index");
  ortho->callback([&] { action = [&](const Context& c) { return cmd_orthogonal(c, family, coeff_file, ortho_n); }; });

  // simion
  std::vector<unsigned> multiset;
  auto* simion = app.add_subcommand("simion", "Composition polynomial of a multiset");
  simion->add_option("multiplicities", multiset, "Copies of each element type");
  simion->callback([&] { action = [&](const Context& c) { return cmd_simion(c, multiset); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  Context ctx{format == "json" ? Format::kJson : (format == "csv" ? Format::kCsv : Format::kText), out, err};
  auto report_error = [&](const char* type, const std::exception& e, int code) {
    err << "error: " << e.what() << "\n";
    if (ctx.format == Format::kJson) {
      ctx.emit({{"schema", kSchemaVersion}, {"error", {{"type", type}, {"message", e.what()}}}});
    }
    return code;
  };
  try {
    return action(ctx);
  } catch (const InternalContradiction& e) {
    return report_error("InternalContradiction", e, kInternalContradiction);
  } catch (const HypothesisViolation& e) {
    return report_error("HypothesisViolation", e, kPropertyFailure);
  } catch (const NotRealRooted& e) {
    return report_error("NotRealRooted", e, kPropertyFailure);
  } catch (const NotPF& e) {
    return report_error("NotPF", e, kPropertyFailure);
  } catch (const NegativeOutput& e) {
    return report_error("NegativeOutput", e, kPropertyFailure);
  } catch (const NegativeEntry& e) {
    return report_error("NegativeEntry", e, kPropertyFailure);
  } catch (const std::invalid_argument& e) {
    return report_error("InputError", e, kInputError);
  } catch (const std::domain_error& e) {
    return report_error("InputError", e, kInputError);
  } catch (const json::exception& e) {
    return report_error("InputError", e, kInputError);
  } catch (const std::exception& e) {
    return report_error("InternalError", e, kInternalContradiction);
  }
}

}  // namespace rootlace::cli
