#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "pquot/driver.hpp"
#include "pquot/error.hpp"

namespace pquot::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::uint64_t field_size = 2;
  std::string format = "json";
  std::string F, G, chart = "U0", coeffs, germ, on;
  bool extend = true;
  unsigned degree_bound = 0;
  bool affine = false;
  unsigned workers = 0;
  std::uint64_t samples = 0, seed = 1;
  std::size_t max_violations = 1000;
};

// Parse failure inside an option value; printed with a caret.
struct ExprError {
  std::string option;
  std::string text;
  std::string message;
  std::size_t position;
};

MultiPoly parse_option(const std::string& option, const std::string& text, const FieldCtx& K, const VarList& vars) {
  try {
    return parse_poly(text, K, vars);
  } catch (const ParseError& e) {
    throw ExprError{option, text, e.what(), e.position()};
  }
}

std::optional<unsigned> env_unsigned(const char* name) {
  const char* s = std::getenv(name);
  if (!s || !*s) return std::nullopt;
  unsigned v = 0;
  const char* end = s + std::char_traits<char>::length(s);
  auto [p, ec] = std::from_chars(s, end, v);
  if (ec != std::errc() || p != end || v == 0)
    throw InputError(std::string("environment variable ") + name + " must be a positive integer");
  return v;
}

ConfigOptions config_options(const Options& o) {
  ConfigOptions c;
  c.scheme.extend_auto = o.extend;
  c.resolve.extend_auto = o.extend;
  c.degree_bound = o.degree_bound;
  if (auto t = env_unsigned("PQUOT_MAX_TRUNCATION")) c.scheme.max_truncation = *t;
  return c;
}

NormalFormCoefficients parse_coeffs(const std::string& text, const FieldCtx& K) {
  NormalFormCoefficients c = NormalFormCoefficients::zero(K);
  std::array<bool, 7> seen{};
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, comma - start);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw InputError("--coeffs: expected name=value, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    std::size_t idx = 7;
    for (std::size_t i = 0; i < 7; ++i)
      if (name == NormalFormCoefficients::kNames[i]) idx = i;
    if (idx == 7) throw InputError("--coeffs: unknown coefficient '" + name + "'");
    if (seen[idx]) throw InputError("--coeffs: coefficient '" + name + "' given twice");
    seen[idx] = true;
    try {
      c[idx] = parse_element(item.substr(eq + 1), K);
    } catch (const ParseError& e) {
      throw ExprError{"--coeffs", text, e.what(), start + eq + 1 + e.position()};
    }
    start = comma + 1;
  }
  return c;
}

struct FieldInput {
  PolyDerivation d;
  std::optional<NormalFormCoefficients> coeffs;
};

FieldInput vector_field(const Options& o, const FieldCtx& K) {
  if (!o.coeffs.empty()) {
    if (!o.F.empty() || !o.G.empty()) throw InputError("give either --coeffs or --F/--G, not both");
    NormalFormCoefficients c = parse_coeffs(o.coeffs, K);
    return {make_normalized(c), c};
  }
  if (o.F.empty() || o.G.empty()) throw InputError("a vector field needs --F and --G, or --coeffs");
  const auto chart = chart_from_string(o.chart);
  if (!chart) throw InputError("unknown chart '" + o.chart + "'");
  const VarList vars = chart_vars(*chart);
  MultiPoly F = parse_option("--F", o.F, K, vars);
  MultiPoly G = parse_option("--G", o.G, K, vars);
  return {PolyDerivation::make(*chart, std::move(F), std::move(G)), std::nullopt};
}

std::string field_name(const FieldCtx& K) { return "GF(" + std::to_string(K.size()) + ")"; }

Json coeffs_json(const NormalFormCoefficients& c) {
  Json j = Json::object();
  const auto a = c.as_array();
  for (std::size_t i = 0; i < 7; ++i) j[NormalFormCoefficients::kNames[i]] = a[i].to_string();
  return j;
}

Json field_json(const FieldInput& in) {
  Json j;
  j["chart"] = chart_name(in.d.chart());
  j["F"] = in.d.F().to_string();
  j["G"] = in.d.G().to_string();
  if (in.coeffs) j["coeffs"] = coeffs_json(*in.coeffs);
  return j;
}

Json point_json(const SingularPoint& p) {
  Json j;
  j["point"] = Json::array();
  for (const FieldElement& e : p.coords) j["point"].push_back(e.to_string());
  j["length"] = p.length;
  j["chart"] = chart_name(p.chart);
  return j;
}

Json report_json(const PointReport& r) {
  Json j = point_json(r.point);
  j["type"] = r.type.to_string();
  j["tau"] = r.tau;
  j["germ"] = r.germ.to_string();
  return j;
}

Json graph_json(const DualGraph& g) {
  Json j;
  j["vertices"] = g.vertices;
  j["edges"] = Json::array();
  for (auto [a, b] : g.edges) j["edges"].push_back({a, b});
  j["self_intersections"] = g.self_intersections;
  return j;
}

std::string point_text(const SingularPoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < 3; ++i) s += (i ? " : " : "") + p.coords[i].to_string();
  return s + ")";
}

void point_table(std::ostream& out, const std::vector<PointReport>& pts) {
  std::size_t w = 5;
  for (const auto& r : pts) w = std::max(w, point_text(r.point).size());
  out << std::left << std::setw(static_cast<int>(w) + 2) << "point" << std::setw(7) << "chart" << std::setw(8)
      << "length" << std::setw(8) << "type" << "tau\n";
  for (const auto& r : pts)
    out << std::setw(static_cast<int>(w) + 2) << point_text(r.point) << std::setw(7) << chart_name(r.point.chart)
        << std::setw(8) << r.point.length << std::setw(8) << r.type.to_string() << r.tau << "\n";
}

// Prints "key: value" lines for a flat JSON object; nested values inline.
void text_object(std::ostream& out, const Json& j) {
  for (const auto& [k, v] : j.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

MultiPoly parse_germ(const Options& o, const FieldCtx& K) {
  if (o.germ.empty()) throw InputError("--f is required");
  return parse_option("--f", o.germ, K, relation_vars());
}

int cmd_pclosed(const Options& o, const FieldCtx& K, std::ostream& out) {
  const FieldInput in = vector_field(o, K);
  const PClosedResult r = is_p_closed(in.d);
  Json j;
  j["p_closed"] = r.p_closed;
  j["H"] = r.H ? Json(r.H->to_string()) : Json(nullptr);
  if (o.format == "json") out << j.dump(2) << "\n";
  else text_object(out, j);
  return 0;
}

int cmd_degree(const Options& o, const FieldCtx& K, std::ostream& out) {
  const FieldInput in = vector_field(o, K);
  Json j;
  j["deg_L"] = degree_of_foliation(in.d);
  j["vector_field"] = field_json(in);
  j["charts"] = Json::object();
  for (Chart c : {Chart::U0, Chart::U1, Chart::U2}) j["charts"][chart_name(c)] = transport(in.d, c).to_string();
  if (o.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << "deg_L: " << j["deg_L"].get<int>() << "\n";
    for (const auto& [c, e] : j["charts"].items()) out << c << ": " << e.get<std::string>() << "\n";
  }
  return 0;
}

int cmd_invariant_ring(const Options& o, const FieldCtx& K, std::ostream& out) {
  const FieldInput in = vector_field(o, K);
  const ConfigOptions cfg = config_options(o);
  HypersurfacePresentation p;
  if (o.on.empty()) {
    p = invariant_ring(in.d, cfg.degree_bound);
  } else {
    const auto c = chart_from_string(o.on);
    if (!c) throw InputError("unknown chart '" + o.on + "'");
    auto [f, g] = chart_components(in.d, *c);
    p = invariant_ring(PolyDerivation::make_unchecked(*c, std::move(f), std::move(g)), cfg.degree_bound);
  }
  Json j;
  j["chart"] = chart_name(p.chart);
  j["h"] = p.h.to_string();
  j["f"] = p.f.to_string();
  j["relation"] = p.relation();
  if (o.format == "json") out << j.dump(2) << "\n";
  else text_object(out, j);
  return 0;
}

int cmd_classify(const Options& o, const FieldCtx& K, std::ostream& out) {
  const FieldInput in = vector_field(o, K);
  const ConfigOptions cfg = config_options(o);
  Json j;
  std::vector<PointReport> pts;
  if (o.affine) {
    const FieldCtx* field = nullptr;
    pts = affine_singularities(in.d, cfg, &field);
    std::vector<RDPType> types;
    for (const auto& r : pts) types.push_back(r.type);
    j["chart"] = chart_name(in.d.chart());
    j["multiset"] = multiset_name(types);
    j["field"] = field_name(*field);
  } else {
    const Configuration c = configuration(in.d, cfg);
    pts = c.points;
    j["deg_L"] = c.deg_L;
    j["label"] = c.label;
    j["field"] = field_name(*c.field);
    j["lengths_match_types"] = c.lengths_match_types;
  }
  j["vector_field"] = field_json(in);
  j["points"] = Json::array();
  for (const auto& r : pts) j["points"].push_back(report_json(r));
  if (o.format == "json") {
    out << j.dump(2) << "\n";
    return 0;
  }
  if (o.affine) {
    out << "affine singularities on " << j["chart"].get<std::string>() << ": " << j["multiset"].get<std::string>()
        << "\n";
  } else {
    out << "deg_L: " << j["deg_L"].get<int>() << "\n" << "configuration: " << j["label"].get<std::string>() << "\n";
  }
  out << "field: " << j["field"].get<std::string>() << "\n";
  point_table(out, pts);
  return 0;
}

int cmd_resolve(const Options& o, const FieldCtx& K, std::ostream& out) {
  const ConfigOptions cfg = config_options(o);
  const MultiPoly f = normalize_square_part(parse_germ(o, K));
  if (!is_singular_germ(f)) throw ComputeError("germ is not singular at the origin");
  const DualGraph g = resolve_dual_graph(f, cfg.resolve);
  const RDPType shape = dynkin_type(g);
  const unsigned tau = tjurina(f, cfg.scheme.max_truncation);
  std::optional<RDPType> type;
  for (const auto& [t, tt] : coindex_table())
    if (t.letter == shape.letter && t.index == shape.index && tt == tau) type = t;
  Json j;
  j["germ"] = f.to_string();
  j["dual_graph"] = graph_json(g);
  j["dynkin"] = shape.to_string();
  j["type"] = type ? Json(type->to_string()) : Json(nullptr);
  j["tau"] = tau;
  if (o.format == "json") out << j.dump(2) << "\n";
  else text_object(out, j);
  return 0;
}

int cmd_tjurina(const Options& o, const FieldCtx& K, std::ostream& out) {
  const ConfigOptions cfg = config_options(o);
  const MultiPoly f = parse_germ(o, K);
  Json j;
  j["germ"] = f.to_string();
  j["tau"] = tjurina(f, cfg.scheme.max_truncation);
  if (o.format == "json") out << j.dump(2) << "\n";
  else text_object(out, j);
  return 0;
}

int cmd_survey(const Options& o, const FieldCtx& K, std::ostream& out) {
  SurveyOptions so;
  so.config = config_options(o);
  so.samples = o.samples;
  so.seed = o.seed;
  so.max_violations = o.max_violations;
  so.workers = o.workers;
  if (so.workers == 0) so.workers = env_unsigned("PQUOT_WORKERS").value_or(1);
  const SurveyReport r = survey(K, so);

  Json j;
  j["field"] = field_name(K);
  j["mode"] = r.sampled ? "sampled" : "exhaustive";
  if (r.sampled) j["seed"] = o.seed;
  j["examined"] = r.examined;
  j["rejected"] = {{"zero_component", r.rejected_ii}, {"common_factor", r.rejected_iii}};
  j["accepted"] = r.accepted;
  j["histogram"] = Json::object();
  for (const auto& [k, v] : r.histogram) j["histogram"][k] = v;
  j["violation_count"] = r.violation_count;
  j["violations"] = Json::array();
  for (const Violation& v : r.violations)
    j["violations"].push_back({{"index", v.index}, {"coeffs", coeffs_json(v.coeffs)}, {"reason", v.reason}});

  if (o.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << "field: " << field_name(K) << " (" << j["mode"].get<std::string>() << ")\n"
        << "examined: " << r.examined << "\n"
        << "rejected: " << r.rejected_ii << " zero component, " << r.rejected_iii << " common factor\n"
        << "accepted: " << r.accepted << "\n";
    for (const auto& [k, v] : r.histogram) out << "  " << std::left << std::setw(24) << k << v << "\n";
    out << "violations: " << r.violation_count << "\n";
    for (const Violation& v : r.violations) out << "  #" << v.index << " " << coeffs_json(v.coeffs).dump() << ": " << v.reason << "\n";
  }
  return r.violation_count == 0 ? 0 : 1;
}

void add_field_flags(CLI::App* sub, Options& o) {
  sub->add_option("--F", o.F, "first component of the vector field");
  sub->add_option("--G", o.G, "second component of the vector field");
  sub->add_option("--chart", o.chart, "chart of --F/--G: U0 (x,y), U1 (z,w), U2 (u,v)")
      ->check(CLI::IsMember({"U0", "U1", "U2"}));
  sub->add_option("--coeffs", o.coeffs, "normal-form coefficients, e.g. a20=1,b02=g");
}

void add_compute_flags(CLI::App* sub, Options& o) {
  sub->add_flag("--extend-auto,!--no-extend", o.extend, "extend the field when points are not rational");
  sub->add_option("--degree-bound", o.degree_bound, "initial degree bound for the invariant search");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quotients of the projective plane by p-closed vector fields in characteristic 2", "pquot"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--field", o.field_size, "field size q = 2^k")->capture_default_str();
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  auto* pclosed = app.add_subcommand("pclosed", "test p-closedness, report H with delta^2 = H delta");
  add_field_flags(pclosed, o);
  auto* degree = app.add_subcommand("degree", "degree of the foliation and chart expressions");
  add_field_flags(degree, o);
  auto* inv = app.add_subcommand("invariant-ring", "hypersurface presentation of the invariant ring");
  add_field_flags(inv, o);
  add_compute_flags(inv, o);
  inv->add_option("--on", o.on, "chart to compute on (default: chart of the input)")
      ->check(CLI::IsMember({"U0", "U1", "U2"}));
  auto* classify = app.add_subcommand("classify", "singularities of the quotient");
  add_field_flags(classify, o);
  add_compute_flags(classify, o);
  classify->add_flag("--affine", o.affine, "only the points of the input chart");
  auto* resolve = app.add_subcommand("resolve", "dual graph of Z^2 + f at the origin");
  resolve->add_option("--f", o.germ, "germ f(X, Y)");
  add_compute_flags(resolve, o);
  auto* tj = app.add_subcommand("tjurina", "Tjurina number of Z^2 + f at the origin");
  tj->add_option("--f", o.germ, "germ f(X, Y)");
  auto* sv = app.add_subcommand("survey", "run the normal-form survey");
  add_compute_flags(sv, o);
  sv->add_option("--workers", o.workers, "worker threads (default PQUOT_WORKERS or 1)");
  sv->add_option("--samples", o.samples, "random tuples instead of the full enumeration");
  sv->add_option("--seed", o.seed, "seed for --samples");
  sv->add_option("--max-violations", o.max_violations, "violations listed in the report");

  for (CLI::App* sub : app.get_subcommands({})) {
    sub->add_option("--field", o.field_size, "field size q = 2^k");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_out, o_err;
    const int code = app.exit(e, o_out, o_err);
    out << o_out.str();
    err << o_err.str();
    return code == 0 ? 0 : 2;
  }

  try {
    const FieldCtx& K = field_of_size(o.field_size);
    if (pclosed->parsed()) return cmd_pclosed(o, K, out);
    if (degree->parsed()) return cmd_degree(o, K, out);
    if (inv->parsed()) return cmd_invariant_ring(o, K, out);
    if (classify->parsed()) return cmd_classify(o, K, out);
    if (resolve->parsed()) return cmd_resolve(o, K, out);
    if (tj->parsed()) return cmd_tjurina(o, K, out);
    return cmd_survey(o, K, out);
  } catch (const ExprError& e) {
    err << "error: " << e.option << ": " << e.message << " at position " << e.position << "\n"
        << "  " << e.text << "\n"
        << "  " << std::string(e.position, ' ') << "^\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace pquot::cli
