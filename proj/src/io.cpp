#include "garsia_abc/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "garsia_abc/error.hpp"

namespace gabc::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

// Non-finite doubles have no JSON literal; spell them out.
Json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

Json complex_json(cplx z) { return Json::array({z.real(), z.imag()}); }

cplx complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    parse_fail("complex numbers are [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail(std::string("malformed JSON: ") + e.what());
  }
}

void check_schema(const Json& j) {
  if (!j.is_object()) parse_fail("top level must be an object");
  if (j.contains("schema") && j["schema"] != kSchema) parse_fail("unsupported schema version");
}

double parse_double(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorCode::InvalidArgument, "not a number: '" + std::string(s) + "'");
  return v;
}

Json checks_json(const CheckMap& checks) {
  Json out = Json::object();
  for (const auto& [name, check] : checks) out[name] = {{"pass", check.pass}, {"value", number(check.value)}};
  return out;
}

}  // namespace

Json to_json(const ComplexPolynomial& p) {
  Json out = Json::array();
  for (const cplx c : p.coeffs()) out.push_back(complex_json(c));
  return out;
}

ComplexPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) parse_fail("a polynomial is a list of [re, im] coefficients");
  std::vector<cplx> coeffs;
  for (const auto& c : j) coeffs.push_back(complex_from_json(c));
  return ComplexPolynomial(std::move(coeffs));
}

Json to_json(const BlaschkeProduct& b) {
  Json out = Json::array();
  for (const auto& z : b.zeros()) out.push_back({{"zero", complex_json(z.location)}, {"mult", z.multiplicity}});
  return out;
}

BlaschkeProduct blaschke_from_json(const Json& j, const RunConfig& config) {
  if (!j.is_array()) parse_fail("a Blaschke product is a list of {zero, mult} objects");
  std::vector<BlaschkeProduct::Zero> zeros;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("zero")) parse_fail("Blaschke zero entries need a 'zero' field");
    const int mult = item.value("mult", 1);
    if (mult < 1) parse_fail("Blaschke multiplicities must be positive");
    zeros.push_back({complex_from_json(item["zero"]), mult});
  }
  return BlaschkeProduct::from_zeros(zeros, config.boundary_margin, config.match_tolerance);
}

Json to_json(const RunConfig& c) {
  return {{"boundary_margin", c.boundary_margin},
          {"cluster_tolerance", c.cluster_tolerance},
          {"match_tolerance", c.match_tolerance},
          {"quadrature_agreement", c.quadrature_agreement},
          {"node_cap", c.node_cap},
          {"zero_free_threshold", c.zero_free_threshold},
          {"multiplicity_tolerance", c.multiplicity_tolerance},
          {"theorem_c_tolerance", c.theorem_c_tolerance},
          {"ratio_cap", c.ratio_cap},
          {"disk_levels", c.disk.levels},
          {"disk_base_angular", c.disk.base_angular},
          {"disk_angular_cap", c.disk.angular_cap},
          {"disk_radial_extrapolation", c.disk.radial_extrapolation},
          {"seed", c.seed}};
}

RunConfig config_from_json(const Json& j, RunConfig c) {
  if (!j.is_object()) parse_fail("config must be an object");
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "schema") continue;
      if (key == "boundary_margin") c.boundary_margin = v.get<double>();
      else if (key == "cluster_tolerance") c.cluster_tolerance = v.get<double>();
      else if (key == "match_tolerance") c.match_tolerance = v.get<double>();
      else if (key == "quadrature_agreement") c.quadrature_agreement = v.get<double>();
      else if (key == "node_cap") c.node_cap = v.get<std::size_t>();
      else if (key == "zero_free_threshold") c.zero_free_threshold = v.get<double>();
      else if (key == "multiplicity_tolerance") c.multiplicity_tolerance = v.get<double>();
      else if (key == "theorem_c_tolerance") c.theorem_c_tolerance = v.get<double>();
      else if (key == "ratio_cap") c.ratio_cap = v.get<double>();
      else if (key == "disk_levels") c.disk.levels = v.get<int>();
      else if (key == "disk_base_angular") c.disk.base_angular = v.get<std::size_t>();
      else if (key == "disk_angular_cap") c.disk.angular_cap = v.get<std::size_t>();
      else if (key == "disk_radial_extrapolation") c.disk.radial_extrapolation = v.get<bool>();
      else if (key == "seed") c.seed = v.get<std::uint64_t>();
      else parse_fail("unknown config key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("bad config value: ") + e.what());
  }
  try {
    c.validate();
  } catch (const Error& e) {
    parse_fail(e.what());
  }
  return c;
}

RunConfig apply_environment(RunConfig config) {
  if (const char* env = std::getenv("GARSIA_ABC_SEED")) {
    std::uint64_t seed = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
    if (ec == std::errc() && ptr == s.data() + s.size()) config.seed = seed;
  }
  return config;
}

InstanceFile parse_instance(std::string_view text) {
  const Json j = parse_text(text);
  check_schema(j);
  if (!j.contains("functions") || !j["functions"].is_array()) parse_fail("instance needs a 'functions' list");
  InstanceFile out;
  for (const auto& f : j["functions"]) out.functions.push_back(polynomial_from_json(f));
  if (out.functions.empty()) parse_fail("instance has no functions");
  if (j.contains("n")) {
    if (!j["n"].is_number_integer()) parse_fail("'n' must be an integer");
    out.n = j["n"].get<int>();
  }
  if (j.contains("config")) out.config = j["config"];
  return out;
}

std::string emit_instance(std::span<const ComplexPolynomial> given, const RunConfig& config) {
  Json functions = Json::array();
  for (const auto& f : given) functions.push_back(to_json(f));
  const Json j = {{"schema", kSchema},
                  {"n", static_cast<int>(given.size()) - 1},
                  {"functions", functions},
                  {"config", to_json(config)}};
  return dump(j);
}

DiskFunction parse_single_function(std::string_view text, const RunConfig& config) {
  const Json j = parse_text(text);
  check_schema(j);
  DiskFunction f;
  if (j.contains("function")) {
    f.outer = polynomial_from_json(j["function"]);
  } else if (j.contains("functions")) {
    if (!j["functions"].is_array() || j["functions"].size() != 1) parse_fail("norm input needs exactly one function");
    f.outer = polynomial_from_json(j["functions"][0]);
  } else if (!j.contains("blaschke")) {
    parse_fail("norm input needs 'function' or 'blaschke'");
  }
  if (j.contains("blaschke")) f.inner = blaschke_from_json(j["blaschke"], config);
  return f;
}

Json to_json(const VerificationReport& r, std::uint64_t seed) {
  Json quantities = Json::object();
  for (const auto& [name, value] : r.quantities) quantities[name] = number(value);
  Json out = {{"schema", kSchema}, {"theorem", to_string(r.theorem)}};
  if (!r.space.empty()) out["space"] = r.space;
  out["verdict"] = to_string(r.verdict);
  out["slack"] = number(r.slack);
  out["tolerance"] = number(r.tolerance);
  out["hypotheses"] = checks_json(r.hypotheses);
  out["quantities"] = quantities;
  out["chain"] = checks_json(r.chain);
  out["diagnostics"] = r.diagnostics;
  out["seed"] = seed;
  return out;
}

Json to_json(const DiskSupremumEstimate& e) {
  return {{"schema", kSchema},
          {"value", number(e.value)},
          {"attained_at", complex_json(e.attained_at)},
          {"refinement_error", number(e.refinement_error)},
          {"converged", e.converged}};
}

Json to_json(const LimitReport& r, std::uint64_t seed) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"radius", row.radius},
                    {"lhs", number(row.lhs)},
                    {"rhs", number(row.rhs)},
                    {"slack", number(row.slack)},
                    {"kappa", number(row.kappa)},
                    {"mu", number(row.mu)},
                    {"tolerance", number(row.tolerance)}});
  return {{"schema", kSchema},
          {"rows", rows},
          {"full_count", r.full_count},
          {"largest_root_modulus", number(r.largest_root_modulus)},
          {"holds_everywhere", r.holds_everywhere},
          {"stabilized", r.stabilized},
          {"seed", seed}};
}

std::string sweep_csv(const GrowthReport& report) {
  std::ostringstream os;
  os.precision(17);
  os << "n,lhs,rhs,ratio,slope\n";
  for (const auto& row : report.rows) os << row.n << ',' << row.lhs << ',' << row.rhs << ',' << row.ratio << ",\n";
  if (report.slope) os << "slope,,,," << *report.slope << '\n';
  return os.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

GtnSpec NormSpace::gtn() const {
  switch (kind) {
    case Kind::garsia: return GtnSpec::garsia();
    case Kind::garsia_omega: return GtnSpec::garsia_omega(Majorant::power(alpha));
    case Kind::m_omega: return GtnSpec::m_omega(Majorant::power(alpha));
    case Kind::ntilde1: return GtnSpec::ntilde1();
    default: throw Error(ErrorCode::InvalidArgument, "Lipschitz spaces are not Garsia-type norms");
  }
}

NormSpace parse_space(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const bool has_alpha = colon != std::string_view::npos;
  NormSpace s;
  if (name == "garsia") s.kind = NormSpace::Kind::garsia;
  else if (name == "ntilde1") s.kind = NormSpace::Kind::ntilde1;
  else if (name == "garsia-omega") s.kind = NormSpace::Kind::garsia_omega;
  else if (name == "m-omega") s.kind = NormSpace::Kind::m_omega;
  else if (name == "lip") s.kind = NormSpace::Kind::lip;
  else if (name == "lip-high") s.kind = NormSpace::Kind::lip_high;
  else throw Error(ErrorCode::InvalidArgument, "unknown space '" + std::string(text) + "'");

  const bool needs_alpha = s.kind != NormSpace::Kind::garsia && s.kind != NormSpace::Kind::ntilde1;
  if (needs_alpha != has_alpha)
    throw Error(ErrorCode::InvalidArgument, "space '" + std::string(name) + (needs_alpha ? "' needs" : "' takes no") +
                                                " exponent");
  if (has_alpha) s.alpha = parse_double(text.substr(colon + 1));
  if (s.kind == NormSpace::Kind::lip_high) {
    if (!(s.alpha > 1.0 && s.alpha < 2.0)) throw Error(ErrorCode::InvalidArgument, "lip-high exponent must be in (1,2)");
  } else if (has_alpha && !(s.alpha > 0.0 && s.alpha <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "exponent must be in (0,1]");
  }
  return s;
}

Majorant parse_majorant(std::string_view text) {
  if (text.starts_with("log:")) {
    const auto rest = text.substr(4);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw Error(ErrorCode::InvalidArgument, "expected log:ALPHA:EPS");
    return Majorant::power_log(parse_double(rest.substr(0, colon)), parse_double(rest.substr(colon + 1)));
  }
  return Majorant::power(parse_double(text));
}

DiskSupremumEstimate evaluate_norm(const NormSpace& space, const DiskFunction& f, const RunConfig& config) {
  using Kind = NormSpace::Kind;
  switch (space.kind) {
    case Kind::lip: {
      const double v =
          lipschitz_seminorm([&](cplx z) { return f(z); }, Majorant::power(space.alpha), LipschitzDomain::disk);
      return {v, 0.0, 0.0, true};
    }
    case Kind::lip_high:
      return {higher_lipschitz_norm(f, space.alpha), 0.0, 0.0, true};
    case Kind::m_omega:
      try {
        majorant_regularity_constant(Majorant::power(space.alpha));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::Divergence)
          throw Error(ErrorCode::NonRegularMajorant, "t^" + std::to_string(space.alpha) + " is not a regular majorant");
        throw;
      }
      [[fallthrough]];
    default:
      return gtn_eval(space.gtn(), f, config.disk);
  }
}

}  // namespace gabc::io
