#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "garsia_abc/config.hpp"
#include "garsia_abc/norms.hpp"
#include "garsia_abc/verify.hpp"

namespace gabc::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;

/// [[re, im], ...], ascending powers.
Json to_json(const ComplexPolynomial& p);
ComplexPolynomial polynomial_from_json(const Json& j);

/// [{"zero": [re, im], "mult": m}, ...]
Json to_json(const BlaschkeProduct& b);
BlaschkeProduct blaschke_from_json(const Json& j, const RunConfig& config = {});

Json to_json(const RunConfig& config);
/// Overlays the keys present in j onto base; unknown keys are rejected.
RunConfig config_from_json(const Json& j, RunConfig base = {});

/// Seed from GARSIA_ABC_SEED when set and numeric.
RunConfig apply_environment(RunConfig config);

struct InstanceFile {
  std::vector<ComplexPolynomial> functions;
  std::optional<int> n;
  std::optional<Json> config;
};

/// Throws ParseError on malformed text or schema mismatch.
InstanceFile parse_instance(std::string_view text);
std::string emit_instance(std::span<const ComplexPolynomial> given, const RunConfig& config);

/// One function for the norm command: "function" (polynomial) with an
/// optional "blaschke" inner factor, or a one-element "functions" list.
DiskFunction parse_single_function(std::string_view text, const RunConfig& config = {});

Json to_json(const VerificationReport& report, std::uint64_t seed);
Json to_json(const DiskSupremumEstimate& estimate);
Json to_json(const LimitReport& report, std::uint64_t seed);

/// n,lhs,rhs,ratio rows followed by a slope row when a slope exists.
std::string sweep_csv(const GrowthReport& report);

/// Two-space indented JSON with a trailing newline.
std::string dump(const Json& j);

/// garsia | garsia-omega:A | m-omega:A | ntilde1 | lip:A | lip-high:A
struct NormSpace {
  enum class Kind { garsia, garsia_omega, m_omega, ntilde1, lip, lip_high };
  Kind kind = Kind::garsia;
  double alpha = 1.0;

  bool is_gtn() const noexcept { return kind != Kind::lip && kind != Kind::lip_high; }
  GtnSpec gtn() const;
};

/// Throws InvalidArgument for unknown names or out-of-range exponents.
NormSpace parse_space(std::string_view text);

/// "A" for t^A or "log:A:E" for t^A log(e + 1/t)^-E.
Majorant parse_majorant(std::string_view text);

/// Lipschitz spaces report a sampled lower bound with zero refinement error.
DiskSupremumEstimate evaluate_norm(const NormSpace& space, const DiskFunction& f, const RunConfig& config = {});

}  // namespace gabc::io
