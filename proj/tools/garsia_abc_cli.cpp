// Command-line frontend. Talks to the library only through the C API.
//
// Exit codes: 0 holds / success, 1 violated, 2 hypotheses failed,
// 3 input or evaluation error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "garsia_abc/garsia_abc.h"

namespace {

constexpr int kExitInputError = 3;

using Context = std::unique_ptr<gabc_context, decltype(&gabc_context_free)>;
using Instance = std::unique_ptr<gabc_instance, decltype(&gabc_instance_free)>;

struct Failure {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{"cannot write '" + path + "'"};
}

void check(gabc_context* ctx, gabc_status status) {
  if (status != GABC_OK) throw Failure{std::string(gabc_status_name(status)) + ": " + gabc_last_error(ctx)};
}

Instance load_instance(gabc_context* ctx, const std::string& path) {
  gabc_instance* raw = nullptr;
  check(ctx, gabc_instance_parse(ctx, read_file(path).c_str(), &raw));
  return Instance(raw, &gabc_instance_free);
}

// An explicit --config wins over the config embedded in an instance file.
void load_config(gabc_context* ctx, const std::string& path) {
  if (!path.empty()) check(ctx, gabc_context_load_config(ctx, read_file(path).c_str()));
}

const char* opt(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wronskian abc-inequality checker for Garsia-type norms"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  app.add_option("--config", config_path, "JSON config overriding tolerances and the seed");

  std::string theorem, input, space, omega;
  auto* verify = app.add_subcommand("verify", "check a theorem on an instance file");
  verify->add_option("--theorem", theorem, "mason | theorem-b | theorem-c | main | prop1 | prop2")->required();
  verify->add_option("--input", input, "instance JSON")->required();
  verify->add_option("--space", space, "garsia | garsia-omega:A | m-omega:A | ntilde1 (main)");
  verify->add_option("--omega", omega, "majorant for prop2: A or log:A:E");

  std::string kind = "sharpness", emit;
  int n = 3;
  double eps = 0.01;
  auto* example = app.add_subcommand("example", "emit an example instance");
  example->add_option("--kind", kind, "sharpness | random")->check(CLI::IsMember({"sharpness", "random"}));
  example->add_option("--n", n, "number of given functions minus one");
  example->add_option("--eps", eps, "sharpness family parameter");
  example->add_option("--emit", emit, "output path (stdout when omitted)");

  std::string sweep_kind = "counterexample", csv;
  double alpha = 1.5;
  std::vector<int> ns{4, 8, 16, 32};
  auto* sweep = app.add_subcommand("sweep", "growth sweep over the sharpness family");
  sweep->add_option("--kind", sweep_kind, "counterexample")->check(CLI::IsMember({"counterexample"}));
  sweep->add_option("--alpha", alpha, "Lipschitz order in (1,2)");
  sweep->add_option("--ns", ns, "comma separated n values")->delimiter(',');
  sweep->add_option("--eps", eps, "sharpness family parameter");
  sweep->add_option("--csv", csv, "output path (stdout when omitted)");

  auto* norm = app.add_subcommand("norm", "estimate a norm of one function");
  norm->add_option("--space", space, "garsia | garsia-omega:A | m-omega:A | ntilde1 | lip:A | lip-high:A")->required();
  norm->add_option("--input", input, "JSON with 'function' and/or 'blaschke'")->required();

  std::vector<double> radii{2.0, 10.0, 100.0};
  auto* limit = app.add_subcommand("limit", "Theorem C on rescaled Mason triples");
  limit->add_option("--input", input, "instance JSON holding (a, b) or (a, b, c)")->required();
  limit->add_option("--radii", radii, "comma separated radii")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  Context ctx(gabc_context_new(), &gabc_context_free);
  if (!ctx) {
    std::cerr << "error: cannot allocate context\n";
    return kExitInputError;
  }
  gabc_context* c = ctx.get();

  try {
    if (*verify) {
      const auto inst = load_instance(c, input);
      load_config(c, config_path);
      gabc_verdict verdict = GABC_HYPOTHESES_FAILED;
      check(c, gabc_verify(c, inst.get(), theorem.c_str(), opt(space), opt(omega), &verdict));
      std::cout << gabc_output(c);
      return static_cast<int>(verdict);
    }
    load_config(c, config_path);
    if (*example) {
      if (kind == "random")
        check(c, gabc_example_random(c));
      else
        check(c, gabc_example_sharpness(c, n, eps));
      const std::string instance_text = gabc_output(c);
      write_output(emit, instance_text);

      // Summary of the objects built from the emitted instance.
      gabc_instance* raw = nullptr;
      check(c, gabc_instance_parse(c, instance_text.c_str(), &raw));
      const Instance inst(raw, &gabc_instance_free);
      gabc_verdict verdict = GABC_HYPOTHESES_FAILED;
      check(c, gabc_verify(c, inst.get(), "theorem-c", nullptr, nullptr, &verdict));
      std::cerr << "theorem-c report for the emitted instance:\n" << gabc_output(c);
      return 0;
    }
    if (*sweep) {
      check(c, gabc_sweep_counterexample(c, alpha, ns.data(), ns.size(), eps));
      write_output(csv, gabc_output(c));
      return 0;
    }
    if (*norm) {
      check(c, gabc_norm(c, space.c_str(), read_file(input).c_str()));
      std::cout << gabc_output(c);
      return 0;
    }
    if (*limit) {
      const auto inst = load_instance(c, input);
      load_config(c, config_path);
      check(c, gabc_mason_limit(c, inst.get(), radii.data(), radii.size()));
      std::cout << gabc_output(c);
      return 0;
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
