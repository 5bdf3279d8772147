// zeta: truncated zeta functions of class-two representations.
//
//   zeta coeffs --in rep.json -p 2 -K 3 [-m 2] [--oracle direct]
//   zeta closed-form abelian -n 2 -p 2 -K 4
//   zeta closed-form heisenberg -m 2 -p 3 -K 5
//   zeta verify amalgam --in rep.json -p 3 -K 4 -m 2
//   zeta verify pairsum --in rep.json -p 2 -K 3
//   zeta verify sum-lattice -m 2 -n 1 -p 2 -K 4
//   zeta verify measure -p 3 --rank 2 --max-nu 2

#include "zeta/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

using zeta::cli::JobConfig;
using zeta::cli::OutputFormat;

struct RawOptions {
  std::string caps_list;
  std::string caps_json;
  std::string format = "text";
};

void add_common(CLI::App* sub, JobConfig& cfg, RawOptions& raw) {
  sub->add_option("-p,--prime", cfg.p, "prime p (q = p)")->check(CLI::PositiveNumber);
  sub->add_option("-K,--cap", raw.caps_list, "exponent cap, or comma-separated caps per vertex");
  sub->add_option("--caps", raw.caps_json, "per-vertex caps as JSON, e.g. {\"v\":2,\"w\":3}");
  sub->add_option("-m", cfg.m, "amalgamation power m");
  sub->add_option("--format", raw.format, "text | json | tsv")
      ->check(CLI::IsMember({"text", "json", "tsv"}));
  sub->add_option("--limit", cfg.limit, "resource limit on predicted enumeration size");
  sub->add_flag("--parallel", cfg.parallel, "enumerate in parallel threads");
}

void finish(JobConfig& cfg, const RawOptions& raw) {
  cfg.format = raw.format == "json" ? OutputFormat::json : raw.format == "tsv" ? OutputFormat::tsv : OutputFormat::text;
  if (!raw.caps_list.empty()) {
    std::stringstream ss(raw.caps_list);
    std::string item;
    while (std::getline(ss, item, ',')) cfg.caps.push_back(std::stoi(item));
  }
  if (!raw.caps_json.empty()) {
    auto doc = zeta::Json::parse(raw.caps_json);
    if (!doc.is_object()) throw std::invalid_argument("--caps must be a JSON object");
    for (const auto& [id, k] : doc.items()) cfg.named_caps[id] = k.get<int>();
  }
}

}  // namespace

int main(int argc, char** argv) {
  JobConfig cfg;
  cfg.limit = zeta::cli::default_limit_from_env();
  RawOptions raw;

  CLI::App app{"Truncated zeta functions of class-two nilpotent rings and quiver representations"};
  app.require_subcommand(1);

  auto* coeffs = app.add_subcommand("coeffs", "print the truncated zeta function of a representation or algebra");
  coeffs->add_option("--in", cfg.input, "input JSON document")->required();
  coeffs->add_option("--oracle", cfg.oracle, "pairsum | direct")->check(CLI::IsMember({"pairsum", "direct"}));
  add_common(coeffs, cfg, raw);

  auto* closed = app.add_subcommand("closed-form", "expand a closed-form zeta function");
  closed->add_option("kind", cfg.subcommand, "abelian | heisenberg")
      ->required()
      ->check(CLI::IsMember({"abelian", "heisenberg"}));
  closed->add_option("-n", cfg.n, "rank of the abelian algebra");
  add_common(closed, cfg, raw);

  auto* verify = app.add_subcommand("verify", "check an identity coefficient by coefficient");
  verify->add_option("check", cfg.subcommand, "amalgam | pairsum | sum-lattice | measure")
      ->required()
      ->check(CLI::IsMember({"amalgam", "pairsum", "sum-lattice", "measure"}));
  verify->add_option("--in", cfg.input, "input JSON document");
  verify->add_option("-n", cfg.n, "block rank n (sum-lattice)");
  verify->add_option("--rank", cfg.max_rank, "largest lattice rank (measure)");
  verify->add_option("--max-nu", cfg.max_nu, "largest diagonal exponent (measure)");
  add_common(verify, cfg, raw);

  try {
    app.parse(argc, argv);
    finish(cfg, raw);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : zeta::cli::kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return zeta::cli::kUsage;
  }
  if (coeffs->parsed()) cfg.command = "coeffs";
  if (closed->parsed()) cfg.command = "closed-form";
  if (verify->parsed()) cfg.command = "verify";
  return zeta::cli::run(cfg, std::cout, std::cerr);
}
