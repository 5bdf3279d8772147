#pragma once

// Command dispatch for the zeta tool.  Argument parsing lives in
// tools/zeta_cli.cpp; everything here works on a parsed JobConfig so it can
// be driven from tests.

#include "zeta/core_model.hpp"
#include "zeta/dirichlet.hpp"
#include "zeta/io.hpp"
#include "zeta/padic.hpp"
#include "zeta/zeta_engine.hpp"

#include <cstdint>
#include <cstdlib>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace zeta::cli {

enum class OutputFormat { text, json, tsv };

enum ExitCode : int { kSuccess = 0, kFailed = 1, kUsage = 2 };

struct JobConfig {
  std::string command;     // coeffs | closed-form | verify
  std::string subcommand;  // abelian | heisenberg | amalgam | pairsum | sum-lattice | measure
  std::string input;
  std::int64_t p = 2;
  std::vector<int> caps;               // one entry = uniform cap
  std::map<std::string, int> named_caps;  // per-vertex caps by id
  int m = 1;
  int n = 1;
  int max_rank = 2;
  int max_nu = 2;
  std::string oracle = "pairsum";
  OutputFormat format = OutputFormat::text;
  std::uint64_t limit = kDefaultResourceLimit;
  bool parallel = false;
};

/// Resource limit from ZETA_RESOURCE_LIMIT, else the built-in default.
inline std::uint64_t default_limit_from_env() {
  if (const char* env = std::getenv("ZETA_RESOURCE_LIMIT")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultResourceLimit;
}

namespace detail {

inline std::vector<int> resolve_caps(const JobConfig& cfg, const AdmissibleRep& rep) {
  const auto& ids = rep.quiver().vertices();
  if (!cfg.named_caps.empty()) {
    std::vector<int> caps;
    for (const auto& id : ids) {
      auto it = cfg.named_caps.find(id);
      if (it == cfg.named_caps.end()) throw std::invalid_argument("no cap given for vertex '" + id + "'");
      caps.push_back(it->second);
    }
    for (const auto& [id, k] : cfg.named_caps)
      if (!rep.quiver().find_vertex(id)) throw std::invalid_argument("cap given for unknown vertex '" + id + "'");
    return caps;
  }
  if (cfg.caps.size() == 1) return std::vector<int>(ids.size(), cfg.caps[0]);
  if (cfg.caps.size() != ids.size()) throw std::invalid_argument("need one cap, or one cap per vertex");
  return cfg.caps;
}

inline int single_cap(const JobConfig& cfg) {
  if (cfg.caps.size() != 1) throw std::invalid_argument("this command takes a single cap -K");
  return cfg.caps[0];
}

inline Json base_report(const JobConfig& cfg) {
  Json out;
  out["command"] = cfg.command + (cfg.subcommand.empty() ? "" : " " + cfg.subcommand);
  out["input"] = cfg.input.empty() ? Json(nullptr) : Json(cfg.input);
  out["p"] = cfg.p;
  if (!cfg.named_caps.empty()) {
    Json caps = Json::object();
    for (const auto& [id, k] : cfg.named_caps) caps[id] = k;
    out["caps"] = caps;
  } else {
    out["caps"] = cfg.caps;
  }
  out["m"] = cfg.m;
  return out;
}

inline void emit_series(const JobConfig& cfg, const DirichletPoly& series, const std::string& title,
                        std::map<std::string, std::uint64_t> counts, double elapsed_ms, std::ostream& out) {
  switch (cfg.format) {
    case OutputFormat::tsv:
      out << render_tsv(series);
      break;
    case OutputFormat::text:
      out << "# " << title << "\n" << render_tsv(series);
      break;
    case OutputFormat::json: {
      Json report = base_report(cfg);
      report["status"] = "OK";
      report["variables"] = series.variables();
      report["coefficients"] = coefficients_json(series);
      report["counts"] = counts;
      report["elapsed_ms"] = elapsed_ms;
      out << report.dump(2) << "\n";
      break;
    }
  }
}

inline int emit_report(const JobConfig& cfg, const VerificationReport& rep, std::ostream& out) {
  const char* status = rep.passed ? "PASS" : "FAIL";
  if (cfg.format == OutputFormat::json) {
    Json report = base_report(cfg);
    report["status"] = status;
    if (rep.mismatch) report["mismatch"] = mismatch_json(*rep.mismatch);
    report["comparisons"] = rep.comparisons;
    report["counts"] = rep.counts;
    report["elapsed_ms"] = rep.elapsed_ms;
    out << report.dump(2) << "\n";
  } else {
    out << "verify " << rep.check << ": " << status << "\n";
    out << "comparisons: " << rep.comparisons << "\n";
    for (const auto& [name, value] : rep.counts) out << name << ": " << value << "\n";
    if (rep.mismatch) {
      const auto& mm = *rep.mismatch;
      out << "first mismatch";
      if (!mm.where.empty()) out << " [" << mm.where << "]";
      out << " at (";
      for (std::size_t i = 0; i < mm.at.size(); ++i) out << (i ? "," : "") << mm.at[i];
      out << "): lhs " << format_rational(mm.lhs) << ", rhs " << format_rational(mm.rhs) << "\n";
    }
  }
  return rep.passed ? kSuccess : kFailed;
}

inline int run_coeffs(const JobConfig& cfg, std::ostream& out) {
  if (cfg.input.empty()) throw std::invalid_argument("coeffs needs --in");
  const auto base = as_rep(load_document(cfg.input));
  const auto rep = amalgamate_rep(base, cfg.m);
  PAdicContext ctx(cfg.p, resolve_caps(cfg, rep), cfg.limit);
  ctx.parallel = cfg.parallel;
  zeta::detail::Stopwatch clock;
  DirichletPoly series;
  if (cfg.oracle == "direct")
    series = zeta_direct(rep, ctx);
  else if (cfg.oracle == "pairsum")
    series = zeta_pairsum(rep, ctx);
  else
    throw std::invalid_argument("unknown oracle '" + cfg.oracle + "' (pairsum|direct)");
  emit_series(cfg, series,
              "zeta coefficients p=" + std::to_string(cfg.p) + " m=" + std::to_string(cfg.m) + " oracle=" + cfg.oracle,
              {}, clock.elapsed_ms(), out);
  return kSuccess;
}

inline int run_closed_form(const JobConfig& cfg, std::ostream& out) {
  PAdicContext ctx(cfg.p, {single_cap(cfg)}, cfg.limit);
  zeta::detail::Stopwatch clock;
  if (cfg.subcommand == "abelian") {
    if (cfg.n < 0) throw std::invalid_argument("-n must be non-negative");
    emit_series(cfg, abelian_zeta(cfg.n, cfg.p, ctx.cap(0)),
                "abelian zeta n=" + std::to_string(cfg.n) + " p=" + std::to_string(cfg.p), {}, clock.elapsed_ms(), out);
    return kSuccess;
  }
  if (cfg.subcommand == "heisenberg") {
    emit_series(cfg, heisenberg_amalgam_zeta(cfg.m, cfg.p, ctx.cap(0)),
                "heisenberg amalgam zeta m=" + std::to_string(cfg.m) + " p=" + std::to_string(cfg.p), {},
                clock.elapsed_ms(), out);
    return kSuccess;
  }
  throw std::invalid_argument("closed-form needs 'abelian' or 'heisenberg'");
}

inline int run_verify(const JobConfig& cfg, std::ostream& out) {
  if (cfg.subcommand == "amalgam" || cfg.subcommand == "pairsum") {
    if (cfg.input.empty()) throw std::invalid_argument("verify " + cfg.subcommand + " needs --in");
    const auto rep = as_rep(load_document(cfg.input));
    PAdicContext ctx(cfg.p, resolve_caps(cfg, rep), cfg.limit);
    ctx.parallel = cfg.parallel;
    return emit_report(cfg, cfg.subcommand == "amalgam" ? verify_amalgam(rep, cfg.m, ctx) : verify_pairsum(rep, ctx),
                       out);
  }
  if (cfg.subcommand == "sum-lattice") {
    PAdicContext ctx(cfg.p, {single_cap(cfg)}, cfg.limit);
    if (cfg.n < 1) throw std::invalid_argument("-n must be positive");
    return emit_report(cfg, verify_sum_lattice(cfg.m, cfg.n, ctx, ctx.cap(0)), out);
  }
  if (cfg.subcommand == "measure") {
    PAdicContext ctx(cfg.p, {}, cfg.limit);
    if (cfg.max_rank < 1 || cfg.max_nu < 0) throw std::invalid_argument("need --rank >= 1 and --max-nu >= 0");
    return emit_report(cfg, verify_measure(cfg.max_rank, cfg.max_nu, ctx), out);
  }
  throw std::invalid_argument("verify needs one of: amalgam, pairsum, sum-lattice, measure");
}

}  // namespace detail

/// Runs one job.  Exit codes: 0 success / PASS, 1 FAIL, 2 usage, input or
/// resource errors (message on `err`).
inline int run(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.m < 1) throw std::invalid_argument("-m must be at least 1");
    if (cfg.limit < 1) throw std::invalid_argument("--limit must be at least 1");
    for (int k : cfg.caps)
      if (k < 0) throw std::invalid_argument("caps must be non-negative");
    if (cfg.command == "coeffs") return detail::run_coeffs(cfg, out);
    if (cfg.command == "closed-form") return detail::run_closed_form(cfg, out);
    if (cfg.command == "verify") return detail::run_verify(cfg, out);
    throw std::invalid_argument("unknown command '" + cfg.command + "'");
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace zeta::cli
