// Command-line front end: verify UMEB candidates, search for new ones,
// and emit channel / entanglement-of-assistance reports as JSON.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "umeb/io.hpp"

namespace {

using umeb::io::json;
using umeb::io::Verdict;

constexpr int kExitOk = 0;
constexpr int kExitExtendable = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIoError = 3;

struct RunConfig {
  std::string construction = "icosahedron";
  std::string file;
  std::uint64_t seed = 0;
  int restarts = 0;  // resolved after env lookup
  double tolerance = 1e-6;
  std::string out;
  int d = 0;
  int n = 0;
};

int default_restarts() {
  if (const char* env = std::getenv("UMEB_DEFAULT_RESTARTS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 100;
}

umeb::UmebCandidate resolve_candidate(const RunConfig& cfg) {
  if (!cfg.file.empty()) return umeb::io::load_candidate(cfg.file);
  if (cfg.construction == "icosahedron") return umeb::icosahedron_umeb();
  if (cfg.construction == "tiles") return umeb::tiles_umeb();
  throw umeb::io::IoError("unknown construction: " + cfg.construction);
}

int emit(const json& report, const RunConfig& cfg, int exit_code) {
  const std::string text = report.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(cfg.out);
    if (!os) {
      std::cerr << "cannot write " << cfg.out << "\n";
      return kExitIoError;
    }
    os << text;
  }
  return exit_code;
}

json report_header(const char* command, const RunConfig& cfg) {
  return json{{"schema", umeb::io::kSchema},
              {"command", command},
              {"seed", cfg.seed},
              {"restarts", cfg.restarts},
              {"tolerance", cfg.tolerance}};
}

int cmd_verify(const RunConfig& cfg) {
  json report = report_header("verify", cfg);
  umeb::UmebCandidate candidate;
  try {
    candidate = resolve_candidate(cfg);
  } catch (const umeb::io::IoError& e) {
    std::cerr << e.what() << "\n";
    return kExitIoError;
  }
  report["label"] = candidate.label;

  const umeb::GramReport gram = umeb::gram_check(candidate);
  report["gram"] = umeb::io::gram_to_json(gram);
  if (!gram.pass()) {
    report["verdict"] = to_string(Verdict::invalid);
    report["reason"] = "Gram check failed";
    return emit(report, cfg, kExitInvalid);
  }
  if (candidate.size() == candidate.dim * candidate.dim) {
    report["verdict"] = to_string(Verdict::invalid);
    report["reason"] = "complete basis (n = d^2): not a UMEB candidate";
    return emit(report, cfg, kExitInvalid);
  }

  const umeb::OperatorSubspace complement = umeb::complement_of(candidate);
  const umeb::SkewWitness skew = umeb::skew_certificate(complement);
  report["skew_certificate"] = json{{"holds", skew.holds},
                                    {"odd_dimension", skew.odd_dimension},
                                    {"max_symmetric_part", skew.max_symmetric_part}};
  if (candidate.dim == 4 && candidate.size() == 12) {
    const umeb::TilesFormWitness tiles = umeb::tiles_form_check(candidate);
    report["tiles_form"] =
        json{{"holds", tiles.holds}, {"max_residual", tiles.max_residual}};
  }

  umeb::OptimizerConfig opt;
  opt.restarts = cfg.restarts;
  opt.seed = cfg.seed;
  umeb::UnextendibilityReport unext = umeb::max_entanglement_in_subspace(complement, opt);
  if (skew.holds) unext.structural_certificate = umeb::StructuralCertificate::skew_odd;
  report["unextendibility"] = umeb::io::unextendibility_to_json(unext);

  Verdict verdict;
  if (skew.holds) {
    verdict = Verdict::umeb_proven;
  } else if (unext.best_value >= 1.0 - cfg.tolerance) {
    verdict = Verdict::extendable;
  } else {
    verdict = Verdict::umeb_evidence;
  }
  report["verdict"] = to_string(verdict);
  report["verdict_tag"] =
      umeb::to_string(verdict == Verdict::umeb_proven ? umeb::CertTag::Proof
                                                      : umeb::CertTag::Evidence);
  const int code = verdict == Verdict::extendable ? kExitExtendable : kExitOk;
  return emit(report, cfg, code);
}

int cmd_search(const RunConfig& cfg) {
  json report = report_header("search", cfg);
  report["d"] = cfg.d;
  report["n"] = cfg.n;

  umeb::SearchConfig search_cfg;
  search_cfg.seed = cfg.seed;
  search_cfg.optimizer.restarts = cfg.restarts;
  search_cfg.optimizer.seed = cfg.seed;
  umeb::SearchResult result;
  try {
    result = umeb::search_umeb(cfg.d, cfg.n, search_cfg);
  } catch (const std::domain_error& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  }
  report["phase1_converged"] = result.phase1_converged;
  report["gram_residual"] = result.gram_residual;
  report["rounds"] = result.rounds;
  report["candidate"] = umeb::io::candidate_to_json(result.candidate);
  if (result.phase1_converged) {
    report["unextendibility"] = umeb::io::unextendibility_to_json(result.report);
  }
  return emit(report, cfg, result.phase1_converged ? kExitOk : kExitExtendable);
}

int cmd_channel(const RunConfig& cfg) {
  json report = report_header("channel", cfg);
  umeb::UmebCandidate candidate;
  try {
    candidate = resolve_candidate(cfg);
  } catch (const umeb::io::IoError& e) {
    std::cerr << e.what() << "\n";
    return kExitIoError;
  }
  report["label"] = candidate.label;

  umeb::OptimizerConfig opt;
  opt.restarts = cfg.restarts;
  opt.seed = cfg.seed;
  try {
    const umeb::DensityMatrix rho = umeb::complement_state(candidate);
    report["channel"] = umeb::io::channel_to_json(umeb::channel_report(rho, opt));
    if (candidate.dim == 3) {
      report["landau_streater_equivalence"] = umeb::landau_streater_equivalence(rho);
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  }
  return emit(report, cfg, kExitOk);
}

int cmd_eoa(const RunConfig& cfg) {
  json report = report_header("eoa", cfg);
  umeb::UmebCandidate candidate;
  try {
    candidate = resolve_candidate(cfg);
  } catch (const umeb::io::IoError& e) {
    std::cerr << e.what() << "\n";
    return kExitIoError;
  }
  report["label"] = candidate.label;

  umeb::OptimizerConfig opt;
  opt.restarts = cfg.restarts;
  opt.seed = cfg.seed;
  try {
    const umeb::EoaBound bound = umeb::one_copy_eoa_upper_bound(candidate, opt);
    const double asymptotic = umeb::asymptotic_eoa(umeb::complement_state(candidate));
    report["one_copy_bound_bits"] = bound.bits;
    report["one_copy_bound_tag"] = umeb::to_string(bound.tag);
    report["asymptotic_bits"] = asymptotic;
    report["gap_bits"] = asymptotic - bound.bits;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  }
  return emit(report, cfg, kExitOk);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unextendible maximally entangled basis toolkit"};
  app.require_subcommand(1);

  RunConfig cfg;
  cfg.restarts = default_restarts();

  auto add_common = [&cfg](CLI::App* sub, bool with_construction) {
    if (with_construction) {
      sub->add_option("--construction", cfg.construction,
                      "built-in construction: icosahedron | tiles");
      sub->add_option("--file", cfg.file, "candidate JSON file (overrides --construction)");
    }
    sub->add_option("--seed", cfg.seed, "optimizer seed");
    sub->add_option("--restarts", cfg.restarts, "optimizer restarts")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol", cfg.tolerance, "maximal-entanglement decision tolerance")
        ->check(CLI::Range(1e-15, 1.0));
    sub->add_option("--out", cfg.out, "write JSON report to file instead of stdout");
  };

  CLI::App* verify = app.add_subcommand("verify", "certify UMEB conditions (i)-(iii)");
  add_common(verify, true);
  CLI::App* search = app.add_subcommand("search", "numerical search for UMEB candidates");
  search->add_option("--d", cfg.d, "local dimension")->required()->check(CLI::Range(2, 64));
  search->add_option("--n", cfg.n, "member count")->required()->check(CLI::PositiveNumber);
  add_common(search, false);
  CLI::App* channel = app.add_subcommand("channel", "complement-state channel certificates");
  add_common(channel, true);
  CLI::App* eoa = app.add_subcommand("eoa", "entanglement-of-assistance bounds");
  add_common(eoa, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(cfg);
    if (search->parsed()) return cmd_search(cfg);
    if (channel->parsed()) return cmd_channel(cfg);
    if (eoa->parsed()) return cmd_eoa(cfg);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitIoError;
}
