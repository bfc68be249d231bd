// slink: knot invariants of braid closures and quantum skein reduction of
// superbraids, with text or JSON output.
//
// Exit codes: 0 success, 1 internal error, 2 usage error, 3 input parse
// error, 4 trajectory cap exceeded, 5 singular parameter, 6 verification
// failures.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "slink/algebra.hpp"
#include "slink/braid.hpp"
#include "slink/json_io.hpp"
#include "slink/operators.hpp"
#include "slink/superbraid.hpp"

using namespace slink;

namespace {

enum ExitCode {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kParse = 3,
  kCap = 4,
  kSingular = 5,
  kVerifyFailed = 6,
};

struct GlobalConfig {
  std::string format = "text";
  double tolerance = kCompareRelTol;
  int threads = 1;
  int a_branch = +1;
  int writhe_sign = -1;
  std::uint64_t seed = 20250810;
  std::uint64_t cap = std::uint64_t(1) << 20;
  bool normalize = false;
  bool reference_forms = false;
  int qubits = 4;
  int samples = 20;
  SuperbraidDefaults gate_defaults;
  bool have_mu_default = false;
  double mu_default = 0.0;

  SuperbraidDefaults defaults() const {
    SuperbraidDefaults d = gate_defaults;
    if (have_mu_default) d.mu = mu_default;
    return d;
  }
};

Json config_json(const GlobalConfig& cfg, const std::string& command) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  Json c;
  c["format"] = cfg.format;
  c["tolerance"] = cfg.tolerance;
  c["threads"] = cfg.threads;
  c["a_branch"] = cfg.a_branch;
  c["writhe_sign"] = cfg.writhe_sign;
  c["seed"] = cfg.seed;
  c["trajectory_cap"] = cfg.cap;
  c["normalize"] = cfg.normalize;
  c["reference_forms"] = cfg.reference_forms;
  c["qubits"] = cfg.qubits;
  c["samples"] = cfg.samples;
  if (cfg.have_mu_default) c["mu_default"] = cfg.mu_default;
  c["zeta_default"] = cfg.gate_defaults.zeta;
  c["xi_default"] = cfg.gate_defaults.xi;
  c["delta_default"] = cfg.gate_defaults.delta;
  j["config"] = c;
  return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string slurp(const std::string& spec) {
  if (!spec.empty() && spec.front() == '{') return spec;  // inline JSON
  if (spec == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(spec);
  if (!in) throw ParseError("cannot open input file '" + spec + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BraidWord load_word(const std::string& text, std::optional<int> strands) {
  try {
    return BraidWord::parse(text, strands);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string cx_str(const Cx& v) {
  std::ostringstream os;
  os.precision(12);
  os << v.real() << (v.imag() < 0 ? " - " : " + ") << std::abs(v.imag()) << "i";
  return os.str();
}

int run_bracket(const GlobalConfig& cfg, const std::string& word_text,
                std::optional<int> strands, const std::string& method) {
  const BraidWord w = load_word(word_text, strands);
  LaurentPoly statesum, tl;
  bool have_statesum = false, have_tl = false;
  if (method == "statesum" || method == "both") {
    statesum = kauffman_bracket_statesum(w);
    have_statesum = true;
  }
  if (method == "tl" || method == "both") {
    tl = kauffman_bracket_tl(w);
    have_tl = true;
  }
  if (cfg.format == "json") {
    Json j = config_json(cfg, "bracket");
    j["word"] = braid_to_json(w);
    if (have_statesum) j["bracket_statesum"] = poly_to_json(statesum);
    if (have_tl) j["bracket_tl"] = poly_to_json(tl);
    if (have_statesum && have_tl) j["methods_agree"] = (statesum == tl);
    emit(j);
  } else {
    std::printf("word: %s  (strands %d, writhe %d)\n", w.to_text().c_str(),
                w.strands(), w.writhe());
    if (have_statesum)
      std::printf("bracket (statesum): %s\n", statesum.to_string().c_str());
    if (have_tl) std::printf("bracket (TL):       %s\n", tl.to_string().c_str());
    if (have_statesum && have_tl)
      std::printf("methods agree: %s\n", statesum == tl ? "yes" : "NO");
  }
  return kOk;
}

int run_jones(const GlobalConfig& cfg, const std::string& word_text,
              std::optional<int> strands) {
  const BraidWord w = load_word(word_text, strands);
  const LinkInvariantResult r = jones(w, cfg.writhe_sign);
  if (cfg.format == "json") {
    Json j = config_json(cfg, "jones");
    j["word"] = braid_to_json(w);
    Json inv = invariant_to_json(r);
    for (auto& [key, value] : inv.items()) j[key] = value;
    emit(j);
  } else {
    std::printf("word: %s  (strands %d)\n", w.to_text().c_str(), w.strands());
    std::printf("writhe: %d\ncomponents: %d\n", r.writhe, r.components);
    std::printf("bracket: %s\n", r.bracket.to_string().c_str());
    if (r.exact) {
      std::printf("jones: %s\n", r.jones.to_string().c_str());
    } else {
      std::printf("jones: d-division not exact; bracket/writhe pair returned\n");
    }
  }
  return kOk;
}

int run_reduce(const GlobalConfig& cfg, const std::string& input,
               const std::string& in_state) {
  const SuperbraidWord w = parse_superbraid(slurp(input), cfg.a_branch, cfg.defaults());
  ReduceOptions opts;
  opts.trajectory_cap = cfg.cap;
  const BraidSuperposition red = reduce_word(w, in_state, opts);
  if (cfg.format == "json") {
    Json j = config_json(cfg, "reduce");
    j["superbraid"] = superbraid_to_json(w);
    Json body = superposition_to_json(red);
    for (auto& [key, value] : body.items()) j[key] = value;
    emit(j);
  } else {
    std::printf("in state: %s  (%zu trajectories)\n", red.in_state.c_str(),
                red.terms.size());
    for (const Trajectory& t : red.terms) {
      std::printf("  out %s  braid [%s]  amplitude %s = %s\n", t.out_state.c_str(),
                  t.braid.to_text().c_str(), t.amplitude.to_string().c_str(),
                  cx_str(t.amplitude.eval(w.kauffman.A)).c_str());
    }
  }
  return kOk;
}

int run_superjones(const GlobalConfig& cfg, const std::string& input) {
  const SuperbraidWord w = parse_superbraid(slurp(input), cfg.a_branch, cfg.defaults());
  SuperlinkOptions opts;
  opts.reduce.trajectory_cap = cfg.cap;
  opts.normalize = cfg.normalize;
  opts.writhe_sign = cfg.writhe_sign;
  opts.threads = cfg.threads;
  const SuperlinkInvariant inv = superlink_invariant(w, opts);
  if (cfg.format == "json") {
    Json j = config_json(cfg, "superjones");
    j["superbraid"] = superbraid_to_json(w);
    Json body = superlink_to_json(inv, w.kauffman.A);
    for (auto& [key, value] : body.items()) j[key] = value;
    emit(j);
  } else {
    std::printf("superlink invariant (%zu surviving trajectories%s)\n",
                inv.terms.size(), inv.normalized ? ", normalized by 2^Q" : "");
    for (const SuperlinkTerm& t : inv.terms) {
      std::printf("  in %s  amplitude %s  jones %s\n", t.in_state.c_str(),
                  cx_str(t.amplitude.eval(w.kauffman.A)).c_str(),
                  t.jones.to_string().c_str());
    }
    std::printf("combined: %s\n", inv.combined.to_string().c_str());
    std::printf("combined at A: %s\n",
                cx_str(inv.combined.eval(w.kauffman.A)).c_str());
  }
  return kOk;
}

int run_simulate(const GlobalConfig& cfg, const std::string& input,
                 const std::string& in_state) {
  const SuperbraidWord w = parse_superbraid(slurp(input), cfg.a_branch, cfg.defaults());
  ReduceOptions opts;
  opts.trajectory_cap = cfg.cap;
  const BraidSuperposition red = reduce_word(w, in_state, opts);
  const auto grouped = grouped_amplitudes(red, w.kauffman.A);
  const SparseOperator u = word_matrix(w);
  const std::uint64_t col = bits_to_index(in_state);

  double max_dev = 0.0;
  Json rows = Json::array();
  for (std::uint64_t row = 0; row < u.dim(); ++row) {
    const std::string out = index_to_bits(row, w.qubits);
    const Cx path = grouped.count(out) ? grouped.at(out) : Cx(0.0);
    const Cx matrix = u.at(row, col);
    max_dev = std::max(max_dev, std::abs(path - matrix));
    if (std::abs(path) > 1e-14 || std::abs(matrix) > 1e-14) {
      Json r;
      r["out_state"] = out;
      r["path_sum"] = Json::array({path.real(), path.imag()});
      r["matrix"] = Json::array({matrix.real(), matrix.imag()});
      rows.push_back(r);
    }
  }
  const bool ok = max_dev <= cfg.tolerance;
  if (cfg.format == "json") {
    Json j = config_json(cfg, "simulate");
    j["superbraid"] = superbraid_to_json(w);
    j["in_state"] = in_state;
    j["columns"] = rows;
    j["max_deviation"] = max_dev;
    j["within_tolerance"] = ok;
    emit(j);
  } else {
    std::printf("in state %s: path-sum vs matrix column\n", in_state.c_str());
    for (const auto& r : rows) {
      std::printf("  out %s  path %s  matrix %s\n",
                  r["out_state"].get<std::string>().c_str(),
                  cx_str(Cx(r["path_sum"][0], r["path_sum"][1])).c_str(),
                  cx_str(Cx(r["matrix"][0], r["matrix"][1])).c_str());
    }
    std::printf("max deviation: %.3e (%s tolerance %.1e)\n", max_dev,
                ok ? "within" : "EXCEEDS", cfg.tolerance);
  }
  return ok ? kOk : kInternal;
}

int run_verify(const GlobalConfig& cfg) {
  CheckOptions opts;
  opts.seed = cfg.seed;
  opts.samples = cfg.samples;
  opts.a_branch = cfg.a_branch;
  opts.reference_forms = cfg.reference_forms;
  opts.threads = cfg.threads;
  const auto reports = check_all(cfg.qubits, opts);
  const bool ok = all_pass(reports);
  if (cfg.format == "json") {
    Json j = config_json(cfg, "verify");
    j["relations"] = report_to_json(reports);
    j["all_pass"] = ok;
    emit(j);
  } else {
    struct Tally {
      int checks = 0;
      int fails = 0;
      double worst = 0.0;
      double tol = 0.0;
    };
    std::vector<std::string> order;
    std::map<std::string, Tally> tallies;
    int fails = 0;
    for (const RelationReport& r : reports) {
      auto [it, inserted] = tallies.try_emplace(r.relation);
      if (inserted) order.push_back(r.relation);
      ++it->second.checks;
      it->second.worst = std::max(it->second.worst, r.residual);
      it->second.tol = r.tolerance;
      if (!r.pass) {
        ++it->second.fails;
        ++fails;
      }
    }
    std::printf("%-38s %7s %6s %14s %10s\n", "relation", "checks", "fails",
                "worst residual", "tolerance");
    for (const std::string& name : order) {
      const Tally& t = tallies.at(name);
      std::printf("%-38s %7d %6d %14.2e %10.0e\n", name.c_str(), t.checks, t.fails,
                  t.worst, t.tol);
    }
    std::printf("%zu relation checks, %d failures\n", reports.size(), fails);
  }
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knot invariants of braid closures and quantum skein reduction"};
  app.require_subcommand(1);
  // global flags (--format, --tolerance, ...) may follow the subcommand
  app.fallthrough();
  app.footer(
      "Exit codes:\n"
      "  0 success\n"
      "  1 internal error or tolerance exceeded\n"
      "  2 usage error\n"
      "  3 input parse error\n"
      "  4 trajectory cap exceeded\n"
      "  5 singular parameter (csc pole or degenerate A)\n"
      "  6 verification failures");

  GlobalConfig cfg;
  if (const char* env = std::getenv("SLINK_TOLERANCE")) {
    cfg.tolerance = std::atof(env);
  }

  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--tolerance", cfg.tolerance,
                 "comparison tolerance (env SLINK_TOLERANCE)")
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads for basis-state loops")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--a-branch", cfg.a_branch, "square-root branch for A (+1 or -1)")
      ->check(CLI::IsMember({1, -1}))
      ->capture_default_str();
  app.add_option("--writhe-sign", cfg.writhe_sign,
                 "writhe exponent sign s in (-A^3)^(s w); calibrated default -1")
      ->check(CLI::IsMember({1, -1}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
  app.add_option("--cap", cfg.cap, "trajectory cap")->capture_default_str();
  auto* mu_opt = app.add_option(
      "--mu", cfg.mu_default,
      "default Kauffman angle for superbraid files without 'mu'");
  app.add_option("--zeta", cfg.gate_defaults.zeta,
                 "default gate angle for gates without 'zeta'")
      ->capture_default_str();
  app.add_option("--xi", cfg.gate_defaults.xi,
                 "default internal phase for gates without 'xi'")
      ->capture_default_str();
  app.add_option("--delta", cfg.gate_defaults.delta,
                 "default statistics selector for gates without 'delta'")
      ->check(CLI::IsMember({0, 1}))
      ->capture_default_str();

  std::string word_text;
  std::optional<int> strands;
  int strands_raw = 0;
  std::string method = "both";
  std::string input;
  std::string in_state;

  CLI::App* bracket = app.add_subcommand("bracket", "Kauffman bracket of a braid closure");
  bracket->add_option("word", word_text, "braid word, e.g. \"1 -2 1\"")->required();
  auto* bso = bracket->add_option("--strands", strands_raw,
                                  "strand count (default max|letter|+1)");
  bracket->add_option("--method", method, "statesum, tl, or both")
      ->check(CLI::IsMember({"statesum", "tl", "both"}))
      ->capture_default_str();

  CLI::App* jones_cmd = app.add_subcommand("jones", "Jones polynomial of a braid closure");
  jones_cmd->add_option("word", word_text, "braid word, e.g. \"1 1 1\"")->required();
  auto* jso = jones_cmd->add_option("--strands", strands_raw,
                                    "strand count (default max|letter|+1)");

  CLI::App* reduce_cmd =
      app.add_subcommand("reduce", "quantum skein reduction of a superbraid");
  reduce_cmd->add_option("--word", input, "superbraid JSON (inline, file path, or -)")
      ->required();
  reduce_cmd->add_option("--in", in_state, "input basis state, e.g. 01")->required();

  CLI::App* superjones_cmd =
      app.add_subcommand("superjones", "superlink invariant of a closed superbraid");
  superjones_cmd
      ->add_option("--word", input, "superbraid JSON (inline, file path, or -)")
      ->required();
  superjones_cmd->add_flag("--normalize", cfg.normalize,
                           "divide the basis-state sum by 2^Q");

  CLI::App* simulate_cmd = app.add_subcommand(
      "simulate", "side-by-side path-sum vs gate-matrix column");
  simulate_cmd->add_option("--word", input, "superbraid JSON (inline, file path, or -)")
      ->required();
  simulate_cmd->add_option("--in", in_state, "input basis state")->required();

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "certify the operator-algebra relations");
  verify_cmd->add_option("--qubits", cfg.qubits, "register size for the checks")
      ->check(CLI::Range(2, 8))
      ->capture_default_str();
  verify_cmd->add_option("--samples", cfg.samples, "parameter samples per relation")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_flag("--reference-forms", cfg.reference_forms,
                       "also report the uncalibrated reference closed forms "
                       "(expected to exceed tolerance)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  cfg.have_mu_default = mu_opt->count() > 0;

  try {
    if (bracket->parsed()) {
      if (bso->count()) strands = strands_raw;
      return run_bracket(cfg, word_text, strands, method);
    }
    if (jones_cmd->parsed()) {
      if (jso->count()) strands = strands_raw;
      return run_jones(cfg, word_text, strands);
    }
    if (reduce_cmd->parsed()) return run_reduce(cfg, input, in_state);
    if (superjones_cmd->parsed()) return run_superjones(cfg, input);
    if (simulate_cmd->parsed()) return run_simulate(cfg, input, in_state);
    if (verify_cmd->parsed()) return run_verify(cfg);
  } catch (const CapExceeded& e) {
    if (cfg.format == "json") {
      Json j = config_json(cfg, "error");
      j["error"] = {{"kind", "cap_exceeded"}, {"message", e.what()}, {"count", e.count}};
      emit(j);
    } else {
      std::fprintf(stderr, "error: %s\n", e.what());
    }
    return kCap;
  } catch (const SingularParameter& e) {
    if (cfg.format == "json") {
      Json j = config_json(cfg, "error");
      j["error"] = {{"kind", "singular_parameter"}, {"message", e.what()}};
      emit(j);
    } else {
      std::fprintf(stderr, "error: %s\n", e.what());
    }
    return kSingular;
  } catch (const ParseError& e) {
    if (cfg.format == "json") {
      Json j = config_json(cfg, "error");
      j["error"] = {{"kind", "parse"}, {"message", e.what()}};
      emit(j);
    } else {
      std::fprintf(stderr, "parse error: %s\n", e.what());
    }
    return kParse;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInternal;
  }
  return kUsage;
}
