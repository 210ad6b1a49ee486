// curv: Hilbert series of curvature-form / vector-configuration algebras,
// computed by three independent engines and cross-validated.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <numeric>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "curv/errors.hpp"
#include "curv/essential.hpp"
#include "curv/json_io.hpp"
#include "curv/matroid.hpp"
#include "curv/rootsys.hpp"
#include "curv/squarefree.hpp"
#include "forest_oracle.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

// Exit codes, per the interface contract.
constexpr int kOk = 0;
constexpr int kVerifyFailure = 1;
constexpr int kParseError = 2;
constexpr int kPrecondition = 3;
constexpr int kDisagreement = 4;
constexpr int kResourceGuard = 5;

using curv::GradedCount;
using curv::Json;
using curv::Mask;
using curv::Matroid;
using curv::Polynomial;
using curv::Rational;
using curv::Vec;
using curv::VectorConfiguration;

struct CommonOptions {
  std::string input_path;   // empty = stdin
  std::string type_label;   // e.g. "A2" or "A" with rank
  int rank = -1;
  std::string output_path;  // empty = stdout
  std::size_t row_limit = curv::kDefaultRowLimit;
};

struct LoadedInput {
  VectorConfiguration cfg;
  Json source;  // what the input hash is computed from
  std::optional<curv::RootSystemData> root_system;
};

std::string full_label(const CommonOptions& opt) {
  if (opt.rank >= 0) return opt.type_label + std::to_string(opt.rank);
  return opt.type_label;
}

LoadedInput load_input(const CommonOptions& opt) {
  LoadedInput in;
  if (!opt.type_label.empty()) {
    in.root_system = curv::build_root_system(full_label(opt));
    in.cfg = curv::coroot_configuration(*in.root_system);
    in.source = curv::config_to_json(in.cfg);
    return in;
  }
  Json doc;
  if (opt.input_path.empty()) {
    doc = Json::parse(std::cin);
  } else {
    std::ifstream f(opt.input_path);
    if (!f) throw std::invalid_argument("cannot open " + opt.input_path);
    doc = Json::parse(f);
  }
  in.cfg = curv::config_from_json(doc);
  in.source = doc;
  return in;
}

void write_output(const CommonOptions& opt, const Json& doc) {
  if (opt.output_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream f(opt.output_path);
    f << doc.dump(2) << "\n";
  }
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

Json metadata(const LoadedInput& in, double ms) {
  return Json{{"input_hash", curv::input_hash(in.source)},
              {"timing_ms", ms},
              {"tool_version", kVersion}};
}

GradedCount run_engine(const std::string& engine, const LoadedInput& in,
                       std::size_t row_limit) {
  const auto& cfg = in.cfg;
  if (engine == "combinatorial") return Matroid(cfg).graded_counts();
  if (engine == "algebraic")
    return curv::algebra_graded_dims(cfg, row_limit);
  if (engine == "presentation")
    return curv::quotient_hilbert(cfg, cfg.size(), row_limit);
  throw std::invalid_argument("unknown engine: " + engine);
}

int cmd_hilbert(const CommonOptions& opt, const std::string& engine) {
  LoadedInput in = load_input(opt);
  std::vector<std::string> engines;
  if (engine == "all")
    engines = {"combinatorial", "algebraic", "presentation"};
  else
    engines = {engine};

  Json docs = Json::array();
  std::vector<GradedCount> results;
  for (const auto& e : engines) {
    Stopwatch watch;
    GradedCount g = run_engine(e, in, opt.row_limit);
    Json doc{{"engine", e},
             {"total", g.total()},
             {"graded", curv::graded_to_json(g)},
             {"metadata", metadata(in, watch.ms())}};
    docs.push_back(doc);
    results.push_back(std::move(g));
  }
  write_output(opt, engine == "all" ? docs : docs[0]);

  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i] != results[0]) {
      std::cerr << "engine disagreement: " << engines[0] << " vs "
                << engines[i] << "\n";
      return kDisagreement;
    }
  }
  return kOk;
}

int cmd_circuits(const CommonOptions& opt) {
  LoadedInput in = load_input(opt);
  Stopwatch watch;
  Matroid matroid(in.cfg);
  Json list = Json::array();
  for (const auto& c : matroid.circuits()) {
    Json dep = Json::array();
    for (const auto& a : c.dependence) dep.push_back(curv::rational_to_json(a));
    list.push_back(
        Json{{"support", curv::mask_to_json(c.support)}, {"dependence", dep}});
  }
  write_output(opt, Json{{"circuits", list},
                         {"metadata", metadata(in, watch.ms())}});
  return kOk;
}

int cmd_robust(const CommonOptions& opt) {
  LoadedInput in = load_input(opt);
  Stopwatch watch;
  Matroid matroid(in.cfg);
  Json list = Json::array();
  for (auto s : matroid.robust_subsets()) list.push_back(curv::mask_to_json(s));
  write_output(opt, Json{{"subsets", list},
                         {"metadata", metadata(in, watch.ms())}});
  return kOk;
}

int cmd_essential(const CommonOptions& opt) {
  LoadedInput in = load_input(opt);
  Stopwatch watch;
  Json list = Json::array();
  for (const auto& h : curv::essential_hyperplanes(in.cfg))
    list.push_back(Json{{"normal", curv::vec_to_json(h.normal)},
                        {"index_set", curv::mask_to_json(h.index_set)},
                        {"d", h.d}});
  write_output(opt, Json{{"hyperplanes", list},
                         {"metadata", metadata(in, watch.ms())}});
  return kOk;
}

int cmd_rootsystem(const CommonOptions& opt, const std::string& emit) {
  if (opt.type_label.empty())
    throw std::invalid_argument("rootsystem requires --type");
  LoadedInput in = load_input(opt);
  const auto& rs = *in.root_system;
  Stopwatch watch;
  if (emit == "config") {
    write_output(opt, curv::config_to_json(in.cfg));
    return kOk;
  }
  if (emit == "coroots") {
    Json list = Json::array();
    for (const auto& h : rs.coroots) list.push_back(curv::vec_to_json(h));
    Json roots = Json::array();
    for (const auto& b : rs.positive_roots)
      roots.push_back(curv::vec_to_json(b));
    write_output(opt, Json{{"type", std::string(1, rs.type)},
                           {"rank", rs.rank},
                           {"coroots", list},
                           {"positive_roots", roots},
                           {"metadata", metadata(in, watch.ms())}});
    return kOk;
  }
  if (emit == "weights") {
    Json cartan = Json::array();
    for (const auto& row : rs.cartan) cartan.push_back(row);
    Json weights = Json::array();
    for (std::size_t i = 0; i < rs.rank; ++i) {
      Vec omega(rs.rank, Rational(0));
      omega[i] = 1;
      weights.push_back(curv::vec_to_json(omega));
    }
    write_output(opt, Json{{"type", std::string(1, rs.type)},
                           {"rank", rs.rank},
                           {"cartan", cartan},
                           {"fundamental_weights", weights},
                           {"metadata", metadata(in, watch.ms())}});
    return kOk;
  }
  throw std::invalid_argument("unknown emit kind: " + emit);
}

int cmd_curvature(const CommonOptions& opt, const std::string& weight_csv) {
  if (opt.type_label.empty())
    throw std::invalid_argument("curvature requires --type");
  LoadedInput in = load_input(opt);
  const auto& rs = *in.root_system;
  Vec coords;
  std::stringstream ss(weight_csv);
  std::string item;
  while (std::getline(ss, item, ','))
    coords.push_back(curv::rational_from_string(item));
  if (coords.size() != rs.rank)
    throw std::invalid_argument("weight length " +
                                std::to_string(coords.size()) +
                                " does not match rank " +
                                std::to_string(rs.rank));
  Stopwatch watch;
  auto coeffs = curv::curvature_coefficients(rs, curv::Weight{coords});
  Json list = Json::array();
  for (const auto& c : coeffs) list.push_back(curv::rational_to_json(c));
  write_output(opt, Json{{"type", std::string(1, rs.type)},
                         {"rank", rs.rank},
                         {"weight", curv::vec_to_json(coords)},
                         {"coefficients", list},
                         {"metadata", metadata(in, watch.ms())}});
  return kOk;
}

// ---- verify suites -------------------------------------------------------

struct CheckLog {
  Json checks = Json::array();
  bool all_pass = true;

  void record(const std::string& name, bool pass, Json details = Json()) {
    Json entry{{"check", name}, {"pass", pass}};
    if (!details.is_null()) entry["details"] = std::move(details);
    checks.push_back(std::move(entry));
    if (!pass) all_pass = false;
  }
};

Polynomial random_polynomial(std::size_t nvars, unsigned max_degree,
                             std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<unsigned> nterms(1, 5);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  Polynomial f(nvars);
  unsigned t = nterms(rng);
  for (unsigned i = 0; i < t; ++i) {
    curv::Exponents e(nvars, 0);
    unsigned d = deg(rng);
    for (unsigned j = 0; j < d; ++j) e[var(rng)] += 1;
    int c = coeff(rng);
    if (c == 0) c = 1;
    f.add_term(e, Rational(c));
  }
  return f;
}

void verify_theorems(const LoadedInput& in, std::size_t row_limit,
                     CheckLog& log) {
  const auto& cfg = in.cfg;
  const std::size_t n = cfg.size();
  Matroid matroid(cfg);
  GradedCount combinatorial = matroid.graded_counts();
  GradedCount algebraic = curv::algebra_graded_dims(cfg, row_limit);
  GradedCount dual = curv::dual_graded_dims(cfg, row_limit);
  log.record("combinatorial == algebraic", combinatorial == algebraic);
  log.record("algebraic == dual", algebraic == dual);
  log.record("total == independent subset count",
             combinatorial.total() == matroid.independent_count());
  log.record("robust basis", curv::robust_basis_check(cfg));

  // Robust subsets graded by size must match the activity grading.
  auto robust = matroid.robust_subsets();
  std::vector<std::uint64_t> by_size(n + 1, 0);
  for (auto s : robust) by_size[curv::popcount(s)]++;
  log.record("robust size distribution == graded counts",
             by_size == combinatorial.counts);

  if (cfg.spans()) {
    log.record("ideal generators vanish", curv::generators_vanish(cfg));
    GradedCount quotient = curv::quotient_hilbert(cfg, n + 1, row_limit);
    bool match = quotient.counts[n + 1] == 0;
    for (std::size_t k = 0; k <= n && match; ++k)
      match = quotient.counts[k] == combinatorial.counts[k];
    log.record("presentation matches (and vanishes above top degree)", match);
  }
}

void verify_recursions(const LoadedInput& in, CheckLog& log) {
  const auto& cfg = in.cfg;
  std::mt19937_64 rng(20240811);

  if (!cfg.vectors.empty() && !curv::is_zero(cfg.vectors.back())) {
    auto [vprime, vsecond] = curv::delete_contract(cfg);
    log.record("ind(V) == ind(V') + ind(V'')",
               Matroid(cfg).independent_count() ==
                   Matroid(vprime).independent_count() +
                       Matroid(vsecond).independent_count());
    if (cfg.spans()) {
      log.record("essential deletion/contraction",
                 curv::essential_deletion_contraction_check(cfg));
      bool derivative_ok = true;
      for (int trial = 0; trial < 20 && derivative_ok; ++trial)
        derivative_ok = curv::derivative_membership_check(
            cfg, random_polynomial(cfg.ambient_dim, 4, rng));
      log.record("derivative membership lemma (20 random f)", derivative_ok);
    }
  }

  // Ordering invariance of the graded counts.
  GradedCount reference = Matroid(cfg).graded_counts();
  std::vector<std::size_t> perm(cfg.size());
  std::iota(perm.begin(), perm.end(), 0);
  bool stable = true;
  for (int trial = 0; trial < 5 && stable; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    stable = Matroid(cfg.permuted(perm)).graded_counts() == reference;
  }
  log.record("graded counts invariant under reordering (5 shuffles)", stable);

  if (cfg.spans() && cfg.size() <= 10)
    log.record("essential subsets: remark characterizations",
               curv::remark1_crosscheck(cfg));
}

void verify_forests(const LoadedInput& in, CheckLog& log) {
  if (!in.root_system || in.root_system->type != 'A' ||
      in.root_system->rank > 4)
    throw std::invalid_argument(
        "the forests suite requires --type A with rank <= 4");
  const std::size_t vertices = in.root_system->rank + 1;
  auto forests = curv::oracle::forest_inversions(vertices);
  GradedCount graded = Matroid(in.cfg).graded_counts();
  const std::size_t n = in.cfg.size();  // = C(vertices, 2)

  log.record("total == number of forests",
             graded.total() == forests.total,
             Json{{"forests", forests.total}});
  bool match = true;
  for (std::size_t k = 0; k <= n; ++k)
    if (graded.counts[k] != forests.by_inversions[n - k]) {
      match = false;
      break;
    }
  log.record("graded counts == forest inversion distribution", match);
}

int cmd_verify(const CommonOptions& opt, const std::string& suite) {
  LoadedInput in = load_input(opt);
  Stopwatch watch;
  CheckLog log;
  if (suite == "theorems")
    verify_theorems(in, opt.row_limit, log);
  else if (suite == "recursions")
    verify_recursions(in, log);
  else if (suite == "forests")
    verify_forests(in, log);
  else
    throw std::invalid_argument("unknown suite: " + suite);

  Json report{{"suite", suite},
              {"pass", log.all_pass},
              {"checks", log.checks},
              {"metadata", metadata(in, watch.ms())}};
  if (!log.all_pass) report["input"] = in.source;
  write_output(opt, report);
  return log.all_pass ? kOk : kVerifyFailure;
}

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_engine_input) {
  if (with_engine_input)
    cmd->add_option("--input", opt.input_path,
                    "configuration document (default: stdin)");
  cmd->add_option("--type", opt.type_label,
                  "root system type, e.g. A2 or A with --rank");
  cmd->add_option("--rank", opt.rank, "root system rank");
  cmd->add_option("--output", opt.output_path, "output path (default: stdout)");
  cmd->add_option("--max-rows", opt.row_limit,
                  "row limit for the algebraic and presentation engines");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert series of vector-configuration algebras"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string engine = "all";
  std::string emit = "config";
  std::string weight_csv;
  std::string suite = "theorems";

  auto* hilbert = app.add_subcommand(
      "hilbert", "graded dimensions by one or all engines");
  add_common(hilbert, opt, true);
  hilbert->add_option("--engine", engine,
                      "combinatorial | algebraic | presentation | all");

  auto* circuits = app.add_subcommand("circuits", "list all circuits");
  add_common(circuits, opt, true);
  auto* robust = app.add_subcommand("robust", "list robust subsets");
  add_common(robust, opt, true);
  auto* essential =
      app.add_subcommand("essential", "list essential hyperplanes");
  add_common(essential, opt, true);

  auto* rootsystem =
      app.add_subcommand("rootsystem", "emit root system data");
  add_common(rootsystem, opt, false);
  rootsystem->add_option("--emit", emit, "coroots | config | weights");

  auto* curvature =
      app.add_subcommand("curvature", "curvature form coefficients");
  add_common(curvature, opt, false);
  curvature->add_option("--weight", weight_csv,
                        "weight in fundamental-weight coordinates, CSV");

  auto* verify = app.add_subcommand("verify", "run a cross-validation suite");
  add_common(verify, opt, true);
  verify->add_option("--suite", suite, "theorems | recursions | forests");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (hilbert->parsed()) return cmd_hilbert(opt, engine);
    if (circuits->parsed()) return cmd_circuits(opt);
    if (robust->parsed()) return cmd_robust(opt);
    if (essential->parsed()) return cmd_essential(opt);
    if (rootsystem->parsed()) return cmd_rootsystem(opt, emit);
    if (curvature->parsed()) return cmd_curvature(opt, weight_csv);
    if (verify->parsed()) return cmd_verify(opt, suite);
  } catch (const curv::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResourceGuard;
  } catch (const curv::Json::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kOk;
}
