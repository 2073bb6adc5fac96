// affsch: batch verification and exploration commands.
//
// Exit codes: 0 success, 1 a check failed (or no factorization exists),
// 2 usage, configuration or input error, 3 I/O error.

#include "affsch/embedding.hpp"
#include "affsch/errors.hpp"
#include "affsch/kappa.hpp"
#include "affsch/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return ss.str();
}

affsch::Json parse_json_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return affsch::Json::parse(text);
  } catch (const affsch::Json::parse_error& e) {
    throw affsch::ParseError(path + ": " + e.what());
  }
}

int cmd_verify(const affsch::SweepConfig& cfg) {
  affsch::validate_config(cfg);
  const auto reports = affsch::run_sweep(cfg);
  if (cfg.output.empty()) {
    affsch::write_sweep(std::cout, cfg, reports);
    std::cout.flush();
    if (!std::cout) throw IoError("cannot write to stdout");
  } else {
    std::ofstream out(cfg.output);
    if (!out) throw IoError("cannot open " + cfg.output + " for writing");
    affsch::write_sweep(out, cfg, reports);
    out.close();
    if (!out) throw IoError("cannot write " + cfg.output);
  }
  const bool failed = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.failed(); });
  return failed ? kExitFail : 0;
}

int cmd_kappa(int n, int d, const std::string& emit) {
  const affsch::KappaData k = affsch::build_kappa(n, d);
  if (emit == "word") {
    for (std::size_t i = 0; i < k.kappa_word.size(); ++i) {
      std::cout << (i ? " " : "") << k.kappa_word.letters[i];
    }
    std::cout << '\n';
  } else if (emit == "matrix") {
    std::cout << affsch::to_json(k.matrix).dump() << '\n';
  } else {
    std::cout << affsch::to_json(k.kappa).dump() << '\n';
  }
  return 0;
}

int cmd_cell(const std::string& path, int n, int d) {
  const affsch::LaurentMatrix m = affsch::parse_matrix(read_file(path));
  if (m.rows() != n) throw affsch::RankMismatch("matrix is " + std::to_string(m.rows()) + " x " + std::to_string(m.cols()));
  const affsch::KappaData k = affsch::build_kappa(n, d);
  const affsch::AffinePermutation w = affsch::relative_position(affsch::ChainPoint(d, m));
  affsch::Json out = affsch::Json::object();
  out["window"] = affsch::to_json(w);
  out["leq_kappa"] = affsch::bruhat_leq(w, k.kappa);
  std::cout << out.dump() << '\n';
  return 0;
}

int cmd_factorize(const std::string& path, std::uint64_t seed) {
  const affsch::NilpotentY y = affsch::nilpotent_y_from_json(parse_json_file(path));
  try {
    std::cout << affsch::to_json(affsch::factorize(y, seed)).dump() << '\n';
    return 0;
  } catch (const affsch::DegenerateInput& e) {
    std::cerr << e.what() << '\n';
    return kExitFail;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine Weyl group, lattice and embedding checks"};
  app.require_subcommand(1);

  affsch::SweepConfig cfg;
  affsch::Index precision = 0;
  auto* verify = app.add_subcommand("verify", "Run every check over a range of (n, d) and emit JSON lines");
  verify->add_option("--n-min", cfg.n_min, "Smallest n")->capture_default_str();
  verify->add_option("--n-max", cfg.n_max, "Largest n")->capture_default_str();
  verify->add_option("--samples", cfg.samples, "Randomized draws per check and cell")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "Base seed")->capture_default_str();
  auto* precision_opt = verify->add_option("--precision", precision, "Series precision for coset_eq_routes");
  verify->add_option("--out", cfg.output, "Output file (default stdout)");
  verify->add_flag("--timings", cfg.timings, "Record elapsed_ms per report (output is then not reproducible)");

  int kn = 0, kd = 0;
  std::string emit = "word";
  auto* kappa = app.add_subcommand("kappa", "Print kappa_d as a word, matrix or window");
  kappa->add_option("--n", kn, "Rank n")->required();
  kappa->add_option("--d", kd, "d with 1 <= d <= n - d")->required();
  kappa->add_option("--emit", emit, "word | matrix | window")
      ->check(CLI::IsMember({"word", "matrix", "window"}))
      ->capture_default_str();

  std::string cell_file;
  int cn = 0, cd = 0;
  auto* cell = app.add_subcommand("cell", "Relative position of a matrix against the standard chain");
  cell->add_option("matrix", cell_file, "JSON matrix file")->required();
  cell->add_option("--n", cn, "Rank n")->required();
  cell->add_option("--d", cd, "d with 1 <= d <= n - d")->required();

  std::string y_file;
  std::uint64_t fseed = 0;
  auto* fact = app.add_subcommand("factorize", "Solve g kappa_d = Ybar h for a nilpotent Y");
  fact->add_option("y", y_file, "JSON d x (n-d) array of rationals")->required();
  fact->add_option("--seed", fseed, "Seed for the determinant search")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) {
      if (*precision_opt) cfg.precision = precision;
      return cmd_verify(cfg);
    }
    if (*kappa) return cmd_kappa(kn, kd, emit);
    if (*cell) return cmd_cell(cell_file, cn, cd);
    if (*fact) return cmd_factorize(y_file, fseed);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const affsch::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
