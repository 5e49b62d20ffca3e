// Command-line front-end: build family states, certify matrices from
// files, evaluate map-state pairings, and sweep parameter grids.
//
// Exit codes: 0 success, 2 parameter/validation error, 3 I/O error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edgestates/certify.hpp"
#include "edgestates/families.hpp"
#include "edgestates/io.hpp"
#include "edgestates/maps.hpp"

namespace {

using namespace edgestates;

constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

FamilyKind parse_kind(const std::string& name) {
  if (name == "76") return FamilyKind::F76;
  if (name == "75") return FamilyKind::F75;
  if (name == "65") return FamilyKind::F65;
  if (name == "44") return FamilyKind::F44;
  if (name == "85") return FamilyKind::F85;
  if (name == "general") return FamilyKind::General;
  throw std::invalid_argument("unknown family '" + name + "' (expected 76|75|65|44|85|general)");
}

struct BuildArgs {
  std::string family;
  double lambda = 0.0;
  std::optional<double> t;
  std::string vectors_path;
  std::string out_path;
  bool normalize = false;
};

int run_build(const BuildArgs& args) {
  const FamilyKind kind = parse_kind(args.family);
  BlockMatrix state;
  MatrixMetadata meta;
  meta.family = args.family;
  meta.lambda = args.lambda;

  if (kind == FamilyKind::General) {
    if (args.vectors_path.empty())
      throw std::invalid_argument("--vectors is required for --family general");
    const VectorSet set = read_vector_file(args.vectors_path);
    FamilySpec spec;
    spec.kind = FamilyKind::General;
    spec.lambda = args.lambda;
    spec.mu = 1.0 / args.lambda;
    spec.nu = set.nu;
    spec.xi = set.xi;
    spec.eta = set.eta;
    spec.zeta = set.zeta;
    spec.alpha = set.alpha;
    spec.beta = set.beta;
    spec.gamma = set.gamma;
    state = general_state(spec);
  } else {
    const NamedFamily family = named_family(kind, args.lambda, args.t);
    state = family.state;
    meta.t = args.t;
  }

  if (args.normalize) {
    const Complex trace = state.data.trace();
    state.data /= trace.real();
  }
  write_matrix_file(args.out_path, state, meta);
  return 0;
}

struct ClassifyArgs {
  std::string matrix_path;
  std::optional<double> map_lambda;
  int restarts = 300;
  std::uint64_t seed = 0;
  double rank_tol = TolerancePolicy{}.rank_rel_tol;
  std::string out_path;
};

void print_summary(const CertificationReport& report) {
  std::cout << "ppt=" << (report.ppt.is_ppt ? "true" : "false") << " s=" << report.s
            << " t=" << report.t << " edge=" << to_string(report.edge.verdict)
            << " min_obj=" << format_double(report.edge.min_objective) << '\n';
}

int run_classify(const ClassifyArgs& args) {
  const MatrixFile file = read_matrix_file(args.matrix_path);
  TolerancePolicy tol;
  tol.rank_rel_tol = args.rank_tol;
  SearchConfig cfg;
  cfg.restarts = args.restarts;
  cfg.seed = args.seed;

  std::optional<DecomposableMap> phi;
  if (args.map_lambda) phi = phi_family(*args.map_lambda);

  const CertificationReport report = classify(file.matrix, phi, cfg, tol);
  print_summary(report);
  if (!args.out_path.empty()) write_report_file(args.out_path, report, tol, cfg);
  return 0;
}

struct PairArgs {
  std::string matrix_path;
  double map_lambda = 0.0;
};

int run_pair(const PairArgs& args) {
  const MatrixFile file = read_matrix_file(args.matrix_path);
  const DecomposableMap phi = phi_family(args.map_lambda);
  const DualFaceResult result = dual_face_membership(file.matrix, phi);
  std::cout << "pairing_re=" << format_double(result.pairing_value.real())
            << " pairing_im=" << format_double(result.pairing_value.imag())
            << " member=" << (result.member ? "true" : "false") << '\n';
  return 0;
}

struct SweepArgs {
  std::vector<std::string> families;
  std::vector<double> lambda_grid;
  std::vector<double> t_grid;
  int restarts = 300;
  std::uint64_t seed = 0;
  double rank_tol = TolerancePolicy{}.rank_rel_tol;
  std::string out_path;
};

int run_sweep(const SweepArgs& args) {
  if (args.families.empty()) throw std::invalid_argument("sweep: family list must be nonempty");
  if (args.lambda_grid.empty()) throw std::invalid_argument("sweep: lambda grid must be nonempty");

  struct Cell {
    FamilyKind kind;
    std::string name;
    double lambda;
    std::optional<double> t;
  };
  std::vector<Cell> cells;
  for (const auto& name : args.families) {
    const FamilyKind kind = parse_kind(name);
    if (kind == FamilyKind::General)
      throw std::invalid_argument("sweep: only named families can be swept");
    for (double lambda : args.lambda_grid) {
      if (kind == FamilyKind::F85) {
        if (args.t_grid.empty())
          throw std::invalid_argument("sweep: --t-grid is required when family 85 is swept");
        for (double t : args.t_grid) cells.push_back({kind, name, lambda, t});
      } else {
        cells.push_back({kind, name, lambda, std::nullopt});
      }
    }
  }

  TolerancePolicy tol;
  tol.rank_rel_tol = args.rank_tol;

  std::string csv = "family,lambda,t,s,t_rank,ppt,pairing,edge_verdict,min_objective,wall_ms\n";
  for (std::size_t row = 0; row < cells.size(); ++row) {
    const Cell& cell = cells[row];
    const auto t0 = std::chrono::steady_clock::now();

    const NamedFamily family = named_family(cell.kind, cell.lambda, cell.t);
    SearchConfig cfg;
    cfg.restarts = args.restarts;
    cfg.seed = args.seed + row;
    const CertificationReport report = classify(family.state, phi_family(cell.lambda), cfg, tol);

    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    csv += cell.name + ',' + format_double(cell.lambda) + ',';
    if (cell.t) csv += format_double(*cell.t);
    csv += ',' + std::to_string(report.s) + ',' + std::to_string(report.t) + ',';
    csv += report.ppt.is_ppt ? "true" : "false";
    csv += ',' + format_double(report.pairing_value->real()) + ',' +
           to_string(report.edge.verdict) + ',' + format_double(report.edge.min_objective) + ',' +
           format_double(wall_ms) + '\n';
  }

  std::ofstream out(args.out_path);
  if (!out) throw IoError("cannot open file for writing: " + args.out_path);
  out << csv;
  if (!out) throw IoError("write failed: " + args.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"3x3 PPT entangled edge states: construction and numerical certification"};
  app.require_subcommand(1);

  BuildArgs build_args;
  CLI::App* build = app.add_subcommand("build", "Construct a family state and write it to disk");
  build->add_option("--family", build_args.family, "76|75|65|44|85|general")->required();
  build->add_option("--lambda", build_args.lambda, "map parameter, lambda > 0, lambda != 1")
      ->required();
  build->add_option("--t", build_args.t, "second parameter of family 85, t > 1");
  build->add_option("--vectors", build_args.vectors_path,
                    "JSON vector set for --family general");
  build->add_flag("--normalize", build_args.normalize, "divide the state by its trace");
  build->add_option("--out", build_args.out_path, "output matrix file")->required();

  ClassifyArgs classify_args;
  CLI::App* classify_cmd = app.add_subcommand("classify", "Certify a matrix file");
  classify_cmd->add_option("matrix", classify_args.matrix_path, "input matrix file")->required();
  classify_cmd->add_option("--map-lambda", classify_args.map_lambda,
                           "also evaluate the pairing against this map parameter");
  classify_cmd->add_option("--restarts", classify_args.restarts, "edge search restarts");
  classify_cmd->add_option("--seed", classify_args.seed, "edge search seed");
  classify_cmd->add_option("--rank-tol", classify_args.rank_tol, "relative rank tolerance");
  classify_cmd->add_option("--out", classify_args.out_path, "write the full JSON report here");

  PairArgs pair_args;
  CLI::App* pair_cmd = app.add_subcommand("pair", "Evaluate the map-state pairing only");
  pair_cmd->add_option("matrix", pair_args.matrix_path, "input matrix file")->required();
  pair_cmd->add_option("--map-lambda", pair_args.map_lambda, "map parameter")->required();

  SweepArgs sweep_args;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Certify a family/parameter grid into CSV");
  sweep_cmd->add_option("--families", sweep_args.families, "comma-separated family list")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--lambda-grid", sweep_args.lambda_grid, "comma-separated lambda values")
      ->required()
      ->delimiter(',');
  sweep_cmd->add_option("--t-grid", sweep_args.t_grid, "comma-separated t values (family 85)")
      ->delimiter(',');
  sweep_cmd->add_option("--restarts", sweep_args.restarts, "edge search restarts per cell");
  sweep_cmd->add_option("--seed", sweep_args.seed, "base seed; row k uses seed + k");
  sweep_cmd->add_option("--rank-tol", sweep_args.rank_tol, "relative rank tolerance");
  sweep_cmd->add_option("--out", sweep_args.out_path, "output CSV file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (build->parsed()) return run_build(build_args);
    if (classify_cmd->parsed()) return run_classify(classify_args);
    if (pair_cmd->parsed()) return run_pair(pair_args);
    if (sweep_cmd->parsed()) return run_sweep(sweep_args);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
