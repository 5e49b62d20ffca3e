#include "edgestates/io.hpp"

#include <fstream>

#include <json.hpp>

namespace edgestates {

namespace {

using nlohmann::json;

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw IoError("matrix file: entries must be [re, im] pairs");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json vector_to_json(const ComplexVector& v) {
  json out = json::array();
  for (Index k = 0; k < v.size(); ++k) out.push_back(complex_to_json(v(k)));
  return out;
}

ComplexVector vector_from_json(const json& j, const char* name) {
  if (!j.is_array()) throw IoError(std::string("vector file: ") + name + " must be an array");
  ComplexVector v(static_cast<Index>(j.size()));
  for (Index k = 0; k < v.size(); ++k) v(k) = complex_from_json(j[static_cast<size_t>(k)]);
  return v;
}

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open file: " + path.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw IoError("malformed JSON: " + path.string());
  return j;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open file for writing: " + path.string());
  out << text << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  const json j = parse_file(path);
  if (!j.contains("m") || !j.contains("n") || !j.contains("data"))
    throw IoError("matrix file: missing m, n or data: " + path.string());
  if (!j["m"].is_number_integer() || !j["n"].is_number_integer())
    throw IoError("matrix file: m, n must be integers");
  const Index m = j["m"].get<Index>();
  const Index n = j["n"].get<Index>();
  if (m <= 0 || n <= 0) throw IoError("matrix file: m, n must be positive");

  const Index dim = n * m;
  const json& data = j["data"];
  if (!data.is_array() || static_cast<Index>(data.size()) != dim)
    throw IoError("matrix file: data must have (nm) rows");
  ComplexMatrix M(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    const json& row = data[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != dim)
      throw IoError("matrix file: data rows must have (nm) entries");
    for (Index c = 0; c < dim; ++c) M(r, c) = complex_from_json(row[static_cast<size_t>(c)]);
  }
  if (!M.allFinite()) throw IoError("matrix file: entries must be finite");

  MatrixFile out{BlockMatrix(m, n, std::move(M)), {}};
  if (j.contains("metadata") && j["metadata"].is_object()) {
    const json& meta = j["metadata"];
    if (meta.contains("family")) out.metadata.family = meta["family"].get<std::string>();
    if (meta.contains("lambda")) out.metadata.lambda = meta["lambda"].get<double>();
    if (meta.contains("t") && !meta["t"].is_null()) out.metadata.t = meta["t"].get<double>();
    if (meta.contains("seed")) out.metadata.seed = meta["seed"].get<std::uint64_t>();
  }
  return out;
}

void write_matrix_file(const std::filesystem::path& path, const BlockMatrix& A,
                       const MatrixMetadata& metadata) {
  json j;
  j["m"] = A.m;
  j["n"] = A.n;
  json data = json::array();
  for (Index r = 0; r < A.dim(); ++r) {
    json row = json::array();
    for (Index c = 0; c < A.dim(); ++c) row.push_back(complex_to_json(A.data(r, c)));
    data.push_back(std::move(row));
  }
  j["data"] = std::move(data);

  json meta;
  if (metadata.family) meta["family"] = *metadata.family;
  if (metadata.lambda) meta["lambda"] = *metadata.lambda;
  if (metadata.t) meta["t"] = *metadata.t;
  if (metadata.seed) meta["seed"] = *metadata.seed;
  if (!meta.empty()) j["metadata"] = std::move(meta);

  write_text(path, j.dump(2));
}

VectorSet read_vector_file(const std::filesystem::path& path) {
  const json j = parse_file(path);
  if (!j.contains("nu") || !j["nu"].is_number_integer())
    throw IoError("vector file: missing integer nu: " + path.string());
  VectorSet set;
  set.nu = j["nu"].get<Index>();
  const char* names[6] = {"xi", "eta", "zeta", "alpha", "beta", "gamma"};
  ComplexVector* slots[6] = {&set.xi, &set.eta, &set.zeta, &set.alpha, &set.beta, &set.gamma};
  for (int k = 0; k < 6; ++k) {
    if (!j.contains(names[k]))
      throw IoError(std::string("vector file: missing vector ") + names[k]);
    *slots[k] = vector_from_json(j[names[k]], names[k]);
    if (slots[k]->size() != set.nu)
      throw IoError(std::string("vector file: ") + names[k] + " must have nu entries");
  }
  return set;
}

std::string report_json(const CertificationReport& report, const TolerancePolicy& tol,
                        const SearchConfig& cfg) {
  json j;
  j["tool"] = {{"name", "edgestates"}, {"version", kVersion}};
  j["tolerances"] = {{"rank_rel_tol", tol.rank_rel_tol},
                     {"psd_rel_tol", tol.psd_rel_tol},
                     {"membership_tol", tol.membership_tol}};
  j["config"] = {{"restarts", cfg.restarts},
                 {"seed", cfg.seed},
                 {"max_iterations", cfg.max_iterations},
                 {"step_tolerance", cfg.step_tolerance},
                 {"objective_tolerance", cfg.objective_tolerance}};

  json r;
  r["ppt"] = {{"is_ppt", report.ppt.is_ppt},
              {"min_eig_a", report.ppt.min_eig_a},
              {"min_eig_a_tau", report.ppt.min_eig_a_tau},
              {"norm_scale", report.ppt.norm_scale}};
  r["s"] = report.s;
  r["t"] = report.t;
  r["pairing_value"] =
      report.pairing_value ? complex_to_json(*report.pairing_value) : json(nullptr);
  r["dual_face_member"] = report.dual_face_member ? json(*report.dual_face_member) : json(nullptr);
  r["edge"] = {{"verdict", to_string(report.edge.verdict)},
               {"min_objective", report.edge.min_objective},
               {"best_x", vector_to_json(report.edge.best_x)},
               {"best_y", vector_to_json(report.edge.best_y)},
               {"restarts_run", report.edge.restarts_run},
               {"seed", report.edge.seed},
               {"per_restart_minima", report.edge.per_restart_minima}};
  j["report"] = std::move(r);
  return j.dump(2);
}

void write_report_file(const std::filesystem::path& path, const CertificationReport& report,
                       const TolerancePolicy& tol, const SearchConfig& cfg) {
  write_text(path, report_json(report, tol, cfg));
}

}  // namespace edgestates
