#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "edgestates/certify.hpp"
#include "edgestates/families.hpp"
#include "edgestates/types.hpp"

namespace edgestates {

inline constexpr const char* kVersion = "0.1.0";

/// File-level failures (missing, unreadable, malformed). Distinct from
/// std::invalid_argument so the CLI can map them to their own exit code.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MatrixMetadata {
  std::optional<std::string> family;
  std::optional<double> lambda;
  std::optional<double> t;
  std::optional<std::uint64_t> seed;
};

struct MatrixFile {
  BlockMatrix matrix;
  MatrixMetadata metadata;
};

/// JSON matrix document: integers m, n and an (nm) x (nm) array of
/// [re, im] pairs, plus optional metadata. Doubles are serialized in a
/// shortest round-trip form, so write followed by read reproduces the
/// matrix bit-exactly for finite entries.
MatrixFile read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const BlockMatrix& A,
                       const MatrixMetadata& metadata = {});

/// Construction vectors for `build --family general`: fields nu and
/// xi, eta, zeta, alpha, beta, gamma as arrays of [re, im] pairs.
struct VectorSet {
  Index nu = 0;
  ComplexVector xi, eta, zeta, alpha, beta, gamma;
};
VectorSet read_vector_file(const std::filesystem::path& path);

/// Certification report rendered to JSON together with the tool version,
/// the tolerance policy and the search config that produced it.
std::string report_json(const CertificationReport& report, const TolerancePolicy& tol,
                        const SearchConfig& cfg);
void write_report_file(const std::filesystem::path& path, const CertificationReport& report,
                       const TolerancePolicy& tol, const SearchConfig& cfg);

}  // namespace edgestates
