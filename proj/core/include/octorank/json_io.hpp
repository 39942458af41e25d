#pragma once

#include <string>

#include "octorank/exterior.hpp"
#include "octorank/verify.hpp"

namespace octorank {

// Serialized interchange formats. Scalars are decimal strings, rationals
// with nontrivial denominator as "num/den"; matrices are row-major arrays
// of such strings. The schemas are documented in the README.

/// The seven generator matrices of a family, with field/algebra/space
/// metadata and basis labels.
std::string export_basis_matrices(const FormFamily& family);

/// Re-import; IoError on malformed input. The round trip through
/// export/import is exact.
struct ImportedBasisMatrices {
    FieldSpec field = FieldSpec::rationals();
    std::string algebra;
    SpaceTag space = SpaceTag::OnC0;
    std::vector<std::string> basis_labels;
    std::vector<AltForm> generators;
};
ImportedBasisMatrices import_basis_matrices(const std::string& text);

/// Census tallies for a family over a finite field.
std::string export_census(const CensusResult& census, const FormFamily& family);

/// Kernel basis of the evaluation map: wedge coordinates, transported
/// forms with their ranks, and a sampled rank audit (division algebras get
/// the decomposable audit; other algebras report ranks only).
std::string export_kernel(const FormEvaluationMap& eval_map, Rng& rng, std::size_t audit_samples);

std::string report_to_json(const Report& report, const RunConfig& config);

struct IoError : Error {
    using Error::Error;
};

}  // namespace octorank
