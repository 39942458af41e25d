#include "octorank/json_io.hpp"

#include <json.hpp>

namespace octorank {
namespace {

using Json = nlohmann::ordered_json;

const char* space_name(SpaceTag tag) { return tag == SpaceTag::OnC ? "C" : "C0"; }

SpaceTag parse_space(const std::string& text) {
    if (text == "C") return SpaceTag::OnC;
    if (text == "C0") return SpaceTag::OnC0;
    throw IoError("space must be \"C\" or \"C0\", got '" + text + "'");
}

std::vector<std::string> basis_labels(SpaceTag tag) {
    std::vector<std::string> labels;
    if (tag == SpaceTag::OnC) labels.push_back("e");
    for (int i = 1; i <= 7; ++i) labels.push_back("b" + std::to_string(i));
    return labels;
}

Json matrix_to_json(const ExactMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

ExactMatrix matrix_from_json(const Json& rows, const FieldSpec& field) {
    if (!rows.is_array() || rows.empty()) throw IoError("matrix must be a nonempty array");
    const std::size_t r = rows.size();
    const std::size_t c = rows.front().size();
    ExactMatrix m(r, c, field);
    for (std::size_t i = 0; i < r; ++i) {
        if (!rows[i].is_array() || rows[i].size() != c) throw IoError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) {
            m.at(i, j) = field.parse_element(rows[i][j].get<std::string>());
        }
    }
    return m;
}

Json parse_document(const std::string& text, const char* expected_schema) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("schema") ||
        doc["schema"].get<std::string>() != expected_schema) {
        throw IoError(std::string("expected schema '") + expected_schema + "'");
    }
    return doc;
}

}  // namespace

std::string export_basis_matrices(const FormFamily& family) {
    Json doc;
    doc["schema"] = "octorank.basis-matrices/1";
    doc["field"] = family.algebra()->field().to_string();
    doc["algebra"] = family.algebra()->spec_string();
    doc["space"] = space_name(family.space());
    doc["basis_labels"] = basis_labels(family.space());
    Json generators = Json::array();
    for (std::size_t i = 0; i < family.generators().size(); ++i) {
        const AltForm& f = family.generators()[i];
        Json entry;
        entry["label"] = "b" + std::to_string(i + 1);
        entry["rank"] = f.rank();
        entry["matrix"] = matrix_to_json(f.matrix());
        generators.push_back(std::move(entry));
    }
    doc["generators"] = std::move(generators);
    return doc.dump(2) + "\n";
}

ImportedBasisMatrices import_basis_matrices(const std::string& text) {
    const Json doc = parse_document(text, "octorank.basis-matrices/1");
    ImportedBasisMatrices out;
    try {
        out.field = FieldSpec::parse(doc.at("field").get<std::string>());
        out.algebra = doc.at("algebra").get<std::string>();
        out.space = parse_space(doc.at("space").get<std::string>());
        for (const auto& label : doc.at("basis_labels")) {
            out.basis_labels.push_back(label.get<std::string>());
        }
        for (const auto& entry : doc.at("generators")) {
            out.generators.push_back(
                AltForm(matrix_from_json(entry.at("matrix"), out.field), out.space));
            if (out.generators.back().rank() != entry.at("rank").get<std::size_t>()) {
                throw IoError("stored rank disagrees with the matrix");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("bad basis-matrices document: ") + e.what());
    }
    if (out.generators.size() != 7) throw IoError("expected exactly 7 generators");
    return out;
}

std::string export_census(const CensusResult& census, const FormFamily& family) {
    Json doc;
    doc["schema"] = "octorank.census/1";
    doc["field"] = family.algebra()->field().to_string();
    doc["algebra"] = family.algebra()->spec_string();
    doc["space"] = space_name(census.space);
    doc["projective_points"] = census.projective_points;
    doc["affine_nonzero"] = census.affine_nonzero;
    Json proj = Json::object(), aff = Json::object();
    for (const auto& [rank, count] : census.rank_counts_projective) {
        proj[std::to_string(rank)] = count;
    }
    for (const auto& [rank, count] : census.rank_counts_affine) {
        aff[std::to_string(rank)] = count;
    }
    doc["rank_counts_projective"] = std::move(proj);
    doc["rank_counts_affine"] = std::move(aff);
    doc["isotropic_projective"] = census.rank_isotropic_projective;
    doc["square_classes_full_rank"] = {
        {"square", census.square_class_square_projective},
        {"nonsquare", census.square_class_nonsquare_projective},
    };
    doc["low_rank_iff_isotropic"] = census.low_rank_iff_isotropic;
    doc["independent_isotropic_affine"] = census.independent_isotropic_affine;
    doc["isotropic_count_matches"] = census.isotropic_count_matches;
    return doc.dump(2) + "\n";
}

std::string export_kernel(const FormEvaluationMap& eval_map, Rng& rng,
                          std::size_t audit_samples) {
    const auto& algebra = eval_map.algebra();
    Json doc;
    doc["schema"] = "octorank.kernel/1";
    doc["field"] = algebra->field().to_string();
    doc["algebra"] = algebra->spec_string();
    doc["space"] = space_name(space_of(eval_map.ambient()));
    doc["basis_labels"] = basis_labels(space_of(eval_map.ambient()));
    Json pairs = Json::array();
    for (const auto& [i, j] : wedge_pairs(eval_map.ambient())) {
        pairs.push_back(Json::array({i, j}));
    }
    doc["wedge_pairs"] = std::move(pairs);
    doc["evaluation_rank"] = eval_map.matrix().rank();
    doc["kernel_dimension"] = eval_map.kernel().size();

    Json basis = Json::array();
    for (const Bivector& z : eval_map.kernel()) {
        Json entry;
        Json coords = Json::array();
        for (const FieldElement& c : z.coords()) coords.push_back(c.to_string());
        entry["coords"] = std::move(coords);
        const AltForm f = altform_from_bivector(*algebra, z);
        entry["altform"] = matrix_to_json(f.matrix());
        entry["altform_rank"] = f.rank();
        basis.push_back(std::move(entry));
    }
    doc["kernel_basis"] = std::move(basis);

    Json audit;
    audit["samples"] = audit_samples;
    if (algebra->is_division()) {
        const KernelAuditReport report =
            kernel_decomposable_audit(eval_map, rng, audit_samples, 0);
        Json ranks = Json::object();
        for (const auto& [rank, count] : report.transported_ranks) {
            ranks[std::to_string(rank)] = count;
        }
        audit["ranks_seen"] = std::move(ranks);
        audit["decomposable_found"] = report.decomposable_found;
        audit["no_rank2"] = report.transported_ranks.count(2) == 0;
    } else {
        Json ranks = Json::object();
        for (std::size_t s = 0; s < audit_samples; ++s) {
            const Bivector z = eval_map.random_kernel_element(rng);
            const auto rank = altform_from_bivector(*algebra, z).rank();
            const std::string key = std::to_string(rank);
            ranks[key] = (ranks.contains(key) ? ranks[key].get<std::int64_t>() : 0) + 1;
        }
        audit["ranks_seen"] = std::move(ranks);
        audit["note"] = "decomposable-freeness is claimed for division algebras only";
    }
    doc["rank_audit"] = std::move(audit);
    return doc.dump(2) + "\n";
}

std::string report_to_json(const Report& report, const RunConfig& config) {
    Json doc;
    doc["schema"] = "octorank.report/1";
    doc["config"] = {
        {"seed", config.seed},
        {"base_samples", config.base_samples},
        {"automorphism_count", config.automorphism_count},
        {"derivation_count", config.derivation_count},
        {"composition_pairs", config.composition_pairs},
    };
    Json claims = Json::array();
    for (const ClaimResult& claim : report.claims) {
        Json entry;
        entry["claim_id"] = claim.claim_id;
        entry["description"] = claim.description;
        entry["statement"] = claim.statement;
        entry["status"] = claim.skipped ? "skip" : (claim.passed ? "pass" : "fail");
        if (claim.skipped) entry["skip_reason"] = claim.skip_reason;
        Json data = Json::object();
        for (const auto& [key, value] : claim.data) data[key] = value;
        entry["data"] = std::move(data);
        entry["seconds"] = claim.seconds;
        claims.push_back(std::move(entry));
    }
    doc["claims"] = std::move(claims);
    doc["all_passed"] = report.all_passed();
    doc["total_seconds"] = report.total_seconds;
    return doc.dump(2) + "\n";
}

}  // namespace octorank
