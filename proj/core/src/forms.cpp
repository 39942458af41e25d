#include "octorank/forms.hpp"

#include <utility>

namespace octorank {

AltForm::AltForm(ExactMatrix matrix, SpaceTag tag) : matrix_(std::move(matrix)), tag_(tag) {
    const std::size_t n = space_dimension(tag);
    if (matrix_.rows() != n || matrix_.cols() != n) {
        throw Error("alternating form has wrong dimension for its space tag");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!matrix_.at(i, i).is_zero()) throw Error("alternating form has nonzero diagonal");
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!(matrix_.at(i, j) == -matrix_.at(j, i))) {
                throw Error("alternating form matrix is not skew-symmetric");
            }
        }
    }
}

FieldElement AltForm::evaluate(const std::vector<FieldElement>& y,
                               const std::vector<FieldElement>& z) const {
    const std::size_t n = dimension();
    if (y.size() != n || z.size() != n) throw Error("form argument has wrong length");
    FieldElement acc = matrix_.field().zero();
    for (std::size_t i = 0; i < n; ++i) {
        if (y[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (z[j].is_zero() || matrix_.at(i, j).is_zero()) continue;
            acc += y[i] * matrix_.at(i, j) * z[j];
        }
    }
    return acc;
}

AltForm AltForm::operator+(const AltForm& rhs) const {
    if (tag_ != rhs.tag_) throw Error("form space mismatch in +");
    return AltForm(matrix_ + rhs.matrix_, tag_);
}

AltForm AltForm::operator-(const AltForm& rhs) const {
    if (tag_ != rhs.tag_) throw Error("form space mismatch in -");
    return AltForm(matrix_ - rhs.matrix_, tag_);
}

AltForm AltForm::scaled(const FieldElement& c) const { return AltForm(matrix_.scaled(c), tag_); }

bool AltForm::operator==(const AltForm& rhs) const {
    return tag_ == rhs.tag_ && matrix_ == rhs.matrix_;
}

AltForm form_on_C(const Octonion& x) {
    const auto& algebra = x.algebra();
    if (!x.is_pure()) throw NotPure("form requires a pure octonion");
    // Entry (i,j) = <x b_i, b_j>; columns of L_x are the products x b_i,
    // so the matrix is L_x^T G.
    const ExactMatrix lx = algebra->left_mult_matrix(x);
    return AltForm(lx.transposed() * algebra->norm_gram(), SpaceTag::OnC);
}

AltForm form_on_C0(const Octonion& x) {
    const auto& algebra = x.algebra();
    const AltForm full = form_on_C(x);
    const ExactMatrix& e = algebra->pure_basis().embedding;
    return AltForm(e.transposed() * full.matrix() * e, SpaceTag::OnC0);
}

std::vector<FieldElement> flatten_form(const AltForm& f) {
    const std::size_t n = f.dimension();
    std::vector<FieldElement> out;
    out.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.push_back(f.matrix().at(i, j));
    return out;
}

AltForm unflatten_form(const std::vector<FieldElement>& coords, SpaceTag tag,
                       const FieldSpec& field) {
    const std::size_t n = space_dimension(tag);
    if (coords.size() != n * (n - 1) / 2) throw Error("wrong coordinate count for form");
    ExactMatrix m(n, n, field);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++k) {
            m.at(i, j) = coords[k];
            m.at(j, i) = -coords[k];
        }
    }
    return AltForm(std::move(m), tag);
}

RestrictionRankResult restriction_rank_check(
    const AltForm& form, const std::vector<std::vector<FieldElement>>& hyperplane_basis) {
    const std::size_t n = form.dimension();
    const FieldSpec& field = form.matrix().field();
    if (hyperplane_basis.size() != n - 1) {
        throw BadHyperplane("hyperplane basis must contain n-1 vectors");
    }
    const ExactMatrix rows = ExactMatrix::from_rows(hyperplane_basis, field);
    if (rows.cols() != n || rows.rank() != n - 1) {
        throw BadHyperplane("hyperplane basis vectors are not independent of full length");
    }

    const ExactMatrix basis_cols = rows.transposed();  // n x (n-1)
    const ExactMatrix restricted = basis_cols.transposed() * form.matrix() * basis_cols;

    RestrictionRankResult result;
    result.rank_full = form.rank();
    result.rank_restricted = restricted.rank();
    result.radical_in_hyperplane = true;
    for (const auto& v : form.radical()) {
        if (!in_row_span(rows, v)) {
            result.radical_in_hyperplane = false;
            break;
        }
    }
    result.lemma_holds = result.radical_in_hyperplane
                             ? result.rank_restricted + 2 == result.rank_full
                             : result.rank_restricted == result.rank_full;
    return result;
}

FormFamily FormFamily::build(std::shared_ptr<const OctonionAlgebra> algebra, SpaceTag tag) {
    std::vector<AltForm> generators;
    for (std::size_t i = 1; i <= 7; ++i) {
        const Octonion b = algebra->basis_element(i);
        generators.push_back(tag == SpaceTag::OnC ? form_on_C(b) : form_on_C0(b));
    }
    const std::size_t width = space_dimension(tag) * (space_dimension(tag) - 1) / 2;
    ExactMatrix flat(7, width, algebra->field());
    for (std::size_t g = 0; g < 7; ++g) {
        const auto row = flatten_form(generators[g]);
        for (std::size_t k = 0; k < width; ++k) flat.at(g, k) = row[k];
    }
    if (flat.rank() != 7) {
        throw DegenerateFamily("basis forms are linearly dependent; the table is broken");
    }
    return FormFamily(std::move(algebra), tag, std::move(generators), std::move(flat));
}

AltForm FormFamily::combination(const std::vector<FieldElement>& coeffs) const {
    if (coeffs.size() != 7) throw Error("combination needs 7 coefficients");
    const std::size_t n = space_dimension(tag_);
    ExactMatrix m(n, n, algebra_->field());
    for (std::size_t g = 0; g < 7; ++g) {
        if (coeffs[g].is_zero()) continue;
        m = m + generators_[g].matrix().scaled(coeffs[g]);
    }
    return AltForm(std::move(m), tag_);
}

bool FormFamily::contains(const AltForm& f) const {
    if (f.space() != tag_) return false;
    return in_row_span(flattened_, flatten_form(f));
}

CensusResult rank_census(const FormFamily& family) {
    const auto& algebra = family.algebra();
    const FieldSpec& field = algebra->field();
    if (!field.is_finite()) {
        throw CensusInfeasible("census requires a finite field");
    }
    const std::int64_t p = field.modulus();
    double size = 1;
    for (int i = 0; i < 7; ++i) size *= static_cast<double>(p);
    if (size > 1e9) {
        throw CensusInfeasible("p^7 exceeds the enumeration budget for p = " + std::to_string(p));
    }

    CensusResult result;
    result.prime = p;
    result.space = family.space();

    const std::size_t n = space_dimension(family.space());
    const ExactMatrix& flat = family.flattened();
    const ExactMatrix& pure_gram = algebra->pure_gram();
    const FieldElement two_inv = field.from_int(2).inverse();

    // Precompute field constants once; the inner loops only index them.
    std::vector<FieldElement> scalar(p, field.zero());
    for (std::int64_t v = 0; v < p; ++v) scalar[v] = field.from_int(v);

    auto norm_of_coeffs = [&](const std::vector<std::int64_t>& c) {
        FieldElement acc = field.zero();
        for (std::size_t i = 0; i < 7; ++i) {
            if (c[i] == 0) continue;
            for (std::size_t j = 0; j < 7; ++j) {
                if (c[j] == 0 || pure_gram.at(i, j).is_zero()) continue;
                acc += scalar[c[i]] * pure_gram.at(i, j) * scalar[c[j]];
            }
        }
        return acc * two_inv;
    };

    // Projective enumeration, partitioned by the first nonzero coefficient.
    std::vector<std::int64_t> c(7, 0);
    for (std::size_t lead = 0; lead < 7; ++lead) {
        std::fill(c.begin(), c.end(), 0);
        c[lead] = 1;
        for (;;) {
            ++result.projective_points;

            ExactMatrix m(n, n, field);
            for (std::size_t g = lead; g < 7; ++g) {
                if (c[g] == 0) continue;
                for (std::size_t i = 0, k = 0; i < n; ++i) {
                    for (std::size_t j = i + 1; j < n; ++j, ++k) {
                        if (flat.at(g, k).is_zero()) continue;
                        const FieldElement term = scalar[c[g]] * flat.at(g, k);
                        m.at(i, j) += term;
                        m.at(j, i) -= term;
                    }
                }
            }
            const std::size_t rank = m.rank();
            ++result.rank_counts_projective[rank];

            const FieldElement norm = norm_of_coeffs(c);
            const std::size_t low_rank = 4;
            if ((rank == low_rank) != norm.is_zero()) result.low_rank_iff_isotropic = false;
            if (norm.is_zero()) {
                ++result.rank_isotropic_projective;
            } else if (norm.is_square()) {
                ++result.square_class_square_projective;
            } else {
                ++result.square_class_nonsquare_projective;
            }

            // Odometer over the tail coefficients.
            std::size_t pos = lead + 1;
            while (pos < 7 && ++c[pos] == p) c[pos++] = 0;
            if (pos == 7) break;
        }
    }
    result.affine_nonzero = result.projective_points * (p - 1);
    for (const auto& [rank, count] : result.rank_counts_projective) {
        result.rank_counts_affine[rank] = count * (p - 1);
    }

    // Independent isotropic count: plain norm loop over all affine vectors.
    std::fill(c.begin(), c.end(), 0);
    for (;;) {
        std::size_t pos = 0;
        while (pos < 7 && ++c[pos] == p) c[pos++] = 0;
        if (pos == 7) break;
        if (norm_of_coeffs(c).is_zero()) ++result.independent_isotropic_affine;
    }
    const auto low = result.rank_counts_affine.find(4);
    const std::int64_t low_count = low == result.rank_counts_affine.end() ? 0 : low->second;
    result.isotropic_count_matches = result.independent_isotropic_affine == low_count;

    return result;
}

}  // namespace octorank
