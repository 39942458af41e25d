#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "octorank/algebra.hpp"

namespace octorank {

/// Whether a form lives on the full algebra (8x8) or its pure part (7x7).
enum class SpaceTag { OnC, OnC0 };

inline std::size_t space_dimension(SpaceTag tag) { return tag == SpaceTag::OnC ? 8 : 7; }

/// Alternating bilinear form as an exact skew-symmetric matrix with zero
/// diagonal. Rank is always even; the radical is the matrix kernel.
class AltForm {
public:
    AltForm(ExactMatrix matrix, SpaceTag tag);

    const ExactMatrix& matrix() const { return matrix_; }
    SpaceTag space() const { return tag_; }
    std::size_t dimension() const { return matrix_.rows(); }

    std::size_t rank() const { return matrix_.rank(); }
    std::vector<std::vector<FieldElement>> radical() const { return matrix_.kernel_basis(); }

    FieldElement evaluate(const std::vector<FieldElement>& y,
                          const std::vector<FieldElement>& z) const;

    AltForm operator+(const AltForm& rhs) const;
    AltForm operator-(const AltForm& rhs) const;
    AltForm scaled(const FieldElement& c) const;
    bool operator==(const AltForm& rhs) const;

private:
    ExactMatrix matrix_;
    SpaceTag tag_;
};

/// The form (y,z) -> <x y, z> on the full algebra; x must be pure.
AltForm form_on_C(const Octonion& x);

/// Its restriction to the pure part, via the pure-basis embedding.
AltForm form_on_C0(const Octonion& x);

/// Upper-triangle coordinates in lexicographic pair order; a linear
/// isomorphism between alternating forms and wedge coordinates.
std::vector<FieldElement> flatten_form(const AltForm& f);
AltForm unflatten_form(const std::vector<FieldElement>& coords, SpaceTag tag,
                       const FieldSpec& field);

struct RestrictionRankResult {
    std::size_t rank_full = 0;
    std::size_t rank_restricted = 0;
    bool radical_in_hyperplane = false;
    /// rank_restricted == rank_full - 2 when the radical lies inside the
    /// hyperplane, == rank_full otherwise.
    bool lemma_holds = false;
};

/// Rank of a form against its restriction to a hyperplane (given as n-1
/// independent spanning vectors; BadHyperplane otherwise).
RestrictionRankResult restriction_rank_check(
    const AltForm& form, const std::vector<std::vector<FieldElement>>& hyperplane_basis);

/// The seven forms attached to the pure basis. Their span is
/// seven-dimensional for every algebra built here; a rank defect would mean
/// a broken multiplication table and raises DegenerateFamily.
class FormFamily {
public:
    static FormFamily build(std::shared_ptr<const OctonionAlgebra> algebra, SpaceTag tag);

    const std::shared_ptr<const OctonionAlgebra>& algebra() const { return algebra_; }
    SpaceTag space() const { return tag_; }
    const std::vector<AltForm>& generators() const { return generators_; }

    /// Generators flattened row by row (7 x 21 or 7 x 28, rank 7).
    const ExactMatrix& flattened() const { return flattened_; }
    std::size_t dimension() const { return generators_.size(); }

    /// Sum of coeff[i] * generator[i].
    AltForm combination(const std::vector<FieldElement>& coeffs) const;

    /// Exact span membership.
    bool contains(const AltForm& f) const;

private:
    FormFamily(std::shared_ptr<const OctonionAlgebra> algebra, SpaceTag tag,
               std::vector<AltForm> generators, ExactMatrix flattened)
        : algebra_(std::move(algebra)),
          tag_(tag),
          generators_(std::move(generators)),
          flattened_(std::move(flattened)) {}

    std::shared_ptr<const OctonionAlgebra> algebra_;
    SpaceTag tag_;
    std::vector<AltForm> generators_;
    ExactMatrix flattened_;
};

/// Exhaustive rank census of the family's span over a small prime field.
/// One-dimensional subspaces are enumerated once (first nonzero coefficient
/// normalized to 1); element-level tallies follow by scaling, since both
/// the rank and the square class of N are invariant on a punctured line.
struct CensusResult {
    std::int64_t prime = 0;
    SpaceTag space = SpaceTag::OnC0;
    std::int64_t projective_points = 0;
    std::int64_t affine_nonzero = 0;
    std::map<std::size_t, std::int64_t> rank_counts_projective;
    std::map<std::size_t, std::int64_t> rank_counts_affine;
    /// Projective points with N(x) = 0.
    std::int64_t rank_isotropic_projective = 0;
    /// Square-class split of N(x) over the anisotropic (full-rank) points.
    std::int64_t square_class_square_projective = 0;
    std::int64_t square_class_nonsquare_projective = 0;
    /// Pointwise check: the low rank (4) occurs exactly when N(x) = 0.
    bool low_rank_iff_isotropic = true;
    /// Independent oracle: nonzero isotropic pure vectors counted by a
    /// plain norm loop over all affine coefficient vectors.
    std::int64_t independent_isotropic_affine = 0;
    bool isotropic_count_matches = true;
};

CensusResult rank_census(const FormFamily& family);

}  // namespace octorank
