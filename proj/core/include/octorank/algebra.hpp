#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "octorank/matrix.hpp"

namespace octorank {

class OctonionAlgebra;

/// Which multiplication table an algebra is built from.
enum class Construction { SplitZorn, DivisionFano, CayleyDickson };

/// Parsed algebra descriptor: "split-zorn", "division-fano", or
/// "cayley-dickson:<g1>,<g2>,<g3>" with field-element literals.
struct AlgebraDescriptor {
    Construction construction;
    std::vector<FieldElement> parameters;  // three doubling scalars for CayleyDickson

    static AlgebraDescriptor split_zorn() { return {Construction::SplitZorn, {}}; }
    static AlgebraDescriptor division_fano() { return {Construction::DivisionFano, {}}; }
    static AlgebraDescriptor cayley_dickson(FieldElement g1, FieldElement g2, FieldElement g3);
    static AlgebraDescriptor parse(std::string_view text, const FieldSpec& field);

    std::string to_string() const;
};

/// Element of an octonion algebra, as eight coordinates in the algebra's
/// stored basis (basis 0 is the identity, bases 1..7 span the pure part).
class Octonion {
public:
    const std::array<FieldElement, 8>& coords() const { return coords_; }
    const FieldElement& coord(std::size_t i) const { return coords_[i]; }
    const std::shared_ptr<const OctonionAlgebra>& algebra() const { return algebra_; }

    bool is_zero() const;
    bool is_pure() const;

    Octonion operator+(const Octonion& rhs) const;
    Octonion operator-(const Octonion& rhs) const;
    Octonion operator-() const;
    Octonion operator*(const Octonion& rhs) const;  // algebra product
    Octonion scaled(const FieldElement& c) const;
    bool operator==(const Octonion& rhs) const;

    Octonion conjugate() const;
    /// x^{-1} = conj(x)/N(x); NotInvertible when N(x) = 0.
    Octonion inverse() const;
    FieldElement norm() const;

    /// Orthogonal projection onto the pure part: x - (<x,e>/2) e.
    Octonion pure_part() const;
    /// The seven pure coordinates (valid for any element after pure_part).
    std::vector<FieldElement> pure_coords() const;

private:
    friend class OctonionAlgebra;
    Octonion(std::shared_ptr<const OctonionAlgebra> algebra, std::array<FieldElement, 8> coords)
        : algebra_(std::move(algebra)), coords_(std::move(coords)) {}

    void require_same_algebra(const Octonion& rhs) const;

    std::shared_ptr<const OctonionAlgebra> algebra_;
    std::array<FieldElement, 8> coords_;
};

/// Basis of the pure part together with the 8x7 embedding into the full
/// algebra and the 7x8 coordinate projection (mutually inverse on the
/// pure subspace).
struct PureBasis {
    std::vector<Octonion> vectors;  // seven pure basis octonions
    ExactMatrix embedding;          // 8x7
    ExactMatrix projection;         // 7x8
};

/// Dimensions of the image/kernel of left multiplication and of their
/// intersections with the pure part.
struct KernelImageProfile {
    std::size_t dim_image = 0;
    std::size_t dim_kernel = 0;
    std::size_t dim_image_meet_pure = 0;
    std::size_t dim_kernel_meet_pure = 0;
    bool image_totally_isotropic = false;
    bool kernel_totally_isotropic = false;

    bool operator==(const KernelImageProfile&) const = default;
};

/// An octonion algebra over an exact field: an 8-dimensional unital
/// algebra whose norm form is multiplicative. Stored immutably; basis 0 is
/// always the identity and bases 1..7 are pure (Zorn coordinates are
/// rebased at construction so every table shares this layout).
///
/// Construction validates the defining identities exactly: N(e) = 1,
/// nondegeneracy of the polarization, multiplicativity of N on all basis
/// pairs and on random pairs, the conjugation anti-involution, and
/// x conj(x) = N(x) e. A table failing any of these is rejected.
class OctonionAlgebra : public std::enable_shared_from_this<OctonionAlgebra> {
public:
    static std::shared_ptr<const OctonionAlgebra> build(const FieldSpec& field,
                                                        const AlgebraDescriptor& descriptor);

    const FieldSpec& field() const { return field_; }
    const AlgebraDescriptor& descriptor() const { return descriptor_; }
    std::string spec_string() const { return descriptor_.to_string(); }

    Octonion identity() const;
    Octonion basis_element(std::size_t i) const;
    Octonion zero() const;
    Octonion element(const std::vector<FieldElement>& coords) const;

    /// Element from construction-native coordinates; for split-zorn this is
    /// the Zorn layout (alpha, v1, v2, v3, w1, w2, w3, beta), for the other
    /// constructions the stored basis itself.
    Octonion element_from_natural(const std::vector<FieldElement>& coords) const;

    Octonion random_element(Rng& rng) const;
    Octonion random_nonzero(Rng& rng) const;
    Octonion random_pure_nonzero(Rng& rng) const;

    /// Product of basis elements i and j, as stored coordinates.
    const std::array<FieldElement, 8>& basis_product(std::size_t i, std::size_t j) const {
        return table_[i][j];
    }

    /// Gram matrix of the polarization <x,y> = N(x+y) - N(x) - N(y).
    const ExactMatrix& norm_gram() const { return gram_; }
    /// Gram matrix restricted to the pure part (7x7).
    const ExactMatrix& pure_gram() const { return pure_gram_; }

    FieldElement norm(const Octonion& x) const;
    FieldElement polarize(const Octonion& x, const Octonion& y) const;

    const PureBasis& pure_basis() const { return *pure_basis_; }

    /// Matrix of y -> x y in the stored basis.
    ExactMatrix left_mult_matrix(const Octonion& x) const;
    /// Matrix of y -> y x in the stored basis.
    ExactMatrix right_mult_matrix(const Octonion& x) const;

    /// Kernel/image dimensions of left multiplication by x, with the pure
    /// intersections; ZeroOctonion when x = 0. For invertible x this is
    /// (8, 0, 7, 0); for nonzero non-invertible x the octonion identities
    /// force (4, 4, 3, 3) with totally isotropic image and kernel.
    KernelImageProfile kernel_image_profile(const Octonion& x) const;

    /// True when the norm is proven anisotropic (every nonzero element
    /// invertible). Over Q this is decided exactly by definiteness of the
    /// Gram matrix: an indefinite form in eight variables over Q is always
    /// isotropic (Meyer's theorem), so definiteness is the whole story.
    /// Finite fields never yield division algebras.
    bool is_division() const { return is_division_; }

    /// A nonzero element of norm zero, when one is known.
    std::optional<Octonion> isotropic_witness() const;

    /// Change of basis: stored coordinates -> construction-native
    /// coordinates (identity except for split-zorn).
    const ExactMatrix& to_natural() const { return to_natural_; }
    const ExactMatrix& from_natural() const { return from_natural_; }

    /// Copy with one structure constant shifted: table[i][j] += delta * b_k.
    /// Skips validation. Test fixture for negative controls; a mutated
    /// table must make the composition-law and census checks fail.
    std::shared_ptr<const OctonionAlgebra> with_tampered_product(std::size_t i, std::size_t j,
                                                                 std::size_t k,
                                                                 const FieldElement& delta) const;

private:
    friend class Octonion;

    OctonionAlgebra(FieldSpec field, AlgebraDescriptor descriptor);

    using Table = std::array<std::array<std::array<FieldElement, 8>, 8>, 8>;

    void validate() const;
    void finalize();
    void find_isotropic_witness();
    std::array<FieldElement, 8> raw_multiply(const std::array<FieldElement, 8>& x,
                                             const std::array<FieldElement, 8>& y) const;

    FieldSpec field_;
    AlgebraDescriptor descriptor_;
    Table table_;
    ExactMatrix gram_;       // 8x8 polarization Gram on the stored basis
    ExactMatrix pure_gram_;  // 7x7 restriction
    ExactMatrix to_natural_;
    ExactMatrix from_natural_;
    std::optional<PureBasis> pure_basis_;
    bool is_division_ = false;
    std::optional<std::array<FieldElement, 8>> witness_coords_;
};

}  // namespace octorank
