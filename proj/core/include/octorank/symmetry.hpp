#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "octorank/exterior.hpp"

namespace octorank {

enum class MapKind { Automorphism, Derivation };

/// Validated linear symmetry of an algebra: either an automorphism
/// (multiplicative, invertible, fixes the identity) or a derivation
/// (Leibniz rule, kills the identity, skew for the polarization). Both map
/// the pure part into itself, so a 7x7 restriction is always available.
class AlgebraMap {
public:
    /// Validates multiplicativity on all 64 basis pairs, sigma(e) = e and
    /// invertibility; NotAutomorphism otherwise.
    static AlgebraMap automorphism(std::shared_ptr<const OctonionAlgebra> algebra,
                                   ExactMatrix matrix);

    /// Validates D(e) = 0, the Leibniz rule on all 64 basis pairs and
    /// skewness D^T G + G D = 0; NotDerivation otherwise.
    static AlgebraMap derivation(std::shared_ptr<const OctonionAlgebra> algebra,
                                 ExactMatrix matrix);

    MapKind kind() const { return kind_; }
    const std::shared_ptr<const OctonionAlgebra>& algebra() const { return algebra_; }
    const ExactMatrix& on_algebra() const { return on_algebra_; }
    const ExactMatrix& on_pure() const { return on_pure_; }

    Octonion apply(const Octonion& x) const;

private:
    AlgebraMap(std::shared_ptr<const OctonionAlgebra> algebra, ExactMatrix full, MapKind kind);

    std::shared_ptr<const OctonionAlgebra> algebra_;
    ExactMatrix on_algebra_;  // 8x8
    ExactMatrix on_pure_;     // 7x7
    MapKind kind_;
};

/// Exact verdict: multiplicative on all 64 basis pairs, fixes the identity,
/// invertible.
bool is_automorphism(const OctonionAlgebra& algebra, const ExactMatrix& m);

/// The Zorn-coordinate map (alpha, v, w, beta) -> (alpha, Av, (A^T)^-1 w, beta)
/// for det-1 A; an automorphism of the split algebra. RequiresSplitZorn /
/// NotUnimodular on bad input.
AlgebraMap sl3_automorphism(std::shared_ptr<const OctonionAlgebra> algebra,
                            const ExactMatrix& a);

/// Random det-1 3x3 matrix, built as a product of elementary shears.
ExactMatrix random_unimodular3(const FieldSpec& field, Rng& rng);

/// The cyclic relabeling b_i -> b_{i+1 mod 7} of the pure basis (identity
/// fixed), validated as an automorphism; the Fano line convention used here
/// is shift-invariant, so the division table admits it.
AlgebraMap basis_shift_automorphism(std::shared_ptr<const OctonionAlgebra> algebra);

/// Standard derivation attached to a pair of elements:
/// [L_a, L_b] + [L_a, R_b] + [R_a, R_b]. Zero when a = b or either is the
/// identity; validated before being returned.
AlgebraMap derivation_from_pair(const Octonion& a, const Octonion& b);

/// Witness automorphisms for audits: random SL3 maps on the split Zorn
/// algebra, powers of the basis shift on the Fano table, empty otherwise.
std::vector<AlgebraMap> sample_automorphisms(std::shared_ptr<const OctonionAlgebra> algebra,
                                             std::size_t count, Rng& rng);

/// sigma(f)(x, y) = f(sigma^-1 x, sigma^-1 y): matrix S^-T M S^-1 on the
/// matching space. NotInvertible for derivations.
AltForm act_on_form(const AlgebraMap& map, const AltForm& f);

/// Induced action on the exterior square: x wedge y -> sigma(x) wedge sigma(y).
Bivector act_on_bivector(const AlgebraMap& map, const Bivector& z);

struct InvarianceReport {
    std::size_t automorphisms = 0;
    std::size_t derivations = 0;
    std::size_t equivariance_failures = 0;        // sigma(f_x) != f_{sigma(x)}
    std::size_t pure_span_failures = 0;           // image leaves the 7-dim family on C_0
    std::size_t full_span_failures = 0;           // image leaves the 7-dim family on C
    std::size_t kernel_invariance_failures = 0;   // wedge action leaves ker of the eval map
    std::size_t isometry_failures = 0;            // S^T G S != G
    std::size_t derivation_triples = 0;
    std::size_t derivation_identity_failures = 0;
    bool all_passed() const {
        return equivariance_failures == 0 && pure_span_failures == 0 && full_span_failures == 0 &&
               kernel_invariance_failures == 0 && isometry_failures == 0 &&
               derivation_identity_failures == 0;
    }
};

/// Invariance laws for a batch of validated maps:
///  automorphisms: sigma(f_{b_i}) = f_{sigma(b_i)} exactly, images stay in
///  the 7-dim families on C_0 and C, the wedge action preserves the kernel
///  of the evaluation map, and S^T G S = G;
///  derivations: F_{Dx}(y,z) + F_x(Dy,z) + F_x(y,Dz) = 0 on random triples.
InvarianceReport invariance_audit(const FormFamily& family,
                                  const std::vector<AlgebraMap>& maps, Rng& rng,
                                  std::size_t triples_per_derivation);

}  // namespace octorank
