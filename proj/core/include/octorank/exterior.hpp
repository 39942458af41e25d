#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "octorank/forms.hpp"

namespace octorank {

/// Exterior square the bivector lives in: pure part (21 wedge coordinates)
/// or full algebra (28).
enum class BivectorAmbient { Lambda2C0, Lambda2C };

std::size_t ambient_vector_dimension(BivectorAmbient a);
std::size_t wedge_coordinate_count(BivectorAmbient a);
BivectorAmbient ambient_of(SpaceTag tag);
SpaceTag space_of(BivectorAmbient a);

/// Wedge index pairs (i, j), i < j, in lexicographic order; fixed once and
/// used everywhere including JSON export.
const std::vector<std::pair<std::size_t, std::size_t>>& wedge_pairs(BivectorAmbient a);

/// Element of an exterior square in wedge-pair coordinates.
class Bivector {
public:
    Bivector(BivectorAmbient ambient, std::vector<FieldElement> coords);

    BivectorAmbient ambient() const { return ambient_; }
    const std::vector<FieldElement>& coords() const { return coords_; }
    FieldSpec field() const { return coords_.front().field(); }

    bool is_zero() const;
    Bivector operator+(const Bivector& rhs) const;
    Bivector operator-(const Bivector& rhs) const;
    Bivector scaled(const FieldElement& c) const;
    bool operator==(const Bivector& rhs) const;

private:
    BivectorAmbient ambient_;
    std::vector<FieldElement> coords_;
};

/// x wedge y for coordinate vectors of the ambient space:
/// coordinate (i,j) is x_i y_j - x_j y_i.
Bivector wedge(const std::vector<FieldElement>& x, const std::vector<FieldElement>& y,
               BivectorAmbient ambient);

/// The induced linear functional of f on the exterior square, evaluated at
/// z; on decomposables this is f applied to the pair. AmbientMismatch when
/// f and z do not live over the same space.
FieldElement form_star(const AltForm& f, const Bivector& z);

/// Skew matrix with (i,j) entry equal to the wedge coordinate of z; its
/// rank is twice the dimension of the subspace supporting z, so rank 2
/// detects exactly the nonzero decomposables.
ExactMatrix skew_matrix_of(const Bivector& z);

bool is_decomposable(const Bivector& z);

/// Evaluation map of the seven basis forms on the exterior square: row i
/// holds the flattened form of basis element i. Surjective (rank 7) with
/// kernel of dimension 14 (pure ambient) or 21 (full ambient).
class FormEvaluationMap {
public:
    static FormEvaluationMap build(const FormFamily& family);

    const std::shared_ptr<const OctonionAlgebra>& algebra() const { return algebra_; }
    BivectorAmbient ambient() const { return ambient_; }
    const ExactMatrix& matrix() const { return matrix_; }
    const std::vector<Bivector>& kernel() const { return kernel_; }

    /// The seven form values on z.
    std::vector<FieldElement> apply(const Bivector& z) const;

    /// Random element of the kernel span; never zero.
    Bivector random_kernel_element(Rng& rng) const;

private:
    FormEvaluationMap(std::shared_ptr<const OctonionAlgebra> algebra, BivectorAmbient ambient,
                      ExactMatrix matrix, std::vector<Bivector> kernel)
        : algebra_(std::move(algebra)),
          ambient_(ambient),
          matrix_(std::move(matrix)),
          kernel_(std::move(kernel)) {}

    std::shared_ptr<const OctonionAlgebra> algebra_;
    BivectorAmbient ambient_;
    ExactMatrix matrix_;
    std::vector<Bivector> kernel_;
};

/// Transport of a bivector to an alternating form on the same space via
/// the norm pairing (matrix G A G for the skew coordinate matrix A);
/// mutually inverse with bivector_from_altform.
AltForm altform_from_bivector(const OctonionAlgebra& algebra, const Bivector& z);
Bivector bivector_from_altform(const OctonionAlgebra& algebra, const AltForm& f);

struct ScalarMultipleResult {
    bool all_forms_vanish = false;
    /// A pure basis element x with <x y, z> != 0, when one exists.
    std::optional<Octonion> witness;
};

/// Tests whether every basis form vanishes on (y, z); in a division algebra
/// this happens exactly when y and z are proportional. The test reduces to
/// pure_part(y conj(z)) = 0. Requires nonzero pure inputs and a proven
/// division algebra.
ScalarMultipleResult scalar_multiple_witness(const Octonion& y, const Octonion& z);

struct KernelAuditReport {
    std::size_t kernel_samples = 0;
    std::size_t decomposable_found = 0;
    std::map<std::size_t, std::int64_t> transported_ranks;  // rank histogram of G A G forms
    std::size_t structural_samples = 0;
    std::size_t structural_failures = 0;

    bool all_passed() const {
        return decomposable_found == 0 && structural_failures == 0 &&
               transported_ranks.count(2) == 0;
    }
};

/// Two certificates that the kernel holds no nonzero decomposable element
/// (division algebras only):
///  (a) sampled: random kernel elements are never decomposable, and their
///      transported forms never have rank 2;
///  (b) structural: for random pure y != 0, the map z -> pure_part(y conj(z))
///      on the pure part has rank 6 with kernel exactly the line through y,
///      which is the linear-algebra content forcing (a) for every element.
KernelAuditReport kernel_decomposable_audit(const FormEvaluationMap& eval_map, Rng& rng,
                                            std::size_t kernel_samples,
                                            std::size_t structural_samples);

}  // namespace octorank
