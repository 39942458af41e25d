#include "octorank/exterior.hpp"

#include <utility>

namespace octorank {

std::size_t ambient_vector_dimension(BivectorAmbient a) {
    return a == BivectorAmbient::Lambda2C ? 8 : 7;
}

std::size_t wedge_coordinate_count(BivectorAmbient a) {
    const std::size_t n = ambient_vector_dimension(a);
    return n * (n - 1) / 2;
}

BivectorAmbient ambient_of(SpaceTag tag) {
    return tag == SpaceTag::OnC ? BivectorAmbient::Lambda2C : BivectorAmbient::Lambda2C0;
}

SpaceTag space_of(BivectorAmbient a) {
    return a == BivectorAmbient::Lambda2C ? SpaceTag::OnC : SpaceTag::OnC0;
}

const std::vector<std::pair<std::size_t, std::size_t>>& wedge_pairs(BivectorAmbient a) {
    static const auto make = [](std::size_t n) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        return pairs;
    };
    static const auto pairs7 = make(7);
    static const auto pairs8 = make(8);
    return a == BivectorAmbient::Lambda2C ? pairs8 : pairs7;
}

Bivector::Bivector(BivectorAmbient ambient, std::vector<FieldElement> coords)
    : ambient_(ambient), coords_(std::move(coords)) {
    if (coords_.size() != wedge_coordinate_count(ambient_)) {
        throw AmbientMismatch("bivector coordinate count does not match its ambient space");
    }
}

bool Bivector::is_zero() const {
    for (const FieldElement& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

Bivector Bivector::operator+(const Bivector& rhs) const {
    if (ambient_ != rhs.ambient_) throw AmbientMismatch("bivector ambient mismatch in +");
    std::vector<FieldElement> out = coords_;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += rhs.coords_[k];
    return Bivector(ambient_, std::move(out));
}

Bivector Bivector::operator-(const Bivector& rhs) const {
    if (ambient_ != rhs.ambient_) throw AmbientMismatch("bivector ambient mismatch in -");
    std::vector<FieldElement> out = coords_;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= rhs.coords_[k];
    return Bivector(ambient_, std::move(out));
}

Bivector Bivector::scaled(const FieldElement& c) const {
    std::vector<FieldElement> out = coords_;
    for (FieldElement& e : out) e *= c;
    return Bivector(ambient_, std::move(out));
}

bool Bivector::operator==(const Bivector& rhs) const {
    if (ambient_ != rhs.ambient_) return false;
    for (std::size_t k = 0; k < coords_.size(); ++k)
        if (!(coords_[k] == rhs.coords_[k])) return false;
    return true;
}

Bivector wedge(const std::vector<FieldElement>& x, const std::vector<FieldElement>& y,
               BivectorAmbient ambient) {
    const std::size_t n = ambient_vector_dimension(ambient);
    if (x.size() != n || y.size() != n) {
        throw AmbientMismatch("wedge arguments do not match the ambient dimension");
    }
    std::vector<FieldElement> coords;
    coords.reserve(wedge_coordinate_count(ambient));
    for (const auto& [i, j] : wedge_pairs(ambient)) coords.push_back(x[i] * y[j] - x[j] * y[i]);
    return Bivector(ambient, std::move(coords));
}

FieldElement form_star(const AltForm& f, const Bivector& z) {
    if (space_of(z.ambient()) != f.space()) {
        throw AmbientMismatch("form and bivector live over different spaces");
    }
    const auto flat = flatten_form(f);
    FieldElement acc = f.matrix().field().zero();
    for (std::size_t k = 0; k < flat.size(); ++k) {
        if (!flat[k].is_zero() && !z.coords()[k].is_zero()) acc += flat[k] * z.coords()[k];
    }
    return acc;
}

ExactMatrix skew_matrix_of(const Bivector& z) {
    const std::size_t n = ambient_vector_dimension(z.ambient());
    ExactMatrix m(n, n, z.field());
    std::size_t k = 0;
    for (const auto& [i, j] : wedge_pairs(z.ambient())) {
        m.at(i, j) = z.coords()[k];
        m.at(j, i) = -z.coords()[k];
        ++k;
    }
    return m;
}

bool is_decomposable(const Bivector& z) { return skew_matrix_of(z).rank() == 2; }

FormEvaluationMap FormEvaluationMap::build(const FormFamily& family) {
    const ExactMatrix& matrix = family.flattened();
    if (matrix.rank() != 7) {
        throw DegenerateFamily("evaluation map is not surjective; the family is degenerate");
    }
    const BivectorAmbient ambient = ambient_of(family.space());
    std::vector<Bivector> kernel;
    for (auto& v : matrix.kernel_basis()) kernel.push_back(Bivector(ambient, std::move(v)));
    return FormEvaluationMap(family.algebra(), ambient, matrix, std::move(kernel));
}

std::vector<FieldElement> FormEvaluationMap::apply(const Bivector& z) const {
    if (z.ambient() != ambient_) throw AmbientMismatch("bivector ambient mismatch in apply");
    return matrix_.apply(z.coords());
}

Bivector FormEvaluationMap::random_kernel_element(Rng& rng) const {
    const FieldSpec& field = algebra_->field();
    for (;;) {
        Bivector z(ambient_, std::vector<FieldElement>(wedge_coordinate_count(ambient_),
                                                       field.zero()));
        for (const Bivector& k : kernel_) z = z + k.scaled(field.random_element(rng));
        if (!z.is_zero()) return z;
    }
}

AltForm altform_from_bivector(const OctonionAlgebra& algebra, const Bivector& z) {
    const ExactMatrix& gram = z.ambient() == BivectorAmbient::Lambda2C ? algebra.norm_gram()
                                                                       : algebra.pure_gram();
    return AltForm(gram * skew_matrix_of(z) * gram, space_of(z.ambient()));
}

Bivector bivector_from_altform(const OctonionAlgebra& algebra, const AltForm& f) {
    const ExactMatrix& gram =
        f.space() == SpaceTag::OnC ? algebra.norm_gram() : algebra.pure_gram();
    const ExactMatrix inv = gram.inverted();
    const ExactMatrix a = inv * f.matrix() * inv;
    std::vector<FieldElement> coords;
    for (const auto& [i, j] : wedge_pairs(ambient_of(f.space()))) coords.push_back(a.at(i, j));
    return Bivector(ambient_of(f.space()), std::move(coords));
}

ScalarMultipleResult scalar_multiple_witness(const Octonion& y, const Octonion& z) {
    const auto& algebra = y.algebra();
    if (algebra != z.algebra()) throw AlgebraMismatch("octonions from different algebras");
    if (!algebra->is_division()) {
        throw RequiresDivisionAlgebra("scalar-multiple reduction needs an anisotropic norm");
    }
    if (y.is_zero() || z.is_zero()) throw ZeroOctonion("inputs must be nonzero");
    if (!y.is_pure() || !z.is_pure()) throw NotPure("inputs must be pure");

    ScalarMultipleResult result;
    result.all_forms_vanish = (y * z.conjugate()).pure_part().is_zero();
    if (!result.all_forms_vanish) {
        for (std::size_t i = 1; i <= 7; ++i) {
            const Octonion b = algebra->basis_element(i);
            if (!algebra->polarize(b * y, z).is_zero()) {
                result.witness = b;
                break;
            }
        }
    }
    return result;
}

KernelAuditReport kernel_decomposable_audit(const FormEvaluationMap& eval_map, Rng& rng,
                                            std::size_t kernel_samples,
                                            std::size_t structural_samples) {
    const auto& algebra = eval_map.algebra();
    if (!algebra->is_division()) {
        throw RequiresDivisionAlgebra("decomposable-freeness holds for division algebras only");
    }
    const FieldSpec& field = algebra->field();

    KernelAuditReport report;
    report.kernel_samples = kernel_samples;
    report.structural_samples = structural_samples;

    for (std::size_t s = 0; s < kernel_samples; ++s) {
        const Bivector z = eval_map.random_kernel_element(rng);
        if (is_decomposable(z)) ++report.decomposable_found;
        ++report.transported_ranks[altform_from_bivector(*algebra, z).rank()];
    }

    for (std::size_t s = 0; s < structural_samples; ++s) {
        const Octonion y = algebra->random_pure_nonzero(rng);
        // Columns of z -> pure_part(y conj(z)) on the pure basis.
        ExactMatrix m(7, 7, field);
        for (std::size_t j = 1; j <= 7; ++j) {
            const auto col = (y * algebra->basis_element(j).conjugate()).pure_part().pure_coords();
            for (std::size_t i = 0; i < 7; ++i) m.at(i, j - 1) = col[i];
        }
        const auto kernel = m.kernel_basis();
        bool good = m.rank() == 6 && kernel.size() == 1;
        if (good) {
            const ExactMatrix line = ExactMatrix::from_rows({kernel.front()}, field);
            good = in_row_span(line, y.pure_coords());
        }
        if (!good) ++report.structural_failures;
    }
    return report;
}

}  // namespace octorank
