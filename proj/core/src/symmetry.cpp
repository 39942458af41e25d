#include "octorank/symmetry.hpp"

#include <utility>

namespace octorank {
namespace {

std::vector<FieldElement> column_of(const ExactMatrix& m, std::size_t j) { return m.column(j); }

Octonion octonion_from(const std::shared_ptr<const OctonionAlgebra>& algebra,
                       const std::vector<FieldElement>& coords) {
    return algebra->element(coords);
}

}  // namespace

AlgebraMap::AlgebraMap(std::shared_ptr<const OctonionAlgebra> algebra, ExactMatrix full,
                       MapKind kind)
    : algebra_(std::move(algebra)),
      on_algebra_(std::move(full)),
      on_pure_(7, 7, algebra_->field()),
      kind_(kind) {
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) on_pure_.at(i, j) = on_algebra_.at(i + 1, j + 1);
}

AlgebraMap AlgebraMap::automorphism(std::shared_ptr<const OctonionAlgebra> algebra,
                                    ExactMatrix matrix) {
    if (!is_automorphism(*algebra, matrix)) {
        throw NotAutomorphism("matrix fails the automorphism checks");
    }
    // sigma fixes e and preserves its orthogonal complement, so the matrix
    // is block compatible with the e + pure split; anything else means the
    // checks above are broken.
    for (std::size_t k = 1; k < 8; ++k) {
        if (!matrix.at(0, k).is_zero() || !matrix.at(k, 0).is_zero()) {
            throw NotAutomorphism("automorphism does not respect the pure split");
        }
    }
    return AlgebraMap(std::move(algebra), std::move(matrix), MapKind::Automorphism);
}

AlgebraMap AlgebraMap::derivation(std::shared_ptr<const OctonionAlgebra> algebra,
                                  ExactMatrix matrix) {
    if (matrix.rows() != 8 || matrix.cols() != 8) throw NotDerivation("derivation must be 8x8");
    for (std::size_t k = 0; k < 8; ++k) {
        if (!matrix.at(k, 0).is_zero()) throw NotDerivation("derivation does not kill e");
    }
    // Leibniz on all basis pairs.
    for (std::size_t i = 0; i < 8; ++i) {
        const Octonion bi = algebra->basis_element(i);
        const Octonion dbi = octonion_from(algebra, column_of(matrix, i));
        for (std::size_t j = 0; j < 8; ++j) {
            const Octonion bj = algebra->basis_element(j);
            const Octonion dbj = octonion_from(algebra, column_of(matrix, j));
            const Octonion lhs = octonion_from(
                algebra, matrix.apply({algebra->basis_product(i, j).begin(),
                                       algebra->basis_product(i, j).end()}));
            if (!(lhs == dbi * bj + bi * dbj)) {
                throw NotDerivation("Leibniz rule fails on a basis pair");
            }
        }
    }
    // Skew with respect to the polarization.
    const ExactMatrix& g = algebra->norm_gram();
    const ExactMatrix skew = matrix.transposed() * g + g * matrix;
    if (!skew.is_zero()) throw NotDerivation("derivation is not skew for the polarization");
    return AlgebraMap(std::move(algebra), std::move(matrix), MapKind::Derivation);
}

Octonion AlgebraMap::apply(const Octonion& x) const {
    if (x.algebra() != algebra_) throw AlgebraMismatch("octonion from a different algebra");
    return algebra_->element(on_algebra_.apply({x.coords().begin(), x.coords().end()}));
}

bool is_automorphism(const OctonionAlgebra& algebra, const ExactMatrix& m) {
    if (m.rows() != 8 || m.cols() != 8) return false;
    const FieldSpec& field = algebra.field();
    // Fixes e.
    for (std::size_t k = 0; k < 8; ++k) {
        const FieldElement expected = k == 0 ? field.one() : field.zero();
        if (!(m.at(k, 0) == expected)) return false;
    }
    if (m.rank() != 8) return false;
    // Multiplicative on the 64 basis pairs.
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            const auto& prod = algebra.basis_product(i, j);
            const auto lhs = m.apply({prod.begin(), prod.end()});
            const Octonion rhs = algebra.element(m.column(i)) * algebra.element(m.column(j));
            for (std::size_t k = 0; k < 8; ++k) {
                if (!(lhs[k] == rhs.coord(k))) return false;
            }
        }
    }
    return true;
}

AlgebraMap sl3_automorphism(std::shared_ptr<const OctonionAlgebra> algebra,
                            const ExactMatrix& a) {
    if (algebra->descriptor().construction != Construction::SplitZorn) {
        throw RequiresSplitZorn("SL3 embedding acts on the split Zorn algebra");
    }
    if (a.rows() != 3 || a.cols() != 3) throw NotUnimodular("expected a 3x3 matrix");
    const FieldSpec& field = algebra->field();
    if (!(a.determinant() == field.one())) throw NotUnimodular("determinant must be 1");

    const ExactMatrix at_inv = a.transposed().inverted();
    ExactMatrix natural(8, 8, field);
    natural.at(0, 0) = field.one();
    natural.at(7, 7) = field.one();
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            natural.at(1 + i, 1 + j) = a.at(i, j);
            natural.at(4 + i, 4 + j) = at_inv.at(i, j);
        }
    }
    const ExactMatrix stored =
        algebra->from_natural() * natural * algebra->to_natural();
    return AlgebraMap::automorphism(std::move(algebra), stored);
}

ExactMatrix random_unimodular3(const FieldSpec& field, Rng& rng) {
    ExactMatrix m = ExactMatrix::identity(3, field);
    for (int step = 0; step < 9; ++step) {
        const auto i = static_cast<std::size_t>(rng.uniform(0, 2));
        std::size_t j = static_cast<std::size_t>(rng.uniform(0, 1));
        if (j >= i) ++j;
        const FieldElement c = field.random_element(rng);
        for (std::size_t k = 0; k < 3; ++k) m.at(i, k) += c * m.at(j, k);
    }
    return m;
}

AlgebraMap basis_shift_automorphism(std::shared_ptr<const OctonionAlgebra> algebra) {
    const FieldSpec& field = algebra->field();
    ExactMatrix m(8, 8, field);
    m.at(0, 0) = field.one();
    for (std::size_t i = 1; i <= 7; ++i) m.at(i % 7 + 1, i) = field.one();
    return AlgebraMap::automorphism(std::move(algebra), std::move(m));
}

AlgebraMap derivation_from_pair(const Octonion& a, const Octonion& b) {
    if (a.algebra() != b.algebra()) throw AlgebraMismatch("octonions from different algebras");
    const auto& algebra = a.algebra();
    const ExactMatrix la = algebra->left_mult_matrix(a);
    const ExactMatrix lb = algebra->left_mult_matrix(b);
    const ExactMatrix ra = algebra->right_mult_matrix(a);
    const ExactMatrix rb = algebra->right_mult_matrix(b);
    auto commutator = [](const ExactMatrix& x, const ExactMatrix& y) { return x * y - y * x; };
    const ExactMatrix d = commutator(la, lb) + commutator(la, rb) + commutator(ra, rb);
    return AlgebraMap::derivation(algebra, d);
}

std::vector<AlgebraMap> sample_automorphisms(std::shared_ptr<const OctonionAlgebra> algebra,
                                             std::size_t count, Rng& rng) {
    std::vector<AlgebraMap> maps;
    switch (algebra->descriptor().construction) {
        case Construction::SplitZorn:
            for (std::size_t k = 0; k < count; ++k) {
                maps.push_back(sl3_automorphism(algebra, random_unimodular3(algebra->field(), rng)));
            }
            break;
        case Construction::DivisionFano: {
            const AlgebraMap shift = basis_shift_automorphism(algebra);
            ExactMatrix power = shift.on_algebra();
            for (std::size_t k = 0; k < count && k < 6; ++k) {
                maps.push_back(AlgebraMap::automorphism(algebra, power));
                power = power * shift.on_algebra();
            }
            break;
        }
        case Construction::CayleyDickson:
            break;  // no generic witness family wired up
    }
    return maps;
}

AltForm act_on_form(const AlgebraMap& map, const AltForm& f) {
    if (map.kind() != MapKind::Automorphism) {
        throw NotInvertible("forms transform along automorphisms only");
    }
    const ExactMatrix& s = f.space() == SpaceTag::OnC ? map.on_algebra() : map.on_pure();
    const ExactMatrix s_inv = s.inverted();
    return AltForm(s_inv.transposed() * f.matrix() * s_inv, f.space());
}

Bivector act_on_bivector(const AlgebraMap& map, const Bivector& z) {
    const ExactMatrix& s =
        z.ambient() == BivectorAmbient::Lambda2C ? map.on_algebra() : map.on_pure();
    const auto& pairs = wedge_pairs(z.ambient());
    std::vector<FieldElement> out(z.coords().size(), z.field().zero());
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        const auto [k, l] = pairs[t];
        if (z.coords()[t].is_zero()) continue;
        for (std::size_t u = 0; u < pairs.size(); ++u) {
            const auto [i, j] = pairs[u];
            const FieldElement coeff = s.at(i, k) * s.at(j, l) - s.at(i, l) * s.at(j, k);
            if (!coeff.is_zero()) out[u] += coeff * z.coords()[t];
        }
    }
    return Bivector(z.ambient(), std::move(out));
}

InvarianceReport invariance_audit(const FormFamily& family, const std::vector<AlgebraMap>& maps,
                                  Rng& rng, std::size_t triples_per_derivation) {
    const auto& algebra = family.algebra();
    const FormFamily family_pure =
        family.space() == SpaceTag::OnC0 ? family : FormFamily::build(algebra, SpaceTag::OnC0);
    const FormFamily family_full = FormFamily::build(algebra, SpaceTag::OnC);
    const FormEvaluationMap eval_map = FormEvaluationMap::build(family_pure);
    const ExactMatrix& gram = algebra->norm_gram();

    InvarianceReport report;
    for (const AlgebraMap& map : maps) {
        if (map.kind() == MapKind::Automorphism) {
            ++report.automorphisms;
            const ExactMatrix& s = map.on_algebra();
            if (!(s.transposed() * gram * s == gram)) ++report.isometry_failures;

            for (std::size_t i = 1; i <= 7; ++i) {
                const Octonion image = map.apply(algebra->basis_element(i));
                const AltForm acted_pure = act_on_form(map, family_pure.generators()[i - 1]);
                if (!(acted_pure == form_on_C0(image))) ++report.equivariance_failures;
                if (!family_pure.contains(acted_pure)) ++report.pure_span_failures;
                const AltForm acted_full = act_on_form(map, family_full.generators()[i - 1]);
                if (!(acted_full == form_on_C(image))) ++report.equivariance_failures;
                if (!family_full.contains(acted_full)) ++report.full_span_failures;
            }
            // A couple of random pure arguments besides the basis.
            for (int extra = 0; extra < 3; ++extra) {
                const Octonion x = algebra->random_pure_nonzero(rng);
                if (!(act_on_form(map, form_on_C0(x)) == form_on_C0(map.apply(x)))) {
                    ++report.equivariance_failures;
                }
            }
            for (const Bivector& z : eval_map.kernel()) {
                const Bivector image = act_on_bivector(map, z);
                for (const FieldElement& v : eval_map.apply(image)) {
                    if (!v.is_zero()) {
                        ++report.kernel_invariance_failures;
                        break;
                    }
                }
            }
        } else {
            ++report.derivations;
            for (std::size_t t = 0; t < triples_per_derivation; ++t) {
                ++report.derivation_triples;
                const Octonion x = algebra->random_pure_nonzero(rng);
                const Octonion y = algebra->random_element(rng);
                const Octonion z = algebra->random_element(rng);
                const Octonion dx = map.apply(x);
                const Octonion dy = map.apply(y);
                const Octonion dz = map.apply(z);
                const FieldElement total = algebra->polarize(dx * y, z) +
                                           algebra->polarize(x * dy, z) +
                                           algebra->polarize(x * y, dz);
                if (!total.is_zero()) ++report.derivation_identity_failures;
            }
        }
    }
    return report;
}

}  // namespace octorank
