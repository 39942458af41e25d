#include <map>

#include "doctest.h"
#include "octorank/forms.hpp"
#include "oracles.hpp"

using namespace octorank;

namespace {

std::shared_ptr<const OctonionAlgebra> fano_q() {
    return OctonionAlgebra::build(FieldSpec::rationals(), AlgebraDescriptor::division_fano());
}

std::shared_ptr<const OctonionAlgebra> zorn(std::int64_t p) {
    return OctonionAlgebra::build(FieldSpec::prime_field(p), AlgebraDescriptor::split_zorn());
}

// A pure isotropic element of the split algebra: natural v-unit.
Octonion pure_isotropic(const std::shared_ptr<const OctonionAlgebra>& alg) {
    std::vector<FieldElement> nat(8, alg->field().zero());
    nat[1] = alg->field().one();
    return alg->element_from_natural(nat);
}

std::vector<FieldElement> coords_of(const Octonion& x) {
    return {x.coords().begin(), x.coords().end()};
}

ExactMatrix random_skew(const FieldSpec& f, std::size_t n, Rng& rng) {
    ExactMatrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            m.at(i, j) = f.random_element(rng);
            m.at(j, i) = -m.at(i, j);
        }
    }
    return m;
}

}  // namespace

TEST_CASE("forms attached to pure octonions") {
    const auto alg = fano_q();
    CHECK(form_on_C(alg->zero()).matrix().is_zero());
    CHECK(form_on_C0(alg->zero()).matrix().is_zero());
    CHECK_THROWS_AS(form_on_C(alg->identity()), NotPure);

    // Division algebra: every nonzero pure x gives rank 8 on C, rank 6 on C_0.
    CHECK(form_on_C(alg->basis_element(1)).rank() == 8);
    CHECK(form_on_C0(alg->basis_element(1)).rank() == 6);

    const auto z3 = zorn(3);
    const Octonion iso = pure_isotropic(z3);
    REQUIRE(iso.is_pure());
    REQUIRE(iso.norm().is_zero());
    CHECK(form_on_C(iso).rank() == 4);
    CHECK(form_on_C0(iso).rank() == 4);
}

TEST_CASE("form identities on random inputs") {
    for (const auto& alg : {fano_q(), zorn(5)}) {
        Rng rng(41);
        for (int trial = 0; trial < 1000; ++trial) {
            const Octonion x = alg->random_pure_nonzero(rng);
            const AltForm fx = form_on_C(x);
            const Octonion y = alg->random_element(rng);
            const Octonion z = alg->random_element(rng);

            // F_x(y,y) = 0 (alternating)
            CHECK(fx.evaluate(coords_of(y), coords_of(y)).is_zero());
            // F_x(y,z) = <x y, z>
            CHECK(fx.evaluate(coords_of(y), coords_of(z)) == alg->polarize(x * y, z));
            // F_x(y,z) = -<x, y conj(z)>
            CHECK(fx.evaluate(coords_of(y), coords_of(z)) ==
                  -alg->polarize(x, y * z.conjugate()));
        }
    }
}

TEST_CASE("the radical of F_x is the kernel of left multiplication") {
    const auto z5 = zorn(5);
    Rng rng(43);
    int degenerate_seen = 0;
    for (int trial = 0; trial < 200 && degenerate_seen < 20; ++trial) {
        const Octonion x = z5->random_pure_nonzero(rng);
        if (!x.norm().is_zero()) continue;
        ++degenerate_seen;
        const auto radical = form_on_C(x).radical();
        const auto kernel = z5->left_mult_matrix(x).kernel_basis();
        REQUIRE(radical.size() == kernel.size());
        const ExactMatrix rad_rows = ExactMatrix::from_rows(radical, z5->field());
        const ExactMatrix ker_rows = ExactMatrix::from_rows(kernel, z5->field());
        CHECK(stacked_rank(rad_rows, kernel) == rad_rows.rank());
        CHECK(stacked_rank(ker_rows, radical) == ker_rows.rank());
    }
    CHECK(degenerate_seen == 20);
}

TEST_CASE("the map x -> f_x is linear") {
    const auto alg = fano_q();
    Rng rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        const Octonion x = alg->random_pure_nonzero(rng);
        const Octonion y = alg->random_pure_nonzero(rng);
        const FieldElement lambda = alg->field().random_element(rng);
        CHECK(form_on_C0(x + y) == form_on_C0(x) + form_on_C0(y));
        CHECK(form_on_C0(x.scaled(lambda)) == form_on_C0(x).scaled(lambda));
    }
}

TEST_CASE("flatten / unflatten round-trip") {
    const auto z3 = zorn(3);
    Rng rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        const AltForm f = form_on_C0(z3->random_pure_nonzero(rng));
        CHECK(unflatten_form(flatten_form(f), SpaceTag::OnC0, z3->field()) == f);
        const AltForm g = form_on_C(z3->random_pure_nonzero(rng));
        CHECK(unflatten_form(flatten_form(g), SpaceTag::OnC, z3->field()) == g);
    }
}

TEST_CASE("restriction rank lemma") {
    const FieldSpec f5 = FieldSpec::prime_field(5);

    SUBCASE("nondegenerate form on dim 8: every hyperplane gives rank 6") {
        Rng rng(59);
        for (int trial = 0; trial < 20; ++trial) {
            const ExactMatrix m = random_skew(f5, 8, rng);
            if (m.rank() != 8) continue;
            std::vector<std::vector<FieldElement>> basis;
            for (int i = 0; i < 7; ++i) {
                std::vector<FieldElement> v;
                for (int j = 0; j < 8; ++j) v.push_back(f5.random_element(rng));
                basis.push_back(v);
            }
            if (ExactMatrix::from_rows(basis, f5).rank() != 7) continue;
            const auto result = restriction_rank_check(AltForm(m, SpaceTag::OnC), basis);
            CHECK(result.rank_full == 8);
            CHECK(result.rank_restricted == 6);
            CHECK(result.lemma_holds);
        }
    }

    SUBCASE("zero form") {
        const auto result = restriction_rank_check(
            AltForm(ExactMatrix(8, 8, f5), SpaceTag::OnC),
            [&] {
                std::vector<std::vector<FieldElement>> basis;
                for (int i = 0; i < 7; ++i) {
                    std::vector<FieldElement> v(8, f5.zero());
                    v[i] = f5.one();
                    basis.push_back(v);
                }
                return basis;
            }());
        CHECK(result.rank_full == 0);
        CHECK(result.rank_restricted == 0);
        // The radical of the zero form is everything, never inside a
        // hyperplane; the rank accordingly does not drop.
        CHECK_FALSE(result.radical_in_hyperplane);
        CHECK(result.lemma_holds);
    }

    SUBCASE("rank-4 forms with radical inside / outside the hyperplane") {
        Rng rng(61);
        int inside = 0, outside = 0;
        for (int trial = 0; trial < 300 && (inside < 15 || outside < 15); ++trial) {
            // Random rank-<=4 skew matrix: u v^T - v u^T + w z^T - z w^T.
            ExactMatrix a(8, 2, f5), b(8, 2, f5);
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 2; ++j) {
                    a.at(i, j) = f5.random_element(rng);
                    b.at(i, j) = f5.random_element(rng);
                }
            const ExactMatrix m = a * b.transposed() - b * a.transposed();
            if (m.rank() != 4) continue;
            const AltForm form(m, SpaceTag::OnC);
            const auto radical = m.kernel_basis();  // dim 4

            if (inside < 15) {
                // Hyperplane containing the radical: radical + 3 completions.
                auto basis = radical;
                for (int u = 0; u < 8 && basis.size() < 7; ++u) {
                    std::vector<FieldElement> unit(8, f5.zero());
                    unit[u] = f5.one();
                    basis.push_back(unit);
                    if (ExactMatrix::from_rows(basis, f5).rank() != basis.size()) basis.pop_back();
                }
                const auto result = restriction_rank_check(form, basis);
                CHECK(result.radical_in_hyperplane);
                CHECK(result.rank_restricted == 2);
                CHECK(result.lemma_holds);
                ++inside;
            }
            if (outside < 15) {
                std::vector<std::vector<FieldElement>> basis;
                for (int i = 0; i < 7; ++i) {
                    std::vector<FieldElement> v;
                    for (int j = 0; j < 8; ++j) v.push_back(f5.random_element(rng));
                    basis.push_back(v);
                }
                if (ExactMatrix::from_rows(basis, f5).rank() != 7) continue;
                const auto result = restriction_rank_check(form, basis);
                CHECK(result.lemma_holds);
                if (!result.radical_in_hyperplane) {
                    CHECK(result.rank_restricted == 4);
                    ++outside;
                }
            }
        }
        CHECK(inside == 15);
        CHECK(outside == 15);
    }

    SUBCASE("bad hyperplanes are rejected") {
        const ExactMatrix m = ExactMatrix(8, 8, f5);
        std::vector<std::vector<FieldElement>> toofew(3, std::vector<FieldElement>(8, f5.zero()));
        CHECK_THROWS_AS(restriction_rank_check(AltForm(m, SpaceTag::OnC), toofew), BadHyperplane);
        std::vector<std::vector<FieldElement>> dependent(7, std::vector<FieldElement>(8, f5.zero()));
        CHECK_THROWS_AS(restriction_rank_check(AltForm(m, SpaceTag::OnC), dependent),
                        BadHyperplane);
    }
}

TEST_CASE("form families have dimension 7 everywhere") {
    for (const auto& alg : {fano_q(), zorn(3), zorn(5),
                            OctonionAlgebra::build(FieldSpec::prime_field(7),
                                                   AlgebraDescriptor::division_fano())}) {
        for (SpaceTag tag : {SpaceTag::OnC0, SpaceTag::OnC}) {
            const FormFamily family = FormFamily::build(alg, tag);
            CHECK(family.dimension() == 7);
            CHECK(family.flattened().rank() == 7);
        }
    }
}

TEST_CASE("rank profile of family combinations") {
    SUBCASE("division algebra over Q: rank constant 6") {
        const auto alg = fano_q();
        const FormFamily family = FormFamily::build(alg, SpaceTag::OnC0);
        Rng rng(67);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<FieldElement> coeffs;
            bool nonzero = false;
            for (int g = 0; g < 7; ++g) {
                coeffs.push_back(alg->field().random_element(rng));
                nonzero = nonzero || !coeffs.back().is_zero();
            }
            if (!nonzero) continue;
            CHECK(family.combination(coeffs).rank() == 6);
            CHECK(family.contains(family.combination(coeffs)));
        }
    }
    SUBCASE("split algebra over F_3: both ranks 4 and 6 occur") {
        const FormFamily family = FormFamily::build(zorn(3), SpaceTag::OnC0);
        Rng rng(71);
        std::map<std::size_t, int> seen;
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<FieldElement> coeffs;
            bool nonzero = false;
            for (int g = 0; g < 7; ++g) {
                coeffs.push_back(family.algebra()->field().random_element(rng));
                nonzero = nonzero || !coeffs.back().is_zero();
            }
            if (!nonzero) continue;
            ++seen[family.combination(coeffs).rank()];
        }
        CHECK(seen.count(4) == 1);
        CHECK(seen.count(6) == 1);
        CHECK(seen.size() == 2);
    }
}

TEST_CASE("exhaustive rank census over F_3") {
    const FormFamily family = FormFamily::build(zorn(3), SpaceTag::OnC0);
    const CensusResult census = rank_census(family);

    CHECK(census.projective_points == 1093);
    CHECK(census.affine_nonzero == 2186);
    CHECK(census.rank_counts_affine.at(4) == 728);
    CHECK(census.rank_counts_affine.at(6) == 1458);
    CHECK(census.rank_counts_affine.size() == 2);
    CHECK(census.rank_counts_affine.at(4) + census.rank_counts_affine.at(6) == 2186);
    CHECK(census.low_rank_iff_isotropic);
    CHECK(census.independent_isotropic_affine == 728);
    CHECK(census.isotropic_count_matches);

    // Exactly two nonempty square classes among the full-rank points.
    CHECK(census.square_class_square_projective > 0);
    CHECK(census.square_class_nonsquare_projective > 0);
    CHECK(census.square_class_square_projective + census.square_class_nonsquare_projective +
              census.rank_isotropic_projective ==
          census.projective_points);

    // Oracle: tally square classes of N over all nonzero pure vectors by a
    // brute-force loop, independent of the census path.
    const auto alg = family.algebra();
    const FieldSpec f3 = alg->field();
    std::int64_t square_aff = 0, nonsquare_aff = 0;
    std::vector<std::int64_t> digits(7, 0);
    for (;;) {
        std::size_t pos = 0;
        while (pos < 7 && ++digits[pos] == 3) digits[pos++] = 0;
        if (pos == 7) break;
        std::vector<FieldElement> coords(8, f3.zero());
        for (int i = 0; i < 7; ++i) coords[1 + i] = f3.from_int(digits[i]);
        const FieldElement n = alg->element(coords).norm();
        if (n.is_zero()) continue;
        (n.is_square() ? square_aff : nonsquare_aff) += 1;
    }
    CHECK(census.square_class_square_projective * 2 == square_aff);
    CHECK(census.square_class_nonsquare_projective * 2 == nonsquare_aff);
}

TEST_CASE("census on the full-space family sees ranks 4 and 8") {
    const FormFamily family = FormFamily::build(zorn(3), SpaceTag::OnC);
    const CensusResult census = rank_census(family);
    CHECK(census.rank_counts_affine.at(4) == 728);
    CHECK(census.rank_counts_affine.at(8) == 1458);
    CHECK(census.low_rank_iff_isotropic);
}

TEST_CASE("census feasibility guard") {
    CHECK_THROWS_AS(rank_census(FormFamily::build(fano_q(), SpaceTag::OnC0)), CensusInfeasible);
    const auto z23 = zorn(23);  // 23^7 > 1e9
    CHECK_THROWS_AS(rank_census(FormFamily::build(z23, SpaceTag::OnC0)), CensusInfeasible);
}

TEST_CASE("a table with a dead generator is rejected as degenerate") {
    // Zero out every product b1 * b_j; the first basis form collapses and
    // the family loses a dimension.
    auto broken = zorn(3);
    for (std::size_t j = 0; j < 8; ++j) {
        for (std::size_t k = 0; k < 8; ++k) {
            const FieldElement current = broken->basis_product(1, j)[k];
            if (!current.is_zero()) broken = broken->with_tampered_product(1, j, k, -current);
        }
    }
    CHECK_THROWS_AS(FormFamily::build(broken, SpaceTag::OnC0), DegenerateFamily);
}
