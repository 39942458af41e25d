#include "doctest.h"
#include "octorank/matrix.hpp"
#include "octorank/rng.hpp"
#include "oracles.hpp"

using namespace octorank;

namespace {

ExactMatrix random_matrix(const FieldSpec& f, std::size_t r, std::size_t c, Rng& rng) {
    ExactMatrix m(r, c, f);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.random_element(rng);
    return m;
}

}  // namespace

TEST_CASE("rank of trivial matrices") {
    const FieldSpec q = FieldSpec::rationals();
    CHECK(ExactMatrix(4, 6, q).rank() == 0);
    CHECK(ExactMatrix::identity(7, q).rank() == 7);
    CHECK(ExactMatrix::identity(7, FieldSpec::prime_field(3)).rank() == 7);
}

TEST_CASE("kernel basis sizes and exactness") {
    const FieldSpec q = FieldSpec::rationals();
    CHECK(ExactMatrix::identity(5, q).kernel_basis().empty());
    CHECK(ExactMatrix(3, 3, q).kernel_basis().size() == 3);

    Rng rng(7);
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
        for (int trial = 0; trial < 40; ++trial) {
            const auto m = random_matrix(f, 4, 6, rng);
            const auto kernel = m.kernel_basis();
            CHECK(m.rank() + kernel.size() == m.cols());  // rank-nullity
            for (const auto& v : kernel) {
                for (const FieldElement& entry : m.apply(v)) CHECK(entry.is_zero());
            }
        }
    }
}

TEST_CASE("rank equals transpose rank on random matrices") {
    Rng rng(11);
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime_field(3)}) {
        for (int trial = 0; trial < 40; ++trial) {
            const auto m = random_matrix(f, 5, 3, rng);
            CHECK(m.rank() == m.transposed().rank());
        }
    }
}

TEST_CASE("elimination rank agrees with the minor-expansion oracle") {
    Rng rng(13);
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime_field(3)}) {
        for (int trial = 0; trial < 30; ++trial) {
            const auto m = random_matrix(f, 4, 4, rng);
            CHECK(m.rank() == oracles::minor_rank(m));
            CHECK((m.determinant() == oracles::cofactor_det(m)));
        }
    }
}

TEST_CASE("solve and inverse") {
    const FieldSpec f = FieldSpec::prime_field(7);
    Rng rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        const auto m = random_matrix(f, 4, 4, rng);
        std::vector<FieldElement> b;
        for (int i = 0; i < 4; ++i) b.push_back(f.random_element(rng));
        const auto x = m.solve(b);
        if (x) {
            const auto mx = m.apply(*x);
            for (int i = 0; i < 4; ++i) CHECK(mx[i] == b[i]);
        } else {
            CHECK(m.rank() < 4);
        }
        if (m.rank() == 4) {
            CHECK(m * m.inverted() == ExactMatrix::identity(4, f));
        } else {
            CHECK_THROWS_AS(m.inverted(), NotInvertible);
        }
    }
}

TEST_CASE("row span membership") {
    const FieldSpec q = FieldSpec::rationals();
    ExactMatrix basis(2, 3, q);
    basis.at(0, 0) = q.one();
    basis.at(1, 1) = q.one();
    CHECK(in_row_span(basis, {q.from_int(2), q.from_int(-5), q.zero()}));
    CHECK_FALSE(in_row_span(basis, {q.zero(), q.zero(), q.one()}));
}

TEST_CASE("rational elimination stays exact under blowup-prone input") {
    // Hilbert-like matrix: classic trigger for precision loss; exact
    // arithmetic must get the full rank and an exact inverse.
    const FieldSpec q = FieldSpec::rationals();
    const std::size_t n = 7;
    ExactMatrix h(n, n, q);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h.at(i, j) = q.from_fraction(1, static_cast<std::int64_t>(i + j + 1));
    CHECK(h.rank() == n);
    CHECK(h * h.inverted() == ExactMatrix::identity(n, q));
}
