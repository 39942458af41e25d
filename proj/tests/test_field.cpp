#include "doctest.h"
#include "octorank/field.hpp"
#include "octorank/rng.hpp"
#include "oracles.hpp"

using namespace octorank;

TEST_CASE("field spec parsing and rejection") {
    CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
    CHECK(FieldSpec::parse("Fp:3") == FieldSpec::prime_field(3));
    CHECK(FieldSpec::parse("Fp:97").modulus() == 97);

    CHECK_THROWS_AS(FieldSpec::parse("Fp:2"), InvalidFieldSpec);   // char 2 excluded
    CHECK_THROWS_AS(FieldSpec::parse("Fp:9"), InvalidFieldSpec);   // composite
    CHECK_THROWS_AS(FieldSpec::parse("Fp:1"), InvalidFieldSpec);
    CHECK_THROWS_AS(FieldSpec::parse("Fp:-7"), InvalidFieldSpec);
    CHECK_THROWS_AS(FieldSpec::parse("R"), InvalidFieldSpec);
    CHECK_THROWS_AS(FieldSpec::parse("Fp:abc"), InvalidFieldSpec);
}

TEST_CASE("rational arithmetic is exact and canonical") {
    const FieldSpec q = FieldSpec::rationals();
    CHECK(q.from_fraction(1, 2) + q.from_fraction(1, 3) == q.from_fraction(5, 6));
    CHECK(q.from_fraction(2, 4).to_string() == "1/2");
    CHECK(q.from_fraction(3, -6).to_string() == "-1/2");  // denominator sign normalized
    CHECK(q.from_fraction(4, 2).to_string() == "2");
    CHECK(q.parse_element("-7/21") == q.from_fraction(-1, 3));
    CHECK(q.parse_element("5") == q.from_int(5));
    CHECK_THROWS_AS(q.zero().inverse(), DivisionByZero);
}

TEST_CASE("prime field arithmetic") {
    const FieldSpec f7 = FieldSpec::prime_field(7);
    CHECK(f7.from_int(3).inverse() == f7.from_int(5));  // 3*5 = 15 = 1 mod 7
    const FieldSpec f5 = FieldSpec::prime_field(5);
    CHECK(-f5.from_int(2) == f5.from_int(3));  // 2+3 = 0 mod 5
    CHECK(f5.from_int(-1) == f5.from_int(4));
    CHECK_THROWS_AS(f5.zero().inverse(), DivisionByZero);
    CHECK_THROWS_AS(f5.from_int(1) + f7.from_int(1), FieldMismatch);
}

TEST_CASE("square classes") {
    const FieldSpec f7 = FieldSpec::prime_field(7);
    CHECK(f7.from_int(2).is_square());  // 3^2 = 9 = 2 mod 7

    // Oracle: brute-force square table mod 7.
    const auto squares = oracles::nonzero_squares_mod(7);
    CHECK(squares.count(3) == 0);
    CHECK_FALSE(f7.from_int(3).is_square());
    for (std::int64_t a = 1; a < 7; ++a)
        CHECK(f7.from_int(a).is_square() == (squares.count(a) > 0));

    const FieldSpec q = FieldSpec::rationals();
    CHECK(q.from_fraction(4, 9).is_square());
    CHECK_FALSE(q.from_fraction(-4, 9).is_square());
    CHECK_FALSE(q.from_fraction(2, 9).is_square());
    CHECK_THROWS_AS(q.zero().is_square(), ZeroHasNoSquareClass);
}

TEST_CASE("is_square is multiplicative: exhaustive over F_3, F_5, F_7") {
    for (std::int64_t p : {3, 5, 7}) {
        const FieldSpec f = FieldSpec::prime_field(p);
        for (std::int64_t a = 1; a < p; ++a) {
            for (std::int64_t b = 1; b < p; ++b) {
                const bool sa = f.from_int(a).is_square();
                const bool sb = f.from_int(b).is_square();
                CHECK((f.from_int(a) * f.from_int(b)).is_square() == (sa == sb));
            }
        }
    }
}

TEST_CASE("field axioms on random elements") {
    for (const FieldSpec& f :
         {FieldSpec::rationals(), FieldSpec::prime_field(3), FieldSpec::prime_field(7)}) {
        Rng rng(20240801);
        for (int trial = 0; trial < 100; ++trial) {
            const FieldElement a = f.random_element(rng);
            const FieldElement b = f.random_element(rng);
            const FieldElement c = f.random_element(rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == f.zero());
            if (!a.is_zero()) CHECK(a * a.inverse() == f.one());
        }
    }
}
