#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "octorank/errors.hpp"
#include "octorank/rng.hpp"

namespace octorank {

class FieldElement;

enum class FieldKind { Rationals, PrimeField };

/// Which exact field scalars live in: the rationals, or F_p for an odd
/// prime p. Characteristic 2 is rejected at construction; halving by the
/// polarization identity would be impossible there.
class FieldSpec {
public:
    static FieldSpec rationals();
    static FieldSpec prime_field(std::int64_t p);

    /// Accepts "Q" or "Fp:<prime>" (e.g. "Fp:3").
    static FieldSpec parse(std::string_view text);

    FieldKind kind() const { return kind_; }
    bool is_finite() const { return kind_ == FieldKind::PrimeField; }
    std::int64_t modulus() const;
    std::string to_string() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(std::int64_t n) const;
    FieldElement from_fraction(std::int64_t num, std::int64_t den) const;

    /// Accepts a decimal integer or "num/den".
    FieldElement parse_element(std::string_view text) const;

    /// Random scalar for audits: a uniform residue over F_p, a small
    /// fraction over Q (kept small so exact products stay cheap).
    FieldElement random_element(Rng& rng) const;
    FieldElement random_nonzero(Rng& rng) const;

    bool operator==(const FieldSpec&) const = default;

private:
    friend class FieldElement;  // rebuilds its spec without re-checking primality

    FieldSpec(FieldKind kind, std::int64_t modulus) : kind_(kind), modulus_(modulus) {}

    FieldKind kind_;
    std::int64_t modulus_;  // 0 when kind_ == Rationals
};

/// Immutable exact scalar. Rationals are stored canonically (reduced,
/// positive denominator) by GMP; prime-field values as residues in [0, p).
class FieldElement {
public:
    /// Default is the rational zero; containers normally fill elements
    /// through FieldSpec::zero() instead.
    FieldElement() : rep_(mpq_class(0)) {}

    FieldSpec field() const;

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;
    FieldElement operator-() const;

    FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
    FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
    FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }
    FieldElement& operator/=(const FieldElement& rhs) { return *this = *this / rhs; }

    /// Multiplicative inverse; DivisionByZero on zero.
    FieldElement inverse() const;

    /// True iff the element is a nonzero square. Over Q this tests the
    /// reduced numerator and denominator for integer squares (after a sign
    /// check); over F_p it is the Euler criterion a^((p-1)/2) = 1.
    /// ZeroHasNoSquareClass on zero.
    bool is_square() const;

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    /// Decimal string; rationals with nontrivial denominator as "num/den".
    std::string to_string() const;

    /// The rational payload; throws FieldMismatch on prime-field elements.
    const mpq_class& rational_value() const;
    /// The residue in [0, p); throws FieldMismatch on rational elements.
    std::int64_t residue() const;

private:
    friend class FieldSpec;

    struct Fp {
        std::int64_t value;
        std::int64_t p;
    };

    explicit FieldElement(mpq_class q) : rep_(std::move(q)) {}
    FieldElement(std::int64_t value, std::int64_t p) : rep_(Fp{value, p}) {}

    const Fp* fp() const { return std::get_if<Fp>(&rep_); }
    const mpq_class* rat() const { return std::get_if<mpq_class>(&rep_); }
    void require_same_field(const FieldElement& rhs) const;

    std::variant<mpq_class, Fp> rep_;
};

}  // namespace octorank
