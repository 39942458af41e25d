#include "octorank/field.hpp"

#include <charconv>

namespace octorank {
namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
    std::int64_t acc = 1;
    base = mod_reduce(base, p);
    while (exp > 0) {
        if (exp & 1) acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return acc;
}

// Extended Euclid; valid for 0 < a < p with p prime.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    return mod_reduce(s0, p);
}

std::int64_t parse_int(std::string_view text) {
    std::int64_t value = 0;
    const auto* begin = text.data();
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        throw InvalidFieldSpec("not an integer: '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

FieldSpec FieldSpec::rationals() { return FieldSpec(FieldKind::Rationals, 0); }

FieldSpec FieldSpec::prime_field(std::int64_t p) {
    if (p < 3) {
        throw InvalidFieldSpec("prime-field modulus must be an odd prime >= 3, got " +
                               std::to_string(p));
    }
    if (p >= (std::int64_t{1} << 31)) {
        throw InvalidFieldSpec("prime-field modulus too large: " + std::to_string(p));
    }
    if (!is_prime(p)) {
        throw InvalidFieldSpec("modulus " + std::to_string(p) + " is composite");
    }
    return FieldSpec(FieldKind::PrimeField, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "Q") return rationals();
    constexpr std::string_view prefix = "Fp:";
    if (text.substr(0, prefix.size()) == prefix) {
        return prime_field(parse_int(text.substr(prefix.size())));
    }
    throw InvalidFieldSpec("field spec must be \"Q\" or \"Fp:<prime>\", got '" +
                           std::string(text) + "'");
}

std::int64_t FieldSpec::modulus() const {
    if (kind_ != FieldKind::PrimeField) throw FieldMismatch("rationals have no modulus");
    return modulus_;
}

std::string FieldSpec::to_string() const {
    return kind_ == FieldKind::Rationals ? "Q" : "Fp:" + std::to_string(modulus_);
}

FieldElement FieldSpec::zero() const { return from_int(0); }
FieldElement FieldSpec::one() const { return from_int(1); }

FieldElement FieldSpec::from_int(std::int64_t n) const {
    if (kind_ == FieldKind::Rationals) return FieldElement(mpq_class(static_cast<long>(n)));
    return FieldElement(mod_reduce(n, modulus_), modulus_);
}

FieldElement FieldSpec::from_fraction(std::int64_t num, std::int64_t den) const {
    if (den == 0) throw DivisionByZero("fraction with zero denominator");
    if (kind_ == FieldKind::Rationals) {
        mpq_class q(static_cast<long>(num), static_cast<long>(den));
        q.canonicalize();
        return FieldElement(std::move(q));
    }
    return from_int(num) / from_int(den);
}

FieldElement FieldSpec::parse_element(std::string_view text) const {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return from_int(parse_int(text));
    return from_fraction(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

FieldElement FieldSpec::random_element(Rng& rng) const {
    if (kind_ == FieldKind::PrimeField) return from_int(rng.uniform(0, modulus_ - 1));
    return from_fraction(rng.uniform(-12, 12), rng.uniform(1, 8));
}

FieldElement FieldSpec::random_nonzero(Rng& rng) const {
    for (;;) {
        FieldElement e = random_element(rng);
        if (!e.is_zero()) return e;
    }
}

FieldSpec FieldElement::field() const {
    if (const Fp* f = fp()) return FieldSpec(FieldKind::PrimeField, f->p);
    return FieldSpec::rationals();
}

bool FieldElement::is_zero() const {
    if (const Fp* f = fp()) return f->value == 0;
    return sgn(*rat()) == 0;
}

bool FieldElement::is_one() const {
    if (const Fp* f = fp()) return f->value == 1;
    return *rat() == 1;
}

void FieldElement::require_same_field(const FieldElement& rhs) const {
    const Fp* a = fp();
    const Fp* b = rhs.fp();
    if ((a == nullptr) != (b == nullptr) || (a && b && a->p != b->p)) {
        throw FieldMismatch("operands belong to different fields");
    }
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    require_same_field(rhs);
    if (const Fp* a = fp()) return FieldElement(mod_reduce(a->value + rhs.fp()->value, a->p), a->p);
    return FieldElement(mpq_class(*rat() + *rhs.rat()));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
    require_same_field(rhs);
    if (const Fp* a = fp()) return FieldElement(mod_reduce(a->value - rhs.fp()->value, a->p), a->p);
    return FieldElement(mpq_class(*rat() - *rhs.rat()));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    require_same_field(rhs);
    if (const Fp* a = fp()) return FieldElement(a->value * rhs.fp()->value % a->p, a->p);
    return FieldElement(mpq_class(*rat() * *rhs.rat()));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    return *this * rhs.inverse();
}

FieldElement FieldElement::operator-() const {
    if (const Fp* a = fp()) return FieldElement(mod_reduce(-a->value, a->p), a->p);
    return FieldElement(mpq_class(-*rat()));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (const Fp* a = fp()) return FieldElement(mod_inverse(a->value, a->p), a->p);
    return FieldElement(mpq_class(1 / *rat()));
}

bool FieldElement::is_square() const {
    if (is_zero()) throw ZeroHasNoSquareClass("zero has no square class");
    if (const Fp* a = fp()) return mod_pow(a->value, (a->p - 1) / 2, a->p) == 1;
    const mpq_class& q = *rat();
    if (sgn(q) < 0) return false;
    return mpz_perfect_square_p(q.get_num().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(q.get_den().get_mpz_t()) != 0;
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    require_same_field(rhs);
    if (const Fp* a = fp()) return a->value == rhs.fp()->value;
    return *rat() == *rhs.rat();
}

std::string FieldElement::to_string() const {
    if (const Fp* a = fp()) return std::to_string(a->value);
    return rat()->get_str();
}

const mpq_class& FieldElement::rational_value() const {
    if (const mpq_class* q = rat()) return *q;
    throw FieldMismatch("not a rational element");
}

std::int64_t FieldElement::residue() const {
    if (const Fp* a = fp()) return a->value;
    throw FieldMismatch("not a prime-field element");
}

}  // namespace octorank
