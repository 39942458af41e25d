#include "octorank/algebra.hpp"

#include <algorithm>
#include <utility>

namespace octorank {
namespace {

using Coords = std::array<FieldElement, 8>;

Coords zero_coords(const FieldSpec& f) {
    Coords c;
    c.fill(f.zero());
    return c;
}

Coords unit_coords(const FieldSpec& f, std::size_t i) {
    Coords c = zero_coords(f);
    c[i] = f.one();
    return c;
}

// --- split Zorn vector matrices, natural layout (alpha, v, w, beta) ------

std::array<FieldElement, 3> cross(const std::array<FieldElement, 3>& a,
                                  const std::array<FieldElement, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

FieldElement dot(const std::array<FieldElement, 3>& a, const std::array<FieldElement, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Coords zorn_multiply(const Coords& x, const Coords& y) {
    const FieldElement &a1 = x[0], &b1 = x[7], &a2 = y[0], &b2 = y[7];
    const std::array<FieldElement, 3> v1{x[1], x[2], x[3]}, w1{x[4], x[5], x[6]};
    const std::array<FieldElement, 3> v2{y[1], y[2], y[3]}, w2{y[4], y[5], y[6]};

    const FieldElement alpha = a1 * a2 + dot(v1, w2);
    const FieldElement beta = b1 * b2 + dot(w1, v2);
    const auto ww = cross(w1, w2);
    const auto vv = cross(v1, v2);
    Coords z;
    z[0] = alpha;
    for (int i = 0; i < 3; ++i) {
        z[1 + i] = a1 * v2[i] + b2 * v1[i] - ww[i];
        z[4 + i] = a2 * w1[i] + b1 * w2[i] + vv[i];
    }
    z[7] = beta;
    return z;
}

// --- Cayley-Dickson doubling ---------------------------------------------

using CdVec = std::vector<FieldElement>;

CdVec cd_conjugate(const CdVec& x) {
    if (x.size() == 1) return x;
    const std::size_t h = x.size() / 2;
    CdVec out(x.size(), x[0]);
    const CdVec a(x.begin(), x.begin() + h);
    const CdVec ca = cd_conjugate(a);
    for (std::size_t i = 0; i < h; ++i) {
        out[i] = ca[i];
        out[h + i] = -x[h + i];
    }
    return out;
}

// (a,b)(c,d) = (ac + g d conj(b), conj(a) d + c b); the doubling scalar for
// level k (vectors of length 2^k) is gammas[k-1].
CdVec cd_multiply(const CdVec& x, const CdVec& y, const std::vector<FieldElement>& gammas) {
    if (x.size() == 1) return {x[0] * y[0]};
    const std::size_t h = x.size() / 2;
    std::size_t level = 0;
    for (std::size_t s = x.size(); s > 1; s /= 2) ++level;
    const FieldElement& g = gammas[level - 1];

    const CdVec a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
    const CdVec c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());

    const CdVec ac = cd_multiply(a, c, gammas);
    const CdVec dcb = cd_multiply(d, cd_conjugate(b), gammas);
    const CdVec cad = cd_multiply(cd_conjugate(a), d, gammas);
    const CdVec cb = cd_multiply(c, b, gammas);

    CdVec out(x.size(), x[0]);
    for (std::size_t i = 0; i < h; ++i) {
        out[i] = ac[i] + g * dcb[i];
        out[h + i] = cad[i] + cb[i];
    }
    return out;
}

bool rational_positive(const FieldElement& e) { return sgn(e.rational_value()) > 0; }

}  // namespace

// --- descriptor ------------------------------------------------------------

AlgebraDescriptor AlgebraDescriptor::cayley_dickson(FieldElement g1, FieldElement g2,
                                                    FieldElement g3) {
    return {Construction::CayleyDickson, {std::move(g1), std::move(g2), std::move(g3)}};
}

AlgebraDescriptor AlgebraDescriptor::parse(std::string_view text, const FieldSpec& field) {
    if (text == "split-zorn") return split_zorn();
    if (text == "division-fano") return division_fano();
    constexpr std::string_view prefix = "cayley-dickson:";
    if (text.substr(0, prefix.size()) == prefix) {
        std::string_view rest = text.substr(prefix.size());
        std::vector<FieldElement> params;
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            params.push_back(field.parse_element(rest.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        if (params.size() != 3) {
            throw AlgebraConstructionError("cayley-dickson needs exactly three parameters");
        }
        return {Construction::CayleyDickson, std::move(params)};
    }
    throw AlgebraConstructionError("unknown algebra spec '" + std::string(text) +
                                   "'; expected split-zorn, division-fano or "
                                   "cayley-dickson:<g1>,<g2>,<g3>");
}

std::string AlgebraDescriptor::to_string() const {
    switch (construction) {
        case Construction::SplitZorn:
            return "split-zorn";
        case Construction::DivisionFano:
            return "division-fano";
        case Construction::CayleyDickson:
            return "cayley-dickson:" + parameters[0].to_string() + "," +
                   parameters[1].to_string() + "," + parameters[2].to_string();
    }
    return {};
}

// --- octonion elements ------------------------------------------------------

void Octonion::require_same_algebra(const Octonion& rhs) const {
    if (algebra_ != rhs.algebra_) throw AlgebraMismatch("octonions from different algebras");
}

bool Octonion::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const FieldElement& c) { return c.is_zero(); });
}

bool Octonion::is_pure() const { return algebra_->polarize(*this, algebra_->identity()).is_zero(); }

Octonion Octonion::operator+(const Octonion& rhs) const {
    require_same_algebra(rhs);
    Coords c = coords_;
    for (std::size_t i = 0; i < 8; ++i) c[i] += rhs.coords_[i];
    return Octonion(algebra_, std::move(c));
}

Octonion Octonion::operator-(const Octonion& rhs) const {
    require_same_algebra(rhs);
    Coords c = coords_;
    for (std::size_t i = 0; i < 8; ++i) c[i] -= rhs.coords_[i];
    return Octonion(algebra_, std::move(c));
}

Octonion Octonion::operator-() const {
    Coords c = coords_;
    for (FieldElement& e : c) e = -e;
    return Octonion(algebra_, std::move(c));
}

Octonion Octonion::scaled(const FieldElement& s) const {
    Coords c = coords_;
    for (FieldElement& e : c) e *= s;
    return Octonion(algebra_, std::move(c));
}

Octonion Octonion::operator*(const Octonion& rhs) const {
    require_same_algebra(rhs);
    return Octonion(algebra_, algebra_->raw_multiply(coords_, rhs.coords_));
}

bool Octonion::operator==(const Octonion& rhs) const {
    require_same_algebra(rhs);
    for (std::size_t i = 0; i < 8; ++i)
        if (!(coords_[i] == rhs.coords_[i])) return false;
    return true;
}

Octonion Octonion::conjugate() const {
    // conj(x) = <x,e> e - x
    const FieldElement t = algebra_->polarize(*this, algebra_->identity());
    Coords c;
    for (std::size_t i = 0; i < 8; ++i) c[i] = -coords_[i];
    c[0] += t;  // identity is basis 0
    return Octonion(algebra_, std::move(c));
}

FieldElement Octonion::norm() const { return algebra_->norm(*this); }

Octonion Octonion::inverse() const {
    const FieldElement n = norm();
    if (n.is_zero()) throw NotInvertible("octonion has norm zero");
    return conjugate().scaled(n.inverse());
}

Octonion Octonion::pure_part() const {
    const FieldSpec& f = algebra_->field();
    const FieldElement t = algebra_->polarize(*this, algebra_->identity());
    Coords c = coords_;
    c[0] -= t / f.from_int(2);
    return Octonion(algebra_, std::move(c));
}

std::vector<FieldElement> Octonion::pure_coords() const {
    return {coords_.begin() + 1, coords_.end()};
}

// --- algebra ----------------------------------------------------------------

OctonionAlgebra::OctonionAlgebra(FieldSpec field, AlgebraDescriptor descriptor)
    : field_(field),
      descriptor_(std::move(descriptor)),
      gram_(8, 8, field),
      pure_gram_(7, 7, field),
      to_natural_(ExactMatrix::identity(8, field)),
      from_natural_(ExactMatrix::identity(8, field)) {
    for (auto& plane : table_)
        for (auto& row : plane) row = zero_coords(field_);

    const FieldElement one = field_.one();
    const FieldElement minus_one = -one;

    switch (descriptor_.construction) {
        case Construction::DivisionFano: {
            for (std::size_t j = 0; j < 8; ++j) table_[0][j] = unit_coords(field_, j);
            for (std::size_t i = 1; i < 8; ++i) {
                table_[i][0] = unit_coords(field_, i);
                table_[i][i] = zero_coords(field_);
                table_[i][i][0] = minus_one;
            }
            // One Fano line per a in 1..7: (a, a+1, a+3) with indices mod 7
            // shifted into 1..7; products follow the cycle a -> b -> c -> a.
            auto wrap = [](std::size_t i) { return (i - 1) % 7 + 1; };
            for (std::size_t a = 1; a <= 7; ++a) {
                const std::size_t b = wrap(a + 1), c = wrap(a + 3);
                auto set = [&](std::size_t i, std::size_t j, std::size_t k, bool pos) {
                    table_[i][j] = zero_coords(field_);
                    table_[i][j][k] = pos ? one : minus_one;
                };
                set(a, b, c, true);
                set(b, a, c, false);
                set(b, c, a, true);
                set(c, b, a, false);
                set(c, a, b, true);
                set(a, c, b, false);
            }
            // N(x) = sum of squares: Gram is 2I.
            gram_ = ExactMatrix::identity(8, field_).scaled(field_.from_int(2));
            break;
        }
        case Construction::CayleyDickson: {
            if (descriptor_.parameters.size() != 3) {
                throw AlgebraConstructionError("cayley-dickson needs three parameters");
            }
            for (const FieldElement& g : descriptor_.parameters) {
                if (g.is_zero()) {
                    throw AlgebraConstructionError("cayley-dickson parameter must be nonzero");
                }
            }
            for (std::size_t i = 0; i < 8; ++i) {
                CdVec x(8, field_.zero());
                x[i] = one;
                for (std::size_t j = 0; j < 8; ++j) {
                    CdVec y(8, field_.zero());
                    y[j] = one;
                    const CdVec prod = cd_multiply(x, y, descriptor_.parameters);
                    for (std::size_t k = 0; k < 8; ++k) table_[i][j][k] = prod[k];
                }
            }
            // N((a,b)) = N(a) - g N(b) at each doubling: diagonal form.
            std::vector<FieldElement> diag{one};
            for (const FieldElement& g : descriptor_.parameters) {
                std::vector<FieldElement> next = diag;
                for (const FieldElement& d : diag) next.push_back(-(g * d));
                diag = std::move(next);
            }
            for (std::size_t i = 0; i < 8; ++i) gram_.at(i, i) = field_.from_int(2) * diag[i];
            break;
        }
        case Construction::SplitZorn: {
            // Natural Zorn coordinates are not pure-adapted; rebase to
            // (e, h, v-units, w-units) with h = diag(1,-1) so that basis 0
            // is the identity and bases 1..7 are pure.
            ExactMatrix c(8, 8, field_);
            c.at(0, 0) = one;
            c.at(7, 0) = one;  // e
            c.at(0, 1) = one;
            c.at(7, 1) = minus_one;  // h
            for (std::size_t i = 0; i < 6; ++i) c.at(1 + i, 2 + i) = one;
            to_natural_ = c;
            from_natural_ = c.inverted();

            for (std::size_t i = 0; i < 8; ++i) {
                Coords bi;
                for (std::size_t r = 0; r < 8; ++r) bi[r] = to_natural_.at(r, i);
                for (std::size_t j = 0; j < 8; ++j) {
                    Coords bj;
                    for (std::size_t r = 0; r < 8; ++r) bj[r] = to_natural_.at(r, j);
                    const Coords prod_nat = zorn_multiply(bi, bj);
                    const auto stored =
                        from_natural_.apply({prod_nat.begin(), prod_nat.end()});
                    for (std::size_t k = 0; k < 8; ++k) table_[i][j][k] = stored[k];
                }
            }
            // Natural Gram of N = alpha beta - v.w, then rebased.
            ExactMatrix g_nat(8, 8, field_);
            g_nat.at(0, 7) = one;
            g_nat.at(7, 0) = one;
            for (std::size_t i = 1; i <= 3; ++i) {
                g_nat.at(i, i + 3) = minus_one;
                g_nat.at(i + 3, i) = minus_one;
            }
            gram_ = to_natural_.transposed() * g_nat * to_natural_;
            break;
        }
    }

    pure_gram_ = gram_.submatrix(1, 1, 7, 7);
}

std::shared_ptr<const OctonionAlgebra> OctonionAlgebra::build(const FieldSpec& field,
                                                              const AlgebraDescriptor& descriptor) {
    std::shared_ptr<OctonionAlgebra> algebra(new OctonionAlgebra(field, descriptor));
    algebra->validate();
    algebra->finalize();
    return algebra;
}

std::shared_ptr<const OctonionAlgebra> OctonionAlgebra::with_tampered_product(
    std::size_t i, std::size_t j, std::size_t k, const FieldElement& delta) const {
    std::shared_ptr<OctonionAlgebra> copy(new OctonionAlgebra(field_, descriptor_));
    copy->table_ = table_;
    copy->table_[i][j][k] += delta;
    copy->finalize();
    return copy;
}

Coords OctonionAlgebra::raw_multiply(const Coords& x, const Coords& y) const {
    Coords z = zero_coords(field_);
    for (std::size_t i = 0; i < 8; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < 8; ++j) {
            if (y[j].is_zero()) continue;
            const FieldElement xy = x[i] * y[j];
            const Coords& t = table_[i][j];
            for (std::size_t k = 0; k < 8; ++k) {
                if (!t[k].is_zero()) z[k] += xy * t[k];
            }
        }
    }
    return z;
}

Octonion OctonionAlgebra::identity() const { return basis_element(0); }

Octonion OctonionAlgebra::basis_element(std::size_t i) const {
    return Octonion(shared_from_this(), unit_coords(field_, i));
}

Octonion OctonionAlgebra::zero() const {
    return Octonion(shared_from_this(), zero_coords(field_));
}

Octonion OctonionAlgebra::element(const std::vector<FieldElement>& coords) const {
    if (coords.size() != 8) throw Error("octonion needs 8 coordinates");
    Coords c;
    std::copy(coords.begin(), coords.end(), c.begin());
    return Octonion(shared_from_this(), std::move(c));
}

Octonion OctonionAlgebra::element_from_natural(const std::vector<FieldElement>& coords) const {
    if (coords.size() != 8) throw Error("octonion needs 8 coordinates");
    return element(from_natural_.apply(coords));
}

Octonion OctonionAlgebra::random_element(Rng& rng) const {
    Coords c;
    for (FieldElement& e : c) e = field_.random_element(rng);
    return Octonion(shared_from_this(), std::move(c));
}

Octonion OctonionAlgebra::random_nonzero(Rng& rng) const {
    for (;;) {
        Octonion x = random_element(rng);
        if (!x.is_zero()) return x;
    }
}

Octonion OctonionAlgebra::random_pure_nonzero(Rng& rng) const {
    for (;;) {
        Coords c = zero_coords(field_);
        for (std::size_t i = 1; i < 8; ++i) c[i] = field_.random_element(rng);
        Octonion x(shared_from_this(), std::move(c));
        if (!x.is_zero()) return x;
    }
}

FieldElement OctonionAlgebra::norm(const Octonion& x) const {
    return polarize(x, x) / field_.from_int(2);
}

FieldElement OctonionAlgebra::polarize(const Octonion& x, const Octonion& y) const {
    FieldElement acc = field_.zero();
    for (std::size_t i = 0; i < 8; ++i) {
        if (x.coord(i).is_zero()) continue;
        for (std::size_t j = 0; j < 8; ++j) {
            if (y.coord(j).is_zero() || gram_.at(i, j).is_zero()) continue;
            acc += x.coord(i) * gram_.at(i, j) * y.coord(j);
        }
    }
    return acc;
}

ExactMatrix OctonionAlgebra::left_mult_matrix(const Octonion& x) const {
    ExactMatrix m(8, 8, field_);
    for (std::size_t j = 0; j < 8; ++j) {
        const Coords col = raw_multiply(x.coords(), unit_coords(field_, j));
        for (std::size_t k = 0; k < 8; ++k) m.at(k, j) = col[k];
    }
    return m;
}

ExactMatrix OctonionAlgebra::right_mult_matrix(const Octonion& x) const {
    ExactMatrix m(8, 8, field_);
    for (std::size_t j = 0; j < 8; ++j) {
        const Coords col = raw_multiply(unit_coords(field_, j), x.coords());
        for (std::size_t k = 0; k < 8; ++k) m.at(k, j) = col[k];
    }
    return m;
}

KernelImageProfile OctonionAlgebra::kernel_image_profile(const Octonion& x) const {
    if (x.is_zero()) throw ZeroOctonion("kernel/image profile of zero");

    const ExactMatrix lm = left_mult_matrix(x);
    const auto kernel = lm.kernel_basis();

    // Image basis: nonzero rows of the reduced transpose are a row-space
    // basis, i.e. a basis of the column space of lm.
    std::vector<std::size_t> pivots;
    const ExactMatrix rt = lm.transposed().rref(&pivots);
    std::vector<std::vector<FieldElement>> image;
    for (std::size_t i = 0; i < pivots.size(); ++i) image.push_back(rt.row(i));

    auto meet_pure_dim = [&](const std::vector<std::vector<FieldElement>>& basis) {
        // dim of intersection with {coord 0 = 0}: subtract 1 when the
        // e-coordinate functional is nonzero somewhere on the subspace.
        bool functional_nonzero = false;
        for (const auto& v : basis) functional_nonzero = functional_nonzero || !v[0].is_zero();
        return basis.size() - (functional_nonzero ? 1 : 0);
    };
    auto totally_isotropic = [&](const std::vector<std::vector<FieldElement>>& basis) {
        for (std::size_t a = 0; a < basis.size(); ++a) {
            const Octonion u(shared_from_this(), [&] {
                Coords c;
                std::copy(basis[a].begin(), basis[a].end(), c.begin());
                return c;
            }());
            for (std::size_t b = a; b < basis.size(); ++b) {
                const Octonion v(shared_from_this(), [&] {
                    Coords c;
                    std::copy(basis[b].begin(), basis[b].end(), c.begin());
                    return c;
                }());
                if (!polarize(u, v).is_zero()) return false;
                if (a == b && !norm(u).is_zero()) return false;
            }
        }
        return true;
    };

    KernelImageProfile profile;
    profile.dim_image = image.size();
    profile.dim_kernel = kernel.size();
    profile.dim_image_meet_pure = meet_pure_dim(image);
    profile.dim_kernel_meet_pure = meet_pure_dim(kernel);
    profile.image_totally_isotropic = totally_isotropic(image);
    profile.kernel_totally_isotropic = totally_isotropic(kernel);
    return profile;
}

std::optional<Octonion> OctonionAlgebra::isotropic_witness() const {
    if (!witness_coords_) return std::nullopt;
    return Octonion(shared_from_this(), *witness_coords_);
}

void OctonionAlgebra::validate() const {
    auto fail = [](const std::string& what) {
        throw AlgebraConstructionError("algebra table rejected: " + what);
    };

    auto norm_of = [&](const Coords& c) {
        FieldElement acc = field_.zero();
        for (std::size_t i = 0; i < 8; ++i) {
            if (c[i].is_zero()) continue;
            for (std::size_t j = 0; j < 8; ++j) {
                if (c[j].is_zero() || gram_.at(i, j).is_zero()) continue;
                acc += c[i] * gram_.at(i, j) * c[j];
            }
        }
        return acc / field_.from_int(2);
    };
    auto conj_of = [&](const Coords& c) {
        // <x,e> = sum_i x_i G[i][0] since e is basis 0.
        FieldElement t = field_.zero();
        for (std::size_t i = 0; i < 8; ++i) t += c[i] * gram_.at(i, 0);
        Coords out;
        for (std::size_t i = 0; i < 8; ++i) out[i] = -c[i];
        out[0] += t;
        return out;
    };

    // Identity element and unit norm.
    for (std::size_t j = 0; j < 8; ++j) {
        if (table_[0][j] != unit_coords(field_, j) || table_[j][0] != unit_coords(field_, j)) {
            fail("basis 0 is not a two-sided identity");
        }
    }
    if (!(norm_of(unit_coords(field_, 0)) == field_.one())) fail("N(e) != 1");
    if (gram_.rank() != 8) fail("polarization form is degenerate");
    for (std::size_t i = 1; i < 8; ++i) {
        if (!gram_.at(i, 0).is_zero()) fail("basis element " + std::to_string(i) + " is not pure");
    }
    if (pure_gram_.rank() != 7) fail("polarization degenerate on the pure part");

    // Composition law and anti-involution on all 64 basis pairs.
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            const Coords prod = table_[i][j];
            const FieldElement ni = norm_of(unit_coords(field_, i));
            const FieldElement nj = norm_of(unit_coords(field_, j));
            if (!(norm_of(prod) == ni * nj)) fail("composition law fails on basis pair");
            const Coords lhs = conj_of(prod);
            const Coords rhs = raw_multiply(conj_of(unit_coords(field_, j)),
                                            conj_of(unit_coords(field_, i)));
            if (lhs != rhs) fail("conjugation is not an anti-involution on basis pair");
        }
    }

    // Composition and x conj(x) = N(x) e on a fixed batch of random pairs;
    // basis checks alone do not pin down a quartic identity.
    Rng rng(0x0c70u);
    for (int trial = 0; trial < 32; ++trial) {
        Coords x, y;
        for (std::size_t i = 0; i < 8; ++i) {
            x[i] = field_.random_element(rng);
            y[i] = field_.random_element(rng);
        }
        const Coords xy = raw_multiply(x, y);
        if (!(norm_of(xy) == norm_of(x) * norm_of(y))) fail("composition law fails");
        const Coords xxbar = raw_multiply(x, conj_of(x));
        Coords expect = zero_coords(field_);
        expect[0] = norm_of(x);
        if (xxbar != expect) fail("x conj(x) != N(x) e");
    }
}

void OctonionAlgebra::finalize() {
    // Pure basis: with the stored layout this is the coordinate inclusion.
    PureBasis pb{{}, ExactMatrix(8, 7, field_), ExactMatrix(7, 8, field_)};
    for (std::size_t i = 0; i < 7; ++i) {
        pb.vectors.push_back(basis_element(i + 1));
        pb.embedding.at(i + 1, i) = field_.one();
        pb.projection.at(i, i + 1) = field_.one();
    }
    pure_basis_ = std::move(pb);

    // Division-ness. Over Q an eight-variable form is anisotropic exactly
    // when definite (indefinite forms in >= 5 variables over Q are
    // isotropic); with N(e) = 1 definite means positive definite, so the
    // leading principal minors decide. Finite fields are always split.
    if (field_.kind() == FieldKind::Rationals) {
        bool positive_definite = true;
        for (std::size_t k = 1; k <= 8 && positive_definite; ++k) {
            const FieldElement minor = gram_.submatrix(0, 0, k, k).determinant();
            positive_definite = rational_positive(minor);
        }
        is_division_ = positive_definite;
    } else {
        is_division_ = false;
    }

    if (!is_division_) find_isotropic_witness();
}

void OctonionAlgebra::find_isotropic_witness() {
    auto norm_of = [&](const Coords& c) {
        FieldElement acc = field_.zero();
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) acc += c[i] * gram_.at(i, j) * c[j];
        return acc;  // 2N(x); zero-ness is what matters
    };

    if (descriptor_.construction == Construction::SplitZorn) {
        // Natural idempotent [[1,0],[0,0]].
        std::vector<FieldElement> nat(8, field_.zero());
        nat[0] = field_.one();
        const auto stored = from_natural_.apply(nat);
        Coords w;
        std::copy(stored.begin(), stored.end(), w.begin());
        witness_coords_ = w;
        return;
    }

    // Bounded search over small-support combinations.
    std::vector<FieldElement> scalars;
    if (field_.is_finite()) {
        if (field_.modulus() > 1000) return;  // witness stays unknown
        for (std::int64_t v = 0; v < field_.modulus(); ++v) scalars.push_back(field_.from_int(v));
    } else {
        for (std::int64_t v = -3; v <= 3; ++v) scalars.push_back(field_.from_int(v));
    }
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = i + 1; j < 8; ++j) {
            for (std::size_t k = j; k < 8; ++k) {
                for (const FieldElement& cj : scalars) {
                    for (const FieldElement& ck : scalars) {
                        Coords c = zero_coords(field_);
                        c[i] = field_.one();
                        c[j] += cj;
                        c[k] += ck;
                        if (norm_of(c).is_zero()) {
                            witness_coords_ = c;
                            return;
                        }
                    }
                }
            }
        }
    }
}

}  // namespace octorank
