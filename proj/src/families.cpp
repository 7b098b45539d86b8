#include "gaussdioph/families.hpp"

#include <stdexcept>

namespace gaussdioph {

namespace {

const GaussianInt kI(0, 1);
const GaussianInt kTwoI(0, 2);  // (1+i)^2
const GaussianInt kOneMinusI(1, -1);

GaussianInt y_coefficient(Family f) {
    switch (f) {
        case Family::A: return GaussianInt(1, 0);
        case Family::B1:
        case Family::B2:
        case Family::D: return kI;
        case Family::CPlus: return one_plus_i();
        default: return kOneMinusI;
    }
}

GaussianInt original_residual(Family f, const Triple& t) {
    GaussianInt r = t.X.square() + y_coefficient(f) * t.Y.square();
    if (f == Family::D)
        r += one_plus_i() * t.Z.square();
    else
        r += t.Z.square();
    return r;
}

// Canonical-form residual; for B1 the sign of +-i is explicit.
GaussianInt canonical_residual(Family f, const Triple& t, int b1_sign = +1) {
    switch (f) {
        case Family::A:
        case Family::B2:
        case Family::CPlus:
        case Family::CMinus:
            return t.X.square() + y_coefficient(f) * t.Y.square() - t.Z.square();
        case Family::B1:
            return t.X.square() + t.Z.square() -
                   GaussianInt(0, b1_sign) * t.Y.square();
        default:  // D
            return t.X.square() + kI * t.Y.square() - one_plus_i() * t.Z.square();
    }
}

bool gcd3_unit(const GaussianInt& a, const GaussianInt& b, const GaussianInt& c) {
    GaussianInt g = gcd_euclidean(a, b);
    g = gcd_euclidean(g, c);
    return g.is_unit();
}

// input = i^pow * value
struct Normalized {
    GaussianInt value;
    UnitPower pow;
};

Normalized strip_to_OI(const GaussianInt& v) {
    auto [n, b] = normalize_odd_to_OI(v);
    return {b, n};
}

Normalized strip_to_G(const GaussianInt& v) {
    UnitPower u = factor(v).unit_exp;
    return {v.times_i_pow(-u.value()), u};
}

GaussianInt exact_half(const GaussianInt& v, const char* what) {
    if (mpz_odd_p(v.re().get_mpz_t()) || mpz_odd_p(v.im().get_mpz_t()))
        throw std::domain_error(std::string(what) + ": halving not exact");
    return {v.re() / 2, v.im() / 2};
}

int unit_exp_of(const GaussianInt& v) { return factor(v).unit_exp.value(); }

GaussianInt require_value(std::optional<GaussianInt> v, const char* what) {
    if (!v) throw std::domain_error(std::string(what) + ": malformed input");
    return *v;
}

void validate_discriminant_seed(const GaussianInt& P, const GaussianInt& Q, const char* what) {
    std::string w(what);
    if (P.is_zero() || Q.is_zero()) throw std::domain_error(w + ": P and Q must be nonzero");
    if (!in_G(P) || !in_G(Q)) throw std::domain_error(w + ": P and Q must belong to G");
    if (!gcd_euclidean(P, Q).is_unit()) throw std::domain_error(w + ": P and Q must be coprime");
    if (!is_even(Q)) throw std::domain_error(w + ": Q must be even");
}

}  // namespace

const char* to_string(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B1: return "B1";
        case Family::B2: return "B2";
        case Family::CPlus: return "C+";
        case Family::CMinus: return "C-";
        default: return "D";
    }
}

std::optional<Family> parse_family(std::string_view text) {
    if (text == "A") return Family::A;
    if (text == "B1") return Family::B1;
    if (text == "B2") return Family::B2;
    if (text == "C+") return Family::CPlus;
    if (text == "C-") return Family::CMinus;
    if (text == "D") return Family::D;
    return std::nullopt;
}

Triple::Triple(GaussianInt x, GaussianInt y, GaussianInt z)
    : X(std::move(x)), Y(std::move(y)), Z(std::move(z)) {
    primitive = xyz_nonzero() && gcd3_unit(X, Y, Z);
}

int cmp(const Triple& a, const Triple& b) {
    int c = cmp(a.X, b.X);
    if (c != 0) return c;
    c = cmp(a.Y, b.Y);
    if (c != 0) return c;
    return cmp(a.Z, b.Z);
}

Triple CanonicalCertificate::apply(const Triple& canonical) const {
    std::array<const GaussianInt*, 3> canon{&canonical.X, &canonical.Y, &canonical.Z};
    std::array<GaussianInt, 3> out;
    for (int j = 0; j < 3; ++j) out[source_slot[j]] = unit_pow[j].apply(*canon[j]);
    return {out[0], out[1], out[2]};
}

bool CanonicalCertificate::is_identity() const {
    return source_slot == std::array<int, 3>{0, 1, 2} && unit_pow[0] == UnitPower(0) &&
           unit_pow[1] == UnitPower(0) && unit_pow[2] == UnitPower(0);
}

bool check_solution(Family f, const Triple& t, Form form) {
    if (!t.xyz_nonzero()) return false;
    if (form == Form::Original) return original_residual(f, t).is_zero();
    if (f == Family::B1)
        return canonical_residual(f, t, +1).is_zero() || canonical_residual(f, t, -1).is_zero();
    return canonical_residual(f, t).is_zero();
}

std::optional<Form> satisfied_form(Family f, const Triple& t) {
    if (check_solution(f, t, Form::Original)) return Form::Original;
    if (check_solution(f, t, Form::Canonical)) return Form::Canonical;
    return std::nullopt;
}

bool divisibility_profile(Family f, const Triple& t) {
    if (!t.xyz_nonzero() || !satisfied_form(f, t) || !t.primitive)
        throw std::domain_error("divisibility_profile: not a primitive solution of the family");
    switch (f) {
        case Family::A: {
            // exactly one even coordinate, and it carries (1+i)^2
            const GaussianInt* even = nullptr;
            int evens = 0;
            for (const GaussianInt* g : {&t.X, &t.Y, &t.Z})
                if (is_even(*g)) {
                    even = g;
                    ++evens;
                }
            return evens == 1 && classify(*even) == ParityClass::E0;
        }
        case Family::B1:
            return is_odd(t.X) && is_odd(t.Z) && classify(t.Y) == ParityClass::EI;
        case Family::B2:
        case Family::CPlus:
        case Family::CMinus:
            return is_odd(t.X) && is_odd(t.Z) && classify(t.Y) == ParityClass::E0;
        default:  // D
            return is_odd(t.X) && is_odd(t.Y) && is_odd(t.Z);
    }
}

std::pair<Triple, CanonicalCertificate> reduce_to_canonical(Family f, const Triple& t) {
    if (!divisibility_profile(f, t))
        throw std::domain_error("reduce_to_canonical: divisibility profile violated");

    std::array<const GaussianInt*, 3> in{&t.X, &t.Y, &t.Z};

    // Normalize coordinate j and record where each canonical slot came from.
    auto assemble = [&](int sx, int sy, int sz, const Normalized& nx, const Normalized& ny,
                        const Normalized& nz) {
        Triple canon(nx.value, ny.value, nz.value);
        CanonicalCertificate cert;
        cert.source_slot = {sx, sy, sz};
        cert.unit_pow = {nx.pow, ny.pow, nz.pow};
        return std::make_pair(canon, cert);
    };

    std::vector<std::pair<Triple, CanonicalCertificate>> candidates;
    if (f == Family::A) {
        int even_idx = is_even(t.X) ? 0 : (is_even(t.Y) ? 1 : 2);
        int oa = even_idx == 0 ? 1 : 0;
        int ob = even_idx == 2 ? 1 : 2;
        Normalized a = strip_to_OI(*in[oa]);
        Normalized e = strip_to_G(*in[even_idx]);
        Normalized b = strip_to_OI(*in[ob]);
        candidates.push_back(assemble(oa, even_idx, ob, a, e, b));
        candidates.push_back(assemble(ob, even_idx, oa, b, e, a));
    } else if (f == Family::D) {
        Normalized x = strip_to_OI(t.X), y = strip_to_OI(t.Y), z = strip_to_OI(t.Z);
        candidates.push_back(assemble(0, 1, 2, x, y, z));
    } else {
        Normalized x = strip_to_OI(t.X);
        Normalized y = strip_to_G(t.Y);
        Normalized z = strip_to_OI(t.Z);
        candidates.push_back(assemble(0, 1, 2, x, y, z));
        candidates.push_back(assemble(2, 1, 0, z, y, x));
    }

    for (auto& cand : candidates) {
        if (!check_solution(f, cand.first, Form::Canonical)) continue;
        if (f == Family::CPlus || f == Family::CMinus) {
            // The C parametrization reaches only the Z-sign with an even
            // (1+i)-valuation of X+Z; the family is not closed under
            // negating a single odd coordinate.
            GaussianInt s = cand.first.X + cand.first.Z;
            int v = 0;
            while (is_even(s)) {
                s = *exact_div(s, one_plus_i());
                ++v;
            }
            if (v % 2 == 1) {
                cand.first = Triple(cand.first.X, cand.first.Y, -cand.first.Z);
                cand.second.unit_pow[2] = cand.second.unit_pow[2] + UnitPower(2);
            }
        }
        return cand;
    }
    throw std::logic_error("reduce_to_canonical: no unit rotation reaches the canonical form");
}

Triple generate(Family f, const FamilyParams& params) {
    const GaussianInt &P = params.P, &Q = params.Q;
    if (P.is_zero() || Q.is_zero())
        throw std::domain_error("generate: P and Q must be nonzero");
    if (!in_G(P) || !in_G(Q))
        throw std::domain_error("generate: P and Q must belong to G");
    if (!gcd_euclidean(P, Q).is_unit())
        throw std::domain_error("generate: P and Q must be coprime");
    if (params.sign != 1 && params.sign != -1)
        throw std::domain_error("generate: sign must be +1 or -1");

    const long t = params.t.value();
    const GaussianInt P2 = P * P, Q2 = Q * Q, PQ = P * Q;
    const GaussianInt sgn_t(t % 2 == 0 ? 1 : -1, 0);  // (-1)^t

    switch (f) {
        case Family::A: {
            if (!is_even(PQ))
                throw std::domain_error("generate: family A requires PQ even");
            GaussianInt c = sgn_t * Q2;
            return {(P2 - c).times_i_pow(t + 1), kTwoI * PQ, (P2 + c).times_i_pow(t + 1)};
        }
        case Family::B1: {
            if (!is_odd(P) || !is_odd(Q))
                throw std::domain_error("generate: family B1 requires odd P and Q");
            GaussianInt c = GaussianInt(params.sign, 0) * sgn_t * kI * Q2;
            auto xq = exact_div(P2 + c, one_plus_i());
            auto zq = exact_div(P2 - c, one_plus_i());
            if (!xq || !zq)
                throw std::logic_error("generate: B1 quotient not exact");
            return {xq->times_i_pow(t + 1), one_plus_i() * PQ, zq->times_i_pow(t)};
        }
        case Family::B2: {
            GaussianInt c = sgn_t * kI * Q2;
            return {(P2 - c).times_i_pow(t + 1), kTwoI * PQ, (P2 + c).times_i_pow(t + 1)};
        }
        case Family::CPlus:
        case Family::CMinus: {
            if (!is_odd(P))
                throw std::domain_error("generate: family C requires odd P");
            GaussianInt c = sgn_t * y_coefficient(f) * Q2;
            return {(P2 - c).times_i_pow(t + 1), kTwoI * PQ, (P2 + c).times_i_pow(t + 1)};
        }
        default: {  // D
            if (!is_even(Q))
                throw std::domain_error("generate: family D requires Q even");
            GaussianInt w = one_plus_i() * kI * Q2;  // (1+i) i Q^2
            GaussianInt X = P2 - w;
            GaussianInt Y = P2 - GaussianInt(2, 0) * one_plus_i() * PQ + w;
            GaussianInt Z = P2 - kTwoI * PQ + w;
            return {X, Y, Z};
        }
    }
}

FamilyParams param_recover(Family f, const Triple& t) {
    if (f == Family::D)
        throw std::domain_error("param_recover: family D is unsupported");
    if (!t.xyz_nonzero())
        throw std::domain_error("param_recover: malformed input");

    FamilyParams params;
    switch (f) {
        case Family::A: {
            if ((t.Z - t.X).is_zero() || (t.Z + t.X).is_zero())
                throw std::domain_error("param_recover: malformed input");
            GaussianInt x = require_value(exact_div(t.Z - t.X, kTwoI), "param_recover");
            GaussianInt y = require_value(exact_div(t.Z + t.X, kTwoI), "param_recover");
            long tt = (4 - unit_exp_of(x)) % 4;
            GaussianInt Q = require_value(g_square_root(x.times_i_pow(tt)), "param_recover");
            GaussianInt P = require_value(g_square_root(y.times_i_pow(-tt)), "param_recover");
            params = {UnitPower(tt), P, Q, +1};
            break;
        }
        case Family::B2: {
            if ((t.Z - t.X).is_zero() || (t.Z + t.X).is_zero())
                throw std::domain_error("param_recover: malformed input");
            GaussianInt x = require_value(exact_div(t.Z - t.X, kTwoI), "param_recover");
            GaussianInt y = require_value(exact_div(t.Z + t.X, kTwoI), "param_recover");
            long tt = unit_exp_of(y);
            GaussianInt Q = require_value(g_square_root(x.times_i_pow(tt - 1)), "param_recover");
            GaussianInt P = require_value(g_square_root(y.times_i_pow(-tt)), "param_recover");
            params = {UnitPower(tt), P, Q, +1};
            break;
        }
        case Family::CPlus:
        case Family::CMinus: {
            if ((t.Z - t.X).is_zero() || (t.Z + t.X).is_zero())
                throw std::domain_error("param_recover: malformed input");
            GaussianInt x =
                require_value(exact_div(t.Z - t.X, y_coefficient(f) * kTwoI), "param_recover");
            GaussianInt y = require_value(exact_div(t.Z + t.X, kTwoI), "param_recover");
            long tt = unit_exp_of(y);
            GaussianInt Q = require_value(g_square_root(x.times_i_pow(tt)), "param_recover");
            GaussianInt P = require_value(g_square_root(y.times_i_pow(-tt)), "param_recover");
            params = {UnitPower(tt), P, Q, +1};
            break;
        }
        default: {  // B1
            int sign;
            if (canonical_residual(Family::B1, t, +1).is_zero())
                sign = +1;
            else if (canonical_residual(Family::B1, t, -1).is_zero())
                sign = -1;
            else
                throw std::domain_error("param_recover: malformed input");
            GaussianInt xn = t.X + kI * t.Z;
            GaussianInt wn = (t.X - kI * t.Z) * GaussianInt(sign, 0);
            if (xn.is_zero() || wn.is_zero())
                throw std::domain_error("param_recover: malformed input");
            GaussianInt x = require_value(exact_div(xn, one_plus_i()), "param_recover");
            GaussianInt w = require_value(exact_div(wn, one_plus_i()), "param_recover");
            long tt = unit_exp_of(x);
            GaussianInt P = require_value(g_square_root(x.times_i_pow(-tt)), "param_recover");
            GaussianInt Q = require_value(g_square_root(w.times_i_pow(tt - 1)), "param_recover");
            params = {UnitPower(tt), P, Q, sign};
            break;
        }
    }

    if (generate(f, params) != t)
        throw std::domain_error("param_recover: regeneration mismatch");
    return params;
}

SystemSolution system_from_D(const Triple& t) {
    if (!check_solution(Family::D, t, Form::Canonical))
        throw std::domain_error("system_from_D: not a canonical family-D solution");
    if (!is_odd(t.X) || !is_odd(t.Y) || !is_odd(t.Z))
        throw std::domain_error("system_from_D: coordinates must be odd");
    GaussianInt m = exact_half(t.X + t.Z, "system_from_D");
    GaussianInt n = exact_half(t.X - t.Z, "system_from_D");
    GaussianInt k = exact_half(t.Z + t.Y, "system_from_D");
    GaussianInt l = exact_half(t.Z - t.Y, "system_from_D");
    return {m, n, k, l, m + n};
}

Triple D_from_system(const SystemSolution& s) {
    if (s.x - s.y != s.u + s.v)
        throw std::domain_error("D_from_system: x - y = u + v violated");
    if (s.x * s.y != kI * s.u * s.v)
        throw std::domain_error("D_from_system: xy = iuv violated");
    if ((s.x.is_zero() && s.y.is_zero()) || !gcd_euclidean(s.x, s.y).is_unit())
        throw std::domain_error("D_from_system: gcd(x, y) must be a unit");
    if ((s.u.is_zero() && s.v.is_zero()) || !gcd_euclidean(s.u, s.v).is_unit())
        throw std::domain_error("D_from_system: gcd(u, v) must be a unit");
    if (!is_even(s.u * s.v))
        throw std::domain_error("D_from_system: uv must be even");
    return {s.x + s.y, s.u - s.v, s.x - s.y};
}

std::vector<std::pair<GaussianInt, GaussianInt>> quadratic_root_solutions(const GaussianInt& u,
                                                                          const GaussianInt& v) {
    GaussianInt g = u + v;
    if (g.is_zero() || !is_OI(g))
        throw std::domain_error("quadratic_root_solutions: u + v must lie in O^I");
    if (!is_even(u * v))
        throw std::domain_error("quadratic_root_solutions: uv must be even");
    if (!gcd_euclidean(u, v).is_unit())
        throw std::domain_error("quadratic_root_solutions: u and v must be coprime");

    GaussianInt disc2 = g * g + GaussianInt(0, 4) * u * v;
    auto root = exact_square_root(disc2);
    if (!root) return {};

    std::vector<std::pair<GaussianInt, GaussianInt>> out;
    for (const GaussianInt& d : {*root, -*root}) {
        GaussianInt xn = g + d, yn = d - g;
        if (mpz_odd_p(xn.re().get_mpz_t()) || mpz_odd_p(xn.im().get_mpz_t())) continue;
        out.emplace_back(GaussianInt(xn.re() / 2, xn.im() / 2),
                         GaussianInt(yn.re() / 2, yn.im() / 2));
    }
    return out;
}

DiscriminantParams discriminant_params(const GaussianInt& P, const GaussianInt& Q) {
    validate_discriminant_seed(P, Q, "discriminant_params");
    GaussianInt P2 = P * P, w = kOneMinusI * Q * Q, PQ = P * Q;
    return {P2 + w, P2 - w - GaussianInt(1, 2) * PQ, PQ};
}

std::pair<GaussianInt, GaussianInt> system_roots_from_params(const GaussianInt& P,
                                                             const GaussianInt& Q) {
    validate_discriminant_seed(P, Q, "system_roots_from_params");
    GaussianInt PQ = P * Q;
    return {P * P - kI * PQ, kOneMinusI * Q * Q + kI * PQ};
}

}  // namespace gaussdioph
