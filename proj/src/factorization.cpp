#include "gaussdioph/factorization.hpp"

#include <algorithm>
#include <stdexcept>

namespace gaussdioph {

namespace {

constexpr unsigned long kTrialDivisionLimit = 1'000'000;

bool rational_prime(const mpz_class& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 32) > 0;
}

// Trial-division factorization of n >= 1 over Z; desk scale only.
std::vector<std::pair<mpz_class, unsigned>> factor_norm(mpz_class n) {
    std::vector<std::pair<mpz_class, unsigned>> out;
    auto strip = [&](const mpz_class& d) {
        unsigned e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
            ++e;
        }
        if (e > 0) out.emplace_back(d, e);
    };
    strip(2);
    mpz_class d = 3;
    while (d <= kTrialDivisionLimit && d * d <= n) {
        strip(d);
        d += 2;
    }
    if (n > 1) {
        if (!rational_prime(n))
            throw std::domain_error("factor: input beyond supported trial-division scale");
        out.emplace_back(n, 1);
    }
    return out;
}

// Some square root of -1 mod q for a prime q = 1 mod 4: take c^((q-1)/4)
// for the first quadratic non-residue c.
mpz_class sqrt_minus_one(const mpz_class& q) {
    mpz_class half = (q - 1) / 2;
    mpz_class quarter = (q - 1) / 4;
    for (mpz_class c = 2;; ++c) {
        mpz_class r;
        mpz_powm(r.get_mpz_t(), c.get_mpz_t(), half.get_mpz_t(), q.get_mpz_t());
        if (r == q - 1) {
            mpz_class s;
            mpz_powm(s.get_mpz_t(), c.get_mpz_t(), quarter.get_mpz_t(), q.get_mpz_t());
            return s;
        }
    }
}

// Removes the largest power of p from w, returning the exponent.
unsigned strip_factor(GaussianInt& w, const GaussianInt& p) {
    unsigned e = 0;
    while (true) {
        auto q = exact_div(w, p);
        if (!q) return e;
        w = *q;
        ++e;
    }
}

UnitPower unit_exponent_of_unit(const GaussianInt& u) {
    for (long n = 0; n < 4; ++n)
        if (UnitPower(n).to_gaussian() == u) return UnitPower(n);
    throw std::logic_error("unit_exponent_of_unit: not a unit");
}

bool factor_order(const OddPrimePower& a, const OddPrimePower& b) {
    int c = ::cmp(a.prime.norm(), b.prime.norm());
    if (c != 0) return c < 0;
    return cmp(a.prime, b.prime) < 0;
}

}  // namespace

GaussianInt pow(const GaussianInt& base, unsigned long exp) {
    GaussianInt result(1, 0);
    GaussianInt b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

std::optional<GaussianInt> exact_div(const GaussianInt& z, const GaussianInt& w) {
    if (w.is_zero()) throw std::domain_error("exact_div: division by zero");
    const mpz_class n = w.norm();
    const GaussianInt p = z * w.conj();
    if (!mpz_divisible_p(p.re().get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(p.im().get_mpz_t(), n.get_mpz_t()))
        return std::nullopt;
    return GaussianInt(p.re() / n, p.im() / n);
}

GaussianInt CanonicalFactorization::reconstruct() const {
    GaussianInt acc = unit_exp.to_gaussian();
    acc *= pow(one_plus_i(), ramified_exp);
    for (const auto& f : odd_factors) acc *= pow(f.prime, f.exp);
    return acc;
}

bool CanonicalFactorization::squarefree() const {
    if (ramified_exp > 1) return false;
    for (const auto& f : odd_factors)
        if (f.exp > 1) return false;
    return true;
}

bool is_gaussian_prime(const GaussianInt& z) {
    if (z.is_zero()) throw std::domain_error("is_gaussian_prime: zero input");
    if (z.is_unit()) throw std::domain_error("is_gaussian_prime: unit input");
    if (rational_prime(z.norm())) return true;
    mpz_class q;
    if (z.im() == 0)
        q = abs(z.re());
    else if (z.re() == 0)
        q = abs(z.im());
    else
        return false;
    return mpz_fdiv_ui(q.get_mpz_t(), 4) == 3 && rational_prime(q);
}

CanonicalFactorization factor(const GaussianInt& z) {
    if (z.is_zero()) throw std::domain_error("factor: zero input");
    CanonicalFactorization out;
    if (z.is_unit()) {
        out.unit_exp = unit_exponent_of_unit(z);
        return out;
    }

    GaussianInt w = z;
    auto norm_factors = factor_norm(z.norm());

    for (const auto& [q, e] : norm_factors) {
        if (q == 2) {
            out.ramified_exp = e;  // v2(N(z)) equals the exponent of (1+i)
            for (unsigned k = 0; k < e; ++k) {
                auto d = exact_div(w, one_plus_i());
                if (!d) throw std::logic_error("factor: ramified division failed");
                w = *d;
            }
        } else if (mpz_fdiv_ui(q.get_mpz_t(), 4) == 3) {
            GaussianInt p = normalize_odd_to_OI(GaussianInt(q, 0)).second;  // -q
            unsigned f = strip_factor(w, p);
            if (f > 0) out.odd_factors.push_back({p, f});
        } else {
            // q = 1 mod 4 splits; find one prime above q via gcd(q, s+i).
            mpz_class s = sqrt_minus_one(q);
            GaussianInt g = gcd_euclidean(GaussianInt(q, 0), GaussianInt(s, 1));
            GaussianInt p = normalize_odd_to_OI(g).second;
            unsigned a = strip_factor(w, p);
            if (a > 0) out.odd_factors.push_back({p, a});
            GaussianInt pc = p.conj();  // also in O^I, non-associate of p
            unsigned b = strip_factor(w, pc);
            if (b > 0) out.odd_factors.push_back({pc, b});
        }
    }

    out.unit_exp = unit_exponent_of_unit(w);
    std::sort(out.odd_factors.begin(), out.odd_factors.end(), factor_order);
    return out;
}

CanonicalFactorization gcd_canonical(const GaussianInt& z, const GaussianInt& w) {
    if (z.is_zero() || w.is_zero()) throw std::domain_error("gcd_canonical: zero input");
    CanonicalFactorization fz = factor(z);
    CanonicalFactorization fw = factor(w);
    CanonicalFactorization out;
    out.unit_exp = UnitPower(std::min(fz.unit_exp.value(), fw.unit_exp.value()));
    out.ramified_exp = std::min(fz.ramified_exp, fw.ramified_exp);
    // both factor lists are sorted with the same order
    size_t i = 0, j = 0;
    while (i < fz.odd_factors.size() && j < fw.odd_factors.size()) {
        const auto& a = fz.odd_factors[i];
        const auto& b = fw.odd_factors[j];
        if (a.prime == b.prime) {
            out.odd_factors.push_back({a.prime, std::min(a.exp, b.exp)});
            ++i;
            ++j;
        } else if (factor_order(a, b)) {
            ++i;
        } else {
            ++j;
        }
    }
    return out;
}

GaussianInt gcd_euclidean(const GaussianInt& z, const GaussianInt& w) {
    if (z.is_zero() && w.is_zero())
        throw std::domain_error("gcd_euclidean: gcd(0, 0) is undefined");
    GaussianInt a = z, b = w;
    while (!b.is_zero()) {
        GaussianInt r = divrem(a, b).second;
        a = b;
        b = r;
    }
    return a;
}

std::optional<GMembership> is_in_G(const GaussianInt& z) {
    if (z.is_zero()) return std::nullopt;
    CanonicalFactorization f = factor(z);
    if (f.unit_exp != UnitPower(0)) return std::nullopt;
    return GMembership{z, std::move(f)};
}

std::optional<GaussianInt> g_square_root(const CanonicalFactorization& f) {
    if (f.unit_exp != UnitPower(0)) return std::nullopt;
    if (f.ramified_exp % 2 != 0) return std::nullopt;
    CanonicalFactorization half;
    half.ramified_exp = f.ramified_exp / 2;
    for (const auto& pf : f.odd_factors) {
        if (pf.exp % 2 != 0) return std::nullopt;
        half.odd_factors.push_back({pf.prime, pf.exp / 2});
    }
    return half.reconstruct();
}

std::optional<GaussianInt> g_square_root(const GaussianInt& z) {
    if (z.is_zero()) return std::nullopt;
    return g_square_root(factor(z));
}

std::optional<GaussianInt> exact_square_root(const GaussianInt& z) {
    if (z.is_zero()) return GaussianInt(0, 0);
    // (c+di)^2 = z forces c^2 = (re+|z|)/2 and d^2 = (|z|-re)/2 with
    // |z| = sqrt(N(z)); everything stays in exact integer arithmetic, so
    // this scales past where trial-division factoring gives out.
    const mpz_class n = z.norm();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    mpz_class c2 = z.re() + r;
    if (mpz_odd_p(c2.get_mpz_t())) return std::nullopt;
    c2 /= 2;
    mpz_class d2 = (r - z.re()) / 2;
    if (mpz_perfect_square_p(c2.get_mpz_t()) == 0 ||
        mpz_perfect_square_p(d2.get_mpz_t()) == 0)
        return std::nullopt;
    mpz_class c, d;
    mpz_sqrt(c.get_mpz_t(), c2.get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), d2.get_mpz_t());
    if (z.im() < 0) d = -d;
    GaussianInt s(c, d);
    if (s * s != z) return std::nullopt;
    return s;
}

}  // namespace gaussdioph
