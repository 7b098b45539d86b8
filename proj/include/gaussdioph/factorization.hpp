#pragma once

#include <optional>
#include <vector>

#include "gaussdioph/gaussian_int.hpp"

namespace gaussdioph {

GaussianInt pow(const GaussianInt& base, unsigned long exp);

// z/w when the division is exact, nullopt otherwise. w != 0.
std::optional<GaussianInt> exact_div(const GaussianInt& z, const GaussianInt& w);

struct OddPrimePower {
    GaussianInt prime;  // a Gaussian prime in O^I
    unsigned exp = 0;

    bool operator==(const OddPrimePower& o) const {
        return prime == o.prime && exp == o.exp;
    }
};

/**
 * CanonicalFactorization: z = i^unit_exp * (1+i)^ramified_exp * prod p_j^e_j
 * with every p_j a Gaussian prime in O^I, pairwise distinct, sorted by
 * (norm, re, im). Units factor as (unit_exp, 0, []).
 */
struct CanonicalFactorization {
    UnitPower unit_exp;
    unsigned ramified_exp = 0;
    std::vector<OddPrimePower> odd_factors;

    GaussianInt reconstruct() const;

    bool is_unit_factorization() const { return ramified_exp == 0 && odd_factors.empty(); }
    bool squarefree() const;
    size_t distinct_prime_count() const {
        return odd_factors.size() + (ramified_exp > 0 ? 1 : 0);
    }

    bool operator==(const CanonicalFactorization& o) const {
        return unit_exp == o.unit_exp && ramified_exp == o.ramified_exp &&
               odd_factors == o.odd_factors;
    }
};

// True iff N(z) is a rational prime, or z is an associate of a rational
// prime q with q = 3 mod 4. Throws on zero or unit input.
bool is_gaussian_prime(const GaussianInt& z);

// Canonical factorization of any nonzero z. Associates of z share
// ramified_exp and odd_factors and differ only in unit_exp.
CanonicalFactorization factor(const GaussianInt& z);

// Component-wise minimum of exponents over the union of primes, the unit
// exponent included, so the result is generally an associate (not an
// equal) of the Euclidean gcd.
CanonicalFactorization gcd_canonical(const GaussianInt& z, const GaussianInt& w);

// Euclidean-algorithm gcd under divrem; deterministic, returned unnormalized.
GaussianInt gcd_euclidean(const GaussianInt& z, const GaussianInt& w);

inline bool coprime(const GaussianInt& z, const GaussianInt& w) {
    return gcd_euclidean(z, w).is_unit();
}

// Membership witness for the G-set: factorizations with unit exponent 0.
// 1 is a member (empty product); i, -1, -i are not.
struct GMembership {
    GaussianInt value;
    CanonicalFactorization witness;
};

std::optional<GMembership> is_in_G(const GaussianInt& z);

inline bool in_G(const GaussianInt& z) {
    return !z.is_zero() && factor(z).unit_exp == UnitPower(0);
}

// Square root inside G: halve every exponent; a square iff unit_exp = 0 and
// all exponents are even.
std::optional<GaussianInt> g_square_root(const CanonicalFactorization& f);
std::optional<GaussianInt> g_square_root(const GaussianInt& z);

// Square root in Z[i] via exact integer square roots of the coordinates'
// half-sums; factoring-free, so it works at any scale. Returns the root
// with non-negative real part; the other root is its negation.
std::optional<GaussianInt> exact_square_root(const GaussianInt& z);

}  // namespace gaussdioph
