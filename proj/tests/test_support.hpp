#pragma once

#include <random>

#include "gaussdioph/factorization.hpp"
#include "gaussdioph/families.hpp"

// Deterministic random generators shared by the unit and acceptance suites.
namespace testsupport {

using gaussdioph::Family;
using gaussdioph::FamilyParams;
using gaussdioph::GaussianInt;
using gaussdioph::UnitPower;

inline GaussianInt random_gauss(std::mt19937_64& rng, long lim) {
    std::uniform_int_distribution<long> d(-lim, lim);
    return {d(rng), d(rng)};
}

inline GaussianInt random_nonzero(std::mt19937_64& rng, long lim) {
    while (true) {
        GaussianInt z = random_gauss(rng, lim);
        if (!z.is_zero()) return z;
    }
}

// Random element of G: any nonzero value with its unit stripped.
inline GaussianInt random_g_element(std::mt19937_64& rng, long lim) {
    GaussianInt z = random_nonzero(rng, lim);
    return z.times_i_pow(-gaussdioph::factor(z).unit_exp.value());
}

// Random params satisfying the family's side conditions; coordinates of P
// and Q bounded by lim.
inline FamilyParams random_params(Family f, std::mt19937_64& rng, long lim) {
    std::uniform_int_distribution<int> d4(0, 3);
    while (true) {
        GaussianInt P = random_g_element(rng, lim);
        GaussianInt Q = random_g_element(rng, lim);
        if (!gaussdioph::gcd_euclidean(P, Q).is_unit()) continue;
        FamilyParams params{UnitPower(d4(rng)), P, Q, d4(rng) % 2 == 0 ? +1 : -1};
        switch (f) {
            case Family::A:
                if (!gaussdioph::is_even(P * Q)) continue;
                params.sign = +1;
                break;
            case Family::B1:
                if (!gaussdioph::is_odd(P) || !gaussdioph::is_odd(Q)) continue;
                break;
            case Family::B2:
                params.sign = +1;
                break;
            case Family::CPlus:
            case Family::CMinus:
                if (!gaussdioph::is_odd(P)) continue;
                params.sign = +1;
                break;
            case Family::D:
                if (!gaussdioph::is_even(Q)) continue;
                params.sign = +1;
                break;
        }
        return params;
    }
}

}  // namespace testsupport
