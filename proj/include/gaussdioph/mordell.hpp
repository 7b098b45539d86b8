#pragma once

#include <vector>

#include "gaussdioph/factorization.hpp"
#include "gaussdioph/gaussian_int.hpp"

namespace gaussdioph {

// Constants of the system XY = k V^2, gcd(X, Y) in U, with k, V in G,
// kV != 0 and gcd(k, V) a unit.
struct MordellInstance {
    GaussianInt k;
    GaussianInt V;
};

// One solution X = i^t k1 P^2, Y = i^-t k2 Q^2 with k = k1 k2, V = PQ,
// gcd(k1 P, k2 Q) a unit and k1, k2, P, Q in G.
struct MordellSolution {
    UnitPower t;
    GaussianInt k1, k2, P, Q;

    GaussianInt X() const { return (k1 * P * P).times_i_pow(t.value()); }
    GaussianInt Y() const { return (k2 * Q * Q).times_i_pow(-t.value()); }
};

// All solutions of the instance: every coprime block splitting of k and V
// crossed with t in 0..3, ordered by (t, text of k1, text of P).
// Throws std::domain_error on an invalid instance.
std::vector<MordellSolution> mordell_solutions(const MordellInstance& inst);

// The unique n with i^n X0 and i^-n Y0 both in G; throws std::domain_error
// when no such n exists (the pair is not a Mordell solution of a G-instance).
UnitPower mordell_normalize(const GaussianInt& X0, const GaussianInt& Y0);

// True iff XY = k V^2 and gcd(X, Y) is a unit.
bool verify_mordell(const GaussianInt& X, const GaussianInt& Y, const MordellInstance& inst);

}  // namespace gaussdioph
