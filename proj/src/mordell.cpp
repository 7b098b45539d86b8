#include "gaussdioph/mordell.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gaussdioph {

namespace {

// Prime-power blocks of a G-element's factorization. A block goes wholly to
// one side of a splitting, which is what keeps the two sides coprime.
std::vector<GaussianInt> blocks_of(const CanonicalFactorization& f) {
    std::vector<GaussianInt> blocks;
    if (f.ramified_exp > 0) blocks.push_back(pow(one_plus_i(), f.ramified_exp));
    for (const auto& pf : f.odd_factors) blocks.push_back(pow(pf.prime, pf.exp));
    return blocks;
}

std::vector<std::pair<GaussianInt, GaussianInt>> splittings(const CanonicalFactorization& f) {
    std::vector<GaussianInt> blocks = blocks_of(f);
    const size_t n = blocks.size();
    std::vector<std::pair<GaussianInt, GaussianInt>> out;
    out.reserve(size_t{1} << n);
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        GaussianInt lhs(1, 0), rhs(1, 0);
        for (size_t i = 0; i < n; ++i) {
            if (mask & (size_t{1} << i))
                lhs *= blocks[i];
            else
                rhs *= blocks[i];
        }
        out.emplace_back(lhs, rhs);
    }
    return out;
}

}  // namespace

std::vector<MordellSolution> mordell_solutions(const MordellInstance& inst) {
    if (inst.k.is_zero() || inst.V.is_zero())
        throw std::domain_error("mordell_solutions: kV must be nonzero");
    CanonicalFactorization fk = factor(inst.k);
    CanonicalFactorization fV = factor(inst.V);
    if (fk.unit_exp != UnitPower(0) || fV.unit_exp != UnitPower(0))
        throw std::domain_error("mordell_solutions: k and V must belong to G");
    if (!gcd_euclidean(inst.k, inst.V).is_unit())
        throw std::domain_error("mordell_solutions: k and V must be coprime");

    std::vector<MordellSolution> out;
    for (const auto& [k1, k2] : splittings(fk))
        for (const auto& [P, Q] : splittings(fV))
            for (long t = 0; t < 4; ++t) out.push_back({UnitPower(t), k1, k2, P, Q});

    std::sort(out.begin(), out.end(), [](const MordellSolution& a, const MordellSolution& b) {
        if (a.t.value() != b.t.value()) return a.t.value() < b.t.value();
        std::string ak = to_string(a.k1), bk = to_string(b.k1);
        if (ak != bk) return ak < bk;
        return to_string(a.P) < to_string(b.P);
    });
    return out;
}

UnitPower mordell_normalize(const GaussianInt& X0, const GaussianInt& Y0) {
    if (X0.is_zero() || Y0.is_zero())
        throw std::domain_error("mordell_normalize: zero coordinate");
    // i^n X0 lands in G for exactly one n; the pair is valid iff the same n
    // also pulls Y0 into G.
    UnitPower n = factor(X0).unit_exp.inverse();
    if (factor(n.inverse().apply(Y0)).unit_exp != UnitPower(0))
        throw std::domain_error("mordell_normalize: pair is not a Mordell solution of a G-instance");
    return n;
}

bool verify_mordell(const GaussianInt& X, const GaussianInt& Y, const MordellInstance& inst) {
    if (X.is_zero() && Y.is_zero()) return false;
    if (X * Y != inst.k * inst.V * inst.V) return false;
    return gcd_euclidean(X, Y).is_unit();
}

}  // namespace gaussdioph
