#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "gaussdioph/mordell.hpp"

using namespace gaussdioph;

namespace {

GaussianInt g(long re, long im) { return {re, im}; }

std::set<std::pair<std::string, std::string>> solution_pairs(
    const std::vector<MordellSolution>& sols) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& s : sols) out.insert({to_string(s.X()), to_string(s.Y())});
    return out;
}

// Independent ground truth: scan the whole coefficient box for divisors of
// C = kV^2 and keep the coprime ordered pairs. No factorization involved.
std::set<std::pair<std::string, std::string>> brute_force_pairs(const MordellInstance& inst) {
    GaussianInt C = inst.k * inst.V * inst.V;
    long lim = 1;
    while (mpz_class(lim) * lim < C.norm()) ++lim;
    std::set<std::pair<std::string, std::string>> out;
    for (long re = -lim; re <= lim; ++re)
        for (long im = -lim; im <= lim; ++im) {
            GaussianInt x(re, im);
            if (x.is_zero()) continue;
            auto y = exact_div(C, x);
            if (!y) continue;
            if (gcd_euclidean(x, *y).is_unit()) out.insert({to_string(x), to_string(*y)});
        }
    return out;
}

}  // namespace

TEST_CASE("worked instances") {
    MordellInstance inst{g(1, 0), g(1, 1)};
    auto sols = mordell_solutions(inst);
    CHECK(sols.size() == 8);
    bool found = false;
    for (const auto& s : sols)
        if (s.t == UnitPower(0) && s.k1 == g(1, 0) && s.k2 == g(1, 0) && s.P == g(1, 0) &&
            s.Q == g(1, 1)) {
            found = true;
            CHECK(s.X() == g(1, 0));
            CHECK(s.Y() == g(0, 2));
        }
    CHECK(found);
    CHECK(g(1, 0) * g(0, 2) == g(1, 1) * g(1, 1));  // XY = (1+i)^2

    CHECK(mordell_solutions({g(1, -2), g(1, 0)}).size() == 8);
    CHECK(mordell_solutions({g(1, 0), g(1, 0)}).size() == 4);

    // XY = 1 has exactly the four unit pairs
    auto units = solution_pairs(mordell_solutions({g(1, 0), g(1, 0)}));
    CHECK(units == std::set<std::pair<std::string, std::string>>{
                       {"1+0i", "1+0i"}, {"0+1i", "0-1i"}, {"-1+0i", "-1+0i"}, {"0-1i", "0+1i"}});
}

TEST_CASE("soundness: every emitted solution verifies") {
    for (MordellInstance inst : {MordellInstance{g(1, 0), g(1, 1)},
                                 MordellInstance{g(1, -2), g(1, 1)},
                                 MordellInstance{g(1, 1), g(1, -2)},
                                 MordellInstance{g(-3, 0), g(0, 2)}}) {
        auto sols = mordell_solutions(inst);
        for (const auto& s : sols) {
            CHECK(verify_mordell(s.X(), s.Y(), inst));
            CHECK(in_G(s.k1));
            CHECK(in_G(s.k2));
            CHECK(in_G(s.P));
            CHECK(in_G(s.Q));
            CHECK(s.k1 * s.k2 == inst.k);
            CHECK(s.P * s.Q == inst.V);
            CHECK(gcd_euclidean(s.k1 * s.P, s.k2 * s.Q).is_unit());
        }
    }
}

TEST_CASE("completeness against box-scan divisor enumeration") {
    for (MordellInstance inst : {MordellInstance{g(1, 0), g(1, 1)},
                                 MordellInstance{g(1, -2), g(1, 0)},
                                 MordellInstance{g(1, 1), g(1, -2)},
                                 MordellInstance{g(1, 0), g(0, 2)},   // V = (1+i)^2, not squarefree
                                 MordellInstance{g(-3, 0), g(1, 1)}}) {
        CHECK(solution_pairs(mordell_solutions(inst)) == brute_force_pairs(inst));
    }
}

TEST_CASE("solution count for squarefree coprime instances") {
    auto count = [](const MordellInstance& inst) {
        return mordell_solutions(inst).size();
    };
    // 4 * 2^{#primes(k)} * 2^{#primes(V)}
    CHECK(count({g(1, 1), g(1, -2)}) == 16);
    CHECK(count({g(-3, 0), g(1, 1)}) == 16);
    CHECK(count({g(1, 2) * g(1, -2), g(1, 1)}) == 32);  // k = 5 in G? no: (1+2i)(1-2i) = 5
}

TEST_CASE("emitted order is deterministic") {
    auto a = mordell_solutions({g(1, -2), g(1, 1)});
    auto b = mordell_solutions({g(1, -2), g(1, 1)});
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].t == b[i].t);
        CHECK(a[i].k1 == b[i].k1);
        CHECK(a[i].P == b[i].P);
    }
    for (size_t i = 1; i < a.size(); ++i) {
        auto key = [](const MordellSolution& s) {
            return std::make_tuple(s.t.value(), to_string(s.k1), to_string(s.P));
        };
        CHECK(key(a[i - 1]) < key(a[i]));
    }
}

TEST_CASE("mordell_normalize finds the unique G rotation") {
    CHECK(mordell_normalize(g(0, 1), g(2, 0)) == UnitPower(3));
    CHECK(mordell_normalize(g(1, 0), g(0, 2)) == UnitPower(0));
    CHECK(mordell_normalize(g(0, 2), g(1, 0)) == UnitPower(0));
    CHECK_THROWS_AS(mordell_normalize(g(1, 0), g(0, 1)), std::domain_error);
    CHECK_THROWS_AS(mordell_normalize(g(0, 0), g(1, 0)), std::domain_error);
}

TEST_CASE("verify_mordell checks the product and the gcd") {
    MordellInstance inst{g(1, 0), g(1, 1)};
    CHECK(verify_mordell(g(1, 0), g(0, 2), inst));
    CHECK(verify_mordell(g(0, 2), g(1, 0), inst));
    CHECK_FALSE(verify_mordell(g(1, 1), g(1, 1), inst));  // product right, gcd not a unit
    CHECK_FALSE(verify_mordell(g(2, 0), g(1, 0), inst));
    CHECK_FALSE(verify_mordell(g(0, 0), g(0, 0), inst));
}

TEST_CASE("invalid instances are rejected") {
    CHECK_THROWS_AS(mordell_solutions({g(0, 0), g(1, 0)}), std::domain_error);
    CHECK_THROWS_AS(mordell_solutions({g(2, 0), g(1, 0)}), std::domain_error);   // 2 not in G
    CHECK_THROWS_AS(mordell_solutions({g(1, 1), g(1, 1)}), std::domain_error);   // not coprime
}
