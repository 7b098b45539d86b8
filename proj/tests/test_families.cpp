#include <doctest.h>

#include <random>

#include "gaussdioph/families.hpp"
#include "test_support.hpp"

using namespace gaussdioph;

namespace {
GaussianInt g(long re, long im) { return {re, im}; }
Triple tr(long a, long b, long c, long d, long e, long f) {
    return {GaussianInt(a, b), GaussianInt(c, d), GaussianInt(e, f)};
}
}  // namespace

TEST_CASE("check_solution evaluates the forms exactly") {
    // (-2-i)^2 + (-2+2i)^2 = 3-4i = (-2+i)^2
    Triple a = tr(-2, -1, -2, 2, -2, 1);
    CHECK(a.X.square() + a.Y.square() == g(3, -4));
    CHECK(a.Z.square() == g(3, -4));
    CHECK(check_solution(Family::A, a, Form::Canonical));
    CHECK_FALSE(check_solution(Family::A, a, Form::Original));

    // (3+2i)^2 + i(-1-6i)^2 = -7-23i = (1+i)(1-4i)^2
    Triple d = tr(3, 2, -1, -6, 1, -4);
    CHECK(d.X.square() + g(0, 1) * d.Y.square() == g(-7, -23));
    CHECK(one_plus_i() * d.Z.square() == g(-7, -23));
    CHECK(check_solution(Family::D, d, Form::Canonical));

    CHECK_FALSE(check_solution(Family::A, tr(1, 0, 1, 0, 1, 0), Form::Canonical));
    CHECK_FALSE(check_solution(Family::A, tr(0, 0, 1, 0, 1, 0), Form::Canonical));

    // original-form solution of A: rotate Z by i
    Triple orig{a.X, a.Y, a.Z.times_i()};
    CHECK(check_solution(Family::A, orig, Form::Original));
    CHECK(satisfied_form(Family::A, orig) == Form::Original);
    CHECK(satisfied_form(Family::A, a) == Form::Canonical);
    CHECK_FALSE(satisfied_form(Family::A, tr(1, 0, 1, 0, 1, 0)).has_value());
}

TEST_CASE("divisibility profiles") {
    CHECK(divisibility_profile(Family::A, tr(-2, -1, -2, 2, -2, 1)));
    CHECK(divisibility_profile(Family::D, tr(3, 2, -1, -6, 1, -4)));
    CHECK(divisibility_profile(Family::CPlus, tr(2, 3, -2, 2, -2, -1)));
    // the even coordinate may sit anywhere for the symmetric family A
    CHECK(divisibility_profile(Family::A, tr(-2, 2, -2, -1, -2, 1)));
    CHECK_THROWS_AS(divisibility_profile(Family::A, tr(1, 0, 1, 0, 1, 0)), std::domain_error);
}

TEST_CASE("reduce_to_canonical rotates into O^I and G coordinates") {
    // worked A reduction
    auto [canonA, certA] = reduce_to_canonical(Family::A, tr(-2, -1, -2, 2, -2, 1));
    CHECK(canonA == tr(1, 2, -2, 2, 1, -2));
    CHECK(canonA.X.square() + canonA.Y.square() == g(-3, -4));
    CHECK(canonA.Z.square() == g(-3, -4));
    CHECK(is_OI(canonA.X));
    CHECK(is_OI(canonA.Z));
    CHECK(in_G(canonA.Y));
    CHECK(certA.apply(canonA) == tr(-2, -1, -2, 2, -2, 1));

    // fixed point
    auto [canonF, certF] = reduce_to_canonical(Family::A, tr(1, 2, -2, 2, 1, -2));
    CHECK(canonF == tr(1, 2, -2, 2, 1, -2));
    CHECK(certF.is_identity());

    // family D: a global rotation strips to the all-O^I canonical triple
    Triple rotated{g(3, 2).times_i(), g(-1, -6).times_i(), g(1, -4).times_i()};
    auto [canonD, certD] = reduce_to_canonical(Family::D, rotated);
    CHECK(canonD == tr(-3, -2, 1, 6, 1, -4));
    CHECK(is_OI(canonD.X));
    CHECK(is_OI(canonD.Y));
    CHECK(is_OI(canonD.Z));
    CHECK(check_solution(Family::D, canonD, Form::Canonical));
    CHECK(certD.apply(canonD) == rotated);

    // reduction of an original-form solution
    Triple orig = tr(-2, -1, -2, 2, -2, 1);
    orig = Triple{orig.X, orig.Y, orig.Z.times_i()};
    auto [canonO, certO] = reduce_to_canonical(Family::A, orig);
    CHECK(check_solution(Family::A, canonO, Form::Canonical));
    CHECK(certO.apply(canonO) == orig);

    CHECK_THROWS_AS(reduce_to_canonical(Family::A, tr(1, 0, 1, 0, 1, 0)), std::domain_error);
}

TEST_CASE("generate matches the worked parametric instances") {
    // A, t=0, P=1+i, Q=1
    Triple a = generate(Family::A, {UnitPower(0), g(1, 1), g(1, 0), +1});
    CHECK(a == tr(-2, -1, -2, 2, -2, 1));
    CHECK(check_solution(Family::A, a, Form::Canonical));

    // B1, t=0, sign +, P=1-2i, Q=1 -> X=-3i, Y=3-i, Z=-4-i with X^2+Z^2 = iY^2
    Triple b = generate(Family::B1, {UnitPower(0), g(1, -2), g(1, 0), +1});
    CHECK(b == tr(0, -3, 3, -1, -4, -1));
    CHECK(b.X.square() + b.Z.square() == g(6, 8));
    CHECK(g(0, 1) * b.Y.square() == g(6, 8));

    // C(1+i), t=0, P=1, Q=1+i
    Triple c = generate(Family::CPlus, {UnitPower(0), g(1, 0), g(1, 1), +1});
    CHECK(c == tr(2, 3, -2, 2, -2, -1));
    CHECK(c.X.square() + one_plus_i() * c.Y.square() == g(3, 4));
    CHECK(c.Z.square() == g(3, 4));

    // D, P=1, Q=1+i
    Triple d = generate(Family::D, {UnitPower(0), g(1, 0), g(1, 1), +1});
    CHECK(d == tr(3, 2, -1, -6, 1, -4));
    CHECK(check_solution(Family::D, d, Form::Canonical));
}

TEST_CASE("generate validates the side conditions") {
    // gcd(P, Q) must be a unit
    CHECK_THROWS_AS(generate(Family::A, {UnitPower(0), g(1, 1), g(0, 2), +1}),
                    std::domain_error);
    // A requires PQ even
    CHECK_THROWS_AS(generate(Family::A, {UnitPower(0), g(1, 0), g(1, -2), +1}),
                    std::domain_error);
    // B1 requires odd P and Q
    CHECK_THROWS_AS(generate(Family::B1, {UnitPower(0), g(1, 1), g(1, 0), +1}),
                    std::domain_error);
    // C requires odd P
    CHECK_THROWS_AS(generate(Family::CPlus, {UnitPower(0), g(1, 1), g(1, 0), +1}),
                    std::domain_error);
    // D requires even Q
    CHECK_THROWS_AS(generate(Family::D, {UnitPower(0), g(1, 0), g(1, -2), +1}),
                    std::domain_error);
    // P, Q must land in G: 2 = i^3 (1+i)^2 has unit exponent 3
    CHECK_THROWS_AS(generate(Family::A, {UnitPower(0), g(2, 0), g(1, 0), +1}),
                    std::domain_error);
    CHECK_THROWS_AS(generate(Family::A, {UnitPower(0), g(0, 0), g(1, 1), +1}),
                    std::domain_error);
}

TEST_CASE("param_recover inverts the worked instances") {
    FamilyParams pa = param_recover(Family::A, tr(1, 2, -2, 2, 1, -2));
    CHECK(pa.t == UnitPower(3));
    CHECK(pa.P == g(1, 0));
    CHECK(pa.Q == g(1, 1));

    FamilyParams pb = param_recover(Family::B1, tr(0, -3, 3, -1, -4, -1));
    CHECK(pb.t == UnitPower(0));
    CHECK(pb.sign == +1);
    CHECK(pb.P == g(1, -2));
    CHECK(pb.Q == g(1, 0));

    CHECK_THROWS_AS(param_recover(Family::D, tr(3, 2, -1, -6, 1, -4)), std::domain_error);
    CHECK_THROWS_AS(param_recover(Family::A, tr(1, 0, 1, 0, 1, 0)), std::domain_error);
}

TEST_CASE("param_recover round-trips random parameters") {
    std::mt19937_64 rng(21);
    for (Family f : {Family::A, Family::B1, Family::B2, Family::CPlus, Family::CMinus}) {
        for (int n = 0; n < 50; ++n) {
            FamilyParams params = testsupport::random_params(f, rng, 10);
            Triple t = generate(f, params);
            CHECK(check_solution(f, t, Form::Canonical));
            FamilyParams back = param_recover(f, t);
            CHECK(back == params);
        }
    }
}

TEST_CASE("system_from_D and D_from_system") {
    Triple d = tr(3, 2, -1, -6, 1, -4);
    SystemSolution s = system_from_D(d);
    CHECK(s.x == g(2, -1));
    CHECK(s.y == g(1, 3));
    CHECK(s.u == g(0, -5));
    CHECK(s.v == g(1, 1));
    CHECK(s.disc == g(3, 2));
    // the system invariants, computed directly
    CHECK(s.x - s.y == s.u + s.v);
    CHECK(s.x * s.y == g(5, 5));
    CHECK(g(0, 1) * s.u * s.v == g(5, 5));

    Triple back = D_from_system(s);
    CHECK(back == d);

    CHECK_THROWS_AS(system_from_D(tr(1, 0, 1, 0, 3, 0)), std::domain_error);
    SystemSolution bad = s;
    bad.v = g(2, 2);
    CHECK_THROWS_AS(D_from_system(bad), std::domain_error);
}

TEST_CASE("quadratic_root_solutions") {
    auto roots = quadratic_root_solutions(g(0, -5), g(1, 1));
    REQUIRE(roots.size() == 2);
    bool found = false;
    for (const auto& [x, y] : roots) {
        // each root pair solves the system exactly
        CHECK(x - y == g(1, -4));
        CHECK(x * y == g(0, 1) * g(0, -5) * g(1, 1));
        if (x == g(2, -1) && y == g(1, 3)) found = true;
    }
    CHECK(found);
    // swapping the discriminant sign swaps the roots
    CHECK(roots[1].first == -roots[0].second);
    CHECK(roots[1].second == -roots[0].first);

    // (1+2i)^2 + 4i(2i) = -11+4i is not a square
    CHECK(quadratic_root_solutions(g(1, 0), g(0, 2)).empty());

    CHECK_THROWS_AS(quadratic_root_solutions(g(1, 1), g(1, 0)), std::domain_error);
}

TEST_CASE("discriminant_params and the closed root forms") {
    auto [disc, u, v] = discriminant_params(g(1, 0), g(1, 1));
    CHECK(disc == g(3, 2));
    CHECK(u == g(0, -5));
    CHECK(v == g(1, 1));
    CHECK(disc * disc == (u + v).square() + g(0, 4) * u * v);

    auto [x, y] = system_roots_from_params(g(1, 0), g(1, 1));
    CHECK(x == g(2, -1));
    CHECK(y == g(1, 3));

    CHECK_THROWS_AS(discriminant_params(g(1, 0), g(1, -2)), std::domain_error);  // Q odd

    std::mt19937_64 rng(22);
    for (int n = 0; n < 100; ++n) {
        FamilyParams params = testsupport::random_params(Family::D, rng, 12);
        auto [D2, uu, vv] = discriminant_params(params.P, params.Q);
        CHECK(D2 * D2 == (uu + vv).square() + g(0, 4) * uu * vv);
        auto rs = quadratic_root_solutions(uu, vv);
        REQUIRE(!rs.empty());
        auto [xr, yr] = system_roots_from_params(params.P, params.Q);
        bool present = false;
        for (const auto& [a, b] : rs) present = present || (a == xr && b == yr);
        CHECK(present);
    }
}

TEST_CASE("family D chain agrees with the direct parametric formulas") {
    std::mt19937_64 rng(23);
    for (int n = 0; n < 100; ++n) {
        FamilyParams params = testsupport::random_params(Family::D, rng, 12);
        Triple direct = generate(Family::D, params);
        auto [x, y] = system_roots_from_params(params.P, params.Q);
        auto [disc, u, v] = discriminant_params(params.P, params.Q);
        Triple chained = D_from_system({x, y, u, v, disc});
        CHECK(chained == direct);
        CHECK(check_solution(Family::D, direct, Form::Canonical));
    }
}

TEST_CASE("parity residues of normalized original-form solutions") {
    // writing an original-form solution as alpha = i^m a', gamma = i^l c'
    // with a', c' in O^I forces m+l odd
    std::mt19937_64 rng(24);
    for (int n = 0; n < 30; ++n) {
        FamilyParams params = testsupport::random_params(Family::A, rng, 8);
        Triple canon = generate(Family::A, params);
        Triple orig{canon.X, canon.Y, canon.Z.times_i()};
        REQUIRE(check_solution(Family::A, orig, Form::Original));
        auto [m, ax] = normalize_odd_to_OI(orig.X);
        auto [l, az] = normalize_odd_to_OI(orig.Z);
        CHECK((m.value() + l.value()) % 2 == 1);
    }
}
