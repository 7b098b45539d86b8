#include "gaussdioph/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace gaussdioph {

namespace {

const GaussianInt kI(0, 1);

GaussianInt z_coefficient(Family f) {
    return f == Family::D ? one_plus_i() : GaussianInt(1, 0);
}

GaussianInt y_coeff_original(Family f) {
    switch (f) {
        case Family::A: return GaussianInt(1, 0);
        case Family::CPlus: return one_plus_i();
        case Family::CMinus: return GaussianInt(1, -1);
        default: return kI;  // B1, B2, D
    }
}

bool y_admissible(Family f, const GaussianInt& y) {
    if (f == Family::B1) return is_even(y) && classify(y) == ParityClass::EI;
    if (f == Family::B2) return is_even(y) && classify(y) == ParityClass::E0;
    return true;
}

std::pair<long, long> key_of(const GaussianInt& z) {
    return {z.re().get_si(), z.im().get_si()};
}

bool gcd3_unit(const GaussianInt& a, const GaussianInt& b, const GaussianInt& c) {
    GaussianInt g = gcd_euclidean(a, b);
    g = gcd_euclidean(g, c);
    return g.is_unit();
}

std::string triple_key(const Triple& t) {
    return to_string(t.X) + "|" + to_string(t.Y) + "|" + to_string(t.Z);
}

// Canonical forms of parametrically generated family-D solutions that can
// land inside the box. |Z - X| = |2PQ| bounds N(P)N(Q) by 2b^2, so the
// seed scan is finite.
std::set<std::string> d_parametric_targets(long bound) {
    std::set<std::string> out;
    const mpz_class max_norm = 2 * mpz_class(bound) * mpz_class(bound);

    std::vector<GaussianInt> ps, qs;
    long qb = bound;
    while (mpz_class(qb) * qb < max_norm) ++qb;  // |re(Q)| can reach sqrt(2)*bound
    for (long re = -qb; re <= qb; ++re) {
        for (long im = -qb; im <= qb; ++im) {
            GaussianInt z(re, im);
            if (z.is_zero() || z.norm() > max_norm) continue;
            if (!in_G(z)) continue;
            if (is_odd(z) && z.norm() * 2 <= max_norm && std::abs(re) <= bound &&
                std::abs(im) <= bound)
                ps.push_back(z);
            if (is_even(z)) qs.push_back(z);
        }
    }

    for (const GaussianInt& P : ps) {
        for (const GaussianInt& Q : qs) {
            if (P.norm() * Q.norm() > max_norm) continue;
            if (!gcd_euclidean(P, Q).is_unit()) continue;
            Triple gen = generate(Family::D, {UnitPower(0), P, Q, +1});
            if (gen.X.norm() > max_norm || gen.Y.norm() > max_norm || gen.Z.norm() > max_norm)
                continue;
            out.insert(triple_key(reduce_to_canonical(Family::D, gen).first));
        }
    }
    return out;
}

unsigned resolve_threads(unsigned threads, size_t work_items) {
    unsigned n = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
    if (work_items < n) n = static_cast<unsigned>(std::max<size_t>(1, work_items));
    return n;
}

}  // namespace

std::vector<Triple> enumerate_primitive(Family f, const SearchBox& box, unsigned threads) {
    if (box.bound < 1) throw std::domain_error("enumerate_primitive: bound must be >= 1");
    const long b = box.bound;

    std::vector<GaussianInt> cells;
    cells.reserve(static_cast<size_t>(2 * b + 1) * (2 * b + 1));
    for (long re = -b; re <= b; ++re)
        for (long im = -b; im <= b; ++im)
            if (re != 0 || im != 0) cells.emplace_back(re, im);

    // cz * z^2 -> every z in the box with that value
    const GaussianInt cz = z_coefficient(f);
    std::map<std::pair<long, long>, std::vector<GaussianInt>> squares;
    for (const GaussianInt& z : cells) squares[key_of(cz * z.square())].push_back(z);

    // X restricted to the fundamental-sector representatives; the four
    // global rotations of each hit are restored afterwards.
    std::vector<GaussianInt> xs;
    for (const GaussianInt& z : cells)
        if (z.re() > 0 && -z.re() < z.im() && z.im() <= z.re()) xs.push_back(z);

    std::vector<GaussianInt> ys;
    for (const GaussianInt& z : cells)
        if (y_admissible(f, z)) ys.push_back(z);

    const GaussianInt cy = y_coeff_original(f);
    const unsigned nthreads = resolve_threads(threads, xs.size());

    std::vector<std::vector<Triple>> found(nthreads);
    auto worker = [&](unsigned id) {
        for (size_t ix = id; ix < xs.size(); ix += nthreads) {
            const GaussianInt& x = xs[ix];
            const GaussianInt x2 = x.square();
            for (const GaussianInt& y : ys) {
                GaussianInt target = -(x2 + cy * y.square());
                if (!target.re().fits_slong_p() || !target.im().fits_slong_p()) continue;
                auto it = squares.find(key_of(target));
                if (it == squares.end()) continue;
                for (const GaussianInt& z : it->second) {
                    if (!gcd3_unit(x, y, z)) continue;
                    for (long r = 0; r < 4; ++r)
                        found[id].emplace_back(x.times_i_pow(r), y.times_i_pow(r),
                                               z.times_i_pow(r));
                }
            }
        }
    };

    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < nthreads; ++id) pool.emplace_back(worker, id);
        for (auto& th : pool) th.join();
    }

    std::vector<Triple> out;
    for (auto& part : found)
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    std::sort(out.begin(), out.end());
    return out;
}

CrossCheckReport cross_check(Family f, const SearchBox& box, unsigned threads) {
    CrossCheckReport report;
    report.family = f;
    report.bound = box.bound;

    std::vector<Triple> sols = enumerate_primitive(f, box, threads);
    report.total = sols.size();

    std::set<std::string> d_targets;
    if (f == Family::D) d_targets = d_parametric_targets(box.bound);

    std::set<std::string> unmatched_seen;
    for (const Triple& sol : sols) {
        bool profile_ok = false;
        try {
            profile_ok = divisibility_profile(f, sol);
        } catch (const std::exception&) {
            profile_ok = false;
        }
        if (!profile_ok) {
            ++report.profile_failures;
            report.hard_failure = true;
            continue;
        }

        Triple canon;
        try {
            canon = reduce_to_canonical(f, sol).first;
        } catch (const std::exception&) {
            ++report.reduce_failures;
            report.hard_failure = true;
            continue;
        }

        if (f == Family::D) {
            if (d_targets.count(triple_key(canon))) {
                ++report.matched;
            } else if (unmatched_seen.insert(triple_key(canon)).second) {
                report.unmatched.push_back(canon);
            }
            continue;
        }

        bool roundtrip = false;
        try {
            FamilyParams params = param_recover(f, canon);
            roundtrip = generate(f, params) == canon;
        } catch (const std::exception&) {
            roundtrip = false;
        }
        if (roundtrip) {
            ++report.matched;
        } else {
            report.hard_failure = true;
            if (unmatched_seen.insert(triple_key(canon)).second) report.unmatched.push_back(canon);
        }
    }
    return report;
}

}  // namespace gaussdioph
