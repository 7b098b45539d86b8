#pragma once

#include <vector>

#include "gaussdioph/families.hpp"

namespace gaussdioph {

// Finite search space: all triples whose coordinates have |re|, |im| <= bound.
struct SearchBox {
    long bound = 1;
};

// Every primitive solution of the family's original form inside the box,
// sorted lexicographically. Purely definitional: evaluates the form and the
// gcd condition, never the parametric machinery. threads = 0 picks the
// hardware default.
std::vector<Triple> enumerate_primitive(Family f, const SearchBox& box, unsigned threads = 0);

struct CrossCheckReport {
    Family family = Family::A;
    long bound = 0;
    size_t total = 0;    // enumerated primitive solutions
    size_t matched = 0;  // solutions whose canonical form the parametrization reaches
    size_t profile_failures = 0;
    size_t reduce_failures = 0;
    std::vector<Triple> unmatched;  // deduplicated canonical forms

    // Any profile or reduce failure, or an unmatched solution of
    // A/B1/B2/C, contradicts the claimed completeness of the
    // parametrization. Family D's parametrization covers only some
    // solutions, so unmatched entries there are reported without failing.
    bool hard_failure = false;
};

CrossCheckReport cross_check(Family f, const SearchBox& box, unsigned threads = 0);

}  // namespace gaussdioph
