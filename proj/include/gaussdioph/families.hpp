#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "gaussdioph/factorization.hpp"
#include "gaussdioph/gaussian_int.hpp"

namespace gaussdioph {

// The four quadratic equation families in three variables.
//   A:  X^2 + Y^2 + Z^2 = 0            canonical  X^2 + Y^2 = Z^2
//   B1: X^2 + iY^2 + Z^2 = 0, (1+i)||Y canonical  X^2 + Z^2 = +-iY^2
//   B2: X^2 + iY^2 + Z^2 = 0, (1+i)^2|Y canonical X^2 + iY^2 = Z^2
//   C+-: X^2 + (1+-i)Y^2 + Z^2 = 0     canonical  X^2 + (1+-i)Y^2 = Z^2
//   D:  X^2 + iY^2 + (1+i)Z^2 = 0      canonical  X^2 + iY^2 = (1+i)Z^2
enum class Family { A, B1, B2, CPlus, CMinus, D };

enum class Form { Original, Canonical };

const char* to_string(Family f);
std::optional<Family> parse_family(std::string_view text);  // "A" "B1" "B2" "C+" "C-" "D"

/**
 * Triple: a candidate or verified solution (X, Y, Z). The primitive flag is
 * computed at construction (XYZ != 0 and gcd of all three a unit), never
 * asserted by callers.
 */
struct Triple {
    GaussianInt X, Y, Z;
    bool primitive = false;

    Triple() = default;
    Triple(GaussianInt x, GaussianInt y, GaussianInt z);

    bool xyz_nonzero() const { return !X.is_zero() && !Y.is_zero() && !Z.is_zero(); }

    bool operator==(const Triple& o) const { return X == o.X && Y == o.Y && Z == o.Z; }
    bool operator!=(const Triple& o) const { return !(*this == o); }
};

int cmp(const Triple& a, const Triple& b);
inline bool operator<(const Triple& a, const Triple& b) { return cmp(a, b) < 0; }

// (t, P, Q) seed of a parametric solution. sign is the +- variant and is
// meaningful for family B1 (the +-i of its canonical form) and fixed by the
// family tag for C. Family D ignores t.
struct FamilyParams {
    UnitPower t;
    GaussianInt P, Q;
    int sign = +1;

    bool operator==(const FamilyParams& o) const {
        return t == o.t && P == o.P && Q == o.Q && sign == o.sign;
    }
};

// Records how a solution was rotated and permuted into canonical position:
// input[source_slot[j]] = i^unit_pow[j] * canonical[j].
struct CanonicalCertificate {
    std::array<int, 3> source_slot{0, 1, 2};
    std::array<UnitPower, 3> unit_pow;

    Triple apply(const Triple& canonical) const;
    bool is_identity() const;
};

// Solution of the system x - y = u + v, xy = iuv attached to family D.
// disc = x + y is a square root of (u+v)^2 + 4iuv.
struct SystemSolution {
    GaussianInt x, y, u, v;
    GaussianInt disc;
};

struct DiscriminantParams {
    GaussianInt disc, u, v;
};

// Exact evaluation of the family's equation in the requested form;
// true iff it vanishes and XYZ != 0. For B1's canonical form either sign
// of +-i is accepted.
bool check_solution(Family f, const Triple& t, Form form = Form::Original);

// Which form the triple satisfies, preferring Original. nullopt if neither.
std::optional<Form> satisfied_form(Family f, const Triple& t);

// The (1+i)-divisibility pattern every primitive solution carries:
// A: the single even
// coordinate is divisible by (1+i)^2; B1: (1+i) || Y; B2, C: (1+i)^2 | Y;
// D: all coordinates odd. Throws std::domain_error unless the input is a
// primitive solution of the family (either form).
bool divisibility_profile(Family f, const Triple& t);

// Rotates (and for A permutes) a primitive solution into the canonical
// equation with odd coordinates in O^I and the even coordinate in G. The
// certificate reconstructs the input exactly.
std::pair<Triple, CanonicalCertificate> reduce_to_canonical(Family f, const Triple& t);

// Parametric solution of the family's canonical equation; an algebraic
// identity for all valid params. Throws std::domain_error when the params
// violate the family's side conditions.
Triple generate(Family f, const FamilyParams& params);

// Inverts generate on families A, B1, B2, C by forming the proof quotients,
// locating t through G-membership and extracting exact square roots in G.
// Family D is unsupported (its parametrization covers only some solutions).
FamilyParams param_recover(Family f, const Triple& canonical);

// (x, y, u, v) = ((X+Z)/2, (X-Z)/2, (Z+Y)/2, (Z-Y)/2) for an all-odd
// canonical family-D triple; throws when the halving is not exact.
SystemSolution system_from_D(const Triple& t);

// alpha = x + y, beta = u - v, gamma = x - y; validates the system
// invariants and returns a canonical family-D solution.
Triple D_from_system(const SystemSolution& s);

// Roots of z^2 - (u+v)z - iuv = 0 as pairs (x, y) = (z1, -z2), both signs of
// the discriminant; empty when the discriminant is not a square in Z[i].
// Preconditions: u+v in O^I, uv even, gcd(u, v) a unit.
std::vector<std::pair<GaussianInt, GaussianInt>> quadratic_root_solutions(
    const GaussianInt& u, const GaussianInt& v);

// disc = P^2 + (1-i)Q^2, u = P^2 - (1-i)Q^2 - (2i+1)PQ, v = PQ, for
// P, Q in G with gcd(P, Q) a unit and Q even. Satisfies
// disc^2 = (u+v)^2 + 4iuv identically.
DiscriminantParams discriminant_params(const GaussianInt& P, const GaussianInt& Q);

// Closed forms of the system roots: x = P^2 - iPQ, y = (1-i)Q^2 + iPQ.
std::pair<GaussianInt, GaussianInt> system_roots_from_params(const GaussianInt& P,
                                                             const GaussianInt& Q);

}  // namespace gaussdioph
