#pragma once

/* Exact cohomology on the quadric X = P^1 x P^1: line bundles O(a,b) by
 * the Kunneth formula, twisted ideal sheaves of fiber-point sets on the
 * section P' (first coordinate at infinity) by evaluation-matrix kernels,
 * and long-exact-sequence interval bookkeeping with the Koszul-resolution
 * cross-check.
 *
 * Conventions, stated once and used everywhere: O(a,b) restricts to every
 * pr2-fiber S_x as O(a) and to the pr1-fibers P, P' as O(b). Points of Z
 * sit at (infinity, x) with affine rational x in the second factor. */

#include <compare>
#include <cstddef>
#include <vector>

#include "indgrass/errors.hpp"
#include "indgrass/ratlinalg.hpp"

namespace indgrass::quadric {

using ratlinalg::Rational;

struct BiDegree {
    long long a;
    long long b;

    auto operator<=>(const BiDegree&) const = default;
};

class CohomologyTriple {
public:
    /* Validates h0 - h1 + h2 = chi and nonnegativity. */
    CohomologyTriple(long long h0, long long h1, long long h2, long long chi);

    long long h0() const { return h0_; }
    long long h1() const { return h1_; }
    long long h2() const { return h2_; }
    long long chi() const { return chi_; }

    bool operator==(const CohomologyTriple&) const = default;

private:
    long long h0_, h1_, h2_, chi_;
};

CohomologyTriple direct_sum(const CohomologyTriple& x, const CohomologyTriple& y);

/* Kunneth: h0 = p(a)p(b), h1 = p(a)q(b) + q(a)p(b), h2 = q(a)q(b) with
 * p(n) = max(n+1,0), q(n) = max(-n-1,0); chi = (a+1)(b+1). */
CohomologyTriple h_line(BiDegree bd);

class FiberPointSet {
public:
    /* Group i (0-based) holds the second-factor parameters of the points
     * of Z_{i+2}; empty groups are allowed (parts equal to zero). All
     * parameters must be pairwise distinct across all groups. */
    explicit FiberPointSet(std::vector<std::vector<Rational>> groups);

    static FiberPointSet empty() { return FiberPointSet({}); }

    const std::vector<std::vector<Rational>>& groups() const { return groups_; }
    std::size_t group_count() const { return groups_.size(); }
    std::size_t total_points() const;
    std::vector<Rational> all_points() const;

    /* The set consisting of one group only. */
    FiberPointSet single_group(std::size_t index) const;

private:
    std::vector<std::vector<Rational>> groups_;
};

/* h^0(I_Z(a,b)): 0 when a < 0 or b < 0, else the kernel dimension of the
 * |Z| x (a+1)(b+1) matrix evaluating the bihomogeneous monomial basis of
 * H^0(O(a,b)) at the points (infinity, x). */
long long h0_ideal(const FiberPointSet& z, BiDegree bd);

/* Full triple: h2 from the restriction sequence 0 -> I_Z -> O(a,b) -> O_Z -> 0
 * (H^1 of points vanishes), chi = (a+1)(b+1) - |Z|, h1 by Euler
 * characteristic. A negative h1 is a fatal invariant breach. */
CohomologyTriple h_ideal(const FiberPointSet& z, BiDegree bd);

/* Componentwise range of cohomology values compatible with a short exact
 * sequence, over the admissible connecting-map ranks. */
struct HInterval {
    long long h0_lo, h0_hi;
    long long h1_lo, h1_hi;
    long long h2_lo, h2_hi;
    long long chi;

    bool collapsed() const;
    /* The exact triple of a collapsed interval; throws otherwise. */
    CohomologyTriple exact() const;
    bool contains(const CohomologyTriple& t) const;
};

/* For 0 -> A -> B -> C -> 0 with A, C known, the range of B: connecting
 * ranks rho0 in [0, min(h0 C, h1 A)] and rho1 in [0, min(h1 C, h2 A)] give
 * h0 B = h0 A + h0 C - rho0, h1 B = h1 A + h1 C - rho0 - rho1,
 * h2 B = h2 A + h2 C - rho1; chi(B) = chi(A) + chi(C) exactly. */
HInterval les_intervals(const CohomologyTriple& a, const CohomologyTriple& c);

/* Same sequence with A, B known, solving for the quotient C. */
HInterval les_quotient_intervals(const CohomologyTriple& a, const CohomologyTriple& b);

/* Twist the Koszul resolution 0 -> O(-1,0) -> O + O(-1,a_k) -> I_{Z_k}(0,a_k) -> 0
 * by O(bd) and solve for the quotient: an interval that must contain the
 * exact h_ideal values of I_{Z_k}(bd.a, bd.b + a_k). */
HInterval koszul_h(const FiberPointSet& z, std::size_t group_index, BiDegree bd);

} // namespace indgrass::quadric
