#pragma once

/* Coordinate constructions in the Grassmannian G(r, Q^(3r)): Segre curves
 * through a configuration of three pairwise-transverse r-planes, their
 * Plucker-coordinate parametrizations and degrees, chains of lines given
 * by flags, the two-chain configuration sharing one endpoint plane, and
 * the polarized embedding of a chain of rational curves by blocks of
 * rational normal curves.
 *
 * Roles fix the naming: the base plane is the curve value at parameter 0,
 * the target plane the value at infinity, the marked plane the value at 1
 * (for the all-ones scaling vector). Infinity is handled by a second
 * chart, never by projective polynomial arithmetic. */

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "indgrass/errors.hpp"
#include "indgrass/polynomial.hpp"
#include "indgrass/ratlinalg.hpp"

namespace indgrass::segre_curves {

using ratlinalg::RatMatrix;
using ratlinalg::Rational;
using ratlinalg::RatPoly;

struct SubspaceConfig {
    std::size_t ambient_dim; // 3r
    std::size_t r;
    /* Bases of the three r-planes (rows). */
    RatMatrix plane_zero, plane_infty, plane_one;
    /* Row i spans the i-th line of the respective plane; the marked lines
     * are forced: line_one_i = plane_one meet (line_zero_i + line_infty_i). */
    RatMatrix axes_zero, axes_infty, axes_one;
};

/* Rank-checks every invariant of a configuration: plane dimensions,
 * pairwise zero intersections, the marked plane inside base + target,
 * axes spanning their planes, and each marked axis combining its base and
 * target axes with nonzero coefficients. Throws invariant_error. */
void validate_config(const SubspaceConfig& cfg);

/* In Q^(3r): base = span(e_1..e_r), target = span(e_{r+1}..e_{2r}),
 * marked = span(e_i + e_{r+i}); the axis decompositions of the target and
 * marked planes are computed by subspace intersection, not assumed. */
SubspaceConfig standard_config(std::size_t r);

struct CurveParam {
    static CurveParam infinity() { return {true, Rational(0)}; }
    static CurveParam finite(Rational v) { return {false, std::move(v)}; }

    bool is_infinite;
    Rational value;
};

/* The r-plane at the given curve parameter of the Segre curve selected by
 * the scaling vector (t_2..t_r), all nonzero (t_1 = 1): row i is
 * alpha_i * base_i + u * t_i * beta_i * target_i. Parameter 0 gives the
 * base plane, infinity the target plane. Result has exact rank r. */
RatMatrix segre_plane(const SubspaceConfig& cfg, const std::vector<Rational>& t_values,
                      const CurveParam& curve_param);

struct PluckerCurve {
    std::size_t ambient_dim;
    std::size_t r;
    /* Minor polynomials indexed by r-subsets of columns (0-based,
     * ascending, lexicographic order); the vector is primitive. */
    std::vector<std::pair<std::vector<std::size_t>, RatPoly>> entries;
};

PluckerCurve plucker_curve(const SubspaceConfig& cfg, const std::vector<Rational>& t_values);

/* Max polynomial degree of the primitive Plucker vector; r for every
 * valid configuration and scaling vector. */
long long curve_degree(const PluckerCurve& pc);

/* Plucker coordinates of one r-plane (primitive scalar normalization). */
std::vector<Rational> plucker_point(const RatMatrix& plane);

std::vector<Rational> evaluate(const PluckerCurve& pc, const Rational& u);
/* Leading-coefficient vector: the curve point at parameter infinity. */
std::vector<Rational> evaluate_at_infinity(const PluckerCurve& pc);

class LineFlag {
public:
    /* small: (r-1) x n basis, big: (r+1) x n basis, small inside big. */
    LineFlag(RatMatrix small, RatMatrix big);

    const RatMatrix& small() const { return small_; }
    const RatMatrix& big() const { return big_; }

private:
    RatMatrix small_, big_;
};

/* Does the r-plane lie on the line: small inside plane inside big. */
bool line_contains(const LineFlag& line, const RatMatrix& plane);

struct LineMeet {
    /* 0, 1 point, or -1 for infinitely many (equal lines). */
    int count;
    std::optional<RatMatrix> point;
};

LineMeet meet_lines(const LineFlag& a, const LineFlag& b, std::size_t r);

struct ChainOfLines {
    std::vector<LineFlag> lines;
    /* incidence[i][j] = number of common points of lines i and j. */
    std::vector<std::vector<int>> incidence;
    /* Canonical basis of the plane where line i meets line i+1. */
    std::vector<RatMatrix> meeting_points;
    bool base_plane_on_first;  // {V'} on line 1
    bool target_plane_on_last; // {V''} on line r
};

/* The r lines l_i with flags (targets before i + bases after i) inside
 * (the same + base_i + target_i). Verifies the incidence structure is the
 * path graph with the displayed meeting planes; failure is fatal. */
ChainOfLines chain_of_lines(const SubspaceConfig& cfg);

/* The standard configuration together with a second one sharing the
 * target plane: second base span(e_{2r+1}..e_{3r}), second marked
 * span(e_{2r+i} + e_{r+i}). Verifies the second configuration's own
 * invariants and that second base meets (base + target) in 0. */
std::pair<SubspaceConfig, SubspaceConfig> two_chain_config(std::size_t r);

struct TwoChainReport {
    SubspaceConfig cfg, cfg_second;
    /* Plucker point shared at parameter infinity (the target plane). */
    bool share_target_point;
    /* Certificate subset: the first curve's minor there is a nonzero
     * constant while the target plane's coordinate vanishes, so no finite
     * parameter reaches the target plane; with the structural containment
     * (common points lie in the target plane) this pins the intersection
     * to exactly one point. */
    std::vector<std::size_t> certificate_subset;
    /* Sampled double check: no equal points over a finite parameter grid. */
    std::size_t sampled_pairs_distinct;
};

TwoChainReport two_chain_check(std::size_t r);

struct EmbedReport {
    std::vector<long long> degrees;
    long long total_degree; // n
    /* Coordinate functions of component i: n+1 polynomials in the affine
     * parameter, nonzero exactly on its coordinate block. */
    std::vector<std::vector<RatPoly>> components;
    std::vector<std::size_t> block_offsets;
    std::size_t span_dim; // verified = n + 1
    bool consecutive_meet_once;
    bool nonconsecutive_disjoint;
};

/* Piecewise embedding of a chain: component i is the degree-n_i rational
 * normal curve in its own coordinate block, blocks overlapping in exactly
 * one coordinate so consecutive components meet at that coordinate point.
 * All n_i >= 1. Verifies linear normality (span dimension n+1) and the
 * incidence pattern; failure is fatal. */
EmbedReport embed_chain(const std::vector<long long>& degrees);

} // namespace indgrass::segre_curves
