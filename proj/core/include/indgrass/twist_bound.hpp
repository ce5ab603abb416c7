#pragma once

/* Growth engine for towers of Grassmannian embeddings: cumulative map
 * degrees, the finite-horizon check that ranks grow slower than degrees,
 * the linear gap inequality in the jump size D_m, the first level from
 * which it fails for every positive D_m (forcing D_m = 0), and exact
 * dimensions of Schur modules for the section spaces showing up in the
 * twisted-embedding examples. All arithmetic is exact big-integer. */

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "indgrass/errors.hpp"
#include "indgrass/ratlinalg.hpp"

namespace indgrass::twist_bound {

using ratlinalg::Int;
using ratlinalg::Rational;

/* A sequence over m = 1, 2, ... given either in closed form (constant,
 * geometric base*ratio^(m-1), polynomial in m) or as an explicit finite
 * list. Closed forms admit symbolic limit analysis; lists do not. */
class SequenceSpec {
public:
    enum class Kind { Constant, Geometric, Polynomial, List };

    static SequenceSpec constant(Int value);
    static SequenceSpec geometric(Int base, Int ratio);
    /* coeffs[i] multiplies m^i. */
    static SequenceSpec polynomial(std::vector<Int> coeffs);
    /* values[i] is the value at m = i+1; access past the end throws. */
    static SequenceSpec list(std::vector<Int> values);

    Kind kind() const { return kind_; }
    Int at(std::size_t m) const;
    bool closed_form() const { return kind_ != Kind::List; }

    const std::vector<Int>& params() const { return params_; }

private:
    SequenceSpec(Kind kind, std::vector<Int> params)
        : kind_(kind), params_(std::move(params)) {}

    Kind kind_;
    /* Constant: {value}; Geometric: {base, ratio}; Polynomial / List:
     * the coefficient / value vector. */
    std::vector<Int> params_;
};

struct IndGrassSpec {
    SequenceSpec rank_seq;   // r_m, every value >= 2
    SequenceSpec degree_seq; // deg of the m-th embedding, every value >= 1
    long long bundle_rank;   // k >= 1
    long long d1;            // gap bound at the first level, >= 0
};

/* Throws input_error on bad scalar fields; sequence values are validated
 * where they are read. */
void validate_spec(const IndGrassSpec& spec);

/* Product of the first m-1 embedding degrees (empty product = 1). */
Int cumulative_degree(const IndGrassSpec& spec, std::size_t m);

enum class LimitVerdict { Zero, Nonzero, Undecided };

struct TwistVerdict {
    /* Finite-horizon semantics: true iff some m0 <= horizon has
     * r_m / cumulative_degree(m) <= epsilon and nonincreasing for all
     * m in [m0, horizon]. A check of the window, not a limit proof. */
    bool holds_at_horizon;
    std::optional<std::size_t> m0;
    std::vector<std::pair<std::size_t, Rational>> ratios; // (m, r_m/degPhi_m)
    /* Exact limit of the ratio when both sequences are closed-form
     * descriptors; Undecided whenever a list is involved. */
    LimitVerdict symbolic;
};

TwistVerdict sufficiently_twisted(const IndGrassSpec& spec, const Rational& epsilon,
                                  std::size_t horizon);

struct InequalitySides {
    Int lhs, rhs;
    bool holds; // lhs <= rhs
};

/* lhs = cumulative_degree(m) * d_m against
 * rhs = 4k(d1+2)(2 r_m d_m + 1) - 2k, exactly. */
InequalitySides main_inequality(const IndGrassSpec& spec, std::size_t m, const Int& d_m);

struct ThresholdRow {
    std::size_t m;
    Int deg_phi, r_m;
    Int lhs1, rhs1; // both sides at d_m = 1
    /* Inequality fails for every d_m >= 1; decided by the exact linear
     * criterion deg_phi > 8k(d1+2) r_m and deg_phi > rhs1. */
    bool fails_all;
};

struct ThresholdReport {
    /* First level of the terminal failing run within the horizon: every
     * later level in the window fails for all d_m >= 1 too. */
    std::optional<std::size_t> threshold_m;
    std::vector<ThresholdRow> rows;
};

ThresholdReport triviality_threshold(const IndGrassSpec& spec, std::size_t horizon);

/* Dimension of the Schur module of the given highest weight on an
 * n-dimensional space, by the hook content formula. Zero when the
 * partition has more than n parts. */
Int schur_dimension(const std::vector<long long>& lambda, long long n);

/* Sections of the (1, k)-polarization on the two-step flag of lines
 * inside r-planes of an n-space: the Schur dimension of weight
 * (k+1, k^(r-1)). Requires n >= r+1, r >= 2, k >= 1. */
Int flag_sections_dim(long long n, long long r, long long k);

} // namespace indgrass::twist_bound
