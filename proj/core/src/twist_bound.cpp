#include "indgrass/twist_bound.hpp"

#include <algorithm>
#include <string>

namespace indgrass::twist_bound {

namespace {

Int int_pow(const Int& base, std::size_t exp) {
    Int out(1);
    for (std::size_t i = 0; i < exp; ++i) out *= base;
    return out;
}

/* Strips trailing zero coefficients / reduces degenerate descriptors so
 * the symbolic analysis sees a canonical kind. */
SequenceSpec normalize(const SequenceSpec& seq) {
    switch (seq.kind()) {
    case SequenceSpec::Kind::Geometric:
        if (seq.params()[1] == 1) return SequenceSpec::constant(seq.params()[0]);
        return seq;
    case SequenceSpec::Kind::Polynomial: {
        std::vector<Int> coeffs = seq.params();
        while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
        if (coeffs.size() == 1) return SequenceSpec::constant(coeffs[0]);
        return SequenceSpec::polynomial(std::move(coeffs));
    }
    default:
        return seq;
    }
}

Int rank_at(const IndGrassSpec& spec, std::size_t m) {
    Int r = spec.rank_seq.at(m);
    if (r < 2) throw input_error("rank sequence value below 2 at level " + std::to_string(m));
    return r;
}

Int degree_at(const IndGrassSpec& spec, std::size_t m) {
    Int d = spec.degree_seq.at(m);
    if (d < 1) throw input_error("degree sequence value below 1 at level " + std::to_string(m));
    return d;
}

/* Growth class of the cumulative degree product for a closed form. */
enum class DegGrowth { Bounded, Exponential, SuperExponential, Undecided };

DegGrowth degree_growth(const SequenceSpec& deg, Int& exp_base) {
    switch (deg.kind()) {
    case SequenceSpec::Kind::Constant:
        if (deg.params()[0] <= 1) return DegGrowth::Bounded;
        exp_base = deg.params()[0];
        return DegGrowth::Exponential;
    case SequenceSpec::Kind::Geometric:
        /* ratio >= 2 after normalization: the terms themselves grow
         * geometrically, so the product is superexponential. */
        if (deg.params()[0] < 1 || deg.params()[1] < 1) return DegGrowth::Undecided;
        return DegGrowth::SuperExponential;
    case SequenceSpec::Kind::Polynomial:
        /* Nonconstant after normalization: terms are eventually >= 2, and
         * factorial-like products beat every geometric sequence. */
        if (deg.params().back() < 0) return DegGrowth::Undecided;
        return DegGrowth::SuperExponential;
    default:
        return DegGrowth::Undecided;
    }
}

LimitVerdict symbolic_limit(const IndGrassSpec& spec) {
    SequenceSpec rank = normalize(spec.rank_seq);
    SequenceSpec deg = normalize(spec.degree_seq);
    if (!rank.closed_form() || !deg.closed_form()) return LimitVerdict::Undecided;

    Int exp_base(0);
    switch (degree_growth(deg, exp_base)) {
    case DegGrowth::Undecided:
        return LimitVerdict::Undecided;
    case DegGrowth::Bounded:
        /* Ranks stay >= 2, so the ratio cannot tend to zero. */
        return LimitVerdict::Nonzero;
    case DegGrowth::SuperExponential:
        switch (rank.kind()) {
        case SequenceSpec::Kind::Constant:
        case SequenceSpec::Kind::Polynomial:
            return LimitVerdict::Zero;
        case SequenceSpec::Kind::Geometric:
            if (rank.params()[0] < 1 || rank.params()[1] < 1) return LimitVerdict::Undecided;
            return LimitVerdict::Zero;
        default:
            return LimitVerdict::Undecided;
        }
    case DegGrowth::Exponential:
        switch (rank.kind()) {
        case SequenceSpec::Kind::Constant:
            return LimitVerdict::Zero;
        case SequenceSpec::Kind::Polynomial:
            if (rank.params().back() < 0) return LimitVerdict::Undecided;
            return LimitVerdict::Zero;
        case SequenceSpec::Kind::Geometric:
            if (rank.params()[0] < 1 || rank.params()[1] < 1) return LimitVerdict::Undecided;
            return rank.params()[1] < exp_base ? LimitVerdict::Zero : LimitVerdict::Nonzero;
        default:
            return LimitVerdict::Undecided;
        }
    }
    return LimitVerdict::Undecided;
}

} // namespace

SequenceSpec SequenceSpec::constant(Int value) {
    return SequenceSpec(Kind::Constant, {std::move(value)});
}

SequenceSpec SequenceSpec::geometric(Int base, Int ratio) {
    return SequenceSpec(Kind::Geometric, {std::move(base), std::move(ratio)});
}

SequenceSpec SequenceSpec::polynomial(std::vector<Int> coeffs) {
    if (coeffs.empty()) throw input_error("polynomial sequence needs at least one coefficient");
    return SequenceSpec(Kind::Polynomial, std::move(coeffs));
}

SequenceSpec SequenceSpec::list(std::vector<Int> values) {
    if (values.empty()) throw input_error("list sequence needs at least one value");
    return SequenceSpec(Kind::List, std::move(values));
}

Int SequenceSpec::at(std::size_t m) const {
    if (m < 1) throw input_error("sequence index starts at 1");
    switch (kind_) {
    case Kind::Constant:
        return params_[0];
    case Kind::Geometric:
        return params_[0] * int_pow(params_[1], m - 1);
    case Kind::Polynomial: {
        Int out(0);
        for (std::size_t i = params_.size(); i-- > 0;) out = out * Int(m) + params_[i];
        return out;
    }
    case Kind::List:
        if (m > params_.size())
            throw input_error("sequence value requested past the end of the list");
        return params_[m - 1];
    }
    throw invariant_error("unreachable sequence kind");
}

void validate_spec(const IndGrassSpec& spec) {
    if (spec.bundle_rank < 1) throw input_error("bundle rank must be >= 1");
    if (spec.d1 < 0) throw input_error("first-level gap bound must be >= 0");
}

Int cumulative_degree(const IndGrassSpec& spec, std::size_t m) {
    validate_spec(spec);
    if (m < 1) throw input_error("level index starts at 1");
    Int out(1);
    for (std::size_t i = 1; i < m; ++i) out *= degree_at(spec, i);
    return out;
}

TwistVerdict sufficiently_twisted(const IndGrassSpec& spec, const Rational& epsilon,
                                  std::size_t horizon) {
    validate_spec(spec);
    if (horizon < 2) throw input_error("horizon must be >= 2");
    if (epsilon <= 0) throw input_error("epsilon must be positive");

    TwistVerdict verdict;
    verdict.symbolic = symbolic_limit(spec);

    Int deg_phi(1);
    for (std::size_t m = 1; m <= horizon; ++m) {
        if (m > 1) deg_phi *= degree_at(spec, m - 1);
        verdict.ratios.emplace_back(m, Rational(rank_at(spec, m)) / Rational(deg_phi));
    }

    verdict.holds_at_horizon = false;
    for (std::size_t start = 0; start < horizon; ++start) {
        bool ok = true;
        for (std::size_t i = start; i < horizon && ok; ++i) {
            if (verdict.ratios[i].second > epsilon) ok = false;
            if (i > start && verdict.ratios[i].second > verdict.ratios[i - 1].second) ok = false;
        }
        if (ok) {
            verdict.holds_at_horizon = true;
            verdict.m0 = start + 1;
            break;
        }
    }
    return verdict;
}

InequalitySides main_inequality(const IndGrassSpec& spec, std::size_t m, const Int& d_m) {
    if (d_m < 0) throw input_error("jump size must be >= 0");
    Int deg_phi = cumulative_degree(spec, m);
    Int r_m = rank_at(spec, m);
    const long long k = spec.bundle_rank;
    InequalitySides sides;
    sides.lhs = deg_phi * d_m;
    sides.rhs = Int(4) * k * (spec.d1 + 2) * (Int(2) * r_m * d_m + 1) - Int(2) * k;
    sides.holds = sides.lhs <= sides.rhs;
    return sides;
}

ThresholdReport triviality_threshold(const IndGrassSpec& spec, std::size_t horizon) {
    validate_spec(spec);
    if (horizon < 2) throw input_error("horizon must be >= 2");

    ThresholdReport report;
    Int deg_phi(1);
    for (std::size_t m = 1; m <= horizon; ++m) {
        if (m > 1) deg_phi *= degree_at(spec, m - 1);
        ThresholdRow row;
        row.m = m;
        row.deg_phi = deg_phi;
        row.r_m = rank_at(spec, m);
        const long long k = spec.bundle_rank;
        row.lhs1 = deg_phi;
        row.rhs1 = Int(4) * k * (spec.d1 + 2) * (Int(2) * row.r_m + 1) - Int(2) * k;
        Int slope = Int(8) * k * (spec.d1 + 2) * row.r_m;
        row.fails_all = deg_phi > slope && row.lhs1 > row.rhs1;
        report.rows.push_back(std::move(row));
    }

    for (std::size_t i = report.rows.size(); i-- > 0;) {
        if (!report.rows[i].fails_all) break;
        report.threshold_m = report.rows[i].m;
    }
    return report;
}

Int schur_dimension(const std::vector<long long>& lambda, long long n) {
    if (n < 0) throw input_error("dimension must be >= 0");
    std::vector<long long> shape;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 0) throw input_error("partition parts must be >= 0");
        if (i > 0 && lambda[i] > lambda[i - 1])
            throw input_error("partition parts must be nonincreasing");
        if (lambda[i] > 0) shape.push_back(lambda[i]);
    }
    if (static_cast<long long>(shape.size()) > n) return Int(0);
    if (shape.empty()) return Int(1);

    std::vector<long long> conj(static_cast<std::size_t>(shape[0]), 0);
    for (long long part : shape)
        for (long long j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];

    Int contents(1), hooks(1);
    for (std::size_t i = 0; i < shape.size(); ++i)
        for (long long j = 0; j < shape[i]; ++j) {
            contents *= Int(n) + j - static_cast<long long>(i);
            hooks *= Int(shape[i] - j) + conj[static_cast<std::size_t>(j)] -
                     static_cast<long long>(i) - 1;
        }
    if (contents % hooks != 0) throw invariant_error("hook content quotient is not integral");
    return contents / hooks;
}

Int flag_sections_dim(long long n, long long r, long long k) {
    if (r < 2) throw input_error("flag needs r >= 2");
    if (n < r + 1) throw input_error("flag needs n >= r+1");
    if (k < 1) throw input_error("twist needs k >= 1");
    std::vector<long long> lambda{k + 1};
    lambda.insert(lambda.end(), static_cast<std::size_t>(r - 1), k);
    return schur_dimension(lambda, n);
}

} // namespace indgrass::twist_bound
