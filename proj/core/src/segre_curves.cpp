#include "indgrass/segre_curves.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace indgrass::segre_curves {

namespace {

using ratlinalg::rank;
using ratlinalg::row_basis;
using ratlinalg::rowspace_contains;
using ratlinalg::sum_rows;
using ratlinalg::intersect_rows;
using ratlinalg::vstack;
using ratlinalg::proportional;

RatMatrix take_row(const RatMatrix& m, std::size_t i) {
    RatMatrix out(1, m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(0, j) = m.at(i, j);
    return out;
}

/* Coefficients (alpha, beta) with target = alpha*a + beta*b, for rows a, b
 * spanning a 2-plane containing target. */
std::pair<Rational, Rational> solve_two(const RatMatrix& a, const RatMatrix& b,
                                        const RatMatrix& target) {
    const std::size_t n = a.cols();
    RatMatrix aug(n, 3);
    for (std::size_t j = 0; j < n; ++j) {
        aug.at(j, 0) = a.at(0, j);
        aug.at(j, 1) = b.at(0, j);
        aug.at(j, 2) = target.at(0, j);
    }
    ratlinalg::echelonize(aug, true);
    Rational alpha(0), beta(0);
    for (std::size_t i = 0; i < n; ++i) {
        if (aug.at(i, 0) == 1 && aug.at(i, 1) == 0)
            alpha = aug.at(i, 2);
        else if (aug.at(i, 0) == 0 && aug.at(i, 1) == 1)
            beta = aug.at(i, 2);
        else if (aug.at(i, 0) == 0 && aug.at(i, 1) == 0 && aug.at(i, 2) != 0)
            throw invariant_error("marked axis outside the span of its base and target axes");
    }
    return {alpha, beta};
}

std::vector<std::vector<std::size_t>> subsets_lex(std::size_t n, std::size_t r) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(r);
    for (std::size_t i = 0; i < r; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = r;
        while (i > 0 && cur[i - 1] == n - r + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

/* alpha_i, beta_i per row and the scale vector (1, t_2..t_r). */
struct CurveData {
    std::vector<Rational> alpha, beta, scale;
};

CurveData curve_data(const SubspaceConfig& cfg, const std::vector<Rational>& t_values) {
    if (t_values.size() + 1 != cfg.r)
        throw input_error("need r-1 scaling values, got " + std::to_string(t_values.size()));
    for (const auto& t : t_values)
        if (t == 0) throw input_error("scaling values must be nonzero");
    CurveData cd;
    cd.scale.emplace_back(1);
    cd.scale.insert(cd.scale.end(), t_values.begin(), t_values.end());
    for (std::size_t i = 0; i < cfg.r; ++i) {
        auto [alpha, beta] = solve_two(take_row(cfg.axes_zero, i), take_row(cfg.axes_infty, i),
                                       take_row(cfg.axes_one, i));
        cd.alpha.push_back(alpha);
        cd.beta.push_back(beta);
    }
    return cd;
}

bool same_rowspace(const RatMatrix& a, const RatMatrix& b) {
    return row_basis(a) == row_basis(b);
}

} // namespace

void validate_config(const SubspaceConfig& cfg) {
    const std::size_t r = cfg.r, n = cfg.ambient_dim;
    auto check_shape = [&](const RatMatrix& m, const char* what) {
        if (m.rows() != r || m.cols() != n)
            throw invariant_error(std::string(what) + ": wrong shape");
        if (rank(m) != r) throw invariant_error(std::string(what) + ": rank below r");
    };
    check_shape(cfg.plane_zero, "base plane");
    check_shape(cfg.plane_infty, "target plane");
    check_shape(cfg.plane_one, "marked plane");
    check_shape(cfg.axes_zero, "base axes");
    check_shape(cfg.axes_infty, "target axes");
    check_shape(cfg.axes_one, "marked axes");

    if (rank(vstack(cfg.plane_zero, cfg.plane_infty)) != 2 * r)
        throw invariant_error("base and target planes intersect");
    if (rank(vstack(cfg.plane_zero, cfg.plane_one)) != 2 * r)
        throw invariant_error("base and marked planes intersect");
    if (rank(vstack(cfg.plane_infty, cfg.plane_one)) != 2 * r)
        throw invariant_error("target and marked planes intersect");
    if (rank(vstack(vstack(cfg.plane_zero, cfg.plane_infty), cfg.plane_one)) != 2 * r)
        throw invariant_error("marked plane not inside base + target");

    if (!same_rowspace(cfg.axes_zero, cfg.plane_zero))
        throw invariant_error("base axes do not span the base plane");
    if (!same_rowspace(cfg.axes_infty, cfg.plane_infty))
        throw invariant_error("target axes do not span the target plane");
    if (!same_rowspace(cfg.axes_one, cfg.plane_one))
        throw invariant_error("marked axes do not span the marked plane");

    for (std::size_t i = 0; i < r; ++i) {
        auto [alpha, beta] = solve_two(take_row(cfg.axes_zero, i), take_row(cfg.axes_infty, i),
                                       take_row(cfg.axes_one, i));
        if (alpha == 0 || beta == 0)
            throw invariant_error("marked axis meets a base or target axis");
    }
}

SubspaceConfig standard_config(std::size_t r) {
    if (r < 2) throw input_error("configuration needs r >= 2");
    const std::size_t n = 3 * r;
    SubspaceConfig cfg;
    cfg.ambient_dim = n;
    cfg.r = r;
    cfg.plane_zero = RatMatrix(r, n);
    cfg.plane_infty = RatMatrix(r, n);
    cfg.plane_one = RatMatrix(r, n);
    for (std::size_t i = 0; i < r; ++i) {
        cfg.plane_zero.at(i, i) = 1;
        cfg.plane_infty.at(i, r + i) = 1;
        cfg.plane_one.at(i, i) = 1;
        cfg.plane_one.at(i, r + i) = 1;
    }
    cfg.axes_zero = cfg.plane_zero;

    /* Decompose the target and marked planes into lines by intersecting
     * with the planes spanned by pairs of construction data. */
    cfg.axes_infty = RatMatrix(r, n);
    cfg.axes_one = RatMatrix(r, n);
    for (std::size_t i = 0; i < r; ++i) {
        RatMatrix li = intersect_rows(cfg.plane_infty,
                                      vstack(cfg.plane_one, take_row(cfg.axes_zero, i)));
        if (li.rows() != 1)
            throw invariant_error("target line decomposition not one-dimensional");
        for (std::size_t j = 0; j < n; ++j) cfg.axes_infty.at(i, j) = li.at(0, j);

        RatMatrix mi = intersect_rows(cfg.plane_one,
                                      vstack(take_row(cfg.axes_zero, i), li));
        if (mi.rows() != 1)
            throw invariant_error("marked line decomposition not one-dimensional");
        for (std::size_t j = 0; j < n; ++j) cfg.axes_one.at(i, j) = mi.at(0, j);
    }
    validate_config(cfg);
    return cfg;
}

RatMatrix segre_plane(const SubspaceConfig& cfg, const std::vector<Rational>& t_values,
                      const CurveParam& curve_param) {
    if (curve_param.is_infinite) {
        curve_data(cfg, t_values); // still validates the scaling vector
        RatMatrix out = cfg.axes_infty;
        if (rank(out) != cfg.r) throw invariant_error("curve plane rank below r");
        return out;
    }
    CurveData cd = curve_data(cfg, t_values);
    RatMatrix out(cfg.r, cfg.ambient_dim);
    for (std::size_t i = 0; i < cfg.r; ++i) {
        Rational c = curve_param.value * cd.scale[i] * cd.beta[i];
        for (std::size_t j = 0; j < cfg.ambient_dim; ++j)
            out.at(i, j) = cd.alpha[i] * cfg.axes_zero.at(i, j) + c * cfg.axes_infty.at(i, j);
    }
    if (rank(out) != cfg.r) throw invariant_error("curve plane rank below r");
    return out;
}

PluckerCurve plucker_curve(const SubspaceConfig& cfg, const std::vector<Rational>& t_values) {
    CurveData cd = curve_data(cfg, t_values);
    const std::size_t r = cfg.r, n = cfg.ambient_dim;

    /* Symbolic plane: row i = alpha_i * base_i + u * scale_i * beta_i * target_i. */
    std::vector<std::vector<RatPoly>> rows(r, std::vector<RatPoly>(n));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RatPoly p;
            Rational c0 = cd.alpha[i] * cfg.axes_zero.at(i, j);
            Rational c1 = cd.scale[i] * cd.beta[i] * cfg.axes_infty.at(i, j);
            if (c0 != 0) p += RatPoly(c0);
            if (c1 != 0) p += RatPoly::monomial(1, c1);
            rows[i][j] = p;
        }

    PluckerCurve pc;
    pc.ambient_dim = n;
    pc.r = r;
    std::vector<RatPoly> polys;
    for (const auto& subset : subsets_lex(n, r)) {
        std::vector<std::vector<RatPoly>> sub(r, std::vector<RatPoly>(r));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) sub[i][j] = rows[i][subset[j]];
        pc.entries.emplace_back(subset, ratlinalg::poly_det(sub));
        polys.push_back(pc.entries.back().second);
    }
    ratlinalg::make_primitive(polys);
    bool all_zero = true;
    for (std::size_t k = 0; k < polys.size(); ++k) {
        pc.entries[k].second = polys[k];
        if (polys[k].degree() >= 0) all_zero = false;
    }
    if (all_zero) throw invariant_error("identically zero Plucker vector");
    return pc;
}

long long curve_degree(const PluckerCurve& pc) {
    long long d = 0;
    for (const auto& [subset, poly] : pc.entries) d = std::max(d, poly.degree());
    return d;
}

std::vector<Rational> plucker_point(const RatMatrix& plane) {
    const std::size_t r = plane.rows(), n = plane.cols();
    if (rank(plane) != r) throw input_error("plane basis has deficient rank");
    std::vector<Rational> out;
    std::vector<std::size_t> all_rows(r);
    for (std::size_t i = 0; i < r; ++i) all_rows[i] = i;
    for (const auto& subset : subsets_lex(n, r))
        out.push_back(ratlinalg::minor(plane, all_rows, subset));
    return out;
}

std::vector<Rational> evaluate(const PluckerCurve& pc, const Rational& u) {
    std::vector<Rational> out;
    for (const auto& [subset, poly] : pc.entries) out.push_back(poly.eval(u));
    return out;
}

std::vector<Rational> evaluate_at_infinity(const PluckerCurve& pc) {
    const auto d = static_cast<std::size_t>(curve_degree(pc));
    std::vector<Rational> out;
    for (const auto& [subset, poly] : pc.entries) out.push_back(poly.coeff(d));
    return out;
}

LineFlag::LineFlag(RatMatrix small, RatMatrix big) : small_(std::move(small)), big_(std::move(big)) {
    if (big_.rows() != small_.rows() + 2 || big_.cols() != small_.cols())
        throw input_error("flag dimensions must differ by two");
    if (rank(small_) != small_.rows()) throw input_error("small flag member has deficient rank");
    if (rank(big_) != big_.rows()) throw input_error("big flag member has deficient rank");
    if (!rowspace_contains(big_, small_)) throw input_error("flag members not nested");
}

bool line_contains(const LineFlag& line, const RatMatrix& plane) {
    if (plane.rows() != line.small().rows() + 1 || plane.cols() != line.small().cols())
        return false;
    if (rank(plane) != plane.rows()) return false;
    return rowspace_contains(plane, line.small()) && rowspace_contains(line.big(), plane);
}

LineMeet meet_lines(const LineFlag& a, const LineFlag& b, std::size_t r) {
    RatMatrix w1 = sum_rows(a.small(), b.small());
    RatMatrix w2 = intersect_rows(a.big(), b.big());
    if (w1.rows() > r || w2.rows() < r) return {0, std::nullopt};
    if (!rowspace_contains(w2, w1)) return {0, std::nullopt};
    if (w1.rows() == r) return {1, w1};
    if (w2.rows() == r) return {1, w2};
    return {-1, std::nullopt};
}

ChainOfLines chain_of_lines(const SubspaceConfig& cfg) {
    const std::size_t r = cfg.r, n = cfg.ambient_dim;
    ChainOfLines chain;
    for (std::size_t i = 0; i < r; ++i) {
        RatMatrix small(r - 1, n);
        std::size_t row = 0;
        for (std::size_t j = 0; j < i; ++j, ++row)
            for (std::size_t c = 0; c < n; ++c) small.at(row, c) = cfg.axes_infty.at(j, c);
        for (std::size_t j = i + 1; j < r; ++j, ++row)
            for (std::size_t c = 0; c < n; ++c) small.at(row, c) = cfg.axes_zero.at(j, c);
        RatMatrix big = vstack(vstack(small, take_row(cfg.axes_zero, i)),
                               take_row(cfg.axes_infty, i));
        chain.lines.emplace_back(small, big);
    }

    chain.incidence.assign(r, std::vector<int>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            LineMeet m = meet_lines(chain.lines[i], chain.lines[j], r);
            if (m.count < 0) throw invariant_error("two chain lines coincide");
            chain.incidence[i][j] = chain.incidence[j][i] = m.count;
            bool expect_meet = (j == i + 1);
            if (m.count != (expect_meet ? 1 : 0))
                throw invariant_error("chain incidence is not the path graph");
            if (expect_meet) {
                /* Expected meeting plane: targets up to i, bases after. */
                RatMatrix expected(r, n);
                for (std::size_t k = 0; k <= i; ++k)
                    for (std::size_t c = 0; c < n; ++c)
                        expected.at(k, c) = cfg.axes_infty.at(k, c);
                for (std::size_t k = i + 1; k < r; ++k)
                    for (std::size_t c = 0; c < n; ++c)
                        expected.at(k, c) = cfg.axes_zero.at(k, c);
                RatMatrix got = row_basis(*m.point);
                if (got != row_basis(expected))
                    throw invariant_error("chain meeting plane is not the expected one");
                chain.meeting_points.push_back(got);
            }
        }

    chain.base_plane_on_first = line_contains(chain.lines.front(), cfg.plane_zero);
    chain.target_plane_on_last = line_contains(chain.lines.back(), cfg.plane_infty);
    if (!chain.base_plane_on_first) throw invariant_error("base plane not on the first line");
    if (!chain.target_plane_on_last) throw invariant_error("target plane not on the last line");
    return chain;
}

std::pair<SubspaceConfig, SubspaceConfig> two_chain_config(std::size_t r) {
    SubspaceConfig cfg = standard_config(r);
    const std::size_t n = cfg.ambient_dim;

    SubspaceConfig second;
    second.ambient_dim = n;
    second.r = r;
    second.plane_zero = RatMatrix(r, n);
    second.plane_infty = cfg.plane_infty;
    second.plane_one = RatMatrix(r, n);
    for (std::size_t i = 0; i < r; ++i) {
        second.plane_zero.at(i, 2 * r + i) = 1;
        second.plane_one.at(i, 2 * r + i) = 1;
        second.plane_one.at(i, r + i) = 1;
    }
    second.axes_zero = second.plane_zero;
    second.axes_infty = cfg.axes_infty;
    second.axes_one = second.plane_one;
    validate_config(second);

    if (rank(vstack(vstack(second.plane_zero, cfg.plane_zero), cfg.plane_infty)) != 3 * r)
        throw invariant_error("second base plane meets base + target");
    return {cfg, second};
}

TwoChainReport two_chain_check(std::size_t r) {
    auto [cfg, second] = two_chain_config(r);
    TwoChainReport report;
    report.cfg = cfg;
    report.cfg_second = second;

    std::vector<Rational> ones(r - 1, Rational(1));
    PluckerCurve c1 = plucker_curve(cfg, ones);
    PluckerCurve c2 = plucker_curve(second, ones);

    std::vector<Rational> target = plucker_point(cfg.plane_infty);
    if (!proportional(evaluate_at_infinity(c1), target) ||
        !proportional(evaluate_at_infinity(c2), target))
        throw invariant_error("curves do not share the target plane at infinity");
    report.share_target_point = true;

    /* Certificate subset: a constant nonzero minor of the first curve at
     * which the target plane's Plucker coordinate vanishes. */
    bool found = false;
    for (std::size_t k = 0; k < c1.entries.size(); ++k) {
        const auto& [subset, poly] = c1.entries[k];
        if (poly.degree() == 0 && target[k] == 0) {
            report.certificate_subset = subset;
            found = true;
            break;
        }
    }
    if (!found) throw invariant_error("no constant-minor certificate for the first curve");

    report.sampled_pairs_distinct = 0;
    for (long long a = -3; a <= 3; ++a)
        for (long long b = -3; b <= 3; ++b) {
            if (proportional(evaluate(c1, Rational(a)), evaluate(c2, Rational(b))))
                throw invariant_error("curves meet at a finite parameter pair");
            ++report.sampled_pairs_distinct;
        }
    return report;
}

EmbedReport embed_chain(const std::vector<long long>& degrees) {
    if (degrees.empty()) throw input_error("empty degree list");
    for (long long d : degrees)
        if (d < 1) throw input_error("component degrees must be >= 1");

    EmbedReport report;
    report.degrees = degrees;
    report.total_degree = 0;
    for (long long d : degrees) report.total_degree += d;
    const std::size_t n = static_cast<std::size_t>(report.total_degree);
    const std::size_t r = degrees.size();

    std::size_t offset = 0;
    for (std::size_t i = 0; i < r; ++i) {
        report.block_offsets.push_back(offset);
        std::vector<RatPoly> comp(n + 1);
        for (long long p = 0; p <= degrees[i]; ++p)
            comp[offset + static_cast<std::size_t>(p)] = RatPoly::monomial(static_cast<std::size_t>(p));
        report.components.push_back(std::move(comp));
        offset += static_cast<std::size_t>(degrees[i]);
    }

    /* Span of the coordinate functions: one row per ambient coordinate,
     * columns the concatenated coefficient spaces of the components. */
    std::size_t total_cols = 0;
    for (long long d : degrees) total_cols += static_cast<std::size_t>(d) + 1;
    RatMatrix span(n + 1, total_cols);
    for (std::size_t c = 0; c <= n; ++c) {
        std::size_t col0 = 0;
        for (std::size_t i = 0; i < r; ++i) {
            const RatPoly& p = report.components[i][c];
            for (long long e = 0; e <= p.degree(); ++e)
                span.at(c, col0 + static_cast<std::size_t>(e)) = p.coeff(static_cast<std::size_t>(e));
            col0 += static_cast<std::size_t>(degrees[i]) + 1;
        }
    }
    report.span_dim = rank(span);
    if (report.span_dim != n + 1)
        throw invariant_error("coordinate functions do not span a space of dimension n+1");

    /* Supports: consecutive blocks overlap in exactly the shared node
     * coordinate, others are disjoint; each coordinate function is a
     * monomial, so a component leaves its open torus orbit only at the
     * two endpoint parameters. */
    std::vector<std::set<std::size_t>> supports(r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c <= n; ++c)
            if (report.components[i][c].degree() >= 0) supports[i].insert(c);
    report.consecutive_meet_once = true;
    report.nonconsecutive_disjoint = true;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            std::vector<std::size_t> common;
            std::set_intersection(supports[i].begin(), supports[i].end(), supports[j].begin(),
                                  supports[j].end(), std::back_inserter(common));
            if (j == i + 1) {
                if (common.size() != 1 ||
                    common[0] != report.block_offsets[j])
                    report.consecutive_meet_once = false;
            } else if (!common.empty()) {
                report.nonconsecutive_disjoint = false;
            }
        }
    if (!report.consecutive_meet_once)
        throw invariant_error("consecutive components do not meet in one node coordinate");
    if (!report.nonconsecutive_disjoint)
        throw invariant_error("nonconsecutive components share a coordinate");
    return report;
}

} // namespace indgrass::segre_curves
