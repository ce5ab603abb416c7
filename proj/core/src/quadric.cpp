#include "indgrass/quadric.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace indgrass::quadric {

namespace {

long long p_of(long long n) { return std::max(n + 1, 0LL); }
long long q_of(long long n) { return std::max(-n - 1, 0LL); }

std::string twist_text(BiDegree bd) {
    return "(" + std::to_string(bd.a) + "," + std::to_string(bd.b) + ")";
}

} // namespace

CohomologyTriple::CohomologyTriple(long long h0, long long h1, long long h2, long long chi)
    : h0_(h0), h1_(h1), h2_(h2), chi_(chi) {
    if (h0 < 0 || h1 < 0 || h2 < 0)
        throw invariant_error("negative cohomology count");
    if (h0 - h1 + h2 != chi)
        throw invariant_error("cohomology triple inconsistent with Euler characteristic");
}

CohomologyTriple direct_sum(const CohomologyTriple& x, const CohomologyTriple& y) {
    return {x.h0() + y.h0(), x.h1() + y.h1(), x.h2() + y.h2(), x.chi() + y.chi()};
}

CohomologyTriple h_line(BiDegree bd) {
    const long long pa = p_of(bd.a), pb = p_of(bd.b);
    const long long qa = q_of(bd.a), qb = q_of(bd.b);
    return {pa * pb, pa * qb + qa * pb, qa * qb, (bd.a + 1) * (bd.b + 1)};
}

FiberPointSet::FiberPointSet(std::vector<std::vector<Rational>> groups)
    : groups_(std::move(groups)) {
    std::set<Rational> seen;
    for (const auto& g : groups_)
        for (const auto& x : g)
            if (!seen.insert(x).second)
                throw input_error("duplicate fiber point parameter " + ratlinalg::to_string(x));
}

std::size_t FiberPointSet::total_points() const {
    std::size_t n = 0;
    for (const auto& g : groups_)
        n += g.size();
    return n;
}

std::vector<Rational> FiberPointSet::all_points() const {
    std::vector<Rational> out;
    out.reserve(total_points());
    for (const auto& g : groups_)
        out.insert(out.end(), g.begin(), g.end());
    return out;
}

FiberPointSet FiberPointSet::single_group(std::size_t index) const {
    if (index >= groups_.size())
        throw input_error("fiber point group index out of range");
    return FiberPointSet({groups_[index]});
}

long long h0_ideal(const FiberPointSet& z, BiDegree bd) {
    if (bd.a < 0 || bd.b < 0)
        return 0;
    const auto points = z.all_points();
    const auto a = static_cast<std::size_t>(bd.a);
    const auto b = static_cast<std::size_t>(bd.b);
    const std::size_t cols = (a + 1) * (b + 1);
    if (points.empty())
        return static_cast<long long>(cols);
    /* Monomial S^(a-i) U^i T^(b-j) W^j evaluated at ((1:0),(x:1)): only
     * the i = 0 block survives and contributes x^j. */
    ratlinalg::RatMatrix eval(points.size(), cols);
    for (std::size_t row = 0; row < points.size(); ++row) {
        Rational power(1);
        for (std::size_t j = 0; j <= b; ++j) {
            eval.at(row, j) = power;
            power *= points[row];
        }
    }
    return static_cast<long long>(ratlinalg::kernel_dim(eval));
}

CohomologyTriple h_ideal(const FiberPointSet& z, BiDegree bd) {
    const long long h0 = h0_ideal(z, bd);
    const long long h2 = h_line(bd).h2();
    const long long chi = (bd.a + 1) * (bd.b + 1) - static_cast<long long>(z.total_points());
    const long long h1 = h0 + h2 - chi;
    if (h1 < 0)
        throw invariant_error("negative h1 for twisted ideal sheaf at " + twist_text(bd));
    return {h0, h1, h2, chi};
}

bool HInterval::collapsed() const {
    return h0_lo == h0_hi && h1_lo == h1_hi && h2_lo == h2_hi;
}

CohomologyTriple HInterval::exact() const {
    if (!collapsed())
        throw invariant_error("cohomology interval did not collapse");
    return {h0_lo, h1_lo, h2_lo, chi};
}

bool HInterval::contains(const CohomologyTriple& t) const {
    return h0_lo <= t.h0() && t.h0() <= h0_hi && h1_lo <= t.h1() && t.h1() <= h1_hi &&
           h2_lo <= t.h2() && t.h2() <= h2_hi && chi == t.chi();
}

HInterval les_intervals(const CohomologyTriple& a, const CohomologyTriple& c) {
    const long long rho0_max = std::min(c.h0(), a.h1());
    const long long rho1_max = std::min(c.h1(), a.h2());
    HInterval iv{};
    iv.h0_lo = a.h0() + c.h0() - rho0_max;
    iv.h0_hi = a.h0() + c.h0();
    iv.h1_lo = a.h1() + c.h1() - rho0_max - rho1_max;
    iv.h1_hi = a.h1() + c.h1();
    iv.h2_lo = a.h2() + c.h2() - rho1_max;
    iv.h2_hi = a.h2() + c.h2();
    iv.chi = a.chi() + c.chi();
    return iv;
}

HInterval les_quotient_intervals(const CohomologyTriple& a, const CohomologyTriple& b) {
    /* rho0 = rank of H^0 C -> H^1 A = dim ker(H^1 A -> H^1 B), so it is at
     * least h1 A - h1 B; rho1 likewise for degree 2. */
    const long long rho0_lo = std::max(0LL, a.h1() - b.h1());
    const long long rho0_hi = a.h1();
    const long long rho1_lo = std::max(0LL, a.h2() - b.h2());
    const long long rho1_hi = a.h2();
    HInterval iv{};
    iv.h0_lo = std::max(b.h0() - a.h0() + rho0_lo, 0LL);
    iv.h0_hi = b.h0() - a.h0() + rho0_hi;
    iv.h1_lo = std::max(b.h1() - a.h1() + rho0_lo + rho1_lo, 0LL);
    iv.h1_hi = b.h1() - a.h1() + rho0_hi + rho1_hi;
    iv.h2_lo = std::max(b.h2() - a.h2() + rho1_lo, 0LL);
    iv.h2_hi = b.h2() - a.h2() + rho1_hi;
    iv.chi = b.chi() - a.chi();
    if (iv.h0_hi < iv.h0_lo || iv.h1_hi < iv.h1_lo || iv.h2_hi < iv.h2_lo)
        throw invariant_error("empty quotient interval: inputs admit no exact sequence");
    return iv;
}

HInterval koszul_h(const FiberPointSet& z, std::size_t group_index, BiDegree bd) {
    const FiberPointSet group = z.single_group(group_index);
    const auto ak = static_cast<long long>(group.total_points());
    const CohomologyTriple a = h_line({bd.a - 1, bd.b});
    const CohomologyTriple b =
        direct_sum(h_line(bd), h_line({bd.a - 1, bd.b + ak}));
    return les_quotient_intervals(a, b);
}

} // namespace indgrass::quadric
