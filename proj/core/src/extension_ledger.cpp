#include "indgrass/extension_ledger.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <utility>

namespace indgrass::extension_ledger {

namespace {

std::string twist_text(BiDegree bd) {
    return "(" + std::to_string(bd.a) + "," + std::to_string(bd.b) + ")";
}

const std::map<BiDegree, std::string>& named_formula_ids() {
    static const std::map<BiDegree, std::string> ids{
        {{0, -1}, "h0=a1"},
        {{0, 0}, "h0=a1+k"},
        {{1, -1}, "h0=2a1+sum(a2..ak)"},
        {{1, 0}, "h0=2a1+sum(a2..ak)+2k"},
        {{2, 0}, "h0=3a1+2sum(a2..ak)+3k"},
    };
    return ids;
}

void require(bool condition, const std::string& message) {
    if (!condition)
        throw invariant_error(message);
}

} // namespace

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts)) {
    if (parts_.size() < 2)
        throw input_error("partition needs at least two parts");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw input_error("partition parts must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw input_error("partition parts must be nonincreasing");
    }
}

long long Partition::d() const {
    long long sum = 0;
    for (long long a : parts_)
        sum += a;
    return sum;
}

Partition parse_partition(const std::string& text) {
    std::vector<long long> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw input_error("malformed partition: " + text);
        }
        if (used != item.size())
            throw input_error("malformed partition: " + text);
        parts.push_back(value);
    }
    return Partition(std::move(parts));
}

std::string format_partition(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.r(); ++i) {
        if (i > 0)
            out += ",";
        out += std::to_string(p.part(i));
    }
    return out;
}

FiberPointSet random_fiber_points(const Partition& p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const long long total = p.d();
    const long long hi = 30 + 4 * total;
    std::set<ratlinalg::Rational> seen;
    auto draw = [&]() {
        while (true) {
            const long long num = -hi + static_cast<long long>(rng() % (2 * hi + 1));
            const long long den = 1 + static_cast<long long>(rng() % 8);
            ratlinalg::Rational x(num, den);
            if (seen.insert(x).second)
                return x;
        }
    };
    std::vector<std::vector<ratlinalg::Rational>> groups;
    for (std::size_t i = 1; i < p.r(); ++i) {
        std::vector<ratlinalg::Rational> group;
        for (long long j = 0; j < p.part(i); ++j)
            group.push_back(draw());
        groups.push_back(std::move(group));
    }
    return FiberPointSet(std::move(groups));
}

std::map<BiDegree, long long> LedgerEntry::h0_values() const {
    std::map<BiDegree, long long> out;
    for (const auto& [bd, id] : named_formula_ids())
        out.emplace(bd, at(bd).h0());
    return out;
}

const CohomologyTriple& LedgerEntry::at(BiDegree bd) const {
    const auto it = values.find(bd);
    if (it == values.end())
        throw input_error("twist " + twist_text(bd) + " is not tracked by the ledger");
    return it->second;
}

namespace {

/* Closed forms for level k; s = a_2 + ... + a_k. */
long long expected_h0(BiDegree bd, long long a1, long long s, long long k) {
    if (bd == BiDegree{0, -1})
        return a1;
    if (bd == BiDegree{0, 0})
        return a1 + k;
    if (bd == BiDegree{1, -1})
        return 2 * a1 + s;
    if (bd == BiDegree{1, 0})
        return 2 * a1 + s + 2 * k;
    if (bd == BiDegree{2, 0})
        return 3 * a1 + 2 * s + 3 * k;
    throw invariant_error("no closed form for twist " + twist_text(bd));
}

SplittingType zeros_type(std::size_t k) {
    return SplittingType(std::vector<long long>(k, 0));
}

void check_level(const Partition& p, LedgerEntry& entry) {
    const long long k = entry.level;
    const long long a1 = p.part(0);
    long long s = 0;
    for (long long i = 2; i <= k; ++i)
        s += p.part(static_cast<std::size_t>(i - 1));

    for (const auto& [bd, id] : named_formula_ids()) {
        const auto& t = entry.at(bd);
        require(t.h0() == expected_h0(bd, a1, s, k),
                "level " + std::to_string(k) + ": h0" + twist_text(bd) +
                    " does not match its closed form");
        if (bd != BiDegree{2, 0})
            require(t.h1() == 0, "level " + std::to_string(k) + ": h1" + twist_text(bd) +
                                     " expected to vanish");
    }
    require(entry.at({0, -1}).h2() == 0,
            "level " + std::to_string(k) + ": h2(0,-1) expected to vanish");
    for (std::size_t i = static_cast<std::size_t>(k); i < p.r(); ++i)
        require(entry.at({0, -p.part(i)}).h2() == 0,
                "level " + std::to_string(k) + ": h2(0,-a_i) expected to vanish");

    for (const auto& [bd, t] : entry.values) {
        if (t.h1() == 0)
            entry.h1_vanishing.push_back(bd);
        if (t.h2() == 0)
            entry.h2_vanishing.push_back(bd);
    }

    /* Chern bookkeeping: c1(E_k) = (0, a_1+...+a_k) against the recorded
     * restriction splitting types, plus rank agreement. */
    const long long c1_b = a1 + s;
    require(entry.restriction_generic_fiber.total_degree() == 0,
            "generic fiber degree must be 0");
    require(entry.restriction_generic_fiber.rank() == static_cast<std::size_t>(k),
            "generic fiber rank mismatch");
    if (entry.restriction_jumping_fiber) {
        require(entry.restriction_jumping_fiber->total_degree() == 0,
                "jumping fiber degree must be 0");
        require(entry.restriction_jumping_fiber->rank() == static_cast<std::size_t>(k),
                "jumping fiber rank mismatch");
    }
    require(entry.restriction_P.total_degree() == c1_b, "restriction to P degree mismatch");
    require(entry.restriction_P.rank() == static_cast<std::size_t>(k),
            "restriction to P rank mismatch");
    require(entry.restriction_Pprime.total_degree() == c1_b,
            "restriction to P' degree mismatch");
    require(entry.restriction_Pprime.rank() == static_cast<std::size_t>(k),
            "restriction to P' rank mismatch");
}

LedgerEntry make_entry(const Partition& p, int level,
                       std::map<BiDegree, CohomologyTriple> values) {
    const auto k = static_cast<std::size_t>(level);
    std::vector<long long> p_degrees(p.parts().begin(), p.parts().begin() + level);
    long long sum = 0;
    for (long long a : p_degrees)
        sum += a;
    std::vector<long long> pprime_degrees(k, 0);
    pprime_degrees[0] = sum;

    std::optional<SplittingType> jumping;
    if (level >= 2) {
        std::vector<long long> degs(k, 0);
        degs[0] = 1;
        degs[k - 1] = -1;
        jumping = SplittingType(std::move(degs));
    }

    LedgerEntry entry{level,
                      std::move(values),
                      named_formula_ids(),
                      {},
                      {},
                      zeros_type(k),
                      std::move(jumping),
                      SplittingType(std::move(p_degrees)),
                      SplittingType(std::move(pprime_degrees))};
    check_level(p, entry);
    return entry;
}

} // namespace

std::vector<LedgerEntry> build_ledger(const Partition& p, const FiberPointSet& z) {
    if (z.group_count() != p.r() - 1)
        throw input_error("fiber point set must have one group per part a_2..a_r");
    for (std::size_t i = 1; i < p.r(); ++i)
        if (static_cast<long long>(z.groups()[i - 1].size()) != p.part(i))
            throw input_error("group " + std::to_string(i - 1) + " must have a_" +
                              std::to_string(i + 1) + " points");

    std::set<BiDegree> tracked;
    for (const auto& [bd, id] : named_formula_ids())
        tracked.insert(bd);
    for (std::size_t i = 1; i < p.r(); ++i)
        tracked.insert({0, -p.part(i)});

    std::vector<LedgerEntry> ledger;
    std::map<BiDegree, CohomologyTriple> values;
    for (const BiDegree& bd : tracked)
        values.emplace(bd, quadric::h_line({bd.a, p.part(0) + bd.b}));
    ledger.push_back(make_entry(p, 1, std::move(values)));

    for (std::size_t k = 2; k <= p.r(); ++k) {
        const long long ak = p.part(k - 1);
        const FiberPointSet group = z.single_group(k - 2);
        std::map<BiDegree, CohomologyTriple> next;
        for (const BiDegree& bd : tracked) {
            const CohomologyTriple& a = ledger.back().at(bd);
            const CohomologyTriple c = quadric::h_ideal(group, {bd.a, bd.b + ak});
            const HInterval iv = les_intervals(a, c);
            if (!iv.collapsed())
                throw invariant_error("level " + std::to_string(k) + ": interval at twist " +
                                      twist_text(bd) + " failed to collapse");
            next.emplace(bd, iv.exact());
        }
        ledger.push_back(make_entry(p, static_cast<int>(k), std::move(next)));
    }
    return ledger;
}

TheoremFRecord theorem_F_invariants(const Partition& p, const FiberPointSet& z) {
    std::vector<LedgerEntry> ledger = build_ledger(p, z);
    const LedgerEntry& top = ledger.back();
    const long long a1 = p.part(0);
    const long long d = p.d();
    const auto r = static_cast<long long>(p.r());

    const long long h0_m1m1 = top.at({1, -1}).h0();
    const long long h0_m10 = top.at({1, 0}).h0();
    const long long h0_f = top.at({2, 0}).h0();
    require(h0_m1m1 == a1 + d, "h0(F(-1,-1)) != a1 + d");
    require(h0_m10 == a1 + d + 2 * r, "h0(F(-1,0)) != a1 + d + 2r");
    require(h0_f == a1 + 2 * d + 3 * r, "h0(F) != a1 + 2d + 3r");

    /* F-relative twist (x,y) reads off E_r at (x+2, y). */
    const std::vector<std::pair<BiDegree, BiDegree>> h1_map{
        {{-1, -1}, {1, -1}}, {{-2, 0}, {0, 0}}, {{-2, -1}, {0, -1}}, {{-1, 0}, {1, 0}}};
    std::vector<BiDegree> h1_vanishing;
    for (const auto& [f_twist, e_twist] : h1_map) {
        require(top.at(e_twist).h1() == 0,
                "h1(F" + twist_text(f_twist) + ") expected to vanish");
        h1_vanishing.push_back(f_twist);
    }
    const bool h2_zero = top.at({0, -1}).h2() == 0;
    require(h2_zero, "h2(F(-2,-1)) expected to vanish");

    const auto rk = static_cast<std::size_t>(r);
    std::vector<long long> on_z(rk, 2);
    on_z[0] = 3;
    on_z[rk - 1] = 1;
    std::vector<long long> pprime(rk, 0);
    pprime[0] = d;

    return TheoremFRecord{h0_m1m1,
                          h0_m10,
                          h0_f,
                          std::move(h1_vanishing),
                          h2_zero,
                          top.restriction_generic_fiber.twist(2),
                          SplittingType(std::move(on_z)),
                          SplittingType(std::vector<long long>(p.parts())),
                          SplittingType(std::move(pprime)),
                          std::move(ledger)};
}

long long local_ext_dim(long long k, long long a_k) {
    if (k < 2)
        throw input_error("local ext dimension needs level k >= 2");
    if (a_k < 0)
        throw input_error("local ext dimension needs a_k >= 0");
    return (k - 1) * a_k;
}

CodimBounds nonsurjective_codim(long long dim_v, long long r) {
    if (dim_v < r + 2)
        throw input_error("codimension formula needs dim V >= r + 2");
    return {dim_v - r + 1, dim_v - r - 1};
}

} // namespace indgrass::extension_ledger
