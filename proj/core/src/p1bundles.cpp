#include "indgrass/p1bundles.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace indgrass::p1bundles {

SplittingType::SplittingType(std::vector<Degree> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty())
        throw input_error("splitting type needs at least one degree");
    std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
}

Degree SplittingType::total_degree() const {
    return std::accumulate(degrees_.begin(), degrees_.end(), Degree(0));
}

SplittingType SplittingType::twist(Degree n) const {
    std::vector<Degree> shifted = degrees_;
    for (auto& d : shifted)
        d += n;
    return SplittingType(std::move(shifted));
}

SplittingType SplittingType::dual() const {
    std::vector<Degree> negated = degrees_;
    for (auto& d : negated)
        d = -d;
    return SplittingType(std::move(negated));
}

Degree gap(const SplittingType& st) {
    return st.d1() - st.dmin();
}

long long h0_p1(const SplittingType& st) {
    long long total = 0;
    for (Degree d : st.degrees())
        total += std::max(d + 1, Degree(0));
    return total;
}

long long h1_p1(const SplittingType& st) {
    long long total = 0;
    for (Degree d : st.degrees())
        total += std::max(-d - 1, Degree(0));
    return total;
}

ChainBundle::ChainBundle(std::vector<SplittingType> components)
    : components_(std::move(components)) {
    if (components_.empty())
        throw input_error("chain bundle needs at least one component");
    for (const auto& c : components_)
        if (c.rank() != components_.front().rank())
            throw input_error("chain bundle components must have equal rank");
}

long long chain_h0_bound(const ChainBundle& cb, const std::vector<Degree>& twists) {
    return chain_h0_bound(cb, twists, 0);
}

long long chain_h0_bound(const ChainBundle& cb, const std::vector<Degree>& twists,
                         std::size_t pivot) {
    if (twists.size() != cb.length())
        throw input_error("twist list length must match chain length");
    if (pivot >= cb.length())
        throw input_error("pivot out of range");
    long long total = 0;
    for (std::size_t i = 0; i < cb.length(); ++i) {
        const Degree node_cost = (i == pivot) ? 0 : 1;
        total += h0_p1(cb.component(i).twist(twists[i] - node_cost));
    }
    return total;
}

bool lemma_ineq2_check(const ChainBundle& cb, const std::vector<Degree>& deltas) {
    if (deltas.size() != cb.length())
        throw input_error("delta list length must match chain length");
    std::size_t pivot = cb.length();
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        if (deltas[i] < 0)
            throw input_error("deltas must be nonnegative");
        if (deltas[i] > 0 && pivot == cb.length())
            pivot = i;
    }
    if (pivot == cb.length())
        throw input_error("deltas must not all be zero");
    std::vector<Degree> twists(cb.length());
    for (std::size_t i = 0; i < cb.length(); ++i)
        twists[i] = -cb.component(i).d1() - deltas[i];
    return chain_h0_bound(cb, twists, pivot) == 0;
}

DeformationBounds deformation_bounds(const ChainBundle& cb) {
    DeformationBounds db{0, 0, 0, 0};
    for (const auto& c : cb.components()) {
        db.d1_max += c.d1();
        db.dmin_min += c.dmin();
        db.gap_max += gap(c);
        db.total_degree += c.total_degree();
    }
    return db;
}

namespace {

void enumerate_types(Degree hi, Degree low, Degree rem, std::size_t slots,
                     std::vector<Degree>& acc, std::vector<SplittingType>& out) {
    if (slots == 0) {
        if (rem == 0)
            out.emplace_back(acc);
        return;
    }
    const auto sslots = static_cast<Degree>(slots);
    /* nonincreasing tail: v >= ceil(rem/slots); room below: v <= rem - (slots-1)*low */
    const Degree v_hi = std::min(hi, rem - (sslots - 1) * low);
    Degree ceil_avg = rem / sslots;
    if (rem % sslots != 0 && rem > 0)
        ++ceil_avg;
    const Degree v_lo = std::max(low, ceil_avg);
    for (Degree v = v_hi; v >= v_lo; --v) {
        acc.push_back(v);
        enumerate_types(v, low, rem - v, slots - 1, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<SplittingType> compatible_types(const DeformationBounds& db, std::size_t rank) {
    if (rank < 1)
        throw input_error("rank must be at least 1");
    std::vector<SplittingType> out;
    const auto r = static_cast<Degree>(rank);
    Degree d1_hi = db.d1_max;
    /* d1 <= total - (rank-1)(d1 - gap_max) caps the scan. */
    {
        const Degree cap_num = db.total_degree + (r - 1) * db.gap_max;
        Degree cap = cap_num / r;
        if (cap_num % r != 0 && cap_num < 0)
            --cap;
        d1_hi = std::min(d1_hi, cap);
    }
    Degree d1_lo = db.total_degree / r; // d1 >= average
    if (db.total_degree % r != 0 && db.total_degree > 0)
        ++d1_lo;
    d1_lo = std::max(d1_lo, db.dmin_min);
    std::vector<Degree> acc;
    for (Degree d1 = d1_hi; d1 >= d1_lo; --d1) {
        const Degree low = std::max(db.dmin_min, d1 - db.gap_max);
        acc.push_back(d1);
        enumerate_types(d1, low, db.total_degree - d1, rank - 1, acc, out);
        acc.pop_back();
    }
    return out;
}

Degree segre_gap_bound(std::size_t r, Degree D) {
    if (r < 1)
        throw input_error("segre gap bound needs r >= 1");
    if (D < 0)
        throw input_error("segre gap bound needs D >= 0");
    return static_cast<Degree>(r) * D;
}

Degree double_segre_gap_bound(std::size_t r, Degree D) {
    return 2 * segre_gap_bound(r, D);
}

namespace {

std::vector<Degree> parse_degree_list(const std::string& text) {
    std::vector<Degree> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw input_error("malformed degree list: " + text);
        }
        if (used != item.size())
            throw input_error("malformed degree list: " + text);
        out.push_back(value);
    }
    if (out.empty())
        throw input_error("empty degree list");
    return out;
}

} // namespace

SplittingType parse_splitting_type(const std::string& text) {
    return SplittingType(parse_degree_list(text));
}

std::string format_splitting_type(const SplittingType& st) {
    std::string out;
    for (std::size_t i = 0; i < st.rank(); ++i) {
        if (i > 0)
            out += ",";
        out += std::to_string(st.degrees()[i]);
    }
    return out;
}

ChainBundle parse_chain_bundle(const std::string& text) {
    std::vector<SplittingType> components;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';'))
        components.push_back(parse_splitting_type(item));
    if (components.empty())
        throw input_error("empty chain bundle");
    return ChainBundle(std::move(components));
}

std::string format_chain_bundle(const ChainBundle& cb) {
    std::string out;
    for (std::size_t i = 0; i < cb.length(); ++i) {
        if (i > 0)
            out += ";";
        out += format_splitting_type(cb.component(i));
    }
    return out;
}

} // namespace indgrass::p1bundles
