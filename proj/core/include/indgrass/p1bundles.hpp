#pragma once

/* Splitting-type calculus for vector bundles on P^1 and on chains of
 * rational curves: the gap functional D = d_1 - d_k, twisting, duality,
 * section counts, the chain h^0 upper bound with its vanishing criterion,
 * and the deformation bounds a smoothing of a chain must satisfy. */

#include <cstddef>
#include <string>
#include <vector>

#include "indgrass/errors.hpp"

namespace indgrass::p1bundles {

using Degree = long long;

class SplittingType {
public:
    /* Degrees are normalized to nonincreasing order; must be nonempty. */
    explicit SplittingType(std::vector<Degree> degrees);

    std::size_t rank() const { return degrees_.size(); }
    const std::vector<Degree>& degrees() const { return degrees_; }
    Degree d1() const { return degrees_.front(); }
    Degree dmin() const { return degrees_.back(); }
    Degree total_degree() const;

    SplittingType twist(Degree n) const;
    SplittingType dual() const;

    bool operator==(const SplittingType& other) const = default;

private:
    std::vector<Degree> degrees_;
};

/* D = d_1 - d_k. */
Degree gap(const SplittingType& st);

long long h0_p1(const SplittingType& st);
long long h1_p1(const SplittingType& st);

class ChainBundle {
public:
    /* Components listed left to right along the chain; equal ranks. */
    explicit ChainBundle(std::vector<SplittingType> components);

    std::size_t length() const { return components_.size(); }
    std::size_t rank() const { return components_.front().rank(); }
    const std::vector<SplittingType>& components() const { return components_; }
    const SplittingType& component(std::size_t i) const { return components_.at(i); }

    bool operator==(const ChainBundle& other) const = default;

private:
    std::vector<SplittingType> components_;
};

/* Upper bound for h^0 of the chain bundle with component i twisted by
 * twists[i]. The pivot component keeps its full twisted degree; every
 * other component gives up the node it shares toward the pivot, costing
 * one degree. The two-argument form uses pivot 0 (the leftmost
 * component), matching the exact triple that splits the chain there. */
long long chain_h0_bound(const ChainBundle& cb, const std::vector<Degree>& twists);
long long chain_h0_bound(const ChainBundle& cb, const std::vector<Degree>& twists,
                         std::size_t pivot);

/* Vanishing criterion: twists n_i = -d1(component_i) - delta_i must give
 * h^0 bound 0. Deltas are nonnegative, not all zero; the pivot is placed
 * at the first component with positive delta, where the twisted degrees
 * are forced strictly negative. Computes rather than assumes. */
bool lemma_ineq2_check(const ChainBundle& cb, const std::vector<Degree>& deltas);

struct DeformationBounds {
    Degree d1_max;
    Degree dmin_min;
    Degree gap_max;
    Degree total_degree;

    bool operator==(const DeformationBounds& other) const = default;
};

/* Componentwise sums: what a smoothing of the chain can carry. */
DeformationBounds deformation_bounds(const ChainBundle& cb);

/* All splitting types of the given rank with entry sum total_degree,
 * d1 <= d1_max, d_rank >= dmin_min, gap <= gap_max; descending
 * lexicographic order. Total-degree conservation makes the list finite. */
std::vector<SplittingType> compatible_types(const DeformationBounds& db, std::size_t rank);

/* Gap bounds carried by degree-r Segre curves and their degree-2r doubles. */
Degree segre_gap_bound(std::size_t r, Degree D);
Degree double_segre_gap_bound(std::size_t r, Degree D);

/* "3,1,0" for splitting types; "3,1;2,2" for chains. */
SplittingType parse_splitting_type(const std::string& text);
std::string format_splitting_type(const SplittingType& st);
ChainBundle parse_chain_bundle(const std::string& text);
std::string format_chain_bundle(const ChainBundle& cb);

} // namespace indgrass::p1bundles
