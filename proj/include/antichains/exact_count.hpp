#pragma once

// Ground-truth antichain counting and enumeration on layer ranges of
// [t]^n, optionally restricted to points not strictly below an antichain X.
// Two independent methods: explicit branching over points (small instances)
// and a layered downset dynamic program over per-layer bitmasks.

#include "antichains/common.hpp"
#include "antichains/poset.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace antichains {

struct SubposetSpec {
    int t = 3;
    int n = 0;
    int k_low = 0;
    int k_high = 0;
    std::vector<Point> X;  // antichain strictly above k_high
};

struct CountResult {
    Int value;
    std::string method;
};

// All points of the specified subposet, grouped by layer, lex within.
std::vector<Point> collect_points(const SubposetSpec& spec);

// Branching count over at most 25 points; throws std::domain_error with a
// size report otherwise.
CountResult count_antichains_brute(const SubposetSpec& spec);

// Downset DP over layers; refuses if any layer has more than 22 points.
CountResult count_antichains_layered(const SubposetSpec& spec);

// Invokes the visitor on every antichain (as a point list); same size cap
// as the branching counter.
void enumerate_antichains(const SubposetSpec& spec,
                          const std::function<void(const std::vector<Point>&)>& visit);

// Exact distribution of |I \ L_n| over antichains I of L_[n-1,n+1]([3]^n);
// index = defect count. Requires n <= 4.
std::vector<Int> defect_distribution_exact(int n);

// Same distribution restricted to antichains whose defect set has all
// 2-linked components of size <= 2 (the structured class).
std::vector<Int> defect_distribution_small_components(int n);

// alpha([3]^n) + 1: the least family size at which any coloring of [3]^n
// by antichain-indexed colors must repeat a color class.
Int ramsey_m3(int n);

}  // namespace antichains
