#pragma once

// Abstract polymer models on the defect layers of [3]^n slabs. A polymer
// is a 2-linked subset of a single defect layer; polymers interact through
// an adjacent "interaction" layer, and two polymers are compatible iff
// their interaction-layer neighborhoods are disjoint. Provides Ursell
// functions, polymer/cluster enumeration, exact cluster sums, exact
// partition functions and tilted generating polynomials, and a truncated
// Kotecky-Preiss condition checker that works directly on points (no
// materialized universe), usable at n = 20 and beyond.

#include "antichains/common.hpp"
#include "antichains/poset.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace antichains {

// Ursell function of a graph on k <= 7 labeled vertices (edge list over
// 0..k-1): (1/k!) sum over spanning connected edge subsets E' of
// (-1)^{|E'|}. Disconnected graphs give 0 (the sum is empty).
Rat ursell(int k, const std::vector<std::pair<int, int>>& edges);

// 2^e as an exact rational (e may be negative).
Rat pow2_rat(long long e);

struct Polymer {
    std::vector<std::int32_t> verts;  // universe indices, strictly increasing
    Bits imask;                       // interaction-layer positions hit by N(A)
    Rat weight;

    int size() const { return static_cast<int>(verts.size()); }
};

// Concrete models:
//  - central: defect layers n-1 and n+1 of L_{[n-1,n+1]}([3]^n),
//    interaction layer L_n, weight 2^{-|N(A) cap L_n|};
//  - three_layer: defect layer top-1 of L^X_{[top-2,top]}, interaction
//    layer L^X_top, weight 2^{|int(A)| - |N+(A)|} with int(A) the points
//    of layer top-2 whose whole up-neighborhood lies in A;
//  - three_layer_prime: same universe, weight 2^{-|N+(A)|}.
// Within a defect layer, two vertices are 2-linked iff they differ by
// e_i - e_j, which for these slabs is equivalent to sharing a surviving
// interaction-layer neighbor; so compatibility (disjoint interaction
// masks) refines the same relation across polymers.
struct PolymerModel {
    enum class Kind { central, three_layer, three_layer_prime };

    Kind kind = Kind::central;
    int n = 0;    // ambient dimension of [3]^n
    int top = 0;  // highest slab layer (central: n+1)
    std::vector<Point> X;

    std::vector<Point> universe;     // polymer-eligible vertices
    std::vector<int> side;           // 0 = layer below interaction, 1 = above
    std::vector<Point> interaction;  // interaction-layer points
    std::vector<Bits> vmask;         // per universe vertex: interaction mask
    std::vector<std::vector<std::int32_t>> link;  // same-layer 2-link lists
    std::vector<std::vector<std::int32_t>> incidence;  // interaction pos -> universe ids

    // Weight of an arbitrary vertex set (not necessarily 2-linked).
    Rat weight_of(const std::vector<std::int32_t>& verts) const;
    // Exponent only: weight_of == 2^{weight_exponent}.
    long long weight_exponent(const std::vector<std::int32_t>& verts) const;
    Polymer make_polymer(std::vector<std::int32_t> verts) const;
    bool compatible(const Polymer& a, const Polymer& b) const {
        return !a.imask.intersects(b.imask);
    }
};

PolymerModel central_model(int n);
// Slab [top-2, top] of [3]^n restricted above the antichain X.
PolymerModel three_layer_model(int n, int top, std::vector<Point> X = {},
                               bool prime = false);

// Components of a vertex set under the shared-interaction-neighbor
// relation (the 2-linked components relevant to weight factorization).
std::vector<std::vector<std::int32_t>> mask_components(
    const PolymerModel& model, const std::vector<std::int32_t>& verts);

// Every 2-linked set containing the anchor with size <= max_size, each
// exactly once. max_size > 6 is refused: the count grows like
// (e Delta^2)^{size-1} (Delta the Hasse degree), so larger requests are a
// sign of misuse, not a capability gap.
std::vector<Polymer> enumerate_polymers(const PolymerModel& model,
                                        std::int32_t anchor, int max_size);

// The whole polymer universe up to max_size, each set exactly once.
std::vector<Polymer> all_polymers(const PolymerModel& model, int max_size);

struct Cluster {
    std::vector<std::int32_t> polymer_ids;  // indexes into the polymer list
    int total_size = 0;
    Rat weight;  // ursell(incompatibility graph) * product of weights
};

struct ClusterEnumeration {
    std::vector<Polymer> polymers;  // universe up to the cap
    std::vector<Cluster> clusters;  // ordered sequences, connected graphs
};

// All ordered polymer sequences with connected incompatibility graph and
// total size <= cap. Sequences are never deduplicated across orderings:
// (p, q) and (q, p) are distinct clusters. cap > 4 is refused.
ClusterEnumeration enumerate_clusters(const PolymerModel& model, int cap);

// Sum of w(Gamma) ||Gamma||^m over clusters with ||Gamma|| = k exactly,
// via grouped shape families (k <= 3) with exact dyadic accumulation.
Rat cluster_sum(const PolymerModel& model, int k, int m);
// Same with |w(Gamma)|.
Rat cluster_sum_abs(const PolymerModel& model, int k, int m);

// Exact partition function: sum over all pairwise-compatible polymer
// collections of the product of weights (empty collection contributes 1).
// Refused when a defect layer exceeds 8 vertices.
Rat partition_function_exact(const PolymerModel& model);

// Tilted central partition polynomial for [3]^n, n <= 3: coefficient k of
// z^k collects compatible collections of total size k. Dividing by the
// value at z = 1 yields the exact defect-count PGF.
std::vector<Rat> defect_pgf(int n);

// Isoperimetric constants feeding the Kotecky-Preiss g function; the
// shipped data/constants.json carries empirically audited values.
struct KPConstants {
    double c = 0.0;        // layer-ratio constant: ratio >= 1 + c/(t^2 n)
    double c_prime = 0.0;  // up-expansion constant: |N+(S)| >= c' n |S| / t
    double big_c() const {
        const double a = c / 9, b = c_prime / 3;
        return a < b ? a : b;
    }
};
KPConstants load_kp_constants(const std::string& json_path);

using SizeFn = std::function<long double(int)>;
// f(A) = |A| ln2 / n^2.
SizeFn kp_f_default(int n);
// Piecewise g: ((n-2)/2 |A| - |A|^2) ln2 - 10 |A| ln n  for |A| <= n/10;
// (9C/10) n |A| ln2 for n/10 < |A| <= n^4; |A| ln2 / n^2 beyond.
SizeFn kp_g_default(int n, const KPConstants& consts);

struct KPReport {
    Point anchor;
    int cutoff = 0;
    long double lhs = 0;       // truncated sum of w(A') e^{f(A')+g(A')}
    long double f_target = 0;  // f at the anchor singleton
    long double margin = 0;    // f_target - lhs
    bool pass = false;
    std::string note;  // truncation disclaimer
};

// Truncated Kotecky-Preiss condition at one anchor: sums
// w(A') e^{f(A')+g(A')} over polymers A' of size <= cutoff incompatible
// with the anchor singleton. Works point-wise (no slice build), so large n
// is fine; cutoff <= 2 (larger truncations need the materialized model).
KPReport kp_check(PolymerModel::Kind kind, int n, int top,
                  const std::vector<Point>& X, const Point& anchor, int cutoff,
                  const SizeFn& f, const SizeFn& g);

}  // namespace antichains
