#pragma once

// The poset [t]^n = {0,...,t-1}^n ordered coordinatewise, organized by rank
// layers L_k = {x : sum x_i = k}. Provides layer enumeration/indexing,
// cover neighborhoods, boundary/interior/closure operators on layer
// subsets, restriction to points not strictly below a forbidden antichain,
// 2-linked component decomposition, and the rank-shift embedding that
// appends maximal coordinates.

#include "antichains/common.hpp"

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace antichains {

struct Point {
    std::vector<std::int8_t> c;
    int t = 0;
    int rank = 0;  // cached coordinate sum

    bool operator==(const Point& o) const { return c == o.c; }
};

Point make_point(std::vector<int> coords, int t);

// Coordinatewise order.
bool leq(const Point& a, const Point& b);
inline bool strictly_less(const Point& a, const Point& b) {
    return a.rank < b.rank && leq(a, b);
}
bool comparable(const Point& a, const Point& b);

// Lexicographic order on coordinate vectors.
bool lex_less(const Point& a, const Point& b);

// u -> (t-1)*1 - u, an order-reversing involution.
Point dual_point(const Point& p);

// Packs coordinates 3 bits each; requires t <= 8 and n <= 21.
std::uint64_t point_key(const Point& p);

// Counts of coordinates equal to 0 / 1 / >= 2 (for t = 3 these are the
// zeros/ones/twos of the vertex type).
struct VertexType {
    int zeros = 0, ones = 0, twos = 0;
    bool operator==(const VertexType& o) const {
        return zeros == o.zeros && ones == o.ones && twos == o.twos;
    }
};
VertexType vertex_type(const Point& p);

// Layer size l_k(t, n) by convolution; exact.
Int layer_size(int t, int n, int k);
std::vector<Int> layer_sizes(int t, int n);

// All points of L_k(t, n) in lexicographic order.
std::vector<Point> enumerate_layer(int t, int n, int k);

// Cover neighbors inside [t]^n.
std::vector<Point> up_neighbors(const Point& p);
std::vector<Point> down_neighbors(const Point& p);

// True iff p is strictly below some member of X.
bool below_some(const Point& p, const std::vector<Point>& X);

// Points of a layer list that are NOT strictly below any member of X.
std::vector<Point> restrict_above(const std::vector<Point>& layer,
                                  const std::vector<Point>& X);

// Contiguous layer range k_low..k_high of [t]^n, with every point not
// strictly below the antichain X (X must lie strictly above k_high).
// Points are stored grouped by rank, lexicographically within each rank.
struct LayerSlice {
    int t = 0, n = 0, k_low = 0, k_high = 0;
    std::vector<Point> points;
    std::vector<std::size_t> offsets;  // offsets[k - k_low] .. size k_high-k_low+2
    std::unordered_map<std::uint64_t, std::int32_t> index;
    std::vector<Point> X;

    std::size_t size() const { return points.size(); }
    std::size_t layer_begin(int k) const { return offsets[k - k_low]; }
    std::size_t layer_end(int k) const { return offsets[k - k_low + 1]; }
    std::int32_t position_of(const Point& p) const {
        auto it = index.find(point_key(p));
        return it == index.end() ? -1 : it->second;
    }
    bool contains(const Point& p) const { return position_of(p) >= 0; }
};

LayerSlice build_slice(int t, int n, int k_low, int k_high,
                       std::vector<Point> X = {});

// A subset of a slice's points.
struct PointSet {
    const LayerSlice* slice = nullptr;
    Bits bits;

    explicit PointSet(const LayerSlice& s) : slice(&s), bits(s.size()) {}
    void add(const Point& p);
    std::vector<Point> to_points() const;
    std::size_t count() const { return bits.count(); }
};

// Hasse distance <= 2 within the slice's layer range (paths may use any
// intermediate point of the slice, including points outside the set under
// examination).
bool hasse_dist_le2(const LayerSlice& s, const Point& a, const Point& b);

// Connected components of S under the distance-<=2 relation.
std::vector<PointSet> two_linked_components(const LayerSlice& s, const Bits& S);
bool is_two_linked(const LayerSlice& s, const Bits& S);

// N(A) restricted to layer k (A may mix layers k-1 and k+1).
std::vector<Point> boundary_in_layer(const std::vector<Point>& A, int k);

// interior: points of the layer below A whose full up-neighborhood lies in
// A (A a subset of one layer). Computed from down-neighbor candidates, so
// it never scans the ambient layer.
std::vector<Point> interior_below(const std::vector<Point>& A);

// closure of A inside its own layer i: { v in L_i : N+(v) subset N+(A) }.
std::vector<Point> closure_in_layer(int t, int n, int i,
                                    const std::vector<Point>& A);

// phi: appends (n' - n) coordinates equal to t-1, shifting layer index j of
// [t]^n to j + (t-1)(n'-n) of [t]^{n'}.
Point embed_phi(const Point& p, int n_prime);

// Checks the reduction that replaces the slab of layers [j, i] (i < n) of
// [3]^n by a slab near the top of [3]^{2n-i}: phi (appending n-i twos) must
// biject the X-restricted range [j, i] of [3]^n onto the X'-restricted
// range [2n-2i+j, 2n-i] of [3]^{2n-i}, where X' = phi(X) together with the
// all-twos points of [3]^{2n-i} having one appended coordinate lowered to
// 1. Order relations are preserved verbatim since phi appends constants.
bool verify_slab_shift(int n, int i, int j, const std::vector<Point>& X);

}  // namespace antichains
