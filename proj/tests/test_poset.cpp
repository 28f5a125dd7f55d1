#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "antichains/poset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

using namespace antichains;

namespace {

Point pt(std::vector<int> c, int t = 3) { return make_point(std::move(c), t); }

}  // namespace

TEST_CASE("layer sizes by convolution") {
    // l_k(3,4) is the coefficient sequence of (1+z+z^2)^4.
    const auto ls = layer_sizes(3, 4);
    const std::vector<Int> expect{1, 4, 10, 16, 19, 16, 10, 4, 1};
    CHECK(std::vector<Int>(ls.begin(), ls.end()) == expect);

    // Sum over layers is t^n, and l_k = l_{(t-1)n-k} by duality.
    for (int t = 2; t <= 5; ++t) {
        for (int n = 1; n <= 6; ++n) {
            const auto v = layer_sizes(t, n);
            Int sum = 0, power = 1;
            for (const auto& x : v) sum += x;
            for (int i = 0; i < n; ++i) power *= t;
            CHECK(sum == power);
            for (std::size_t k = 0; k < v.size(); ++k) CHECK(v[k] == v[v.size() - 1 - k]);
        }
    }

    // Central layer sizes of [3]^n for n = 0..12.
    const std::vector<Int> central{1, 1, 3, 7, 19, 51, 141, 393, 1107, 3139, 8953, 25653, 73789};
    for (int n = 0; n <= 12; ++n) CHECK(layer_size(3, n, n) == central[static_cast<std::size_t>(n)]);
}

TEST_CASE("layer enumeration is lexicographic and complete") {
    const auto l2 = enumerate_layer(3, 2, 2);
    REQUIRE(l2.size() == 3);
    CHECK(l2[0] == pt({0, 2}));
    CHECK(l2[1] == pt({1, 1}));
    CHECK(l2[2] == pt({2, 0}));

    for (int t = 2; t <= 4; ++t)
        for (int n = 1; n <= 5; ++n)
            for (int k = 0; k <= (t - 1) * n; ++k) {
                const auto pts = enumerate_layer(t, n, k);
                CHECK(Int(pts.size()) == layer_size(t, n, k));
                CHECK(std::is_sorted(pts.begin(), pts.end(), lex_less));
                for (const auto& p : pts) CHECK(p.rank == k);
            }
}

TEST_CASE("cover neighborhood sizes") {
    // |N+(p)| counts coordinates below t-1 and |N-(p)| those above 0.
    for (int t = 2; t <= 5; ++t)
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k <= (t - 1) * n; ++k)
                for (const auto& p : enumerate_layer(t, n, k)) {
                    int at_top = 0, at_bottom = 0;
                    for (auto c : p.c) {
                        if (c == t - 1) ++at_top;
                        if (c == 0) ++at_bottom;
                    }
                    CHECK(static_cast<int>(up_neighbors(p).size()) + at_top == n);
                    CHECK(static_cast<int>(down_neighbors(p).size()) + at_bottom == n);
                }
}

TEST_CASE("duality is an order-reversing involution") {
    std::vector<Point> all;
    for (int k = 0; k <= 6; ++k)
        for (const auto& p : enumerate_layer(3, 3, k)) all.push_back(p);
    REQUIRE(all.size() == 27);
    for (const auto& p : all) {
        const auto d = dual_point(p);
        CHECK(dual_point(d) == p);
        CHECK(d.rank == 6 - p.rank);
        for (const auto& q : all) CHECK(leq(p, q) == leq(dual_point(q), dual_point(p)));
    }
}

TEST_CASE("vertex types") {
    const auto v = vertex_type(pt({0, 1, 2, 2, 1}));
    CHECK(v.zeros == 1);
    CHECK(v.ones == 2);
    CHECK(v.twos == 2);
}

TEST_CASE("boundary toward a middle layer") {
    // N({(0,1)}) inside L_2(3,2) is {(0,2),(1,1)}.
    const auto b = boundary_in_layer({pt({0, 1})}, 2);
    REQUIRE(b.size() == 2);
    CHECK(b[0] == pt({0, 2}));
    CHECK(b[1] == pt({1, 1}));

    // Mixed input: boundary of one point from each side of L_2(3,2).
    const auto m = boundary_in_layer({pt({0, 1}), pt({1, 2})}, 2);
    REQUIRE(m.size() == 2);
    CHECK(m[0] == pt({0, 2}));
    CHECK(m[1] == pt({1, 1}));
}

TEST_CASE("restriction to points not strictly below X") {
    const auto layer1 = enumerate_layer(3, 2, 1);
    // Both (0,1) and (1,0) are strictly below (1,2), so nothing survives.
    CHECK(restrict_above(layer1, {pt({1, 2})}).empty());
    // Below (0,2) only (0,1) falls; (1,0) survives.
    const auto r = restrict_above(layer1, {pt({0, 2})});
    REQUIRE(r.size() == 1);
    CHECK(r[0] == pt({1, 0}));
}

TEST_CASE("interior of a layer subset") {
    // v belongs to the interior of A iff every upper cover of v is in A.
    const auto v = pt({1, 1, 0});
    auto A = up_neighbors(v);
    auto in = interior_below(A);
    REQUIRE(in.size() == 1);
    CHECK(in[0] == v);
    A.pop_back();
    CHECK(interior_below(A).empty());
}

TEST_CASE("closure contains and is idempotent") {
    const auto A = std::vector<Point>{pt({0, 1, 1}), pt({1, 1, 0})};
    const auto cl = closure_in_layer(3, 3, 2, A);
    for (const auto& a : A)
        CHECK(std::find(cl.begin(), cl.end(), a) != cl.end());
    const auto cl2 = closure_in_layer(3, 3, 2, cl);
    CHECK(cl == cl2);
}

TEST_CASE("slices group points by layer and index them") {
    const auto s = build_slice(3, 3, 1, 3);
    CHECK(s.size() == 3 + 6 + 7);
    CHECK(s.layer_end(1) - s.layer_begin(1) == 3);
    CHECK(s.layer_end(3) - s.layer_begin(3) == 7);
    for (std::size_t i = 0; i < s.size(); ++i)
        CHECK(s.position_of(s.points[i]) == static_cast<std::int32_t>(i));
    CHECK(!s.contains(pt({0, 0, 0})));
    CHECK_THROWS_AS(build_slice(3, 3, 1, 3, {pt({1, 1, 1})}), std::domain_error);
}

TEST_CASE("distance-2 linking respects the ambient range") {
    // (0,1) and (1,0) share the upper neighbor (1,1) and the lower (0,0).
    const auto wide = build_slice(3, 2, 0, 2);
    CHECK(hasse_dist_le2(wide, pt({0, 1}), pt({1, 0})));
    // Restricted to the single layer, no intermediate exists.
    const auto narrow = build_slice(3, 2, 1, 1);
    CHECK(!hasse_dist_le2(narrow, pt({0, 1}), pt({1, 0})));
    // Cross-layer distance-2 pairs are exactly the comparable ones.
    const auto s = build_slice(3, 2, 0, 2);
    CHECK(hasse_dist_le2(s, pt({0, 0}), pt({1, 1})));
    CHECK(hasse_dist_le2(s, pt({0, 0}), pt({0, 2})));
    CHECK(!hasse_dist_le2(s, pt({0, 1}), pt({2, 0})));  // rank gap 1, incomparable
    CHECK(!hasse_dist_le2(s, pt({2, 0}), pt({0, 2})));  // same layer, not e_i - e_j
}

TEST_CASE("linking through a removed lower intermediate is rejected") {
    // With X = {(1,1,2)} the only joint neighbor of (2,1,0) and (1,2,0)
    // inside layers [2,3] is (1,1,0), which is strictly below X.
    const auto unrestricted = build_slice(3, 3, 2, 3);
    CHECK(hasse_dist_le2(unrestricted, pt({2, 1, 0}), pt({1, 2, 0})));
    const auto restricted = build_slice(3, 3, 2, 3, {pt({1, 1, 2})});
    REQUIRE(restricted.contains(pt({2, 1, 0})));
    REQUIRE(restricted.contains(pt({1, 2, 0})));
    CHECK(!hasse_dist_le2(restricted, pt({2, 1, 0}), pt({1, 2, 0})));
}

TEST_CASE("two-linked component decomposition") {
    const auto s = build_slice(3, 2, 0, 4);
    PointSet set(s);
    set.add(pt({0, 1}));
    set.add(pt({1, 0}));
    set.add(pt({2, 2}));
    auto comps = two_linked_components(s, set.bits);
    REQUIRE(comps.size() == 2);
    std::multiset<std::size_t> sizes;
    for (const auto& c : comps) sizes.insert(c.count());
    CHECK(sizes == std::multiset<std::size_t>{1, 2});
    CHECK(!is_two_linked(s, set.bits));
}

TEST_CASE("disjoint boundaries force incomparability across the middle") {
    // If u in L_{n-1} is below w in L_{n+1} then they share a neighbor in
    // L_n, so disjoint boundaries imply an antichain. Exhaustive over pairs
    // for n <= 4.
    for (int n = 2; n <= 4; ++n) {
        const auto lower = enumerate_layer(3, n, n - 1);
        const auto upper = enumerate_layer(3, n, n + 1);
        for (const auto& u : lower)
            for (const auto& w : upper) {
                if (!leq(u, w)) continue;
                const auto bu = boundary_in_layer({u}, n);
                const auto bw = boundary_in_layer({w}, n);
                bool share = false;
                for (const auto& x : bu)
                    for (const auto& y : bw)
                        if (x == y) share = true;
                CHECK(share);
            }
    }
}

TEST_CASE("appending maximal coordinates embeds slabs near the top") {
    CHECK(embed_phi(pt({0, 1}), 3) == pt({0, 1, 2}));
    CHECK(embed_phi(pt({1}, 3), 1) == pt({1}, 3));
    CHECK_THROWS_AS(embed_phi(pt({0, 1, 2}), 2), std::domain_error);

    CHECK(verify_slab_shift(3, 2, 1, {}));
    CHECK(verify_slab_shift(2, 1, 1, {}));
    CHECK(verify_slab_shift(3, 2, 0, {}));
    CHECK(verify_slab_shift(3, 2, 1, {pt({1, 2, 2})}));
    CHECK(verify_slab_shift(4, 3, 2, {pt({2, 2, 1, 2})}));
}
