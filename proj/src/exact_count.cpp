#include "antichains/exact_count.hpp"

#include <algorithm>
#include <numeric>

namespace antichains {

std::vector<Point> collect_points(const SubposetSpec& spec) {
    for (const auto& x : spec.X)
        if (x.rank <= spec.k_high)
            throw std::domain_error("SubposetSpec: X must lie strictly above k_high");
    std::vector<Point> pts;
    for (int k = spec.k_low; k <= spec.k_high; ++k)
        for (auto& p : restrict_above(enumerate_layer(spec.t, spec.n, k), spec.X))
            pts.push_back(std::move(p));
    return pts;
}

namespace {

// Branching over points ordered by position: each point is either skipped
// or taken (taking it removes all comparable points from the candidate
// pool), so leaves biject with antichains.
Int count_rec(std::uint32_t candidates, const std::vector<std::uint32_t>& comp) {
    Int total = 1;  // the empty completion
    // Iterative-in-recursive form: process lowest candidate.
    while (candidates) {
        const int v = __builtin_ctz(candidates);
        candidates &= candidates - 1;
        total += count_rec(candidates & ~comp[static_cast<std::size_t>(v)], comp);
    }
    return total;
}

std::vector<std::uint32_t> comparability_masks(const std::vector<Point>& pts) {
    const std::size_t m = pts.size();
    std::vector<std::uint32_t> comp(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (comparable(pts[i], pts[j])) {
                comp[i] |= std::uint32_t{1} << j;
                comp[j] |= std::uint32_t{1} << i;
            }
    return comp;
}

}  // namespace

CountResult count_antichains_brute(const SubposetSpec& spec) {
    const auto pts = collect_points(spec);
    if (pts.size() > 25)
        throw std::domain_error("count_antichains_brute: instance has " +
                                std::to_string(pts.size()) + " points; cap is 25");
    const auto comp = comparability_masks(pts);
    const std::uint32_t all =
        pts.empty() ? 0u : (pts.size() == 32 ? ~0u : ((1u << pts.size()) - 1u));
    return CountResult{count_rec(all, comp), "brute"};
}

void enumerate_antichains(const SubposetSpec& spec,
                          const std::function<void(const std::vector<Point>&)>& visit) {
    const auto pts = collect_points(spec);
    if (pts.size() > 25)
        throw std::domain_error("enumerate_antichains: instance has " +
                                std::to_string(pts.size()) + " points; cap is 25");
    const auto comp = comparability_masks(pts);
    std::vector<Point> cur;
    auto rec = [&](auto&& self, std::uint32_t candidates) -> void {
        visit(cur);
        while (candidates) {
            const int v = __builtin_ctz(candidates);
            candidates &= candidates - 1;
            cur.push_back(pts[static_cast<std::size_t>(v)]);
            self(self, candidates & ~comp[static_cast<std::size_t>(v)]);
            cur.pop_back();
        }
    };
    const std::uint32_t all = pts.empty() ? 0u : ((1u << pts.size()) - 1u);
    rec(rec, all);
}

CountResult count_antichains_layered(const SubposetSpec& spec) {
    // Downsets of the sliced poset are counted layer by layer: a downset is
    // determined by its per-layer kept sets (S_k), constrained by
    // S_{k+1}'s lower shadow lying inside S_k. Downsets biject with
    // antichains (maximal elements <-> down-closure).
    for (const auto& x : spec.X)
        if (x.rank <= spec.k_high)
            throw std::domain_error("SubposetSpec: X must lie strictly above k_high");
    std::vector<std::vector<Point>> layers;
    for (int k = spec.k_low; k <= spec.k_high; ++k) {
        layers.push_back(restrict_above(enumerate_layer(spec.t, spec.n, k), spec.X));
        if (layers.back().size() > 22)
            throw std::domain_error("count_antichains_layered: layer " + std::to_string(k) +
                                    " has " + std::to_string(layers.back().size()) +
                                    " points; cap is 22");
    }
    std::vector<Int> f{1};  // over subsets of the previous layer; start: one empty state
    std::unordered_map<std::uint64_t, int> prev_index;
    for (const auto& layer : layers) {
        const std::size_t w = layer.size();
        // Down-neighbor masks into the previous layer (points outside the
        // slice or removed by X simply do not constrain).
        std::vector<std::uint64_t> dmask(w, 0);
        for (std::size_t i = 0; i < w; ++i)
            for (const auto& q : down_neighbors(layer[i])) {
                auto it = prev_index.find(point_key(q));
                if (it != prev_index.end()) dmask[i] |= std::uint64_t{1} << it->second;
            }
        // Superset-zeta of f: h[R] = sum over S >= R of f[S].
        std::vector<Int> h = f;
        const std::size_t pw = prev_index.size();
        for (std::size_t b = 0; b < pw; ++b)
            for (std::size_t m = 0; m < h.size(); ++m)
                if (!(m >> b & 1)) h[m] += h[m | (std::size_t{1} << b)];
        // New table: g[T] = h[union of dmask over T], built incrementally.
        std::vector<Int> g(std::size_t{1} << w);
        std::vector<std::uint64_t> nm(std::size_t{1} << w, 0);
        g[0] = h[0];
        for (std::size_t T = 1; T < g.size(); ++T) {
            const int low = __builtin_ctzll(T);
            nm[T] = nm[T & (T - 1)] | dmask[static_cast<std::size_t>(low)];
            g[T] = h[static_cast<std::size_t>(nm[T])];
        }
        f = std::move(g);
        prev_index.clear();
        for (std::size_t i = 0; i < w; ++i)
            prev_index.emplace(point_key(layer[i]), static_cast<int>(i));
    }
    Int total = 0;
    for (const auto& v : f) total += v;
    return CountResult{total, "layered"};
}

std::vector<Int> defect_distribution_exact(int n) {
    if (n < 1 || n > 4)
        throw std::domain_error("defect_distribution_exact: requires 1 <= n <= 4");
    const int t = 3;
    const auto lower = enumerate_layer(t, n, n - 1);
    const auto mid = enumerate_layer(t, n, n);
    const auto upper = enumerate_layer(t, n, n + 1);
    const std::size_t L = mid.size();
    std::unordered_map<std::uint64_t, int> midx;
    for (std::size_t i = 0; i < L; ++i) midx.emplace(point_key(mid[i]), static_cast<int>(i));
    auto masks_of = [&](const std::vector<Point>& side, bool up) {
        std::vector<std::uint64_t> pm(side.size(), 0);
        for (std::size_t i = 0; i < side.size(); ++i) {
            const auto nbrs = up ? up_neighbors(side[i]) : down_neighbors(side[i]);
            for (const auto& q : nbrs) pm[i] |= std::uint64_t{1} << midx.at(point_key(q));
        }
        return pm;
    };
    const auto pml = masks_of(lower, true);
    const auto pmu = masks_of(upper, false);
    const std::size_t sl = lower.size(), su = upper.size();
    // Subset boundary masks, incrementally.
    auto subset_masks = [](const std::vector<std::uint64_t>& pm) {
        std::vector<std::uint64_t> bm(std::size_t{1} << pm.size(), 0);
        for (std::size_t m = 1; m < bm.size(); ++m)
            bm[m] = bm[m & (m - 1)] | pm[static_cast<std::size_t>(__builtin_ctzll(m))];
        return bm;
    };
    const auto bml = subset_masks(pml);
    const auto bmu = subset_masks(pmu);
    std::vector<Int> hist(sl + su + 1, 0);
    // For each lower-subset size s, a scaled zeta over middle masks:
    // zs[E] = sum over lower subsets A of size s with boundary D inside E
    // of 2^{|E| - |D|}. Pairing with an upper subset of boundary B then
    // contributes zs[~B] = the number of middle completions for all
    // boundary-disjoint (equivalently antichain) pairs, since
    // |~B| - |D| = l_n - |B| - |D| = l_n - |B union D|.
    for (std::size_t s = 0; s <= sl; ++s) {
        std::vector<std::int64_t> zs(std::size_t{1} << L, 0);
        for (std::size_t A = 0; A < (std::size_t{1} << sl); ++A) {
            if (static_cast<std::size_t>(__builtin_popcountll(A)) != s) continue;
            zs[bml[A]] += 1;
        }
        for (std::size_t b = 0; b < L; ++b)
            for (std::size_t m = 0; m < zs.size(); ++m)
                if (m >> b & 1) zs[m] += 2 * zs[m ^ (std::size_t{1} << b)];
        const std::size_t full = (std::size_t{1} << L) - 1;
        for (std::size_t A = 0; A < (std::size_t{1} << su); ++A) {
            const std::uint64_t B = bmu[A];
            hist[s + static_cast<std::size_t>(__builtin_popcountll(A))] +=
                zs[full ^ static_cast<std::size_t>(B)];
        }
    }
    return hist;
}

namespace {

// Same-layer 2-link adjacency: difference is e_i - e_j (the common upper
// neighbor exists inside [3]^n whenever both points are in a layer below
// the top, which holds for the layers used here).
bool link_adjacent(const Point& a, const Point& b) {
    int np = 0, nm = 0;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        const int d = b.c[i] - a.c[i];
        if (d == 1)
            ++np;
        else if (d == -1)
            ++nm;
        else if (d != 0)
            return false;
    }
    return np == 1 && nm == 1;
}

std::vector<bool> small_component_flags(const std::vector<Point>& side) {
    const std::size_t s = side.size();
    std::vector<std::uint64_t> adj(s, 0);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j)
            if (link_adjacent(side[i], side[j])) {
                adj[i] |= std::uint64_t{1} << j;
                adj[j] |= std::uint64_t{1} << i;
            }
    std::vector<bool> ok(std::size_t{1} << s);
    for (std::size_t A = 0; A < ok.size(); ++A) {
        bool good = true;
        std::uint64_t rest = A;
        while (rest && good) {
            // BFS one component.
            std::uint64_t comp = rest & (~rest + 1);
            for (;;) {
                std::uint64_t grow = comp;
                std::uint64_t scan = comp;
                while (scan) {
                    const int v = __builtin_ctzll(scan);
                    scan &= scan - 1;
                    grow |= adj[static_cast<std::size_t>(v)] & A;
                }
                if (grow == comp) break;
                comp = grow;
            }
            if (__builtin_popcountll(comp) > 2) good = false;
            rest &= ~comp;
        }
        ok[A] = good;
    }
    return ok;
}

}  // namespace

std::vector<Int> defect_distribution_small_components(int n) {
    if (n < 1 || n > 4)
        throw std::domain_error("defect_distribution_small_components: requires 1 <= n <= 4");
    const int t = 3;
    const auto lower = enumerate_layer(t, n, n - 1);
    const auto mid = enumerate_layer(t, n, n);
    const auto upper = enumerate_layer(t, n, n + 1);
    const std::size_t L = mid.size();
    std::unordered_map<std::uint64_t, int> midx;
    for (std::size_t i = 0; i < L; ++i) midx.emplace(point_key(mid[i]), static_cast<int>(i));
    auto pm_of = [&](const std::vector<Point>& side, bool up) {
        std::vector<std::uint64_t> pm(side.size(), 0);
        for (std::size_t i = 0; i < side.size(); ++i) {
            const auto nbrs = up ? up_neighbors(side[i]) : down_neighbors(side[i]);
            for (const auto& q : nbrs) pm[i] |= std::uint64_t{1} << midx.at(point_key(q));
        }
        return pm;
    };
    const auto pml = pm_of(lower, true);
    const auto pmu = pm_of(upper, false);
    const auto okl = small_component_flags(lower);
    const auto oku = small_component_flags(upper);
    const std::size_t sl = lower.size(), su = upper.size();
    std::vector<std::uint64_t> bml(std::size_t{1} << sl, 0), bmu(std::size_t{1} << su, 0);
    for (std::size_t m = 1; m < bml.size(); ++m)
        bml[m] = bml[m & (m - 1)] | pml[static_cast<std::size_t>(__builtin_ctzll(m))];
    for (std::size_t m = 1; m < bmu.size(); ++m)
        bmu[m] = bmu[m & (m - 1)] | pmu[static_cast<std::size_t>(__builtin_ctzll(m))];
    std::vector<Int> hist(sl + su + 1, 0);
    for (std::size_t s = 0; s <= sl; ++s) {
        std::vector<std::int64_t> zs(std::size_t{1} << L, 0);
        for (std::size_t A = 0; A < (std::size_t{1} << sl); ++A) {
            if (!okl[A]) continue;
            if (static_cast<std::size_t>(__builtin_popcountll(A)) != s) continue;
            zs[bml[A]] += 1;
        }
        for (std::size_t b = 0; b < L; ++b)
            for (std::size_t m = 0; m < zs.size(); ++m)
                if (m >> b & 1) zs[m] += 2 * zs[m ^ (std::size_t{1} << b)];
        const std::size_t full = (std::size_t{1} << L) - 1;
        for (std::size_t A = 0; A < (std::size_t{1} << su); ++A) {
            if (!oku[A]) continue;
            hist[s + static_cast<std::size_t>(__builtin_popcountll(A))] +=
                zs[full ^ static_cast<std::size_t>(bmu[A])];
        }
    }
    return hist;
}

Int ramsey_m3(int n) {
    SubposetSpec spec;
    spec.t = 3;
    spec.n = n;
    spec.k_low = 0;
    spec.k_high = 2 * n;
    return count_antichains_layered(spec).value + 1;
}

}  // namespace antichains
