#include "antichains/poset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace antichains {

Point make_point(std::vector<int> coords, int t) {
    Point p;
    p.t = t;
    p.c.reserve(coords.size());
    int r = 0;
    for (int v : coords) {
        if (v < 0 || v >= t) throw std::domain_error("make_point: coordinate out of range");
        p.c.push_back(static_cast<std::int8_t>(v));
        r += v;
    }
    p.rank = r;
    return p;
}

bool leq(const Point& a, const Point& b) {
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i] > b.c[i]) return false;
    return true;
}

bool comparable(const Point& a, const Point& b) { return leq(a, b) || leq(b, a); }

bool lex_less(const Point& a, const Point& b) {
    return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
}

Point dual_point(const Point& p) {
    Point q = p;
    for (auto& v : q.c) v = static_cast<std::int8_t>(p.t - 1 - v);
    q.rank = (p.t - 1) * static_cast<int>(p.c.size()) - p.rank;
    return q;
}

std::uint64_t point_key(const Point& p) {
    if (p.t > 8 || p.c.size() > 21)
        throw std::domain_error("point_key: requires t <= 8 and n <= 21");
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < p.c.size(); ++i)
        k |= static_cast<std::uint64_t>(p.c[i]) << (3 * i);
    return k;
}

VertexType vertex_type(const Point& p) {
    VertexType v;
    for (auto x : p.c) {
        if (x == 0)
            ++v.zeros;
        else if (x == 1)
            ++v.ones;
        else
            ++v.twos;
    }
    return v;
}

Int layer_size(int t, int n, int k) {
    if (k < 0 || k > (t - 1) * n) return 0;
    return layer_sizes(t, n)[static_cast<std::size_t>(k)];
}

std::vector<Int> layer_sizes(int t, int n) {
    std::vector<Int> f{1};
    for (int i = 0; i < n; ++i) {
        std::vector<Int> g(f.size() + static_cast<std::size_t>(t) - 1, 0);
        for (std::size_t j = 0; j < f.size(); ++j)
            for (int d = 0; d < t; ++d) g[j + static_cast<std::size_t>(d)] += f[j];
        f = std::move(g);
    }
    return f;
}

std::vector<Point> enumerate_layer(int t, int n, int k) {
    std::vector<Point> out;
    if (k < 0 || k > (t - 1) * n) return out;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    // Depth-first in lexicographic order with remaining-sum pruning.
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == n) {
            if (rem == 0) out.push_back(make_point(cur, t));
            return;
        }
        const int slots = n - pos - 1;
        for (int d = 0; d < t; ++d) {
            const int r = rem - d;
            if (r < 0) break;
            if (r > (t - 1) * slots) continue;
            cur[static_cast<std::size_t>(pos)] = d;
            self(self, pos + 1, r);
        }
        cur[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0, k);
    return out;
}

std::vector<Point> up_neighbors(const Point& p) {
    std::vector<Point> out;
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i] + 1 < p.t) {
            Point q = p;
            ++q.c[i];
            ++q.rank;
            out.push_back(std::move(q));
        }
    }
    return out;
}

std::vector<Point> down_neighbors(const Point& p) {
    std::vector<Point> out;
    for (std::size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i] > 0) {
            Point q = p;
            --q.c[i];
            --q.rank;
            out.push_back(std::move(q));
        }
    }
    return out;
}

bool below_some(const Point& p, const std::vector<Point>& X) {
    for (const auto& x : X)
        if (p.rank < x.rank && leq(p, x)) return true;
    return false;
}

std::vector<Point> restrict_above(const std::vector<Point>& layer,
                                  const std::vector<Point>& X) {
    std::vector<Point> out;
    out.reserve(layer.size());
    for (const auto& p : layer)
        if (!below_some(p, X)) out.push_back(p);
    return out;
}

LayerSlice build_slice(int t, int n, int k_low, int k_high, std::vector<Point> X) {
    if (k_low < 0 || k_high > (t - 1) * n || k_low > k_high)
        throw std::domain_error("build_slice: bad layer range");
    for (const auto& x : X)
        if (x.rank <= k_high)
            throw std::domain_error("build_slice: X must lie strictly above the range");
    LayerSlice s;
    s.t = t;
    s.n = n;
    s.k_low = k_low;
    s.k_high = k_high;
    s.X = std::move(X);
    s.offsets.push_back(0);
    for (int k = k_low; k <= k_high; ++k) {
        auto pts = restrict_above(enumerate_layer(t, n, k), s.X);
        for (auto& p : pts) s.points.push_back(std::move(p));
        s.offsets.push_back(s.points.size());
    }
    s.index.reserve(s.points.size() * 2);
    for (std::size_t i = 0; i < s.points.size(); ++i)
        s.index.emplace(point_key(s.points[i]), static_cast<std::int32_t>(i));
    return s;
}

void PointSet::add(const Point& p) {
    const auto pos = slice->position_of(p);
    if (pos < 0) throw std::domain_error("PointSet::add: point not in slice");
    bits.set(static_cast<std::size_t>(pos));
}

std::vector<Point> PointSet::to_points() const {
    std::vector<Point> out;
    bits.for_each([&](std::size_t i) { out.push_back(slice->points[i]); });
    return out;
}

bool hasse_dist_le2(const LayerSlice& s, const Point& a, const Point& b) {
    const int dr = b.rank - a.rank;
    if (dr < -2 || dr > 2) return false;
    const auto& lo = dr >= 0 ? a : b;
    const auto& hi = dr >= 0 ? b : a;
    const int ad = dr >= 0 ? dr : -dr;
    if (ad == 0) {
        // Same layer: distance 2 iff hi - lo is e_i - e_j, via a common
        // neighbor above or below that stays within the slice.
        if (a == b) return true;
        int plus = -1, minus = -1, nplus = 0, nminus = 0;
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            const int d = b.c[i] - a.c[i];
            if (d == 1) {
                ++nplus;
                plus = static_cast<int>(i);
            } else if (d == -1) {
                ++nminus;
                minus = static_cast<int>(i);
            } else if (d != 0) {
                return false;
            }
        }
        if (nplus != 1 || nminus != 1) return false;
        (void)plus;
        // Common upper neighbor a + e_plus: never strictly below X when a
        // is not (anything above a and below x would put a below x too).
        if (a.rank + 1 <= s.k_high) return true;
        // Fall back to the common lower neighbor a - e_minus, which may be
        // strictly below X and must be checked.
        if (a.rank - 1 >= s.k_low) {
            Point w = a;
            --w.c[static_cast<std::size_t>(minus)];
            --w.rank;
            return !below_some(w, s.X);
        }
        return false;
    }
    if (!leq(lo, hi)) return false;
    if (ad == 1) return true;  // cover relation
    // ad == 2 and lo < hi: the difference is e_i + e_j or 2 e_i; an
    // intermediate cover exists inside the cube, lies in [k_low, k_high]
    // (strictly between the two ranks), and cannot be strictly below X
    // since lo is not.
    int total = 0;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        const int d = hi.c[i] - lo.c[i];
        if (d < 0 || d > 2) return false;
        total += d;
    }
    return total == 2;
}

std::vector<PointSet> two_linked_components(const LayerSlice& s, const Bits& S) {
    std::vector<std::size_t> members;
    S.for_each([&](std::size_t i) { members.push_back(i); });
    const std::size_t m = members.size();
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (hasse_dist_le2(s, s.points[members[i]], s.points[members[j]]))
                parent[find(i)] = find(j);
    std::unordered_map<std::size_t, std::size_t> root_to_out;
    std::vector<PointSet> out;
    for (std::size_t i = 0; i < m; ++i) {
        const auto r = find(i);
        auto it = root_to_out.find(r);
        if (it == root_to_out.end()) {
            it = root_to_out.emplace(r, out.size()).first;
            out.emplace_back(s);
        }
        out[it->second].bits.set(members[i]);
    }
    return out;
}

bool is_two_linked(const LayerSlice& s, const Bits& S) {
    return two_linked_components(s, S).size() == 1;
}

std::vector<Point> boundary_in_layer(const std::vector<Point>& A, int k) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<Point> out;
    auto consider = [&](Point q) {
        if (q.rank != k) return;
        if (seen.insert(point_key(q)).second) out.push_back(std::move(q));
    };
    for (const auto& p : A) {
        if (p.rank == k - 1)
            for (auto& q : up_neighbors(p)) consider(std::move(q));
        else if (p.rank == k + 1)
            for (auto& q : down_neighbors(p)) consider(std::move(q));
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<Point> interior_below(const std::vector<Point>& A) {
    std::unordered_set<std::uint64_t> in_a;
    for (const auto& p : A) in_a.insert(point_key(p));
    std::unordered_set<std::uint64_t> tried;
    std::vector<Point> out;
    for (const auto& p : A) {
        for (auto& v : down_neighbors(p)) {
            if (!tried.insert(point_key(v)).second) continue;
            bool all_in = true;
            for (const auto& u : up_neighbors(v)) {
                if (!in_a.count(point_key(u))) {
                    all_in = false;
                    break;
                }
            }
            if (all_in) out.push_back(std::move(v));
        }
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<Point> closure_in_layer(int t, int n, int i, const std::vector<Point>& A) {
    std::unordered_set<std::uint64_t> na;
    for (const auto& p : A)
        for (const auto& u : up_neighbors(p)) na.insert(point_key(u));
    std::vector<Point> out;
    for (const auto& v : enumerate_layer(t, n, i)) {
        bool inside = true;
        for (const auto& u : up_neighbors(v)) {
            if (!na.count(point_key(u))) {
                inside = false;
                break;
            }
        }
        if (inside) out.push_back(v);
    }
    return out;
}

Point embed_phi(const Point& p, int n_prime) {
    if (n_prime < static_cast<int>(p.c.size()))
        throw std::domain_error("embed_phi: target dimension too small");
    Point q = p;
    while (static_cast<int>(q.c.size()) < n_prime) {
        q.c.push_back(static_cast<std::int8_t>(p.t - 1));
        q.rank += p.t - 1;
    }
    return q;
}

bool verify_slab_shift(int n, int i, int j, const std::vector<Point>& X) {
    if (i >= n || j > i || j < 0) throw std::domain_error("verify_slab_shift: need 0 <= j <= i < n");
    const int t = 3;
    const int np = 2 * n - i;
    // X' = phi(X) plus, for each appended position, the all-twos point with
    // that coordinate lowered to 1.
    std::vector<Point> Xp;
    for (const auto& x : X) Xp.push_back(embed_phi(x, np));
    for (int pos = n; pos < np; ++pos) {
        std::vector<int> c(static_cast<std::size_t>(np), 2);
        c[static_cast<std::size_t>(pos)] = 1;
        Xp.push_back(make_point(c, t));
    }
    const int shift = 2 * (np - n);  // (t-1)(n'-n)
    std::unordered_set<std::uint64_t> target;
    for (int k = j + shift; k <= i + shift; ++k)
        for (const auto& p : restrict_above(enumerate_layer(t, np, k), Xp))
            target.insert(point_key(p));
    std::size_t mapped = 0;
    for (int k = j; k <= i; ++k) {
        for (const auto& p : restrict_above(enumerate_layer(t, n, k), X)) {
            const Point q = embed_phi(p, np);
            if (!target.count(point_key(q))) return false;
            ++mapped;
        }
    }
    return mapped == target.size();
}

}  // namespace antichains
