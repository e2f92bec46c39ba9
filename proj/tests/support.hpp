#ifndef STRINGGRAPH_TESTS_SUPPORT_HPP
#define STRINGGRAPH_TESTS_SUPPORT_HPP

// Brute-force references used by the tests. Nothing here calls into the
// library's search or predicate code: segment intersection is solved by
// Cramer's rule on exact rationals, and graph quantities by plain subset
// enumeration over adjacency bitmasks.

#include "stringgraph.hpp"

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

namespace ref {

using stringgraph::Graph;
using stringgraph::Point;
using stringgraph::Rational;
using stringgraph::StringFamily;
using stringgraph::Vertex;
using stringgraph::VertexSet;
using Mask = std::uint32_t;

// Closed segments share a point: solve a1 + t (a2 - a1) = b1 + u (b2 - b1).
inline bool segments_meet(const Point& a1, const Point& a2, const Point& b1, const Point& b2) {
    const Rational rx = a2.x() - a1.x(), ry = a2.y() - a1.y();
    const Rational sx = b2.x() - b1.x(), sy = b2.y() - b1.y();
    const Rational qx = b1.x() - a1.x(), qy = b1.y() - a1.y();
    const Rational den = rx * sy - ry * sx;
    if (den != 0) {
        const Rational t = (qx * sy - qy * sx) / den;
        const Rational u = (qx * ry - qy * rx) / den;
        return t >= 0 && t <= 1 && u >= 0 && u <= 1;
    }
    // Parallel: they meet only when collinear with overlapping projections.
    if (qx * ry - qy * rx != 0) return false;
    const Rational rr = rx * rx + ry * ry;
    Rational t0 = (qx * rx + qy * ry) / rr;
    Rational t1 = ((b2.x() - a1.x()) * rx + (b2.y() - a1.y()) * ry) / rr;
    if (t0 > t1) std::swap(t0, t1);
    return t1 >= 0 && t0 <= 1;
}

inline bool curves_meet(const std::vector<Point>& p, const std::vector<Point>& q) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        for (std::size_t j = 0; j + 1 < q.size(); ++j)
            if (segments_meet(p[i], p[i + 1], q[j], q[j + 1])) return true;
    return false;
}

inline std::vector<std::pair<Vertex, Vertex>> intersection_edges(const StringFamily& fam) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (std::size_t i = 0; i < fam.strings.size(); ++i)
        for (std::size_t j = i + 1; j < fam.strings.size(); ++j)
            if (curves_meet(fam.strings[i].points(), fam.strings[j].points())) out.emplace_back(i, j);
    return out;
}

inline std::vector<Mask> masks(const Graph& g) {
    std::vector<Mask> adj(g.n(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= Mask{1} << v;
        adj[v] |= Mask{1} << u;
    }
    return adj;
}

inline bool is_clique(const std::vector<Mask>& adj, Mask s) {
    for (Mask rest = s; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        if (s & ~adj[v] & ~(Mask{1} << v)) return false;
    }
    return true;
}

inline Mask full(std::size_t n) { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Size of the largest clique, by enumerating all subsets.
inline std::size_t clique_number(const Graph& g) {
    const auto adj = masks(g);
    std::size_t best = 0;
    for (Mask s = 0; s <= full(g.n()); ++s) {
        if (static_cast<std::size_t>(std::popcount(s)) > best && is_clique(adj, s)) best = std::popcount(s);
        if (s == full(g.n())) break;
    }
    return best;
}

inline std::size_t independence_number(const Graph& g) { return clique_number(g.complement()); }

/// Size of the largest vertex set whose induced subgraph has no p-clique.
inline std::size_t max_kp_free(const Graph& g, std::size_t p) {
    const auto adj = masks(g);
    const std::size_t n = g.n();
    std::vector<Mask> cliques;
    for (Mask s = 0; s <= full(n); ++s) {
        if (static_cast<std::size_t>(std::popcount(s)) == p && is_clique(adj, s)) cliques.push_back(s);
        if (s == full(n)) break;
    }
    std::size_t best = 0;
    for (Mask s = 0; s <= full(n); ++s) {
        if (static_cast<std::size_t>(std::popcount(s)) > best) {
            bool free = true;
            for (Mask c : cliques)
                if ((c & s) == c) {
                    free = false;
                    break;
                }
            if (free) best = std::popcount(s);
        }
        if (s == full(n)) break;
    }
    return best;
}

inline bool has_clique_in(const Graph& g, std::size_t k, const VertexSet& within) {
    const auto adj = masks(g);
    Mask w = 0;
    for (auto v : within) w |= Mask{1} << v;
    for (Mask s = w;; s = (s - 1) & w) {
        if (static_cast<std::size_t>(std::popcount(s)) == k && is_clique(adj, s)) return true;
        if (s == 0) break;
    }
    return false;
}

/// Minimum |S| over all labelings of the vertices with {S, V1, V2}, counted
/// in base 3.
inline std::size_t min_separator(const Graph& g) {
    const std::size_t n = g.n();
    const std::size_t cap = (2 * n + 2) / 3;
    std::vector<int> label(n, 0);
    std::size_t best = n;
    for (;;) {
        std::size_t c[3] = {0, 0, 0};
        for (int l : label) ++c[l];
        if (c[0] < best && c[1] <= cap && c[2] <= cap) {
            bool ok = true;
            for (auto [u, v] : g.edges())
                if (label[u] + label[v] == 3) ok = false;
            if (ok) best = c[0];
        }
        std::size_t i = 0;
        while (i < n && label[i] == 2) label[i++] = 0;
        if (i == n) break;
        ++label[i];
    }
    return best;
}

/// Largest t with disjoint A, B of size t complete to each other, over all
/// labelings {neither, A, B}.
inline std::size_t max_biclique(const Graph& g) {
    const std::size_t n = g.n();
    std::vector<int> label(n, 0);
    std::size_t best = 0;
    for (;;) {
        VertexSet a, b;
        for (std::size_t v = 0; v < n; ++v) {
            if (label[v] == 1) a.push_back(v);
            if (label[v] == 2) b.push_back(v);
        }
        if (a.size() == b.size() && a.size() > best) {
            bool ok = true;
            for (auto x : a)
                for (auto y : b) ok = ok && g.adjacent(x, y);
            if (ok) best = a.size();
        }
        std::size_t i = 0;
        while (i < n && label[i] == 2) label[i++] = 0;
        if (i == n) break;
        ++label[i];
    }
    return best;
}

inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < p) edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline Graph complete(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

inline Graph cycle(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
    return Graph(n, e);
}

inline Graph path(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    return Graph(n, e);
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return Graph(a + b, e);
}

/// Outer 5-cycle 0..4, spokes i - i+5, inner pentagram on 5..9.
inline Graph petersen() {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, e);
}

/// Chords {a, b} of a convex n-gon in lexicographic order; two cross iff
/// their endpoints are distinct and interleave around the circle.
inline Graph chord_interleaving(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> chords;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) chords.emplace_back(a, b);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (std::size_t i = 0; i < chords.size(); ++i)
        for (std::size_t j = i + 1; j < chords.size(); ++j) {
            auto [a, b] = chords[i];
            auto [c, d] = chords[j];
            if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) e.emplace_back(i, j);
        }
    return Graph(chords.size(), e);
}

inline Point P(long long x, long long y) { return Point(Rational(x), Rational(y)); }

} // namespace ref

#endif // STRINGGRAPH_TESTS_SUPPORT_HPP
