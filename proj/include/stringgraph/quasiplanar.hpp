#ifndef STRINGGRAPH_QUASIPLANAR_HPP
#define STRINGGRAPH_QUASIPLANAR_HPP

// Topological graph drawings, their crossing graphs, and extraction of a
// 4-quasiplanar edge subset.
//
// Edges sharing an endpoint never count as crossing: each edge is truncated
// by a small neighbourhood of both endpoints before intersections are
// tested. The neighbourhood is the closed axis-parallel square of the given
// radius (an L-infinity disk), so every cut point stays rational.

#include "error.hpp"
#include "extractors.hpp"
#include "geometry.hpp"
#include "graph.hpp"
#include "number.hpp"
#include "params.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace stringgraph {

struct DrawingEdge {
    Vertex u = 0;
    Vertex v = 0;
    Polyline curve; // from vertices[u] to vertices[v]; curve.id() is the edge id
};

struct Drawing {
    std::vector<Point> vertices;
    std::vector<DrawingEdge> edges;
};

namespace detail {

inline Rational magnitude(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline Rational linf(const Point& a, const Point& b) {
    return std::max(magnitude(a.x() - b.x()), magnitude(a.y() - b.y()));
}

inline bool on_segment(const Point& p, const Point& a, const Point& b) {
    return orientation(a, b, p) == 0 && within_box(a, b, p);
}

inline Point along(const Point& a, const Point& b, const Rational& t) {
    return {a.x() + t * (b.x() - a.x()), a.y() + t * (b.y() - a.y())};
}

/// L-infinity distance from v to the closed segment [a,b]. The distance along
/// the segment is convex and piecewise linear, so its minimum is at an
/// endpoint or where one of x, y, x - y, x + y (relative to v) vanishes.
inline Rational linf_to_segment(const Point& v, const Point& a, const Point& b) {
    const Rational ax = a.x() - v.x(), ay = a.y() - v.y();
    const Rational dx = b.x() - a.x(), dy = b.y() - a.y();
    Rational best = std::min(linf(v, a), linf(v, b));
    auto consider = [&](const Rational& num, const Rational& den) {
        if (den == 0) return;
        Rational t = num / den;
        if (t <= 0 || t >= 1) return;
        best = std::min(best, std::max(magnitude(ax + t * dx), magnitude(ay + t * dy)));
    };
    consider(-ax, dx);
    consider(-ay, dy);
    consider(ay - ax, dx - dy);
    consider(-(ax + ay), dx + dy);
    return best;
}

/// Intersection of two closed segments as a (possibly degenerate) segment.
inline std::optional<std::pair<Point, Point>> segment_overlap(const Point& a1, const Point& a2, const Point& b1,
                                                              const Point& b2) {
    if (!segments_intersect(a1, a2, b1, b2)) return std::nullopt;
    if (orientation(a1, a2, b1) == 0 && orientation(a1, a2, b2) == 0) {
        const bool use_x = a1.x() != a2.x();
        auto key = [&](const Point& p) -> const Rational& { return use_x ? p.x() : p.y(); };
        const Point& a_lo = key(a1) < key(a2) ? a1 : a2;
        const Point& a_hi = key(a1) < key(a2) ? a2 : a1;
        const Point& b_lo = key(b1) < key(b2) ? b1 : b2;
        const Point& b_hi = key(b1) < key(b2) ? b2 : b1;
        const Point& lo = key(a_lo) < key(b_lo) ? b_lo : a_lo;
        const Point& hi = key(a_hi) < key(b_hi) ? a_hi : b_hi;
        return std::make_pair(lo, hi);
    }
    const Rational rx = a2.x() - a1.x(), ry = a2.y() - a1.y();
    const Rational sx = b2.x() - b1.x(), sy = b2.y() - b1.y();
    const Rational den = rx * sy - ry * sx;
    const Rational t = ((b1.x() - a1.x()) * sy - (b1.y() - a1.y()) * sx) / den;
    Point p = along(a1, a2, t);
    return std::make_pair(p, p);
}

// Parameter in [0,1] at which a segment starting inside the square around
// `centre` leaves it for the last time along the segment.
inline Rational exit_parameter(const Point& centre, const Rational& radius, const Point& a, const Point& b) {
    Rational t = 1;
    auto axis = [&](const Rational& from, const Rational& d) {
        if (d == 0) return;
        Rational edge = (d > 0 ? radius : Rational(-radius)) - from;
        t = std::min(t, Rational(edge / d));
    };
    axis(a.x() - centre.x(), b.x() - a.x());
    axis(a.y() - centre.y(), b.y() - a.y());
    return t;
}

struct Cut {
    std::size_t segment;
    Rational t;
};

// First point where the curve, walked from points[0], leaves the closed
// square of `radius` around points[0].
inline std::optional<Cut> first_exit(const std::vector<Point>& pts, const Rational& radius) {
    const Point& centre = pts.front();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (linf(centre, pts[i + 1]) <= radius) continue;
        return Cut{i, exit_parameter(centre, radius, pts[i], pts[i + 1])};
    }
    return std::nullopt;
}

} // namespace detail

/// Throws DegenerateDrawing unless the drawing satisfies its invariants:
/// distinct vertex points, u != v, endpoints matching the curve, no
/// duplicate edges, and no curve through a vertex other than its endpoints.
inline void validate_drawing(const Drawing& d) {
    for (std::size_t i = 0; i < d.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < d.vertices.size(); ++j)
            if (d.vertices[i] == d.vertices[j])
                throw DegenerateDrawing("vertices " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
    std::set<std::pair<Vertex, Vertex>> seen;
    std::set<std::string> ids;
    for (const auto& e : d.edges) {
        const std::string name = "edge '" + e.curve.id() + "'";
        if (e.u >= d.vertices.size() || e.v >= d.vertices.size())
            throw DegenerateDrawing(name + " references a missing vertex");
        if (e.u == e.v) throw DegenerateDrawing(name + " is a loop");
        if (!seen.insert(std::minmax(e.u, e.v)).second) throw DegenerateDrawing(name + " duplicates another edge");
        if (!ids.insert(e.curve.id()).second) throw DegenerateDrawing(name + " reuses an id");
        const auto& pts = e.curve.points();
        if (pts.front() != d.vertices[e.u] || pts.back() != d.vertices[e.v])
            throw DegenerateDrawing(name + " does not join its endpoints");
        for (Vertex w = 0; w < d.vertices.size(); ++w) {
            if (w == e.u || w == e.v) continue;
            for (std::size_t i = 0; i + 1 < pts.size(); ++i)
                if (detail::on_segment(d.vertices[w], pts[i], pts[i + 1]))
                    throw DegenerateDrawing(name + " passes through vertex " + std::to_string(w));
        }
    }
}

/// Half the smallest of, over all vertices v:
///  - the distance from v to any edge not incident to v,
///  - the distance from v to any common point (other than v) of two edges at v,
///  - the distance from v to the part of an incident edge beyond its first
///    segment, and two thirds of the length of that first segment,
/// all in the L-infinity norm. Throws DegenerateDrawing when this is zero.
inline Rational auto_truncation_radius(const Drawing& d) {
    validate_drawing(d);
    std::optional<Rational> best;
    auto take = [&](const Rational& r, const std::string& why) {
        if (r == 0) throw DegenerateDrawing("truncation radius undefined: " + why);
        if (!best || r < *best) best = r;
    };
    for (Vertex v = 0; v < d.vertices.size(); ++v) {
        const Point& pv = d.vertices[v];
        std::vector<std::size_t> incident;
        for (std::size_t k = 0; k < d.edges.size(); ++k) {
            const auto& e = d.edges[k];
            const auto& pts = e.curve.points();
            if (e.u != v && e.v != v) {
                for (std::size_t i = 0; i + 1 < pts.size(); ++i)
                    take(detail::linf_to_segment(pv, pts[i], pts[i + 1]), "vertex on edge");
                continue;
            }
            incident.push_back(k);
            std::vector<Point> walk = pts;
            if (e.v == v) std::reverse(walk.begin(), walk.end());
            take(Rational(2) * detail::linf(walk[0], walk[1]) / 3, "zero-length segment");
            for (std::size_t i = 1; i + 1 < walk.size(); ++i)
                take(detail::linf_to_segment(pv, walk[i], walk[i + 1]),
                     "edge '" + e.curve.id() + "' returns to its endpoint");
        }
        for (std::size_t a = 0; a < incident.size(); ++a) {
            for (std::size_t b = a + 1; b < incident.size(); ++b) {
                const auto& pa = d.edges[incident[a]].curve.points();
                const auto& pb = d.edges[incident[b]].curve.points();
                for (std::size_t i = 0; i + 1 < pa.size(); ++i) {
                    for (std::size_t j = 0; j + 1 < pb.size(); ++j) {
                        auto x = detail::segment_overlap(pa[i], pa[i + 1], pb[j], pb[j + 1]);
                        if (!x) continue;
                        if (x->first == pv && x->second == pv) continue;
                        take(detail::linf_to_segment(pv, x->first, x->second),
                             "edges '" + d.edges[incident[a]].curve.id() + "' and '" +
                                 d.edges[incident[b]].curve.id() + "' cross at vertex " + std::to_string(v));
                    }
                }
            }
        }
    }
    if (!best) throw DegenerateDrawing("drawing has no edges");
    return *best / 2;
}

/// One string per edge: the curve minus its initial and final pieces inside
/// the closed squares of `radius` around the endpoints. Without a radius the
/// automatic one is used.
inline StringFamily truncate_edges(const Drawing& d, std::optional<Rational> radius = std::nullopt) {
    if (!radius) {
        radius = auto_truncation_radius(d);
    } else {
        validate_drawing(d);
        if (*radius <= 0) throw DomainError("truncation radius must be positive");
    }
    StringFamily fam;
    for (const auto& e : d.edges) {
        const auto& pts = e.curve.points();
        std::vector<Point> rev(pts.rbegin(), pts.rend());
        auto start = detail::first_exit(pts, *radius);
        auto end = detail::first_exit(rev, *radius);
        if (!start || !end) throw DegenerateDrawing("edge '" + e.curve.id() + "' lies inside an endpoint square");
        const std::size_t k = pts.size() - 1;
        const std::size_t last_seg = k - 1 - end->segment;
        const Rational last_t = 1 - end->t;
        if (start->segment > last_seg || (start->segment == last_seg && start->t >= last_t))
            throw DegenerateDrawing("edge '" + e.curve.id() + "' vanishes under truncation");
        std::vector<Point> cut;
        cut.push_back(detail::along(pts[start->segment], pts[start->segment + 1], start->t));
        for (std::size_t i = start->segment + 1; i <= last_seg; ++i) cut.push_back(pts[i]);
        cut.push_back(detail::along(pts[last_seg], pts[last_seg + 1], last_t));
        std::vector<Point> clean;
        for (auto& p : cut)
            if (clean.empty() || clean.back() != p) clean.push_back(std::move(p));
        if (clean.size() < 2) throw DegenerateDrawing("edge '" + e.curve.id() + "' vanishes under truncation");
        fam.strings.emplace_back(e.curve.id(), std::move(clean));
    }
    return fam;
}

/// String graph of the truncated edges; vertex i is edge i, labelled by its id.
inline Graph crossing_graph(const Drawing& d) {
    if (d.edges.empty()) return Graph(0, {});
    return intersection_graph(truncate_edges(d));
}

/// Sub-drawing on the given edge indices (vertices unchanged).
inline Drawing restrict_edges(const Drawing& d, const VertexSet& edges) {
    Drawing out;
    out.vertices = d.vertices;
    for (auto k : edges) out.edges.push_back(d.edges.at(k));
    return out;
}

struct QuasiplanarCheck {
    bool quasiplanar = true;
    VertexSet crossing_edges; ///< r pairwise crossing edges when not quasiplanar
};

/// True iff no r edges pairwise cross; otherwise r such edges are returned.
inline QuasiplanarCheck is_r_quasiplanar(const Drawing& d, std::size_t r) {
    if (r < 2) throw DomainError("r must be at least 2");
    Graph cg = crossing_graph(d);
    QuasiplanarCheck out;
    if (auto c = find_clique(cg, r)) {
        out.quasiplanar = false;
        out.crossing_edges = *c;
    }
    return out;
}

struct SparseSubgraph {
    VertexSet edges;          ///< E', indices into the drawing's edges
    bool four_quasiplanar = false;
    double guarantee = 0.0;   ///< (c'(s-1)/log|E|)^{2s-4} at the current params
    ExtractionWitness witness;
};

/// E' subset of E with (V, E') 4-quasiplanar, from a 2^s-quasiplanar drawing:
/// a 4-independent set of the crossing graph.
inline SparseSubgraph sparse_subgraph(const Drawing& d, std::size_t s, const AlgorithmParams& params = {}) {
    if (s < 3) throw DomainError("sparse_subgraph needs s >= 3");
    if (s >= 63) throw DomainError("s too large");
    Graph cg = crossing_graph(d);
    SparseSubgraph out;
    const double e = static_cast<double>(d.edges.size());
    out.guarantee = std::pow(params.c_prime * static_cast<double>(s - 1) / log2n(d.edges.size()),
                             2.0 * static_cast<double>(s) - 4.0);
    if (d.edges.empty()) {
        out.four_quasiplanar = true;
        return out;
    }
    (void)e;
    if (auto c = find_clique(cg, std::size_t{1} << s))
        throw PreconditionViolated("drawing is not " + std::to_string(std::size_t{1} << s) + "-quasiplanar", *c);
    out.witness = q_independent_set(cg, s, 2, params);
    out.edges = out.witness.vertices;
    out.four_quasiplanar = is_r_quasiplanar(restrict_edges(d, out.edges), 4).quasiplanar;
    return out;
}

/// n (C log n / s)^{2s-4}.
inline double edge_bound(std::size_t n, std::size_t s, double C) {
    if (s < 3) throw DomainError("edge_bound needs s >= 3");
    if (!(C > 0)) throw DomainError("edge_bound needs C > 0");
    if (s >= 63 || n < (std::size_t{1} << s)) throw DomainError("edge_bound needs n >= 2^s");
    const double nn = static_cast<double>(n);
    return nn * std::pow(C * std::log2(nn) / static_cast<double>(s), 2.0 * static_cast<double>(s) - 4.0);
}

inline bool within_edge_bound(std::size_t edges, std::size_t n, std::size_t s, double C) {
    return static_cast<double>(edges) <= edge_bound(n, s, C);
}

/// 3 n^{1+eps}: above this many edges a drawing has n^delta pairwise crossing edges.
inline double crossing_edge_threshold(std::size_t n, double epsilon) {
    return 3.0 * std::pow(static_cast<double>(n), 1.0 + epsilon);
}

} // namespace stringgraph

#endif // STRINGGRAPH_QUASIPLANAR_HPP
