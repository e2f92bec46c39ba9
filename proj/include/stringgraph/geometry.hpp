#ifndef STRINGGRAPH_GEOMETRY_HPP
#define STRINGGRAPH_GEOMETRY_HPP

#include "error.hpp"
#include "graph.hpp"
#include "number.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace stringgraph {

/// Point with exact rational coordinates and a cached double approximation
/// used only by conservative filters.
class Point {
public:
    Point() : Point(Rational(0), Rational(0)) {}
    Point(Rational x, Rational y)
        : x_(std::move(x)), y_(std::move(y)), ax_(to_double(x_)), ay_(to_double(y_)) {}
    Point(long long x, long long y) : Point(Rational(x), Rational(y)) {}

    const Rational& x() const noexcept { return x_; }
    const Rational& y() const noexcept { return y_; }
    double approx_x() const noexcept { return ax_; }
    double approx_y() const noexcept { return ay_; }

    Point translated(const Rational& dx, const Rational& dy) const { return {x_ + dx, y_ + dy}; }

    friend bool operator==(const Point& a, const Point& b) { return a.x_ == b.x_ && a.y_ == b.y_; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

private:
    Rational x_, y_;
    double ax_, ay_;
};

/// Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right turn,
/// 0 collinear. A double evaluation decides whenever its error bound allows;
/// otherwise the exact rational determinant is computed.
inline int orientation(const Point& a, const Point& b, const Point& c) {
    const double bx = b.approx_x() - a.approx_x(), by = b.approx_y() - a.approx_y();
    const double cx = c.approx_x() - a.approx_x(), cy = c.approx_y() - a.approx_y();
    const double left = bx * cy;
    const double right = by * cx;
    const double det = left - right;
    // Inputs are within one rounding of the exact values; 16u covers that plus
    // the rounding of the determinant itself.
    const double mag1 = (std::fabs(a.approx_x()) + std::fabs(b.approx_x())) *
                        (std::fabs(a.approx_y()) + std::fabs(c.approx_y()));
    const double mag2 = (std::fabs(a.approx_y()) + std::fabs(b.approx_y())) *
                        (std::fabs(a.approx_x()) + std::fabs(c.approx_x()));
    const double bound = 16.0 * std::numeric_limits<double>::epsilon() * (mag1 + mag2) +
                         std::numeric_limits<double>::min();
    if (std::isfinite(det) && std::isfinite(bound)) {
        if (det > bound) return 1;
        if (det < -bound) return -1;
    }
    Rational exact = (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
    return exact > 0 ? 1 : (exact < 0 ? -1 : 0);
}

namespace detail {

// p collinear with [a,b]; true iff p lies within the segment's bounding box.
inline bool within_box(const Point& a, const Point& b, const Point& p) {
    return std::min(a.x(), b.x()) <= p.x() && p.x() <= std::max(a.x(), b.x()) &&
           std::min(a.y(), b.y()) <= p.y() && p.y() <= std::max(a.y(), b.y());
}

} // namespace detail

/// True iff the closed segments [a1,a2] and [b1,b2] share a point. Touching
/// at an endpoint counts.
inline bool segments_intersect(const Point& a1, const Point& a2, const Point& b1, const Point& b2) {
    const int o1 = orientation(a1, a2, b1);
    const int o2 = orientation(a1, a2, b2);
    const int o3 = orientation(b1, b2, a1);
    const int o4 = orientation(b1, b2, a2);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && detail::within_box(a1, a2, b1)) return true;
    if (o2 == 0 && detail::within_box(a1, a2, b2)) return true;
    if (o3 == 0 && detail::within_box(b1, b2, a1)) return true;
    if (o4 == 0 && detail::within_box(b1, b2, a2)) return true;
    return false;
}

/// Axis-aligned box over double approximations, inflated so that disjointness
/// of two boxes implies disjointness of the exact geometry.
struct Box {
    double xmin = std::numeric_limits<double>::infinity();
    double ymin = std::numeric_limits<double>::infinity();
    double xmax = -std::numeric_limits<double>::infinity();
    double ymax = -std::numeric_limits<double>::infinity();

    void add(const Point& p) {
        xmin = std::min(xmin, p.approx_x());
        ymin = std::min(ymin, p.approx_y());
        xmax = std::max(xmax, p.approx_x());
        ymax = std::max(ymax, p.approx_y());
    }

    static bool apart(double lo_max, double hi_min) {
        const double slack = 4.0 * std::numeric_limits<double>::epsilon() *
                                 (std::fabs(lo_max) + std::fabs(hi_min)) +
                             std::numeric_limits<double>::min();
        return lo_max + slack < hi_min;
    }

    friend bool disjoint(const Box& a, const Box& b) {
        return apart(a.xmax, b.xmin) || apart(b.xmax, a.xmin) || apart(a.ymax, b.ymin) ||
               apart(b.ymax, a.ymin);
    }
};

/// A labelled polygonal curve: at least two points, consecutive points distinct.
class Polyline {
public:
    Polyline(std::string id, std::vector<Point> points) : id_(std::move(id)), points_(std::move(points)) {
        if (points_.size() < 2)
            throw DomainError("polyline '" + id_ + "' needs at least two points");
        for (std::size_t i = 0; i + 1 < points_.size(); ++i)
            if (points_[i] == points_[i + 1])
                throw DomainError("polyline '" + id_ + "' repeats point " + std::to_string(i));
        for (const auto& p : points_) box_.add(p);
        seg_boxes_.reserve(points_.size() - 1);
        for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
            Box b;
            b.add(points_[i]);
            b.add(points_[i + 1]);
            seg_boxes_.push_back(b);
        }
    }

    const std::string& id() const noexcept { return id_; }
    const std::vector<Point>& points() const noexcept { return points_; }
    std::size_t segment_count() const noexcept { return points_.size() - 1; }
    const Box& box() const noexcept { return box_; }
    const Box& segment_box(std::size_t i) const { return seg_boxes_[i]; }

    Polyline translated(const Rational& dx, const Rational& dy) const {
        std::vector<Point> pts;
        pts.reserve(points_.size());
        for (const auto& p : points_) pts.push_back(p.translated(dx, dy));
        return {id_, std::move(pts)};
    }

    friend bool operator==(const Polyline& a, const Polyline& b) {
        return a.id_ == b.id_ && a.points_ == b.points_;
    }

private:
    std::string id_;
    std::vector<Point> points_;
    Box box_;
    std::vector<Box> seg_boxes_;
};

/// True iff some segment of p meets some segment of q. The box tests only
/// skip pairs that provably cannot meet.
inline bool polylines_intersect(const Polyline& p, const Polyline& q) {
    if (disjoint(p.box(), q.box())) return false;
    const auto& pp = p.points();
    const auto& qp = q.points();
    for (std::size_t i = 0; i < p.segment_count(); ++i) {
        if (disjoint(p.segment_box(i), q.box())) continue;
        for (std::size_t j = 0; j < q.segment_count(); ++j) {
            if (disjoint(p.segment_box(i), q.segment_box(j))) continue;
            if (segments_intersect(pp[i], pp[i + 1], qp[j], qp[j + 1])) return true;
        }
    }
    return false;
}

struct StringFamily {
    std::vector<Polyline> strings;

    std::size_t size() const noexcept { return strings.size(); }

    friend bool operator==(const StringFamily& a, const StringFamily& b) { return a.strings == b.strings; }
};

/// String graph of a family: one vertex per string (labelled by its id), an
/// edge whenever two strings share a point.
inline Graph intersection_graph(const StringFamily& fam) {
    if (fam.strings.empty()) throw DomainError("intersection graph of an empty family");
    std::vector<std::string> labels;
    std::unordered_set<std::string> seen;
    for (const auto& s : fam.strings) {
        if (!seen.insert(s.id()).second) throw DuplicateId("duplicate string id '" + s.id() + "'");
        labels.push_back(s.id());
    }
    Graph::Builder b(std::move(labels));
    const auto& ss = fam.strings;
    for (std::size_t i = 0; i < ss.size(); ++i)
        for (std::size_t j = i + 1; j < ss.size(); ++j)
            if (polylines_intersect(ss[i], ss[j])) b.add_edge(i, j);
    return std::move(b).build();
}

} // namespace stringgraph

#endif // STRINGGRAPH_GEOMETRY_HPP
