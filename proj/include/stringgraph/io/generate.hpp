#ifndef STRINGGRAPH_IO_GENERATE_HPP
#define STRINGGRAPH_IO_GENERATE_HPP

// Seeded instance generators. Output depends only on the spec: the random
// source is mt19937_64 and integers are drawn by rejection sampling, so no
// implementation-defined distribution is involved.

#include "../error.hpp"
#include "../geometry.hpp"
#include "../quasiplanar.hpp"

#include "json.hpp"

#include <cmath>
#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <variant>

namespace stringgraph {

enum class GeneratorKind {
    random_segments,
    random_polylines,
    convex_chords,
    grid_paths,
    disjoint_segments,
    all_crossing_segments,
};

inline std::string to_string(GeneratorKind k) {
    switch (k) {
    case GeneratorKind::random_segments: return "random_segments";
    case GeneratorKind::random_polylines: return "random_polylines";
    case GeneratorKind::convex_chords: return "convex_chords";
    case GeneratorKind::grid_paths: return "grid_paths";
    case GeneratorKind::disjoint_segments: return "disjoint_segments";
    case GeneratorKind::all_crossing_segments: return "all_crossing_segments";
    }
    return "unknown";
}

inline std::optional<GeneratorKind> parse_generator_kind(const std::string& s) {
    for (auto k : {GeneratorKind::random_segments, GeneratorKind::random_polylines, GeneratorKind::convex_chords,
                   GeneratorKind::grid_paths, GeneratorKind::disjoint_segments, GeneratorKind::all_crossing_segments})
        if (to_string(k) == s) return k;
    return std::nullopt;
}

struct Region {
    std::int64_t xmin = 0, ymin = 0, xmax = 1'000'000, ymax = 1'000'000;
};

/// `count` is the number of strings, or of vertices for convex_chords.
/// `max_length` bounds each coordinate step of the random kinds (0: none).
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::random_segments;
    std::size_t count = 1;
    std::uint64_t seed = 0;
    Region region;
    std::size_t bends = 2;
    std::int64_t max_length = 0;
};

inline constexpr std::size_t max_convex_vertices = 1000;
inline constexpr std::int64_t coordinate_limit = std::int64_t{1} << 40;

inline void validate(const GeneratorSpec& s) {
    if (s.count < 1) throw BadSpec("count must be at least 1");
    const auto& r = s.region;
    if (r.xmin >= r.xmax || r.ymin >= r.ymax) throw BadSpec("region must have positive width and height");
    for (auto c : {r.xmin, r.ymin, r.xmax, r.ymax})
        if (c <= -coordinate_limit || c >= coordinate_limit) throw BadSpec("region exceeds +-2^40");
    if (s.max_length < 0) throw BadSpec("max_length must be non-negative");
    if (s.kind == GeneratorKind::convex_chords) {
        if (s.count < 2) throw BadSpec("convex_chords needs at least 2 vertices");
        if (s.count > max_convex_vertices) throw BadSpec("convex_chords supports at most 1000 vertices");
    }
    if (s.kind == GeneratorKind::random_polylines && s.bends > 1000) throw BadSpec("at most 1000 bends");
    if (s.count > 1'000'000) throw BadSpec("count above 10^6");
}

inline GeneratorSpec parse_generator_spec(const nlohmann::json& j) {
    if (!j.is_object()) throw BadSpec("generator spec must be an object");
    GeneratorSpec s;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        const auto& v = it.value();
        auto integer = [&]() -> std::int64_t {
            if (!v.is_number_integer()) throw BadSpec("'" + key + "' must be an integer");
            return v.get<std::int64_t>();
        };
        if (key == "kind") {
            auto k = v.is_string() ? parse_generator_kind(v.get<std::string>()) : std::nullopt;
            if (!k) throw BadSpec("unknown generator kind " + v.dump());
            s.kind = *k;
        } else if (key == "count" || key == "n") {
            auto c = integer();
            if (c < 1) throw BadSpec("count must be at least 1");
            s.count = static_cast<std::size_t>(c);
        } else if (key == "seed") {
            if (!v.is_number_integer()) throw BadSpec("'seed' must be an integer");
            s.seed = v.is_number_unsigned() ? v.get<std::uint64_t>() : static_cast<std::uint64_t>(v.get<std::int64_t>());
        } else if (key == "bends") {
            auto b = integer();
            if (b < 0) throw BadSpec("bends must be non-negative");
            s.bends = static_cast<std::size_t>(b);
        } else if (key == "max_length") {
            s.max_length = integer();
        } else if (key == "region") {
            if (!v.is_array() || v.size() != 4) throw BadSpec("region must be [xmin, ymin, xmax, ymax]");
            for (const auto& c : v)
                if (!c.is_number_integer()) throw BadSpec("region bounds must be integers");
            s.region = {v[0].get<std::int64_t>(), v[1].get<std::int64_t>(), v[2].get<std::int64_t>(),
                        v[3].get<std::int64_t>()};
        } else {
            throw BadSpec("unknown generator field '" + key + "'");
        }
    }
    validate(s);
    return s;
}

inline nlohmann::ordered_json to_json(const GeneratorSpec& s) {
    nlohmann::ordered_json j;
    j["kind"] = to_string(s.kind);
    j["count"] = s.count;
    j["seed"] = s.seed;
    j["region"] = {s.region.xmin, s.region.ymin, s.region.xmax, s.region.ymax};
    if (s.kind == GeneratorKind::random_polylines) j["bends"] = s.bends;
    if (s.max_length) j["max_length"] = s.max_length;
    return j;
}

namespace gen_detail {

/// Uniform integer in [lo, hi].
inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(rng());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
}

inline Point random_point(std::mt19937_64& rng, const Region& r) {
    return {Rational(uniform(rng, r.xmin, r.xmax)), Rational(uniform(rng, r.ymin, r.ymax))};
}

// A point near `from`, each coordinate within max_length and clamped to the
// region; anywhere in the region when max_length is 0. Never equal to `from`.
inline Point step(std::mt19937_64& rng, const Region& r, const Point& from, std::int64_t max_length) {
    for (;;) {
        Point p = random_point(rng, r);
        if (max_length > 0) {
            const auto fx = from.x().convert_to<std::int64_t>();
            const auto fy = from.y().convert_to<std::int64_t>();
            p = {Rational(uniform(rng, std::max(r.xmin, fx - max_length), std::min(r.xmax, fx + max_length))),
                 Rational(uniform(rng, std::max(r.ymin, fy - max_length), std::min(r.ymax, fy + max_length)))};
        }
        if (p != from) return p;
    }
}

inline std::string name(std::size_t i) { return "s" + std::to_string(i); }

} // namespace gen_detail

/// Families for every kind except convex_chords (a drawing).
inline StringFamily generate_family(const GeneratorSpec& spec) {
    using namespace gen_detail;
    validate(spec);
    const Region& r = spec.region;
    std::mt19937_64 rng(spec.seed);
    StringFamily fam;
    const std::size_t n = spec.count;
    switch (spec.kind) {
    case GeneratorKind::random_segments:
        for (std::size_t i = 0; i < n; ++i) {
            Point a = random_point(rng, r);
            Point b = step(rng, r, a, spec.max_length);
            fam.strings.emplace_back(name(i), std::vector<Point>{a, b});
        }
        break;
    case GeneratorKind::random_polylines:
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Point> pts{random_point(rng, r)};
            for (std::size_t k = 0; k <= spec.bends; ++k) pts.push_back(step(rng, r, pts.back(), spec.max_length));
            fam.strings.emplace_back(name(i), std::move(pts));
        }
        break;
    case GeneratorKind::grid_paths: {
        // Plus-shaped strings on a square lattice of spacing 10 with arms of
        // length 6: horizontal and vertical lattice neighbours touch, nothing
        // else does, so the string graph is a grid graph.
        const auto cols = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
        for (std::size_t i = 0; i < n; ++i) {
            const std::int64_t x = r.xmin + 10 * (static_cast<std::int64_t>(i) % cols);
            const std::int64_t y = r.ymin + 10 * (static_cast<std::int64_t>(i) / cols);
            auto P = [](std::int64_t a, std::int64_t b) { return Point(Rational(a), Rational(b)); };
            fam.strings.emplace_back(name(i), std::vector<Point>{P(x - 6, y), P(x + 6, y), P(x, y), P(x, y + 6),
                                                                 P(x, y - 6)});
        }
        break;
    }
    case GeneratorKind::disjoint_segments:
        for (std::size_t i = 0; i < n; ++i) {
            const std::int64_t y = r.ymin + 10 * static_cast<std::int64_t>(i);
            fam.strings.emplace_back(name(i), std::vector<Point>{Point(Rational(r.xmin), Rational(y)),
                                                                 Point(Rational(r.xmin + 10), Rational(y))});
        }
        break;
    case GeneratorKind::all_crossing_segments: {
        // Lines y = (2i - n) x + 2 i^2 meet pairwise at x = -(i + j), inside
        // |x| <= 2n + 1; slopes are distinct so every pair crosses.
        const auto nn = static_cast<std::int64_t>(n);
        const std::int64_t X = 2 * nn + 1;
        for (std::int64_t i = 0; i < nn; ++i) {
            auto y = [&](std::int64_t x) { return Rational((2 * i - nn) * x + 2 * i * i); };
            fam.strings.emplace_back(name(static_cast<std::size_t>(i)),
                                     std::vector<Point>{Point(Rational(-X), y(-X)), Point(Rational(X), y(X))});
        }
        break;
    }
    case GeneratorKind::convex_chords:
        throw BadSpec("convex_chords generates a drawing, not a family");
    }
    return fam;
}

/// Straight-line drawing of K_n with vertices rounded to integers on a
/// circle of radius 10^6 (still in convex position for n <= 1000). Edge
/// {i, j}, i < j, is listed in lexicographic order as "e<i>_<j>".
inline Drawing convex_drawing(std::size_t n) {
    if (n < 2 || n > max_convex_vertices) throw BadSpec("convex_chords needs 2 <= n <= 1000");
    constexpr double radius = 1'000'000.0;
    const double pi = std::acos(-1.0);
    Drawing d;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = 2.0 * pi * static_cast<double>(i) / static_cast<double>(n);
        d.vertices.emplace_back(Rational(static_cast<std::int64_t>(std::llround(radius * std::cos(a)))),
                                Rational(static_cast<std::int64_t>(std::llround(radius * std::sin(a)))));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            d.edges.push_back({i, j, Polyline("e" + std::to_string(i) + "_" + std::to_string(j),
                                              {d.vertices[i], d.vertices[j]})});
    return d;
}

using Generated = std::variant<StringFamily, Drawing>;

inline Generated generate(const GeneratorSpec& spec) {
    validate(spec);
    if (spec.kind == GeneratorKind::convex_chords) return convex_drawing(spec.count);
    return generate_family(spec);
}

} // namespace stringgraph

#endif // STRINGGRAPH_IO_GENERATE_HPP
