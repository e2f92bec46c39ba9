#ifndef STRINGGRAPH_IO_FORMATS_HPP
#define STRINGGRAPH_IO_FORMATS_HPP

// File formats.
//
//   family:  {"strings":[{"id":"s1","points":[[x,y],...]},...]}
//   drawing: {"vertices":[[x,y],...],"edges":[{"u":0,"v":3,"points":[[x,y],...]},...]}
//   graph:   "n m" then m lines "u v", 0-indexed
//
// A coordinate is a JSON integer or a string holding a decimal or "p/q".
// JSON floats are rejected unless `inexact` is set, in which case the double
// is taken at its exact binary value. Emitters write the canonical form:
// integers bare, other values as strings, one record per line.

#include "../error.hpp"
#include "../geometry.hpp"
#include "../graph.hpp"
#include "../number.hpp"
#include "../quasiplanar.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stringgraph {

namespace io_detail {

using nlohmann::json;

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

inline json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // e.byte is 1-based and points just past the offending character.
        auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        std::string msg = e.what();
        if (auto pos = msg.find("parse error"); pos != std::string::npos) msg = msg.substr(pos);
        throw ParseError(msg, line, column);
    }
}

inline Rational coordinate(const json& v, const std::string& field, bool inexact) {
    if (v.is_number_integer()) {
        if (v.is_number_unsigned()) return Rational(BigInt(v.get<std::uint64_t>()));
        return Rational(BigInt(v.get<std::int64_t>()));
    }
    if (v.is_string()) {
        auto r = parse_rational(v.get_ref<const std::string&>());
        if (!r) throw SchemaError(field, "not a decimal or p/q number: \"" + v.get<std::string>() + "\"");
        return *r;
    }
    if (v.is_number_float()) {
        if (!inexact) throw SchemaError(field, "floating-point coordinate; write it as a string or pass --inexact");
        auto r = rational_from_double(v.get<double>());
        if (!r) throw SchemaError(field, "non-finite coordinate");
        return *r;
    }
    throw SchemaError(field, "expected a number");
}

inline Point point(const json& v, const std::string& field, bool inexact) {
    if (!v.is_array() || v.size() != 2) throw SchemaError(field, "expected [x, y]");
    return {coordinate(v[0], field + "[0]", inexact), coordinate(v[1], field + "[1]", inexact)};
}

inline std::vector<Point> points(const json& v, const std::string& field, bool inexact) {
    if (!v.is_array()) throw SchemaError(field, "expected an array of points");
    std::vector<Point> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(point(v[i], field + "[" + std::to_string(i) + "]", inexact));
    return out;
}

inline const json& member(const json& obj, const char* key, const std::string& field) {
    if (!obj.is_object()) throw SchemaError(field, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(field + "." + key, "missing");
    return *it;
}

inline void only_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& field) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; }))
            throw SchemaError(field + "." + it.key(), "unknown field");
    }
}

inline Vertex index(const json& v, const std::string& field) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw SchemaError(field, "expected a vertex index");
    return v.get<Vertex>();
}

inline std::string coordinate_text(const Rational& r) {
    if (is_integer(r)) return format_rational(r);
    return json(format_rational(r)).dump();
}

inline std::string points_text(const std::vector<Point>& pts) {
    std::string out = "[";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out += ',';
        out += '[' + coordinate_text(pts[i].x()) + ',' + coordinate_text(pts[i].y()) + ']';
    }
    return out + ']';
}

// Wraps construction errors of the geometry types as schema errors.
template <class F>
auto as_schema(const std::string& field, F&& f) {
    try {
        return f();
    } catch (const DomainError& e) {
        throw SchemaError(field, e.what());
    }
}

} // namespace io_detail

inline StringFamily parse_family(std::string_view text, bool inexact = false) {
    using namespace io_detail;
    const json doc = parse_json(text);
    if (!doc.is_object()) throw SchemaError("$", "expected an object");
    only_keys(doc, {"strings"}, "$");
    const json& strings = member(doc, "strings", "$");
    if (!strings.is_array()) throw SchemaError("strings", "expected an array");
    StringFamily fam;
    for (std::size_t i = 0; i < strings.size(); ++i) {
        const std::string field = "strings[" + std::to_string(i) + "]";
        const json& s = strings[i];
        if (!s.is_object()) throw SchemaError(field, "expected an object");
        only_keys(s, {"id", "points"}, field);
        const json& id = member(s, "id", field);
        if (!id.is_string()) throw SchemaError(field + ".id", "expected a string");
        auto pts = points(member(s, "points", field), field + ".points", inexact);
        fam.strings.push_back(as_schema(field, [&] { return Polyline(id.get<std::string>(), std::move(pts)); }));
    }
    return fam;
}

inline std::string emit_family(const StringFamily& fam) {
    std::string out = "{\"strings\":[\n";
    for (std::size_t i = 0; i < fam.strings.size(); ++i) {
        const auto& s = fam.strings[i];
        out += "{\"id\":" + nlohmann::json(s.id()).dump() + ",\"points\":" + io_detail::points_text(s.points()) + "}";
        out += i + 1 < fam.strings.size() ? ",\n" : "\n";
    }
    return out + "]}\n";
}

/// Edges may carry an optional "id"; the default is "e<index>".
inline Drawing parse_drawing(std::string_view text, bool inexact = false) {
    using namespace io_detail;
    const json doc = parse_json(text);
    if (!doc.is_object()) throw SchemaError("$", "expected an object");
    only_keys(doc, {"vertices", "edges"}, "$");
    Drawing d;
    d.vertices = points(member(doc, "vertices", "$"), "vertices", inexact);
    const json& edges = member(doc, "edges", "$");
    if (!edges.is_array()) throw SchemaError("edges", "expected an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string field = "edges[" + std::to_string(i) + "]";
        const json& e = edges[i];
        if (!e.is_object()) throw SchemaError(field, "expected an object");
        only_keys(e, {"id", "u", "v", "points"}, field);
        std::string id = "e" + std::to_string(i);
        if (auto it = e.find("id"); it != e.end()) {
            if (!it->is_string()) throw SchemaError(field + ".id", "expected a string");
            id = it->get<std::string>();
        }
        const Vertex u = index(member(e, "u", field), field + ".u");
        const Vertex v = index(member(e, "v", field), field + ".v");
        if (u >= d.vertices.size()) throw SchemaError(field + ".u", "vertex out of range");
        if (v >= d.vertices.size()) throw SchemaError(field + ".v", "vertex out of range");
        auto pts = points(member(e, "points", field), field + ".points", inexact);
        d.edges.push_back({u, v, as_schema(field, [&] { return Polyline(id, std::move(pts)); })});
    }
    return d;
}

inline std::string emit_drawing(const Drawing& d) {
    std::string out = "{\"vertices\":" + io_detail::points_text(d.vertices) + ",\n\"edges\":[\n";
    for (std::size_t i = 0; i < d.edges.size(); ++i) {
        const auto& e = d.edges[i];
        out += "{";
        if (e.curve.id() != "e" + std::to_string(i)) out += "\"id\":" + nlohmann::json(e.curve.id()).dump() + ",";
        out += "\"u\":" + std::to_string(e.u) + ",\"v\":" + std::to_string(e.v) +
               ",\"points\":" + io_detail::points_text(e.curve.points()) + "}";
        out += i + 1 < d.edges.size() ? ",\n" : "\n";
    }
    return out + "]}\n";
}

/// Edge list. Blank lines and lines starting with '#' are skipped.
inline Graph parse_graph(std::string_view text) {
    struct Token {
        std::string text;
        std::size_t line, column;
    };
    std::vector<std::vector<Token>> lines;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        ++line_no;
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        std::vector<Token> toks;
        for (std::size_t i = 0; i < line.size();) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            if (line[i] == '#' && toks.empty()) break;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            toks.push_back({std::string(line.substr(i, j - i)), line_no, i + 1});
            i = j;
        }
        if (!toks.empty()) lines.push_back(std::move(toks));
        if (end == text.size()) break;
        pos = end + 1;
    }
    auto number = [](const Token& t) -> std::size_t {
        if (t.text.empty() || t.text.size() > 18 ||
            !std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("expected a non-negative integer, got '" + t.text + "'", t.line, t.column);
        return std::stoull(t.text);
    };
    if (lines.empty()) throw ParseError("missing header line \"n m\"", line_no, 1);
    const auto& header = lines.front();
    if (header.size() != 2) throw ParseError("header must be \"n m\"", header.front().line, header.front().column);
    const std::size_t n = number(header[0]);
    const std::size_t m = number(header[1]);
    if (lines.size() - 1 < m) {
        const std::size_t at = lines.size() > 1 ? lines.back().front().line + 1 : header.front().line + 1;
        throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1), at, 1);
    }
    if (lines.size() - 1 > m) {
        const auto& extra = lines[m + 1].front();
        throw ParseError("more edge lines than announced", extra.line, extra.column);
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& toks = lines[i + 1];
        if (toks.size() != 2) throw ParseError("edge line must be \"u v\"", toks.front().line, toks.front().column);
        const std::size_t u = number(toks[0]);
        const std::size_t v = number(toks[1]);
        const std::string field = "edges[" + std::to_string(i) + "]";
        if (u >= n || v >= n) throw SchemaError(field, "vertex out of range 0.." + std::to_string(n) + "-1");
        if (u == v) throw SchemaError(field, "self-loop");
        edges.emplace_back(u, v);
    }
    Graph g(n, edges);
    if (g.m() != m) throw SchemaError("edges", "duplicate edge");
    return g;
}

inline std::string emit_graph(const Graph& g) {
    std::string out = std::to_string(g.n()) + " " + std::to_string(g.m()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace stringgraph

#endif // STRINGGRAPH_IO_FORMATS_HPP
