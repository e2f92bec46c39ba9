#ifndef STRINGGRAPH_GRAPH_HPP
#define STRINGGRAPH_GRAPH_HPP

#include "error.hpp"

#include <boost/dynamic_bitset.hpp>
#include <boost/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stringgraph {

using Vertex = std::size_t;
/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;
using Bitset = boost::dynamic_bitset<std::uint64_t>;
using Ratio = boost::rational<long long>;

inline VertexSet normalized(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet to_vertex_set(const Bitset& bits) {
    VertexSet out;
    for (auto v = bits.find_first(); v != Bitset::npos; v = bits.find_next(v)) out.push_back(v);
    return out;
}

/// Simple undirected graph with per-vertex labels and bitset adjacency.
/// Immutable once built; use Graph::Builder or the edge-list constructor.
class Graph {
public:
    class Builder;

    Graph() = default;

    /// Builds a graph on n vertices. Labels default to the decimal vertex index.
    Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
          std::vector<std::string> labels = {})
        : labels_(std::move(labels)), adj_(n, Bitset(n)) {
        if (labels_.empty()) {
            labels_.reserve(n);
            for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
        }
        if (labels_.size() != n) throw DomainError("label count does not match vertex count");
        for (auto [u, v] : edges) add_edge(u, v);
    }

    std::size_t n() const noexcept { return adj_.size(); }
    std::size_t m() const noexcept { return m_; }
    bool empty() const noexcept { return adj_.empty(); }

    const std::string& label(Vertex v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
    const Bitset& neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].count(); }

    Bitset all_vertices() const {
        Bitset b(n());
        b.set();
        return b;
    }

    Bitset mask(const VertexSet& s) const {
        Bitset b(n());
        for (Vertex v : s) b.set(v);
        return b;
    }

    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        out.reserve(m_);
        for (Vertex u = 0; u < n(); ++u)
            for (auto v = adj_[u].find_next(u); v != Bitset::npos; v = adj_[u].find_next(v))
                out.emplace_back(u, v);
        return out;
    }

    /// Edges with both endpoints in `s`.
    std::size_t edges_within(const Bitset& s) const {
        std::size_t twice = 0;
        for (auto v = s.find_first(); v != Bitset::npos; v = s.find_next(v))
            twice += (adj_[v] & s).count();
        return twice / 2;
    }

    bool is_independent(const VertexSet& s) const {
        Bitset b = mask(s);
        for (Vertex v : s)
            if (adj_[v].intersects(b)) return false;
        return true;
    }

    bool is_clique(const VertexSet& s) const {
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (!adjacent(s[i], s[j])) return false;
        return true;
    }

    Graph complement() const {
        Graph h;
        h.labels_ = labels_;
        h.adj_.assign(n(), Bitset(n()));
        for (Vertex v = 0; v < n(); ++v) {
            h.adj_[v] = ~adj_[v];
            h.adj_[v].reset(v);
            h.m_ += h.adj_[v].count();
        }
        h.m_ /= 2;
        return h;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.labels_ == b.labels_ && a.adj_ == b.adj_;
    }

private:
    void add_edge(Vertex u, Vertex v) {
        if (u >= n() || v >= n())
            throw UnknownVertex("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                "} references a vertex outside 0.." + std::to_string(n()) + "-1");
        if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
        if (adj_[u].test(v)) return;
        adj_[u].set(v);
        adj_[v].set(u);
        ++m_;
    }

    std::vector<std::string> labels_;
    std::vector<Bitset> adj_;
    std::size_t m_ = 0;
};

class Graph::Builder {
public:
    explicit Builder(std::vector<std::string> labels) {
        g_.labels_ = std::move(labels);
        g_.adj_.assign(g_.labels_.size(), Bitset(g_.labels_.size()));
    }
    void add_edge(Vertex u, Vertex v) { g_.add_edge(u, v); }
    Graph build() && { return std::move(g_); }

private:
    Graph g_;
};

/// G[S]. Vertex i of the result is the i-th smallest element of S; labels
/// are carried over.
inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    VertexSet sorted = normalized(s);
    for (Vertex v : sorted)
        if (v >= g.n()) throw UnknownVertex("vertex " + std::to_string(v) + " not in graph");
    std::vector<std::string> labels;
    labels.reserve(sorted.size());
    for (Vertex v : sorted) labels.push_back(g.label(v));
    Graph::Builder b(std::move(labels));
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if (g.adjacent(sorted[i], sorted[j])) b.add_edge(i, j);
    return std::move(b).build();
}

/// Maps indices of an induced subgraph back through the vertex list it was built from.
inline VertexSet lift(const VertexSet& local, const VertexSet& origin) {
    VertexSet out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(origin[v]);
    return normalized(out);
}

/// Connected components of G[within], each sorted, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g, const Bitset& within) {
    std::vector<VertexSet> out;
    Bitset unseen = within;
    std::vector<Vertex> stack;
    for (auto s = unseen.find_first(); s != Bitset::npos; s = unseen.find_first()) {
        VertexSet comp;
        unseen.reset(s);
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            Bitset next = g.neighbors(v) & unseen;
            for (auto u = next.find_first(); u != Bitset::npos; u = next.find_next(u)) {
                unseen.reset(u);
                stack.push_back(u);
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.all_vertices()); }

/// 2m/n.
inline Ratio average_degree(const Graph& g) {
    if (g.n() == 0) throw DegenerateGraph("average degree of the empty graph");
    return Ratio(2 * static_cast<long long>(g.m()), static_cast<long long>(g.n()));
}

/// m / C(n,2).
inline Ratio edge_density(const Graph& g) {
    if (g.n() < 2) throw DegenerateGraph("edge density needs at least two vertices");
    auto n = static_cast<long long>(g.n());
    return Ratio(static_cast<long long>(g.m()) * 2, n * (n - 1));
}

namespace detail {

// Branch and bound with greedy colouring bounds over bitsets. Returns the
// first clique of size >= target found, or the largest clique when target is 0.
class CliqueSearch {
public:
    CliqueSearch(const Graph& g, std::size_t target) : g_(g), target_(target) {}

    VertexSet run(const Bitset& candidates) {
        VertexSet current;
        expand(current, candidates);
        return best_;
    }

private:
    bool done() const { return target_ != 0 && best_.size() >= target_; }

    void expand(VertexSet& current, Bitset p) {
        if (done()) return;
        std::vector<Vertex> order;
        std::vector<std::size_t> bound;
        colour(p, order, bound);
        std::size_t goal = target_ != 0 ? target_ : best_.size() + 1;
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current.size() + bound[i] < goal) return;
            Vertex v = order[i];
            current.push_back(v);
            Bitset next = p & g_.neighbors(v);
            if (target_ != 0 && current.size() >= target_) {
                best_ = current;
                return;
            }
            if (next.none()) {
                if (current.size() > best_.size()) best_ = current;
            } else {
                expand(current, std::move(next));
            }
            current.pop_back();
            if (done()) return;
            p.reset(v);
            goal = target_ != 0 ? target_ : best_.size() + 1;
        }
    }

    // Sequential greedy colouring; bound[i] is the colour of order[i], and
    // colours are nondecreasing along the order.
    void colour(const Bitset& p, std::vector<Vertex>& order, std::vector<std::size_t>& bound) const {
        Bitset uncoloured = p;
        std::size_t k = 0;
        while (uncoloured.any()) {
            ++k;
            Bitset q = uncoloured;
            for (auto v = q.find_first(); v != Bitset::npos; v = q.find_first()) {
                q.reset(v);
                q -= g_.neighbors(v);
                uncoloured.reset(v);
                order.push_back(v);
                bound.push_back(k);
            }
        }
    }

    const Graph& g_;
    std::size_t target_;
    VertexSet best_;
};

} // namespace detail

/// Exact search for k pairwise adjacent vertices among `within`.
inline std::optional<VertexSet> find_clique(const Graph& g, std::size_t k, const Bitset& within) {
    if (k == 0) return VertexSet{};
    if (within.count() < k) return std::nullopt;
    if (k == 1) return VertexSet{within.find_first()};
    VertexSet found = detail::CliqueSearch(g, k).run(within);
    if (found.size() < k) return std::nullopt;
    found.resize(k);
    return normalized(found);
}

inline std::optional<VertexSet> find_clique(const Graph& g, std::size_t k) {
    return find_clique(g, k, g.all_vertices());
}

inline std::optional<VertexSet> find_clique(const Graph& g, std::size_t k, const VertexSet& within) {
    return find_clique(g, k, g.mask(within));
}

/// A maximum clique (exact).
inline VertexSet maximum_clique(const Graph& g) {
    if (g.n() == 0) return {};
    return normalized(detail::CliqueSearch(g, 0).run(g.all_vertices()));
}

struct Coloring {
    std::vector<VertexSet> classes;

    std::size_t size() const noexcept { return classes.size(); }
};

/// True iff the classes are disjoint independent sets covering every vertex.
inline bool is_proper_coloring(const Graph& g, const Coloring& c) {
    Bitset seen(g.n());
    for (const auto& cls : c.classes) {
        for (Vertex v : cls) {
            if (v >= g.n() || seen.test(v)) return false;
            seen.set(v);
        }
        if (!g.is_independent(cls)) return false;
    }
    return seen.all();
}

/// Receives the vertices not yet coloured (indices of the full graph) and
/// returns a non-empty independent subset of them.
using IndependentSetExtractor = std::function<VertexSet(const Graph&, const VertexSet&)>;

/// Colours by repeatedly extracting an independent set from the uncoloured
/// vertices. The extractor's output is checked every round.
inline Coloring greedy_color(const Graph& g, const IndependentSetExtractor& extract) {
    Coloring out;
    Bitset remaining = g.all_vertices();
    while (remaining.any()) {
        VertexSet rest = to_vertex_set(remaining);
        VertexSet cls = normalized(extract(g, rest));
        if (cls.empty()) throw ExtractorViolation("extractor returned an empty set");
        for (Vertex v : cls)
            if (v >= g.n() || !remaining.test(v))
                throw ExtractorViolation("extractor returned vertex " + std::to_string(v) +
                                         " outside the uncoloured set");
        if (!g.is_independent(cls)) throw ExtractorViolation("extractor returned a non-independent set");
        for (Vertex v : cls) remaining.reset(v);
        out.classes.push_back(std::move(cls));
    }
    return out;
}

} // namespace stringgraph

#endif // STRINGGRAPH_GRAPH_HPP
