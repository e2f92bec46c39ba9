#ifndef STRINGGRAPH_SEPARATOR_HPP
#define STRINGGRAPH_SEPARATOR_HPP

// Balanced vertex separators.
//
// A partition V = S + V1 + V2 is valid when |V1|, |V2| <= ceil(2n/3) and no
// edge joins V1 to V2. The finders below always return a valid partition
// (S = V is the last resort); the size of S is best effort except for the
// exact strategy.

#include "error.hpp"
#include "graph.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace stringgraph {

struct SeparatorPartition {
    VertexSet separator;
    VertexSet first;
    VertexSet second;
};

enum class SeparatorStrategy { automatic, exact, bfs_layer, degree_peel };

inline std::string to_string(SeparatorStrategy s) {
    switch (s) {
    case SeparatorStrategy::automatic: return "auto";
    case SeparatorStrategy::exact: return "exact";
    case SeparatorStrategy::bfs_layer: return "bfs_layer";
    case SeparatorStrategy::degree_peel: return "degree_peel";
    }
    return "auto";
}

inline std::optional<SeparatorStrategy> parse_strategy(const std::string& s) {
    if (s == "auto") return SeparatorStrategy::automatic;
    if (s == "exact") return SeparatorStrategy::exact;
    if (s == "bfs_layer") return SeparatorStrategy::bfs_layer;
    if (s == "degree_peel") return SeparatorStrategy::degree_peel;
    return std::nullopt;
}

/// ceil(2n/3)
inline std::size_t balance_cap(std::size_t n) { return (2 * n + 2) / 3; }

inline constexpr std::size_t exact_separator_limit = 14;

/// Checks the partition invariants; returns an empty string when valid,
/// otherwise a description of the first violation.
inline std::string separator_violation(const Graph& g, const SeparatorPartition& p) {
    Bitset seen(g.n());
    for (const VertexSet* part : {&p.separator, &p.first, &p.second}) {
        for (Vertex v : *part) {
            if (v >= g.n()) return "vertex " + std::to_string(v) + " out of range";
            if (seen.test(v)) return "vertex " + std::to_string(v) + " appears twice";
            seen.set(v);
        }
    }
    if (!seen.all()) return "parts do not cover V";
    const std::size_t cap = balance_cap(g.n());
    if (p.first.size() > cap || p.second.size() > cap)
        return "side exceeds ceil(2n/3) = " + std::to_string(cap);
    Bitset second = g.mask(p.second);
    for (Vertex v : p.first)
        if (g.neighbors(v).intersects(second))
            return "edge between sides at vertex " + std::to_string(v);
    return {};
}

inline bool is_valid_separator(const Graph& g, const SeparatorPartition& p) {
    return separator_violation(g, p).empty();
}

namespace detail {

// Splits the components of G - S into two sides of at most `cap` vertices,
// as evenly as possible. Exact two-bin packing by subset sum; singleton
// components are handled as interchangeable units.
inline std::optional<SeparatorPartition> pack_components(const Graph& g, const Bitset& removed,
                                                         std::size_t cap) {
    Bitset rest = g.all_vertices() - removed;
    std::vector<VertexSet> comps = components(g, rest);
    std::vector<std::size_t> big;
    std::vector<Vertex> singles;
    std::size_t total = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        total += comps[i].size();
        if (comps[i].size() > cap) return std::nullopt;
        if (comps[i].size() == 1)
            singles.push_back(comps[i][0]);
        else
            big.push_back(i);
    }
    std::size_t big_total = total - singles.size();
    // first_item[s]: index into `big` of the item that first reached sum s.
    std::vector<long> first_item(big_total + 1, -1);
    std::vector<char> reach(big_total + 1, 0);
    reach[0] = 1;
    for (std::size_t k = 0; k < big.size(); ++k) {
        const std::size_t w = comps[big[k]].size();
        for (std::size_t s = big_total; s >= w; --s) {
            if (!reach[s] && reach[s - w]) {
                reach[s] = 1;
                first_item[s] = static_cast<long>(k);
            }
            if (s == w) break;
        }
    }
    const std::size_t z = singles.size();
    std::optional<std::pair<std::size_t, std::size_t>> best; // (big sum, singles on side one)
    std::size_t best_gap = 0;
    for (std::size_t s = 0; s <= big_total; ++s) {
        if (!reach[s]) continue;
        // side one = s + x, side two = total - s - x, both within cap.
        std::size_t lo = total > cap + s ? total - cap - s : 0;
        std::size_t hi = cap >= s ? std::min(z, cap - s) : 0;
        if (cap < s || lo > hi) continue;
        std::size_t want = total / 2 > s ? total / 2 - s : 0;
        std::size_t x = std::clamp(want, lo, hi);
        std::size_t side = s + x;
        std::size_t gap = side > total - side ? side - (total - side) : (total - side) - side;
        if (!best || gap < best_gap) {
            best = std::make_pair(s, x);
            best_gap = gap;
        }
    }
    if (!best) return std::nullopt;

    std::vector<char> on_first(comps.size(), 0);
    for (std::size_t s = best->first; s > 0;) {
        auto k = static_cast<std::size_t>(first_item[s]);
        on_first[big[k]] = 1;
        s -= comps[big[k]].size();
    }
    SeparatorPartition part;
    part.separator = to_vertex_set(removed);
    std::size_t singles_used = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        bool first = on_first[i] != 0;
        if (comps[i].size() == 1) first = singles_used++ < best->second;
        auto& side = first ? part.first : part.second;
        side.insert(side.end(), comps[i].begin(), comps[i].end());
    }
    part.first = normalized(part.first);
    part.second = normalized(part.second);
    return part;
}

// Moves separator vertices into a side whenever that keeps the partition valid.
inline void shrink_separator(const Graph& g, SeparatorPartition& p) {
    const std::size_t cap = balance_cap(g.n());
    Bitset first = g.mask(p.first);
    Bitset second = g.mask(p.second);
    VertexSet kept;
    for (Vertex v : p.separator) {
        const bool to_first = !g.neighbors(v).intersects(second) && first.count() < cap;
        const bool to_second = !g.neighbors(v).intersects(first) && second.count() < cap;
        if (to_first && (!to_second || first.count() <= second.count()))
            first.set(v);
        else if (to_second)
            second.set(v);
        else
            kept.push_back(v);
    }
    p.separator = kept;
    p.first = to_vertex_set(first);
    p.second = to_vertex_set(second);
}

// BFS layers of G[within] from `root`.
inline std::vector<VertexSet> bfs_layers(const Graph& g, const Bitset& within, Vertex root) {
    std::vector<VertexSet> layers;
    Bitset unseen = within;
    unseen.reset(root);
    VertexSet frontier{root};
    while (!frontier.empty()) {
        layers.push_back(frontier);
        Bitset next(g.n());
        for (Vertex v : frontier) next |= g.neighbors(v) & unseen;
        unseen -= next;
        frontier = to_vertex_set(next);
    }
    return layers;
}

// Endpoint of a double sweep: BFS twice, keeping the farthest vertex of
// smallest degree in the last layer.
inline Vertex pseudo_peripheral(const Graph& g, const Bitset& within, Vertex start) {
    Vertex v = start;
    std::size_t depth = 0;
    for (int round = 0; round < 4; ++round) {
        auto layers = bfs_layers(g, within, v);
        if (layers.size() <= depth) break;
        depth = layers.size();
        const auto& last = layers.back();
        Vertex pick = last.front();
        for (Vertex u : last)
            if ((g.neighbors(u) & within).count() < (g.neighbors(pick) & within).count()) pick = u;
        if (pick == v) break;
        v = pick;
    }
    return v;
}

inline SeparatorPartition bfs_layer_separator(const Graph& g) {
    const std::size_t cap = balance_cap(g.n());
    Bitset removed(g.n());
    for (;;) {
        if (auto p = pack_components(g, removed, cap)) {
            shrink_separator(g, *p);
            return *p;
        }
        Bitset rest = g.all_vertices() - removed;
        auto comps = components(g, rest);
        const VertexSet* largest = &comps.front();
        for (const auto& c : comps)
            if (c.size() > largest->size()) largest = &c;
        Bitset comp = g.mask(*largest);
        Vertex root = pseudo_peripheral(g, comp, largest->front());
        auto layers = bfs_layers(g, comp, root);

        // Prefer the smallest layer that already makes the rest packable;
        // otherwise cut at the layer that halves the component.
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < layers.size(); ++i) {
            if (best && layers[i].size() >= layers[*best].size()) continue;
            Bitset trial = removed;
            for (Vertex v : layers[i]) trial.set(v);
            if (pack_components(g, trial, cap)) best = i;
        }
        if (!best) {
            std::size_t mass = 0, half = largest->size() / 2;
            std::size_t idx = 0;
            for (; idx < layers.size(); ++idx) {
                mass += layers[idx].size();
                if (mass >= half) break;
            }
            best = std::min(idx, layers.size() - 1);
        }
        for (Vertex v : layers[*best]) removed.set(v);
    }
}

inline SeparatorPartition degree_peel_separator(const Graph& g) {
    const std::size_t cap = balance_cap(g.n());
    Bitset removed(g.n());
    for (;;) {
        if (auto p = pack_components(g, removed, cap)) {
            shrink_separator(g, *p);
            return *p;
        }
        Bitset rest = g.all_vertices() - removed;
        Vertex pick = rest.find_first();
        std::size_t best_deg = 0;
        for (auto v = rest.find_first(); v != Bitset::npos; v = rest.find_next(v)) {
            std::size_t d = (g.neighbors(v) & rest).count();
            if (d > best_deg) {
                best_deg = d;
                pick = v;
            }
        }
        removed.set(pick);
    }
}

// Minimum |S| by trying separators in order of size; each candidate is
// accepted iff the remaining components pack into two balanced sides.
inline SeparatorPartition exact_separator(const Graph& g) {
    const std::size_t n = g.n();
    if (n > exact_separator_limit)
        throw TooLarge("exact separator limited to n <= " + std::to_string(exact_separator_limit));
    const std::size_t cap = balance_cap(n);
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            Bitset removed(n);
            for (auto i : idx) removed.set(i);
            if (auto p = pack_components(g, removed, cap)) return *p;
            // next k-combination in lexicographic order
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return {to_vertex_set(g.all_vertices()), {}, {}};
}

} // namespace detail

/// A valid balanced separator of g. `automatic` uses the exact search for
/// n <= 14 and otherwise the smaller result of the two heuristics (ties go
/// to bfs_layer).
inline SeparatorPartition find_balanced_separator(const Graph& g,
                                                  SeparatorStrategy strategy = SeparatorStrategy::automatic) {
    if (g.n() == 0) throw DomainError("separator of an empty graph");
    switch (strategy) {
    case SeparatorStrategy::exact: return detail::exact_separator(g);
    case SeparatorStrategy::bfs_layer: return detail::bfs_layer_separator(g);
    case SeparatorStrategy::degree_peel: return detail::degree_peel_separator(g);
    case SeparatorStrategy::automatic: break;
    }
    if (g.n() <= exact_separator_limit) return detail::exact_separator(g);
    auto a = detail::bfs_layer_separator(g);
    auto b = detail::degree_peel_separator(g);
    return b.separator.size() < a.separator.size() ? b : a;
}

} // namespace stringgraph

#endif // STRINGGRAPH_SEPARATOR_HPP
