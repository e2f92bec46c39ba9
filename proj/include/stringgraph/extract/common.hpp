#ifndef STRINGGRAPH_EXTRACT_COMMON_HPP
#define STRINGGRAPH_EXTRACT_COMMON_HPP

#include "../error.hpp"
#include "../graph.hpp"
#include "../params.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace stringgraph::detail {

/// Throws PreconditionViolated (with the clique) if g contains K_k. Exact up
/// to params.exact_check_limit vertices; above that only the neighbourhoods
/// of the 32 highest-degree vertices are searched.
inline void require_clique_free(const Graph& g, std::size_t k, const AlgorithmParams& params,
                                const std::string& context) {
    if (k == 0) throw DomainError(context + ": clique size must be positive");
    auto fail = [&](VertexSet clique) {
        throw PreconditionViolated(context + ": input contains K_" + std::to_string(k), std::move(clique));
    };
    if (g.n() <= params.exact_check_limit) {
        if (auto c = find_clique(g, k)) fail(*c);
        return;
    }
    std::vector<Vertex> order(g.n());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    order.resize(std::min<std::size_t>(32, order.size()));
    for (Vertex v : order) {
        if (auto c = find_clique(g, k - 1, g.neighbors(v))) {
            c->push_back(v);
            fail(normalized(*c));
        }
    }
}

/// Greedy K_k-free subset of `within`, scanning by ascending degree inside
/// `within` (ties by index). k >= 2.
inline VertexSet greedy_clique_free(const Graph& g, const VertexSet& within, std::size_t k) {
    Bitset inside = g.mask(within);
    std::vector<Vertex> order = within;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return (g.neighbors(a) & inside).count() < (g.neighbors(b) & inside).count();
    });
    Bitset chosen(g.n());
    for (Vertex v : order) {
        Bitset around = g.neighbors(v) & chosen;
        if (k >= 2 && !find_clique(g, k - 1, around)) chosen.set(v);
    }
    return to_vertex_set(chosen);
}

inline std::size_t pow2(std::size_t e) { return std::size_t{1} << e; }

} // namespace stringgraph::detail

#endif // STRINGGRAPH_EXTRACT_COMMON_HPP
