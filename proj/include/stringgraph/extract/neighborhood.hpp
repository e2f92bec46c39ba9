#ifndef STRINGGRAPH_EXTRACT_NEIGHBORHOOD_HPP
#define STRINGGRAPH_EXTRACT_NEIGHBORHOOD_HPP

// Induced subgraphs whose components each sit inside one neighbourhood, and
// the K_{r-1}-free subgraphs of K_r-free graphs that follow from them.

#include "../separator.hpp"
#include "../witness.hpp"
#include "common.hpp"

#include <cmath>
#include <optional>

namespace stringgraph {

namespace detail {

struct CoverPiece {
    VertexSet component; // original indices
    std::optional<Vertex> apex;
};

inline void cover_recurse(const Graph& g, const VertexSet& origin, const AlgorithmParams& params,
                          std::vector<CoverPiece>& out) {
    const std::size_t n = g.n();
    if (n == 0) return;

    Vertex top = 0;
    for (Vertex v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(top)) top = v;
    const double lg = log2n(n);
    const double threshold = std::max(1.0, params.c * static_cast<double>(n) / (lg * lg));

    if (static_cast<double>(g.degree(top)) >= threshold) {
        for (const auto& comp : components(g, g.neighbors(top)))
            out.push_back({lift(comp, origin), origin[top]});
        return;
    }
    if (g.m() == 0) {
        for (Vertex v = 0; v < n; ++v) out.push_back({{origin[v]}, std::nullopt});
        return;
    }
    if (n <= 2) {
        out.push_back({{origin[0]}, std::nullopt});
        return;
    }

    auto sep = find_balanced_separator(g, params.strategy);
    const std::size_t before = out.size();
    for (const VertexSet* side : {&sep.first, &sep.second}) {
        if (side->empty()) continue;
        cover_recurse(induced_subgraph(g, *side), lift(*side, origin), params, out);
    }
    if (out.size() == before) out.push_back({{origin[sep.separator.front()]}, std::nullopt});
}

} // namespace detail

/// Vertex set W such that every component of G[W] is a single vertex or lies
/// in the neighbourhood of a recorded apex. A vertex of degree at least
/// c n / log^2 n yields its neighbourhood; otherwise the graph is split by a
/// balanced separator and both sides are handled recursively.
inline ExtractionWitness neighborhood_cover_subgraph(const Graph& g, const AlgorithmParams& params = {}) {
    params.validate();
    if (g.n() == 0) throw DomainError("neighborhood cover of an empty graph");
    VertexSet origin(g.n());
    std::iota(origin.begin(), origin.end(), Vertex{0});

    std::vector<detail::CoverPiece> pieces;
    detail::cover_recurse(g, origin, params, pieces);

    ExtractionWitness w;
    w.kind = WitnessKind::neighborhood_cover;
    for (auto& piece : pieces) {
        w.vertices.insert(w.vertices.end(), piece.component.begin(), piece.component.end());
        w.parts.push_back(std::move(piece.component));
        w.apexes.push_back(piece.apex);
    }
    w.vertices = normalized(w.vertices);
    return w;
}

/// K_{r-1}-free induced subgraph of a K_r-free graph: a neighbourhood cover
/// re-certified by exact clique search. Any (r-1)-clique in a covered
/// component would extend by its apex to an r-clique of G.
inline ExtractionWitness kr1_free_subgraph(const Graph& g, std::size_t r, const AlgorithmParams& params = {}) {
    if (r < 3) throw DomainError("kr1_free_subgraph needs r >= 3");
    detail::require_clique_free(g, r, params, "kr1_free_subgraph");

    ExtractionWitness w = neighborhood_cover_subgraph(g, params);
    if (auto c = find_clique(g, r - 1, w.vertices)) {
        // Cannot happen on K_r-free input; attach the r-clique it implies.
        VertexSet clique = *c;
        for (std::size_t i = 0; i < w.parts.size(); ++i) {
            if (w.apexes[i] && std::binary_search(w.parts[i].begin(), w.parts[i].end(), clique.front())) {
                clique.push_back(*w.apexes[i]);
                break;
            }
        }
        throw PreconditionViolated("kr1_free_subgraph: input contains K_" + std::to_string(r),
                                   normalized(clique));
    }
    w.kind = WitnessKind::kp_free;
    w.forbidden_clique = r - 1;
    return w;
}

} // namespace stringgraph

#endif // STRINGGRAPH_EXTRACT_NEIGHBORHOOD_HPP
