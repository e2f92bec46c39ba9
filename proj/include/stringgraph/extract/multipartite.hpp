#ifndef STRINGGRAPH_EXTRACT_MULTIPARTITE_HPP
#define STRINGGRAPH_EXTRACT_MULTIPARTITE_HPP

#include "../witness.hpp"
#include "common.hpp"

#include <cmath>

namespace stringgraph {

/// Disjoint parts X_1..X_t, t = 2^p >= 2, with X_i complete to X_j for i != j.
struct MultipartiteCover {
    std::vector<VertexSet> parts;
    double alpha = 0.0;
    double min_part_size = 0.0; ///< c'' alpha n / t^2 at construction time

    std::size_t t() const noexcept { return parts.size(); }

    ExtractionWitness witness() const {
        ExtractionWitness w;
        w.kind = WitnessKind::multipartite;
        w.parts = parts;
        for (const auto& p : parts) w.vertices.insert(w.vertices.end(), p.begin(), p.end());
        w.vertices = normalized(w.vertices);
        w.alpha = alpha;
        w.min_part_size = min_part_size;
        return w;
    }
};

namespace detail {

// Longest-processing-time grouping of components into `groups` bins.
inline std::vector<VertexSet> group_components(std::vector<VertexSet> comps, std::size_t groups) {
    std::stable_sort(comps.begin(), comps.end(),
                     [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
    std::vector<VertexSet> out(groups);
    for (auto& c : comps) {
        std::size_t target = 0;
        for (std::size_t i = 1; i < groups; ++i)
            if (out[i].size() < out[target].size()) target = i;
        out[target].insert(out[target].end(), c.begin(), c.end());
    }
    for (auto& part : out) part = normalized(part);
    return out;
}

} // namespace detail

/// Complete multipartite structure in a graph with at least alpha n^2 edges.
///
/// Works on the complement H: highest H-degree vertices are peeled off a
/// working set W until H[W] falls apart into at least two components; the
/// components are then grouped into t = 2, 4, 8, ... balanced parts and the
/// first grouping whose smallest part reaches c'' alpha n / t^2 is returned.
/// Components of H[W] have no H-edges between them, so the parts are
/// complete to each other in G; this is re-checked before returning.
inline MultipartiteCover multipartite_cover(const Graph& g, double alpha, const AlgorithmParams& params = {}) {
    params.validate();
    if (!(alpha > 0)) throw DomainError("multipartite_cover needs alpha > 0");
    const double n = static_cast<double>(g.n());
    if (g.n() < 2 || static_cast<double>(g.m()) < alpha * n * n)
        throw NoCoverFound("multipartite_cover: graph has fewer than alpha n^2 edges");

    const Graph h = g.complement();
    Bitset work = g.all_vertices();
    while (work.count() >= 2) {
        auto comps = components(h, work);
        if (comps.size() >= 2) {
            for (std::size_t t = 2; t <= comps.size(); t *= 2) {
                const double need = params.c_dblprime * alpha * n / static_cast<double>(t * t);
                auto parts = detail::group_components(comps, t);
                std::size_t smallest = parts.front().size();
                for (const auto& p : parts) smallest = std::min(smallest, p.size());
                if (static_cast<double>(smallest) >= need) {
                    MultipartiteCover cover{std::move(parts), alpha, need};
                    if (!detail::pairwise_complete(g, cover.parts))
                        throw InternalBoundViolation("multipartite_cover: parts not pairwise complete");
                    return cover;
                }
            }
        }
        Vertex peel = work.find_first();
        std::size_t most = 0;
        for (auto v = work.find_first(); v != Bitset::npos; v = work.find_next(v)) {
            std::size_t d = (h.neighbors(v) & work).count();
            if (d > most) {
                most = d;
                peel = v;
            }
        }
        work.reset(peel);
    }
    throw NoCoverFound("multipartite_cover: peeling exhausted the vertex set");
}

} // namespace stringgraph

#endif // STRINGGRAPH_EXTRACT_MULTIPARTITE_HPP
