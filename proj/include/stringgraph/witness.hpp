#ifndef STRINGGRAPH_WITNESS_HPP
#define STRINGGRAPH_WITNESS_HPP

#include "graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stringgraph {

enum class WitnessKind {
    independent,
    q_independent,
    kp_free,
    neighborhood_cover,
    dense_core,
    multipartite,
    coloring,
    clique,
};

inline std::string to_string(WitnessKind k) {
    switch (k) {
    case WitnessKind::independent: return "independent";
    case WitnessKind::q_independent: return "q_independent";
    case WitnessKind::kp_free: return "kp_free";
    case WitnessKind::neighborhood_cover: return "neighborhood_cover";
    case WitnessKind::dense_core: return "dense_core";
    case WitnessKind::multipartite: return "multipartite";
    case WitnessKind::coloring: return "coloring";
    case WitnessKind::clique: return "clique";
    }
    return "unknown";
}

/// Output of an extraction together with what is needed to re-check it
/// against the source graph. Vertex indices always refer to that graph.
struct ExtractionWitness {
    WitnessKind kind = WitnessKind::independent;
    VertexSet vertices;

    /// kp_free / q_independent: no clique of this size inside `vertices`.
    /// clique: the size the clique must reach.
    std::size_t forbidden_clique = 0;

    /// neighborhood_cover: components of G[vertices]; multipartite: the
    /// parts; coloring: the colour classes.
    std::vector<VertexSet> parts;
    /// neighborhood_cover: apex covering parts[i], empty for singletons.
    std::vector<std::optional<Vertex>> apexes;

    /// dense_core certificate.
    double epsilon = 0.0;
    double refine_constant = 0.0;
    /// multipartite certificate.
    double alpha = 0.0;
    double min_part_size = 0.0;

    /// Notable events during the run (fallbacks and the like).
    std::vector<std::string> events;
};

struct Verification {
    bool passed = true;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
            failures.push_back(what);
        }
    }
};

namespace detail {

inline bool in_range(const Graph& g, const VertexSet& s) {
    for (Vertex v : s)
        if (v >= g.n()) return false;
    return true;
}

inline bool pairwise_complete(const Graph& g, const std::vector<VertexSet>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        Bitset others(g.n());
        for (std::size_t j = 0; j < parts.size(); ++j)
            if (j != i)
                for (Vertex v : parts[j]) others.set(v);
        for (Vertex v : parts[i])
            if (!others.is_subset_of(g.neighbors(v))) return false;
    }
    return true;
}

} // namespace detail

/// Re-verifies a witness against g from scratch.
inline Verification verify(const Graph& g, const ExtractionWitness& w) {
    Verification out;
    out.require(detail::in_range(g, w.vertices), "vertex index out of range");
    for (const auto& p : w.parts) out.require(detail::in_range(g, p), "part index out of range");
    if (!out.passed) return out;
    out.require(normalized(w.vertices) == w.vertices, "vertex list not sorted and unique");

    switch (w.kind) {
    case WitnessKind::independent:
        out.require(g.is_independent(w.vertices), "set has an internal edge");
        break;
    case WitnessKind::q_independent:
    case WitnessKind::kp_free:
        out.require(w.forbidden_clique >= 1, "missing forbidden clique size");
        out.require(!find_clique(g, w.forbidden_clique, w.vertices).has_value(),
                    "set contains K_" + std::to_string(w.forbidden_clique));
        break;
    case WitnessKind::neighborhood_cover: {
        auto comps = components(g, g.mask(w.vertices));
        for (const auto& comp : comps) {
            if (comp.size() == 1) continue;
            bool covered = false;
            for (const auto& apex : w.apexes) {
                if (!apex || *apex >= g.n()) continue;
                if (g.mask(comp).is_subset_of(g.neighbors(*apex))) {
                    covered = true;
                    break;
                }
            }
            out.require(covered, "component containing vertex " + std::to_string(comp.front()) +
                                     " has no recorded apex");
        }
        break;
    }
    case WitnessKind::dense_core: {
        out.require(!w.vertices.empty(), "empty core");
        if (w.vertices.empty() || g.n() == 0) break;
        const long double d = 2.0L * g.m() / g.n();
        const long double core_m = g.edges_within(g.mask(w.vertices));
        const long double dc = 2.0L * core_m / w.vertices.size();
        out.require(dc >= (1.0L - w.epsilon) * d * (1.0L - 1e-12L), "core average degree below (1-eps) d");
        out.require(w.vertices.size() <= std::max<long double>(1.0L, w.refine_constant * dc) * (1.0L + 1e-12L),
                    "core larger than max(1, C d')");
        break;
    }
    case WitnessKind::multipartite: {
        out.require(w.parts.size() >= 2, "fewer than two parts");
        Bitset seen(g.n());
        bool disjoint = true;
        for (const auto& p : w.parts) {
            out.require(!p.empty(), "empty part");
            for (Vertex v : p) {
                if (seen.test(v)) disjoint = false;
                seen.set(v);
            }
        }
        out.require(disjoint, "parts overlap");
        out.require(detail::pairwise_complete(g, w.parts), "parts not pairwise complete");
        for (const auto& p : w.parts)
            out.require(static_cast<double>(p.size()) >= w.min_part_size * (1.0 - 1e-12),
                        "part smaller than c'' alpha n / t^2");
        break;
    }
    case WitnessKind::coloring: {
        Coloring c{w.parts};
        out.require(is_proper_coloring(g, c), "not a proper colouring");
        break;
    }
    case WitnessKind::clique:
        out.require(g.is_clique(w.vertices), "not a clique");
        out.require(w.vertices.size() >= w.forbidden_clique, "clique below required size");
        break;
    }
    return out;
}

} // namespace stringgraph

#endif // STRINGGRAPH_WITNESS_HPP
