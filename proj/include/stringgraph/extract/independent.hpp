#ifndef STRINGGRAPH_EXTRACT_INDEPENDENT_HPP
#define STRINGGRAPH_EXTRACT_INDEPENDENT_HPP

// Independent sets and 2^q-independent sets (sets inducing no K_{2^q}) in
// K_{2^s}-free graphs, by double induction on s and n:
//
//   sparse (m <= alpha n^2):  separator, recurse on both sides, take the union;
//   dense:                    complete multipartite cover with t = 2^p parts,
//                             one part is K_{2^{s-p}}-free, recurse on it
//                             with s - p (or return it once s - p <= q).
//
// alpha = c' ((s + 1 - q) / log n)^2, which is c' (s / log n)^2 for q = 1.

#include "../separator.hpp"
#include "../witness.hpp"
#include "common.hpp"
#include "multipartite.hpp"

#include <cmath>

namespace stringgraph {

namespace detail {

class IndependenceRecursion {
public:
    IndependenceRecursion(std::size_t q, const AlgorithmParams& params) : q_(q), params_(params) {}

    VertexSet run(const Graph& g, const VertexSet& origin, std::size_t s) {
        const std::size_t n = g.n();
        if (n == 0) return {};
        const std::size_t forbidden = pow2(q_);
        if (s <= q_) {
            if (auto c = find_clique(g, forbidden)) violation(lift(*c, origin), forbidden);
            return origin;
        }
        if (!find_clique(g, forbidden)) return origin;
        if (n <= 10) return lift(greedy_clique_free(g, all(g), forbidden), origin);

        const double lg = log2n(n);
        const double nn = static_cast<double>(n);
        const double ratio = static_cast<double>(s + 1 - q_) / lg;
        const double alpha = params_.c_prime * ratio * ratio;

        if (static_cast<double>(g.m()) > alpha * nn * nn) {
            try {
                return dense(g, origin, s, alpha);
            } catch (const NoCoverFound&) {
                events.push_back("no multipartite cover at n=" + std::to_string(n) + "; separator branch used");
            }
        }
        return sparse(g, origin, s);
    }

    std::vector<std::string> events;
    /// Largest clique assembled from per-part cliques of a cover.
    VertexSet assembled_clique;

private:
    static VertexSet all(const Graph& g) { return to_vertex_set(g.all_vertices()); }

    [[noreturn]] static void violation(VertexSet clique, std::size_t k) {
        throw PreconditionViolated("input contains K_" + std::to_string(k), std::move(clique));
    }

    VertexSet sparse(const Graph& g, const VertexSet& origin, std::size_t s) {
        auto sep = find_balanced_separator(g, params_.strategy);
        VertexSet out;
        for (const VertexSet* side : {&sep.first, &sep.second}) {
            if (side->empty()) continue;
            out = set_union(out, run(induced_subgraph(g, *side), lift(*side, origin), s));
        }
        if (out.empty()) out = lift(greedy_clique_free(g, all(g), pow2(q_)), origin);
        return out;
    }

    VertexSet dense(const Graph& g, const VertexSet& origin, std::size_t s, double alpha) {
        MultipartiteCover cover = multipartite_cover(g, alpha, params_);
        const std::size_t t = cover.t();
        std::size_t p = 0;
        while (pow2(p + 1) <= t) ++p;

        // With p >= s every part holds K_{2^{s-p}} = K_1 and one vertex per
        // part already forms K_{2^s}.
        const std::size_t sub_s = p < s ? s - p : 0;
        const std::size_t sub_clique = pow2(sub_s);

        std::optional<std::size_t> free_part;
        VertexSet assembled;
        for (std::size_t i = 0; i < t; ++i) {
            const VertexSet& part = cover.parts[i];
            auto c = sub_s == 0 ? std::optional<VertexSet>(VertexSet{part.front()}) : find_clique(g, sub_clique, part);
            if (c) {
                assembled.insert(assembled.end(), c->begin(), c->end());
            } else if (!free_part || part.size() > cover.parts[*free_part].size()) {
                free_part = i;
            }
        }
        assembled = lift(normalized(assembled), origin);
        if (assembled.size() > assembled_clique.size()) assembled_clique = assembled;
        if (!free_part) violation(assembled, pow2(s));

        const VertexSet& part = cover.parts[*free_part];
        if (sub_s <= q_) return lift(part, origin);
        return run(induced_subgraph(g, part), lift(part, origin), sub_s);
    }

    std::size_t q_;
    const AlgorithmParams& params_;
};

inline ExtractionWitness independence_extraction(const Graph& g, std::size_t s, std::size_t q,
                                                 const AlgorithmParams& params, WitnessKind kind) {
    params.validate();
    if (s < 1 || q < 1) throw DomainError("s and q must be positive");
    if (q > s) throw DomainError("q must not exceed s");
    if (s >= 63) throw DomainError("s too large");
    if (g.n() == 0) throw DomainError("extraction from an empty graph");
    require_clique_free(g, pow2(s), params, kind == WitnessKind::independent ? "independent_set" : "q_independent_set");

    IndependenceRecursion rec(q, params);
    VertexSet origin(g.n());
    std::iota(origin.begin(), origin.end(), Vertex{0});

    ExtractionWitness w;
    w.kind = kind;
    w.forbidden_clique = pow2(q);
    w.vertices = rec.run(g, origin, s);
    w.events = std::move(rec.events);
    if (find_clique(g, w.forbidden_clique, w.vertices))
        throw InternalBoundViolation("extraction produced a set containing K_" + std::to_string(w.forbidden_clique));
    return w;
}

} // namespace detail

/// Independent set of a K_{2^s}-free graph.
inline ExtractionWitness independent_set(const Graph& g, std::size_t s, const AlgorithmParams& params = {}) {
    return detail::independence_extraction(g, s, 1, params, WitnessKind::independent);
}

/// Vertex set inducing no K_{2^q} in a K_{2^s}-free graph (s >= q >= 1).
inline ExtractionWitness q_independent_set(const Graph& g, std::size_t s, std::size_t q,
                                           const AlgorithmParams& params = {}) {
    return detail::independence_extraction(g, s, q, params, WitnessKind::q_independent);
}

/// Guaranteed size max(1, floor(n (c s / log n)^{2s-2})) of an independent set
/// in a K_{2^s}-free graph on n vertices.
inline std::size_t independent_set_floor(std::size_t n, std::size_t s, double c) {
    if (n < 2) return 1;
    const double value = static_cast<double>(n) * std::pow(c * static_cast<double>(s) / log2n(n),
                                                           2.0 * static_cast<double>(s) - 2.0);
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::floor(value)));
}

} // namespace stringgraph

#endif // STRINGGRAPH_EXTRACT_INDEPENDENT_HPP
