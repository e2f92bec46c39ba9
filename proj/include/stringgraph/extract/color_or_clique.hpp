#ifndef STRINGGRAPH_EXTRACT_COLOR_OR_CLIQUE_HPP
#define STRINGGRAPH_EXTRACT_COLOR_OR_CLIQUE_HPP

#include "independent.hpp"

#include <cmath>
#include <optional>

namespace stringgraph {

/// Largest delta in (0, 1] with
///   2 delta log(1 / (c delta)) < eps / 2, and
///   log n < n^{eps/2} whenever n^delta >= 2,
/// found by bisection (both conditions are monotone in delta on (0, 1]).
inline double clique_exponent(std::size_t n, double epsilon, double c) {
    if (!(epsilon > 0 && epsilon < 1)) throw DomainError("epsilon must lie in (0,1)");
    const double lg = log2n(n);
    const bool large_n_ok = lg < std::pow(static_cast<double>(n), epsilon / 2.0);
    auto feasible = [&](double delta) {
        if (!(2.0 * delta * std::log2(1.0 / (c * delta)) < epsilon / 2.0)) return false;
        return large_n_ok || std::pow(static_cast<double>(std::max<std::size_t>(n, 1)), delta) < 2.0;
    };
    if (feasible(1.0)) return 1.0;
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid <= 0.0) break;
        (feasible(mid) ? lo : hi) = mid;
    }
    return lo;
}

struct ColorOrClique {
    double epsilon = 0.0;
    double delta = 0.0;
    std::size_t s = 1;
    double color_budget = 1.0;     ///< n^eps
    double clique_threshold = 1.0; ///< n^delta
    std::optional<Coloring> coloring;
    std::optional<VertexSet> clique;
    std::vector<std::string> events;

    ExtractionWitness witness() const {
        ExtractionWitness w;
        if (clique) {
            w.kind = WitnessKind::clique;
            w.vertices = *clique;
            w.forbidden_clique = static_cast<std::size_t>(std::ceil(clique_threshold - 1e-9));
        } else if (coloring) {
            w.kind = WitnessKind::coloring;
            w.parts = coloring->classes;
            for (const auto& c : w.parts) w.vertices.insert(w.vertices.end(), c.begin(), c.end());
            w.vertices = normalized(w.vertices);
        }
        w.events = events;
        return w;
    }
};

/// Either a proper colouring with at most n^eps classes or a clique of size
/// at least n^delta.
///
/// Sets s = ceil(delta log n) and colours greedily, extracting independent
/// sets of the remaining vertices with the K_{2^s}-free recursion. Any
/// 2^s-clique it uncovers (or a clique assembled across the parts of a
/// multipartite cover) reaching n^delta is returned instead. If neither
/// outcome verifies, InternalBoundViolation is thrown.
inline ColorOrClique color_or_clique(const Graph& g, double epsilon, const AlgorithmParams& params = {}) {
    params.validate();
    if (!(epsilon > 0 && epsilon < 1)) throw DomainError("color_or_clique needs 0 < epsilon < 1");
    if (g.n() == 0) throw DomainError("color_or_clique of an empty graph");

    const std::size_t n = g.n();
    ColorOrClique out;
    out.epsilon = epsilon;
    out.delta = params.delta > 0 ? params.delta : clique_exponent(n, epsilon, params.c);
    out.color_budget = std::pow(static_cast<double>(n), epsilon);
    out.clique_threshold = std::pow(static_cast<double>(n), out.delta);
    out.s = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(out.delta * log2n(n) - 1e-12)));
    if (out.s >= 63) out.s = 62;
    const std::size_t clique_size = static_cast<std::size_t>(std::ceil(out.clique_threshold - 1e-9));

    // Witness cliques are grown greedily to a maximal clique before return.
    auto take_clique = [&](VertexSet c) {
        if (c.size() < clique_size || !g.is_clique(c)) return false;
        Bitset common = g.all_vertices();
        for (Vertex v : c) common &= g.neighbors(v);
        for (auto v = common.find_first(); v != Bitset::npos; v = common.find_next(v)) {
            c.push_back(v);
            common &= g.neighbors(v);
        }
        out.clique = normalized(std::move(c));
        return true;
    };

    VertexSet assembled;
    try {
        Coloring coloring = greedy_color(g, [&](const Graph& full, const VertexSet& rest) {
            Graph sub = induced_subgraph(full, rest);
            try {
                detail::IndependenceRecursion rec(1, params);
                if (auto c = find_clique(sub, detail::pow2(out.s)))
                    throw PreconditionViolated("K_{2^s} in remaining vertices", *c);
                VertexSet local = rec.run(sub, to_vertex_set(sub.all_vertices()), out.s);
                if (rec.assembled_clique.size() > assembled.size()) assembled = lift(rec.assembled_clique, rest);
                for (auto& e : rec.events) out.events.push_back(std::move(e));
                return lift(local, rest);
            } catch (const PreconditionViolated& pv) {
                throw PreconditionViolated(pv.what(), lift(pv.witness(), rest));
            }
        });
        if (static_cast<double>(coloring.size()) <= out.color_budget * (1 + 1e-12) &&
            is_proper_coloring(g, coloring)) {
            out.coloring = std::move(coloring);
            return out;
        }
        if (take_clique(assembled)) {
            out.events.push_back("colouring over budget; assembled clique returned");
            return out;
        }
        throw InternalBoundViolation("color_or_clique: " + std::to_string(coloring.size()) +
                                     " colours exceed n^eps = " + std::to_string(out.color_budget) +
                                     " and no clique of size " + std::to_string(clique_size) + " was found");
    } catch (const PreconditionViolated& pv) {
        if (take_clique(pv.witness())) return out;
        if (take_clique(assembled)) return out;
        throw InternalBoundViolation(std::string("color_or_clique: clique witness below n^delta: ") + pv.what());
    }
}

} // namespace stringgraph

#endif // STRINGGRAPH_EXTRACT_COLOR_OR_CLIQUE_HPP
