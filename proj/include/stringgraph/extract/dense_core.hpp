#ifndef STRINGGRAPH_EXTRACT_DENSE_CORE_HPP
#define STRINGGRAPH_EXTRACT_DENSE_CORE_HPP

#include "../separator.hpp"
#include "../witness.hpp"
#include "common.hpp"

namespace stringgraph {

/// Dense induced subgraph G[V'] with average degree d' >= (1 - eps) d and
/// |V'| <= max(1, C(eps) d').
///
/// While the current subgraph has d_i < |V_i| / C, it is split by a balanced
/// separator U0 + U1 + U2 and the denser of G[U1 + U0] and G[U2 + U0] is
/// kept. Both inequalities are checked on return; RefinementFailed reports a
/// run where the heuristic separators were too large for them to hold.
inline ExtractionWitness dense_core(const Graph& g, double epsilon, const AlgorithmParams& params = {}) {
    params.validate();
    if (!(epsilon > 0 && epsilon < 1)) throw DomainError("dense_core needs 0 < epsilon < 1");
    if (g.n() == 0) throw DomainError("dense_core of an empty graph");
    const double C = params.refine_constant(epsilon);

    VertexSet current(g.n());
    std::iota(current.begin(), current.end(), Vertex{0});
    Graph sub = g;
    std::size_t rounds = 0;
    for (;;) {
        const double ni = static_cast<double>(sub.n());
        const double di = 2.0 * static_cast<double>(sub.m()) / ni;
        if (sub.n() <= 1 || di >= ni / C) break;

        auto sep = find_balanced_separator(sub, params.strategy);
        VertexSet a = set_union(sep.first, sep.separator);
        VertexSet b = set_union(sep.second, sep.separator);
        auto avg = [&](const VertexSet& s) {
            return s.empty() ? -1.0 : 2.0 * static_cast<double>(sub.edges_within(sub.mask(s))) / s.size();
        };
        const VertexSet& keep = avg(b) > avg(a) ? b : a;
        if (keep.size() == sub.n())
            throw RefinementFailed("dense_core: separator made no progress at n=" + std::to_string(sub.n()));
        current = lift(keep, current);
        sub = induced_subgraph(sub, keep);
        ++rounds;
    }

    ExtractionWitness w;
    w.kind = WitnessKind::dense_core;
    w.vertices = current;
    w.epsilon = epsilon;
    w.refine_constant = C;
    w.events.push_back("refinement rounds: " + std::to_string(rounds));

    auto check = verify(g, w);
    if (!check.passed)
        throw RefinementFailed("dense_core: " + check.failures.front() + " after " + std::to_string(rounds) +
                               " rounds; retry with the exact separator or a larger constant");
    return w;
}

} // namespace stringgraph

#endif // STRINGGRAPH_EXTRACT_DENSE_CORE_HPP
