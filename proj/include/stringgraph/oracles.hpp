#ifndef STRINGGRAPH_ORACLES_HPP
#define STRINGGRAPH_ORACLES_HPP

// Exact exponential-time references for small inputs. Everything here works
// on 64-bit adjacency masks and shares no search code with the library, so
// the two can be checked against each other. Size caps are hard: beyond them
// TooLarge is thrown instead of running for hours.

#include "error.hpp"
#include "extract/biclique.hpp"
#include "graph.hpp"
#include "quasiplanar.hpp"
#include "separator.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace stringgraph {

inline constexpr std::size_t oracle_mis_limit = 40;
inline constexpr std::size_t oracle_clique_limit = 60;
inline constexpr std::size_t oracle_kp_free_limit = 18;
inline constexpr std::size_t oracle_separator_limit = 14;
inline constexpr std::size_t oracle_biclique_limit = 16;
inline constexpr std::uint64_t oracle_crossing_subsets = 1'000'000;

namespace oracle_detail {

using Mask = std::uint64_t;

inline void cap(const Graph& g, std::size_t limit, const char* what) {
    if (g.n() > limit)
        throw TooLarge(std::string(what) + ": n = " + std::to_string(g.n()) + " exceeds the cap of " +
                       std::to_string(limit));
}

inline std::vector<Mask> adjacency(const Graph& g, bool complement = false) {
    std::vector<Mask> adj(g.n(), 0);
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = 0; v < g.n(); ++v)
            if (u != v && g.adjacent(u, v) != complement) adj[u] |= Mask{1} << v;
    return adj;
}

inline VertexSet to_set(Mask m) {
    VertexSet out;
    while (m) {
        out.push_back(static_cast<Vertex>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

inline Mask low_bits(Mask m, std::size_t k) {
    Mask out = 0;
    for (std::size_t i = 0; i < k && m; ++i) {
        out |= m & (~m + 1);
        m &= m - 1;
    }
    return out;
}

// Maximum independent set by include-first branching in index order. Sets
// are visited in lexicographic order and only strict improvements are kept,
// so the result is the lexicographically smallest maximum set. The bound is
// a greedy clique cover of the candidates.
class IndependentSetSearch {
public:
    explicit IndependentSetSearch(std::vector<Mask> adj) : adj_(std::move(adj)) {}

    Mask run() {
        const std::size_t n = adj_.size();
        Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
        best_ = 0;
        best_size_ = 0;
        branch(0, 0, all);
        return best_;
    }

private:
    std::size_t cover_bound(Mask cand) const {
        std::size_t cliques = 0;
        while (cand) {
            Mask clique_cand = cand;
            while (clique_cand) {
                const Mask bit = clique_cand & (~clique_cand + 1);
                const auto v = std::countr_zero(bit);
                cand &= ~bit;
                clique_cand &= adj_[v] & ~bit;
            }
            ++cliques;
        }
        return cliques;
    }

    void branch(Mask current, std::size_t size, Mask cand) {
        if (!cand) {
            if (size > best_size_) {
                best_size_ = size;
                best_ = current;
            }
            return;
        }
        if (size + cover_bound(cand) <= best_size_) return;
        const Mask bit = cand & (~cand + 1);
        const auto v = std::countr_zero(bit);
        branch(current | bit, size + 1, cand & ~bit & ~adj_[v]);
        branch(current, size, cand & ~bit);
    }

    std::vector<Mask> adj_;
    Mask best_ = 0;
    std::size_t best_size_ = 0;
};

inline bool has_clique(const std::vector<Mask>& adj, Mask cand, std::size_t need) {
    if (need == 0) return true;
    if (static_cast<std::size_t>(std::popcount(cand)) < need) return false;
    while (cand) {
        if (static_cast<std::size_t>(std::popcount(cand)) < need) return false;
        const Mask bit = cand & (~cand + 1);
        const auto v = std::countr_zero(bit);
        cand &= ~bit;
        if (has_clique(adj, cand & adj[v], need - 1)) return true;
    }
    return false;
}

} // namespace oracle_detail

/// Lexicographically smallest maximum independent set (n <= 40).
inline VertexSet max_independent_set_exact(const Graph& g) {
    oracle_detail::cap(g, oracle_mis_limit, "max_independent_set_exact");
    oracle_detail::IndependentSetSearch search(oracle_detail::adjacency(g));
    return oracle_detail::to_set(search.run());
}

/// Lexicographically smallest maximum clique (n <= 60), as a maximum
/// independent set of the complement.
inline VertexSet max_clique_exact(const Graph& g) {
    oracle_detail::cap(g, oracle_clique_limit, "max_clique_exact");
    oracle_detail::IndependentSetSearch search(oracle_detail::adjacency(g, true));
    return oracle_detail::to_set(search.run());
}

/// Maximum S with G[S] free of K_p (n <= 18). Sizes are tried in descending
/// order and, within a size, subsets in lexicographic order.
inline VertexSet max_kp_free_subset_exact(const Graph& g, std::size_t p) {
    oracle_detail::cap(g, oracle_kp_free_limit, "max_kp_free_subset_exact");
    if (p == 0) throw DomainError("max_kp_free_subset_exact needs p >= 1");
    const std::size_t n = g.n();
    const auto adj = oracle_detail::adjacency(g);
    for (std::size_t k = n; k > 0; --k) {
        if (k < p) {
            VertexSet out(k);
            std::iota(out.begin(), out.end(), Vertex{0});
            return out;
        }
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
        do {
            oracle_detail::Mask m = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (pick[i]) m |= oracle_detail::Mask{1} << i;
            if (!oracle_detail::has_clique(adj, m, p)) return oracle_detail::to_set(m);
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return {};
}

/// Minimum separator over all 3-labelings (S, V1, V2) with |V1|, |V2| <=
/// ceil(2n/3) and no V1-V2 edge (n <= 14). Labelings are visited by V1 mask
/// then V2 submask in increasing order; the first minimum is returned.
inline SeparatorPartition min_balanced_separator_exact(const Graph& g) {
    using oracle_detail::Mask;
    oracle_detail::cap(g, oracle_separator_limit, "min_balanced_separator_exact");
    const std::size_t n = g.n();
    const auto adj = oracle_detail::adjacency(g);
    const std::size_t limit = (2 * n + 2) / 3;
    const Mask all = (Mask{1} << n) - 1;
    std::size_t best = n + 1;
    Mask best1 = 0, best2 = 0;
    for (Mask v1 = 0; v1 <= all; ++v1) {
        if (static_cast<std::size_t>(std::popcount(v1)) > limit) continue;
        Mask reach = v1;
        for (std::size_t v = 0; v < n; ++v)
            if (v1 >> v & 1) reach |= adj[v];
        const Mask allowed = all & ~reach;
        // Enumerate every V2 inside `allowed`, the empty set included.
        Mask v2 = 0;
        for (;;) {
            const std::size_t c2 = static_cast<std::size_t>(std::popcount(v2));
            if (c2 <= limit) {
                const std::size_t s = n - static_cast<std::size_t>(std::popcount(v1)) - c2;
                if (s < best) {
                    best = s;
                    best1 = v1;
                    best2 = v2;
                }
            }
            if (v2 == allowed) break;
            v2 = (v2 - allowed) & allowed;
        }
    }
    SeparatorPartition out;
    out.first = oracle_detail::to_set(best1);
    out.second = oracle_detail::to_set(best2);
    out.separator = oracle_detail::to_set(all & ~best1 & ~best2);
    return out;
}

/// Maximum balanced biclique (n <= 16): every left set A is paired with its
/// common neighbourhood, t = min(|A|, |N(A)|). The first A in mask order
/// reaching the maximum is used; both sides are cut to their t lowest vertices.
inline Biclique max_balanced_biclique_exact(const Graph& g) {
    using oracle_detail::Mask;
    oracle_detail::cap(g, oracle_biclique_limit, "max_balanced_biclique_exact");
    const std::size_t n = g.n();
    const auto adj = oracle_detail::adjacency(g);
    const Mask all = (Mask{1} << n) - 1;
    std::size_t best = 0;
    Mask best_a = 0, best_b = 0;
    for (Mask a = 1; a <= all; ++a) {
        Mask common = all;
        for (std::size_t v = 0; v < n; ++v)
            if (a >> v & 1) common &= adj[v];
        const std::size_t t = std::min<std::size_t>(std::popcount(a), std::popcount(common));
        if (t > best) {
            best = t;
            best_a = oracle_detail::low_bits(a, t);
            best_b = oracle_detail::low_bits(common, t);
        }
    }
    return {oracle_detail::to_set(best_a), oracle_detail::to_set(best_b)};
}

/// First r-set of edges (lexicographic order of edge indices) whose truncated
/// curves pairwise intersect, tested curve by curve.
inline std::optional<VertexSet> pairwise_crossing_exact(const Drawing& d, std::size_t r) {
    if (r < 2) throw DomainError("pairwise_crossing_exact needs r >= 2");
    const std::size_t m = d.edges.size();
    if (r > m) return std::nullopt;
    // C(m, r) with early exit once past the cap.
    long double subsets = 1;
    for (std::size_t i = 0; i < r; ++i) subsets = subsets * static_cast<long double>(m - i) / (i + 1);
    if (subsets > static_cast<long double>(oracle_crossing_subsets))
        throw TooLarge("pairwise_crossing_exact: C(" + std::to_string(m) + ", " + std::to_string(r) +
                       ") subsets exceed the cap");

    const StringFamily fam = truncate_edges(d);
    std::vector<std::vector<bool>> cross(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            cross[i][j] = cross[j][i] = polylines_intersect(fam.strings[i], fam.strings[j]);

    std::vector<std::size_t> idx(r);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (;;) {
        bool ok = true;
        for (std::size_t a = 0; a < r && ok; ++a)
            for (std::size_t b = a + 1; b < r && ok; ++b) ok = cross[idx[a]][idx[b]];
        if (ok) return VertexSet(idx.begin(), idx.end());
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == m - r + (i - 1)) --i;
        if (i == 0) return std::nullopt;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace stringgraph

#endif // STRINGGRAPH_ORACLES_HPP
