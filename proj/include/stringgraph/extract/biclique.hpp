#ifndef STRINGGRAPH_EXTRACT_BICLIQUE_HPP
#define STRINGGRAPH_EXTRACT_BICLIQUE_HPP

// Balanced bicliques and K_{ceil(r/2)}-free subgraphs of K_r-free graphs.

#include "../separator.hpp"
#include "../witness.hpp"
#include "common.hpp"

#include <cmath>
#include <optional>

namespace stringgraph {

struct Biclique {
    VertexSet left;
    VertexSet right;

    std::size_t t() const noexcept { return std::min(left.size(), right.size()); }
};

inline bool is_biclique(const Graph& g, const Biclique& b) {
    for (Vertex a : b.left) {
        if (std::binary_search(b.right.begin(), b.right.end(), a)) return false;
        for (Vertex v : b.right)
            if (!g.adjacent(a, v)) return false;
    }
    return true;
}

inline constexpr std::size_t exact_biclique_limit = 20;

namespace detail {

// Depth-first over left sets in index order, carrying the common
// neighbourhood. Returns the first maximum balanced biclique found.
class BicliqueSearch {
public:
    explicit BicliqueSearch(const Graph& g) : g_(g) {}

    Biclique run() {
        Bitset common = g_.all_vertices();
        VertexSet left;
        dfs(0, left, common);
        return best_;
    }

private:
    void dfs(Vertex from, VertexSet& left, const Bitset& common) {
        for (Vertex v = from; v < g_.n(); ++v) {
            if (left.size() + (g_.n() - v) <= best_t_) return;
            Bitset next = common & g_.neighbors(v);
            const std::size_t c = next.count();
            if (c <= best_t_) continue;
            left.push_back(v);
            const std::size_t t = std::min(left.size(), c);
            if (t > best_t_) {
                best_t_ = t;
                best_.left = left;
                best_.right = to_vertex_set(next);
                best_.right.resize(t);
            }
            dfs(v + 1, left, next);
            left.pop_back();
        }
    }

    const Graph& g_;
    Biclique best_;
    std::size_t best_t_ = 0;
};

// Grows a biclique from a seed edge, always extending the smaller side by
// the candidate that keeps the most options open on the other side.
inline Biclique grow_biclique(const Graph& g, Vertex u, Vertex v) {
    Bitset left(g.n()), right(g.n());
    left.set(u);
    right.set(v);
    Bitset cand_left = g.neighbors(v);  // adjacent to all of right
    Bitset cand_right = g.neighbors(u); // adjacent to all of left
    cand_left -= left | right;
    cand_right -= left | right;
    for (;;) {
        const bool grow_left = left.count() <= right.count();
        Bitset& cands = grow_left ? cand_left : cand_right;
        Bitset& other = grow_left ? cand_right : cand_left;
        if (cands.none()) break;
        Vertex pick = cands.find_first();
        std::size_t keep = 0;
        for (auto x = cands.find_first(); x != Bitset::npos; x = cands.find_next(x)) {
            std::size_t k = (other & g.neighbors(x)).count();
            if (k > keep) {
                keep = k;
                pick = x;
            }
        }
        (grow_left ? left : right).set(pick);
        cands.reset(pick);
        other &= g.neighbors(pick);
    }
    Biclique b{to_vertex_set(left), to_vertex_set(right)};
    const std::size_t t = b.t();
    b.left.resize(t);
    b.right.resize(t);
    return b;
}

} // namespace detail

/// Disjoint A, B with |A| = |B| >= t_min and A complete to B. For n <= 20
/// the search is exact and returns a maximum balanced biclique; above that a
/// greedy growth from high-degree seed edges is used, and nullopt is not a
/// proof that none exists.
inline std::optional<Biclique> find_balanced_biclique(const Graph& g, std::size_t t_min) {
    if (t_min == 0) throw DomainError("t_min must be at least 1");
    Biclique best;
    if (g.n() <= exact_biclique_limit) {
        best = detail::BicliqueSearch(g).run();
    } else {
        auto edges = g.edges();
        std::stable_sort(edges.begin(), edges.end(), [&](const auto& a, const auto& b) {
            return g.degree(a.first) + g.degree(a.second) > g.degree(b.first) + g.degree(b.second);
        });
        if (edges.size() > 64) edges.resize(64);
        for (auto [u, v] : edges) {
            Biclique b = detail::grow_biclique(g, u, v);
            if (b.t() > best.t()) best = std::move(b);
        }
    }
    if (best.t() < t_min) return std::nullopt;
    return best;
}

namespace detail {

class HalfCliqueRecursion {
public:
    HalfCliqueRecursion(std::size_t h, const AlgorithmParams& params) : h_(h), params_(params) {}

    VertexSet run(const Graph& g, const VertexSet& origin) {
        const std::size_t n = g.n();
        if (n == 0) return {};
        if (!find_clique(g, h_)) return origin;
        if (n < 3) return lift(greedy_clique_free(g, all(g), h_), origin);

        const double lg = log2n(n);
        const double nn = static_cast<double>(n);
        if (static_cast<double>(g.m()) >= params_.c * params_.c2 * nn * nn / (lg * lg)) {
            auto t_min = static_cast<std::size_t>(std::max(1.0, std::ceil(params_.c * nn / (lg * lg * lg))));
            if (auto b = find_balanced_biclique(g, t_min)) {
                // A complete to B: if both held K_h, G would hold K_{2h} >= K_r.
                auto in_left = find_clique(g, h_, b->left);
                if (!in_left) return lift(b->left, origin);
                auto in_right = find_clique(g, h_, b->right);
                if (!in_right) return lift(b->right, origin);
                throw PreconditionViolated("half_clique_free_subgraph: biclique sides both contain K_" +
                                               std::to_string(h_),
                                           lift(set_union(*in_left, *in_right), origin));
            }
            events.push_back("no balanced biclique with t >= " + std::to_string(t_min) + " at n=" +
                             std::to_string(n) + "; separator branch used");
        }

        auto sep = find_balanced_separator(g, params_.strategy);
        VertexSet out;
        for (const VertexSet* side : {&sep.first, &sep.second}) {
            if (side->empty()) continue;
            out = set_union(out, run(induced_subgraph(g, *side), lift(*side, origin)));
        }
        if (out.empty()) out = lift(greedy_clique_free(g, all(g), h_), origin);
        return out;
    }

    std::vector<std::string> events;

private:
    static VertexSet all(const Graph& g) { return to_vertex_set(g.all_vertices()); }

    std::size_t h_;
    const AlgorithmParams& params_;
};

} // namespace detail

/// K_{ceil(r/2)}-free induced subgraph of a K_r-free graph. Dense inputs
/// (m >= c c2 n^2 / log^2 n) look for a balanced biclique with
/// t >= c n / log^3 n and keep a side free of K_{ceil(r/2)}; sparse inputs
/// and biclique misses split on a separator and recurse on both sides.
inline ExtractionWitness half_clique_free_subgraph(const Graph& g, std::size_t r,
                                                   const AlgorithmParams& params = {}) {
    params.validate();
    if (r < 3) throw DomainError("half_clique_free_subgraph needs r >= 3");
    if (g.n() == 0) throw DomainError("half_clique_free_subgraph of an empty graph");
    detail::require_clique_free(g, r, params, "half_clique_free_subgraph");

    const std::size_t h = (r + 1) / 2;
    detail::HalfCliqueRecursion rec(h, params);
    VertexSet origin(g.n());
    std::iota(origin.begin(), origin.end(), Vertex{0});

    ExtractionWitness w;
    w.kind = WitnessKind::kp_free;
    w.forbidden_clique = h;
    w.vertices = rec.run(g, origin);
    w.events = std::move(rec.events);
    if (auto c = find_clique(g, h, w.vertices))
        throw InternalBoundViolation("half_clique_free_subgraph produced a set containing K_" + std::to_string(h));
    return w;
}

} // namespace stringgraph

#endif // STRINGGRAPH_EXTRACT_BICLIQUE_HPP
