#include "support.hpp"

#include <gtest/gtest.h>

using namespace stringgraph;

namespace {

Graph segment_graph(std::size_t n, std::uint64_t seed, std::int64_t max_length = 40) {
    GeneratorSpec spec{GeneratorKind::random_segments, n, seed, {0, 0, 100, 100}, 2, max_length};
    return intersection_graph(generate_family(spec));
}

// Largest W whose induced components are singletons or lie inside some N(v).
std::size_t best_cover(const Graph& g) {
    std::size_t best = 0;
    for (std::uint32_t s = 0; s < (1u << g.n()); ++s) {
        VertexSet w;
        for (Vertex v = 0; v < g.n(); ++v)
            if (s >> v & 1) w.push_back(v);
        if (w.size() <= best) continue;
        bool ok = true;
        for (const auto& comp : components(g, g.mask(w))) {
            if (comp.size() == 1) continue;
            bool covered = false;
            for (Vertex a = 0; a < g.n() && !covered; ++a) covered = g.mask(comp).is_subset_of(g.neighbors(a));
            ok = ok && covered;
        }
        if (ok) best = w.size();
    }
    return best;
}

} // namespace

TEST(NeighborhoodCover, Star) {
    const Graph star = ref::complete_bipartite(1, 5);
    auto w = neighborhood_cover_subgraph(star);
    EXPECT_EQ(w.vertices, (VertexSet{1, 2, 3, 4, 5}));
    ASSERT_EQ(w.apexes.size(), w.parts.size());
    EXPECT_EQ(w.apexes.front(), std::optional<Vertex>(0));
    EXPECT_TRUE(verify(star, w).passed);
}

TEST(NeighborhoodCover, EdgelessAndPath) {
    auto w = neighborhood_cover_subgraph(Graph(7, {}));
    EXPECT_EQ(w.vertices.size(), 7u);
    const Graph p8 = ref::path(8);
    auto wp = neighborhood_cover_subgraph(p8);
    EXPECT_TRUE(verify(p8, wp).passed);
    EXPECT_LE(wp.vertices.size(), best_cover(p8));
    EXPECT_GE(static_cast<double>(wp.vertices.size()), std::max(1.0, 0.01 * 8 / 9.0));
}

TEST(NeighborhoodCover, RandomGraphsVerify) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = ref::random_graph(12, 0.2, seed);
        auto w = neighborhood_cover_subgraph(g);
        EXPECT_TRUE(verify(g, w).passed) << seed;
        EXPECT_LE(w.vertices.size(), best_cover(g));
    }
}

TEST(Kr1Free, TriangleFreeGivesIndependent) {
    const Graph c7 = ref::cycle(7);
    auto w = kr1_free_subgraph(c7, 3);
    EXPECT_EQ(w.forbidden_clique, 2u);
    EXPECT_TRUE(c7.is_independent(w.vertices));
    EXPECT_LE(w.vertices.size(), ref::independence_number(c7));
}

TEST(Kr1Free, SegmentGraphAndClique) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = segment_graph(15, seed);
        if (find_clique(g, 4)) continue;
        auto w = kr1_free_subgraph(g, 4);
        EXPECT_FALSE(ref::has_clique_in(g, 3, w.vertices)) << seed;
        EXPECT_LE(w.vertices.size(), ref::max_kp_free(g, 3));
    }
    const Graph k3 = ref::complete(3);
    auto w = kr1_free_subgraph(k3, 4);
    EXPECT_TRUE(verify(k3, w).passed);
    EXPECT_FALSE(ref::has_clique_in(k3, 3, w.vertices));
}

TEST(Kr1Free, PreconditionViolation) {
    try {
        kr1_free_subgraph(ref::complete(5), 4);
        FAIL() << "expected PreconditionViolated";
    } catch (const PreconditionViolated& e) {
        EXPECT_EQ(e.witness().size(), 4u);
        EXPECT_TRUE(ref::complete(5).is_clique(e.witness()));
    }
    EXPECT_THROW(kr1_free_subgraph(ref::complete(2), 2), DomainError);
}

TEST(Biclique, Examples) {
    auto b = find_balanced_biclique(ref::complete_bipartite(3, 3), 3);
    ASSERT_TRUE(b);
    EXPECT_EQ(b->t(), 3u);
    EXPECT_TRUE(is_biclique(ref::complete_bipartite(3, 3), *b));
    EXPECT_FALSE(find_balanced_biclique(Graph(6, {}), 1));
}

TEST(Biclique, ExactModeMatchesLabelingReference) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Graph g = ref::random_graph(12, 0.6, seed);
        const std::size_t t = ref::max_biclique(g);
        auto b = find_balanced_biclique(g, 2);
        EXPECT_EQ(b.has_value(), t >= 2);
        if (b) {
            EXPECT_EQ(b->t(), t);
            EXPECT_TRUE(is_biclique(g, *b));
        }
    }
}

TEST(HalfClique, Examples) {
    const Graph k33 = ref::complete_bipartite(3, 3);
    auto w = half_clique_free_subgraph(k33, 4);
    EXPECT_EQ(w.forbidden_clique, 2u);
    EXPECT_EQ(w.vertices.size(), 3u);
    EXPECT_TRUE(k33.is_independent(w.vertices));
    EXPECT_EQ(half_clique_free_subgraph(Graph(6, {}), 5).vertices.size(), 6u);
}

TEST(HalfClique, SegmentGraphsAgainstOracle) {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 60 && checked < 15; ++seed) {
        const Graph g = segment_graph(14, seed);
        if (find_clique(g, 4)) continue;
        ++checked;
        auto w = half_clique_free_subgraph(g, 4);
        EXPECT_TRUE(g.is_independent(w.vertices));
        EXPECT_LE(w.vertices.size(), ref::independence_number(g));
        EXPECT_GE(w.vertices.size(), 1u);
    }
    EXPECT_GT(checked, 0);
}

TEST(DenseCore, CompleteAndEdgeless) {
    auto w = dense_core(ref::complete(9), 0.5);
    EXPECT_EQ(w.vertices.size(), 9u);
    auto e = dense_core(Graph(5, {}), 0.5);
    EXPECT_EQ(e.vertices.size(), 1u);
    EXPECT_TRUE(verify(Graph(5, {}), e).passed);
}

TEST(DenseCore, TwoCliquesAndAPath) {
    // Two K10 on 0..9 and 10..19, a path on 20..49 joined to vertex 9 and 10.
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex base : {0u, 10u})
        for (Vertex u = 0; u < 10; ++u)
            for (Vertex v = u + 1; v < 10; ++v) e.emplace_back(base + u, base + v);
    for (Vertex u = 20; u < 49; ++u) e.emplace_back(u, u + 1);
    e.emplace_back(9, 20);
    e.emplace_back(49, 10);
    const Graph g(50, e);
    const double d = 2.0 * 121 / 50;
    ASSERT_EQ(g.m(), 121u);

    // Default constants: d >= n / C already, so V' = V.
    auto w = dense_core(g, 0.5);
    EXPECT_EQ(w.vertices.size(), 50u);

    // A small c1 forces refinement; the core must keep (1 - eps) d.
    AlgorithmParams p;
    p.c1 = 0.1;
    auto core = dense_core(g, 0.5, p);
    const double dc = 2.0 * g.edges_within(g.mask(core.vertices)) / core.vertices.size();
    EXPECT_GE(dc, 0.5 * d);
    EXPECT_LE(core.vertices.size(), std::max(1.0, p.refine_constant(0.5) * dc) + 1e-9);
    EXPECT_TRUE(verify(g, core).passed);
}

TEST(DenseCore, RefineConstant) {
    AlgorithmParams p;
    EXPECT_DOUBLE_EQ(p.refine_constant(0.5), 576.0);
    EXPECT_DOUBLE_EQ(p.refine_constant(0.01), 4.0 * 4.0 / 1e-4);
}

TEST(Multipartite, Examples) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < 6; ++u)
        for (Vertex v = u + 1; v < 6; ++v)
            if (u / 2 != v / 2) e.emplace_back(u, v);
    const Graph k222(6, e);
    auto c = multipartite_cover(k222, 0.2);
    EXPECT_GE(c.t(), 2u);
    EXPECT_TRUE(verify(k222, c.witness()).passed);

    EXPECT_THROW(multipartite_cover(Graph(6, {}), 0.1), NoCoverFound);

    auto k6 = multipartite_cover(ref::complete(6), 0.4);
    EXPECT_EQ(k6.t(), 2u);
    EXPECT_EQ(k6.parts[0].size(), 3u);
    EXPECT_EQ(k6.parts[1].size(), 3u);
    EXPECT_TRUE(verify(ref::complete(6), k6.witness()).passed);
}

TEST(Independent, Examples) {
    EXPECT_EQ(independent_set(Graph(8, {}), 1).vertices.size(), 8u);
    EXPECT_EQ(independent_set(ref::complete(3), 2).vertices.size(), 1u);

    const std::vector<Point> v{ref::P(0, 100), ref::P(95, 31), ref::P(59, -81), ref::P(-59, -81), ref::P(-95, 31)};
    StringFamily sides;
    for (int i = 0; i < 5; ++i) sides.strings.emplace_back("e" + std::to_string(i), std::vector<Point>{v[i], v[(i + 1) % 5]});
    const Graph c5 = intersection_graph(sides);
    ASSERT_EQ(c5.edges(), ref::cycle(5).edges());
    auto w = independent_set(c5, 2);
    EXPECT_GE(w.vertices.size(), 1u);
    EXPECT_LE(w.vertices.size(), 2u);
    EXPECT_TRUE(c5.is_independent(w.vertices));
}

TEST(Independent, PreconditionAndFloor) {
    try {
        independent_set(ref::complete(4), 2);
        FAIL();
    } catch (const PreconditionViolated& e) {
        EXPECT_EQ(e.witness(), (VertexSet{0, 1, 2, 3}));
    }
    EXPECT_EQ(independent_set_floor(100, 1, 0.01), 100u);
    EXPECT_EQ(independent_set_floor(100, 2, 0.01), 1u);
    EXPECT_EQ(independent_set_floor(1, 3, 0.01), 1u);
}

TEST(Independent, RandomSegmentGraphs) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = segment_graph(16, seed, 60);
        const std::size_t omega = ref::clique_number(g);
        std::size_t s = 1;
        while ((std::size_t{1} << s) <= omega) ++s;
        auto w = independent_set(g, s);
        EXPECT_TRUE(g.is_independent(w.vertices));
        EXPECT_LE(w.vertices.size(), ref::independence_number(g));
        EXPECT_GE(w.vertices.size(), independent_set_floor(g.n(), s, 0.01));
    }
}

TEST(QIndependent, Examples) {
    const Graph g = segment_graph(16, 4, 60);
    ASSERT_FALSE(find_clique(g, 8));
    EXPECT_EQ(q_independent_set(g, 3, 3).vertices.size(), 16u);
    auto w = q_independent_set(g, 3, 2);
    EXPECT_FALSE(ref::has_clique_in(g, 4, w.vertices));
    EXPECT_GE(w.vertices.size(), 1u);
    EXPECT_LE(w.vertices.size(), ref::max_kp_free(g, 4));
    auto one = q_independent_set(g, 3, 1);
    EXPECT_TRUE(g.is_independent(one.vertices));
    EXPECT_THROW(q_independent_set(g, 1, 2), DomainError);
}

TEST(ColorOrClique, Examples) {
    auto e = color_or_clique(Graph(20, {}), 0.5);
    ASSERT_TRUE(e.coloring);
    EXPECT_EQ(e.coloring->size(), 1u);

    auto k = color_or_clique(ref::complete(12), 0.5);
    ASSERT_TRUE(k.clique);
    EXPECT_EQ(k.clique->size(), 12u);
    EXPECT_GE(static_cast<double>(k.clique->size()), k.clique_threshold);
}

TEST(ColorOrClique, RandomSegmentFamily) {
    GeneratorSpec spec{GeneratorKind::random_segments, 100, 21, {0, 0, 1000, 1000}, 2, 150};
    const Graph g = intersection_graph(generate_family(spec));
    auto r = color_or_clique(g, 0.8);
    EXPECT_NE(r.coloring.has_value(), r.clique.has_value());
    if (r.coloring) {
        EXPECT_TRUE(is_proper_coloring(g, *r.coloring));
        EXPECT_LE(static_cast<double>(r.coloring->size()), r.color_budget);
    } else {
        EXPECT_TRUE(g.is_clique(*r.clique));
        EXPECT_GE(static_cast<double>(r.clique->size()), r.clique_threshold);
    }
    EXPECT_TRUE(verify(g, r.witness()).passed);
}

TEST(ColorOrClique, ExponentConstraints) {
    for (std::size_t n : {10u, 100u, 1000u, 100000u}) {
        for (double eps : {0.5, 0.8}) {
            const double delta = clique_exponent(n, eps, 0.01);
            ASSERT_GT(delta, 0.0);
            EXPECT_LT(2 * delta * std::log2(1 / (0.01 * delta)), eps / 2);
            // A slightly larger delta violates one of the two constraints.
            const double up = delta * 1.001;
            const bool first = 2 * up * std::log2(1 / (0.01 * up)) < eps / 2;
            const bool second = std::log2(static_cast<double>(n)) < std::pow(static_cast<double>(n), eps / 2) ||
                                std::pow(static_cast<double>(n), up) < 2;
            EXPECT_FALSE(first && second) << n << " " << eps;
        }
    }
}
