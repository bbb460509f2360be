#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "inhclust/oracle.hpp"
#include "inhclust/spectral.hpp"
#include "support/test_util.hpp"

using namespace inhclust;
using namespace inhclust::testing;

namespace {

ProjectedGraph graph_of(const Hypergraph& h, bool clip = false) {
    return project_all(h, ProjectionMethod::Auto, clip).graph;
}

CutSelection cluster_of(const Partition& p, int c) {
    std::vector<VertexId> side;
    for (std::size_t v = 0; v < p.assignment.size(); ++v)
        if (p.assignment[v] == c) side.push_back(static_cast<VertexId>(v));
    return CutSelection::of(side);
}

} // namespace

TEST_CASE("laplacian construction") {
    ProjectedGraph tri = graph_of(triangle_graph());
    LaplacianSystem ls = build_laplacian(tri);
    CHECK(ls.n == 3);
    auto [l2, u] = second_eigenpair(ls);
    CHECK(near(l2, 1.5, 1e-10));
    (void)u;

    ProjectedGraph k2 = graph_of(Hypergraph(2, {pair_edge(0, 1, 1.0)}));
    auto [l2b, ub] = second_eigenpair(build_laplacian(k2));
    CHECK(near(l2b, 2.0, 1e-10));
    (void)ub;

    // Isolated vertices are excluded and reported.
    ProjectedGraph iso = graph_of(Hypergraph(4, {pair_edge(0, 1, 1.0),
                                                 pair_edge(1, 2, 1.0)}));
    LaplacianSystem lsi = build_laplacian(iso);
    CHECK(lsi.n == 3);
    REQUIRE(lsi.excluded.size() == 1);
    CHECK(lsi.excluded[0] == 3);

    ProjectedGraph empty = graph_from_edges(3, {});
    CHECK_THROWS(build_laplacian(empty));

    CHECK_THROWS(build_laplacian(graph_from_edges(2, {{0, 1, -1.0}})));
}

TEST_CASE("second eigenpair of a disconnected graph") {
    ProjectedGraph g = graph_of(two_triangles());
    LaplacianSystem ls = build_laplacian(g);
    auto [l2, u] = second_eigenpair(ls);
    CHECK(near(l2, 0.0, 1e-10));
    // Orthogonal to the trivial direction even inside the null space.
    double dot = 0.0, norm = 0.0, trivial_norm = 0.0;
    for (int i = 0; i < ls.n; ++i) {
        dot += u[i] * std::sqrt(ls.degree[i]);
        norm += u[i] * u[i];
        trivial_norm += ls.degree[i];
    }
    CHECK(std::fabs(dot) / std::sqrt(trivial_norm) <= 1e-8);
    CHECK(near(norm, 1.0, 1e-10));
}

TEST_CASE("eigenvector contract") {
    Rng rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 3 + static_cast<int>(rng.uniform_index(10));
        std::vector<GraphEdge> edges;
        for (VertexId a = 0; a < static_cast<VertexId>(n); ++a)
            for (VertexId b = a + 1; b < static_cast<VertexId>(n); ++b)
                if (rng.uniform() < 0.5) edges.push_back({a, b, rng.uniform(0.1, 2.0)});
        if (edges.empty()) continue;
        ProjectedGraph g = graph_from_edges(n, edges);
        LaplacianSystem ls = build_laplacian(g);
        if (ls.n < 2) continue;
        auto [l2, u] = second_eigenpair(ls);
        // Residual within tolerance.
        for (int i = 0; i < ls.n; ++i) {
            double row = 0.0;
            for (int j = 0; j < ls.n; ++j)
                row += ls.lap[static_cast<std::size_t>(i) * ls.n + j] * u[j];
            CHECK(std::fabs(row - l2 * u[i]) <= 1e-8);
        }
        // Deterministic sign.
        for (double x : u) {
            if (std::fabs(x) > 1e-12) {
                CHECK(x > 0.0);
                break;
            }
        }
    }
}

TEST_CASE("sweep cut on the path") {
    Hypergraph path = path_graph();
    ProjectedGraph g = graph_of(path);
    LaplacianSystem ls = build_laplacian(g);
    auto [l2, u] = second_eigenpair(ls);
    (void)l2;
    Partition p = sweep_cut(g, ls, u);
    CHECK(near(p.ncut, 4.0 / 3.0, 1e-9));
    CutSelection c0 = cluster_of(p, 0);
    REQUIRE(c0.size() == 1);
    CHECK((c0.vertices[0] == 0 || c0.vertices[0] == 2));
}

TEST_CASE("sweep cut separates weakly joined triangles") {
    Hypergraph h = two_triangles(0.01);
    ProjectedGraph g = graph_of(h);
    LaplacianSystem ls = build_laplacian(g);
    auto [l2, u] = second_eigenpair(ls);
    (void)l2;
    Partition p = sweep_cut(g, ls, u);
    CutSelection c0 = cluster_of(p, 0);
    bool left = c0.vertices == std::vector<VertexId>{0, 1, 2};
    bool right = c0.vertices == std::vector<VertexId>{3, 4, 5};
    CHECK((left || right));
    // The sweep value matches the brute-force graph optimum here.
    CHECK(near(p.ncut, graph_ncut(g, c0), 1e-12));
    CHECK(near(p.ncut, brute_force_ncut(h).value, 1e-9));
}

TEST_CASE("sweep cut finds zero cuts in disconnected graphs") {
    ProjectedGraph g = graph_of(two_triangles());
    LaplacianSystem ls = build_laplacian(g);
    auto [l2, u] = second_eigenpair(ls);
    (void)l2;
    Partition p = sweep_cut(g, ls, u);
    CHECK(near(p.ncut, 0.0, 1e-12));
}

TEST_CASE("sweep output is invariant under uniform scaling") {
    Hypergraph h = two_triangles(0.37);
    ProjectedGraph g = graph_of(h);
    std::vector<GraphEdge> scaled = g.edges;
    for (GraphEdge& e : scaled) e.weight *= 13.7;
    ProjectedGraph gs = graph_from_edges(g.n, scaled);

    LaplacianSystem ls = build_laplacian(g), lss = build_laplacian(gs);
    auto [l2a, ua] = second_eigenpair(ls);
    auto [l2b, ub] = second_eigenpair(lss);
    (void)l2a;
    (void)l2b;
    Partition pa = sweep_cut(g, ls, ua), pb = sweep_cut(gs, lss, ub);
    CHECK(pa.assignment == pb.assignment);
}

TEST_CASE("partition2 equals the graph pipeline on 2-uniform input") {
    Hypergraph h = two_triangles(0.01);
    Partition p = partition2(h);
    CutSelection c0 = cluster_of(p, 0);
    bool left = c0.vertices == std::vector<VertexId>{0, 1, 2};
    bool right = c0.vertices == std::vector<VertexId>{3, 4, 5};
    CHECK((left || right));
    REQUIRE(p.beta_star.has_value());
    CHECK(near(*p.beta_star, 1.0));
    CHECK(near(p.ncut, h.ncut(c0), 1e-12));
}

TEST_CASE("partition2 splits two hyperedges joined by a weak pair") {
    Hypergraph h(6, {Hyperedge{{0, 1, 2}, CutCost::singleton_only({1, 1, 1})},
                     Hyperedge{{3, 4, 5}, CutCost::singleton_only({1, 1, 1})},
                     pair_edge(2, 3, 0.05)});
    Partition p = partition2(h);
    CutSelection c0 = cluster_of(p, 0);
    bool left = c0.vertices == std::vector<VertexId>{0, 1, 2};
    bool right = c0.vertices == std::vector<VertexId>{3, 4, 5};
    CHECK((left || right));
    CHECK(near(p.ncut, brute_force_ncut(h).value, 1e-9));
}

TEST_CASE("partition2 on a clipped unbalanced hyperedge") {
    Hypergraph h(3, {example1_edge()});
    PartitionOptions opt;
    opt.clip = true;
    Partition p = partition2(h, opt);
    CutSelection c0 = cluster_of(p, 0);
    // Both zero-cost groupings are acceptable: {0},{1,2} or {1},{0,2}.
    bool a = c0.vertices == std::vector<VertexId>{0};
    bool b = c0.vertices == std::vector<VertexId>{1};
    CHECK((a || b));
    CHECK(near(h.boundary_volume(c0), 0.0, 1e-12));
    CHECK_FALSE(p.beta_star.has_value()); // clipping voids the certificate

    // Without clipping the negative weight is an error.
    CHECK_THROWS(partition2(h));
}

TEST_CASE("kway partition basics") {
    Hypergraph h = two_triangles();
    Partition p = kway_partition(h, 2, 7);
    CutSelection c0 = cluster_of(p, 0), c1 = cluster_of(p, 1);
    bool split = (c0.vertices == std::vector<VertexId>{0, 1, 2} &&
                  c1.vertices == std::vector<VertexId>{3, 4, 5}) ||
                 (c1.vertices == std::vector<VertexId>{0, 1, 2} &&
                  c0.vertices == std::vector<VertexId>{3, 4, 5});
    CHECK(split);
    CHECK(near(p.ncut, 0.0, 1e-12));
}

TEST_CASE("kway recovers three weakly linked cliques") {
    std::vector<Hyperedge> edges;
    for (int block = 0; block < 3; ++block) {
        VertexId base = static_cast<VertexId>(3 * block);
        edges.push_back(pair_edge(base, base + 1, 1.0));
        edges.push_back(pair_edge(base, base + 2, 1.0));
        edges.push_back(pair_edge(base + 1, base + 2, 1.0));
    }
    edges.push_back(pair_edge(2, 3, 0.01));
    edges.push_back(pair_edge(5, 6, 0.01));
    Hypergraph h(9, edges);
    Partition p = kway_partition(h, 3, 11);

    std::vector<int> want(9);
    for (int v = 0; v < 9; ++v) want[v] = v / 3;
    std::vector<int> relabel(3, -1);
    bool match = true;
    for (int v = 0; v < 9; ++v) {
        int c = p.assignment[v];
        if (relabel[want[v]] == -1) relabel[want[v]] = c;
        if (relabel[want[v]] != c) match = false;
    }
    CHECK(match);
}

TEST_CASE("kway edge cases") {
    Hypergraph h = triangle_graph();
    CHECK_THROWS(kway_partition(h, 4, 1)); // k exceeds vertex count

    Partition p = kway_partition(h, 3, 1);
    CHECK(p.k == 3);
    // Singleton parts: every part contributes boundary/degree = 1.
    double expected = 0.0;
    for (VertexId v = 0; v < 3; ++v)
        expected += h.boundary_volume(CutSelection::of({v})) / h.degree(v);
    CHECK(near(p.ncut, expected, 1e-12));
}

TEST_CASE("quadratic chain on random graphs") {
    Rng rng(2718);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(rng.uniform_index(9)); // up to 12
        std::vector<Hyperedge> edges;
        for (int v = 1; v < n; ++v) {
            int u = static_cast<int>(rng.uniform_index(v));
            edges.push_back(pair_edge(static_cast<VertexId>(u),
                                      static_cast<VertexId>(v),
                                      rng.uniform(0.2, 1.5)));
        }
        for (int extra = 0; extra < n; ++extra) {
            VertexId a = static_cast<VertexId>(rng.uniform_index(n));
            VertexId b = static_cast<VertexId>(rng.uniform_index(n));
            if (a == b) continue;
            edges.push_back(pair_edge(std::min(a, b), std::max(a, b),
                                      rng.uniform(0.1, 1.0)));
        }
        Hypergraph h(n, edges);
        ProjectedGraph g = graph_of(h);
        LaplacianSystem ls = build_laplacian(g);
        auto [l2, u] = second_eigenpair(ls);
        Partition p = sweep_cut(g, ls, u);
        double alpha = p.ncut;
        CHECK(l2 <= alpha + 1e-9);
        CHECK(l2 >= alpha * alpha / 8.0 - 1e-9);
        // The sweep value never beats the brute-force graph optimum.
        CHECK(alpha >= brute_force_ncut(h).value - 1e-9);
        ++checked;
    }
    CHECK(checked == 40);
}
