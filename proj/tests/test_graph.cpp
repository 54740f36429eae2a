#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "unilog/errors.hpp"
#include "unilog/graph.hpp"

using namespace unilog;

namespace {

// Exhaustive walk enumeration, the slow oracle for pattern_power.
bool walk_exists(const Graph& g, int v, int w, int len) {
    if (len == 0) return v == w;
    for (int u : g.neighbors(v)) {
        if (walk_exists(g, u, w, len - 1)) return true;
    }
    return false;
}

Graph random_graph(int n, double p, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (coin(rng) < p) edges.push_back({i, j});
        }
    }
    return Graph(n, std::move(edges));
}

// Independent validity check: partition of the edge set into matchings.
void require_proper_coloring(const Graph& g, const EdgeColoring& col) {
    std::set<std::pair<int, int>> seen;
    for (const auto& cls : col.classes) {
        std::set<int> touched;
        for (const Edge& e : cls) {
            CHECK(g.has_edge(e.tail(), e.head()));
            CHECK(seen.insert({e.tail(), e.head()}).second);
            CHECK(touched.insert(e.tail()).second);
            CHECK(touched.insert(e.head()).second);
        }
    }
    CHECK(static_cast<int>(seen.size()) == g.edge_count());
    CHECK(col.color_count() <= max_degree(g) + 1);
    CHECK(col.valid_for(g));
}

}  // namespace

TEST_CASE("ring path complete constructors") {
    const Graph r = Graph::ring(5);
    CHECK(r.vertex_count() == 5);
    CHECK(r.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(r.degree(v) == 2);
    CHECK(r.has_edge(0, 4));
    CHECK(r.has_edge(4, 0));
    CHECK_FALSE(r.has_edge(0, 2));

    const Graph p = Graph::path(4);
    CHECK(p.edge_count() == 3);
    CHECK(p.degree(0) == 1);
    CHECK(p.degree(1) == 2);

    const Graph k = Graph::complete(4);
    CHECK(k.edge_count() == 6);
    CHECK(max_degree(k) == 3);

    const Graph e = Graph::edgeless(3);
    CHECK(e.edge_count() == 0);
    CHECK(max_degree(e) == 0);

    CHECK(Graph::path(1).vertex_count() == 1);
    CHECK(Graph::complete(1).edge_count() == 0);
    CHECK_THROWS_AS(Graph::ring(2), InvalidArgumentError);
}

TEST_CASE("constructor rejects malformed edge lists") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidArgumentError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidArgumentError);
    CHECK_THROWS_AS(Graph(3, {{-1, 2}}), InvalidArgumentError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidArgumentError);
    CHECK_THROWS_AS(Graph(-1, {}), InvalidArgumentError);
}

TEST_CASE("neighbors are sorted and degree-consistent") {
    const Graph g(5, {{3, 0}, {0, 1}, {2, 0}});
    const auto nb = g.neighbors(0);
    REQUIRE(nb.size() == 3);
    CHECK(std::is_sorted(nb.begin(), nb.end()));
    CHECK(g.degree(0) == 3);
    CHECK(g.degree(4) == 0);
    CHECK_THROWS_AS(g.degree(5), InvalidArgumentError);
}

TEST_CASE("text round-trip and parse failures") {
    const Graph g = Graph::ring(6);
    std::stringstream ss;
    g.write_text(ss);
    const Graph back = Graph::read_text(ss);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edge_count() == g.edge_count());
    for (const Edge& e : g.edges()) CHECK(back.has_edge(e.tail(), e.head()));

    std::stringstream bad1("3");
    CHECK_THROWS_AS(Graph::read_text(bad1), ParseError);
    std::stringstream bad2("3 2\n0 1\n");
    CHECK_THROWS_AS(Graph::read_text(bad2), ParseError);
    std::stringstream bad3("3 1\n0 x\n");
    CHECK_THROWS_AS(Graph::read_text(bad3), ParseError);
}

TEST_CASE("distances on rings and disconnected graphs") {
    const Graph r = Graph::ring(8);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const int expect = std::min(std::abs(i - j), 8 - std::abs(i - j));
            CHECK(graph_distance(r, i, j) == expect);
        }
    }
    const Graph two(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(graph_distance(two, 0, 3).has_value());
    const auto d = distances_from(two, 0);
    CHECK(d[1] == 1);
    CHECK(d[2] == kUnreachable);
    CHECK(graph_distance(two, 2, 2) == 0);
}

TEST_CASE("sparsity pattern basics") {
    const Graph g = Graph::path(4);
    const SparsityPattern a = SparsityPattern::adjacency(g);
    CHECK(a.dim() == 4);
    CHECK(a.count() == 2 * g.edge_count());
    CHECK(a.is_symmetric());
    CHECK(a.test(0, 1));
    CHECK_FALSE(a.test(0, 0));
    CHECK_FALSE(a.test(0, 2));

    const SparsityPattern id = SparsityPattern::identity(4);
    CHECK(id.count() == 4);
    CHECK((id | a).count() == 4 + 6);
    CHECK(id.subset_of(id | a));
    CHECK_FALSE((id | a).subset_of(id));

    SparsityPattern asym(2);
    asym.set(0, 1);
    CHECK_FALSE(asym.is_symmetric());
    CHECK(asym.transpose().test(1, 0));
    CHECK(asym.transpose().transpose() == asym);
}

TEST_CASE("pattern product matches two-step reachability") {
    const Graph g = Graph::ring(5);
    const SparsityPattern a = SparsityPattern::adjacency(g);
    const SparsityPattern aa = a * a;
    for (int v = 0; v < 5; ++v) {
        for (int w = 0; w < 5; ++w) {
            CHECK(aa.test(v, w) == walk_exists(g, v, w, 2));
        }
    }
}

TEST_CASE("pattern_power against exhaustive walk enumeration") {
    const Graph cases[] = {Graph::ring(5), Graph::path(4), Graph::complete(4),
                           Graph(6, {{0, 1}, {1, 2}, {3, 4}})};
    for (const Graph& g : cases) {
        const SparsityPattern a = SparsityPattern::adjacency(g);
        for (int k = 0; k <= 3; ++k) {
            const SparsityPattern pk = pattern_power(a, k);
            for (int v = 0; v < g.vertex_count(); ++v) {
                for (int w = 0; w < g.vertex_count(); ++w) {
                    CHECK(pk.test(v, w) == walk_exists(g, v, w, k));
                }
            }
        }
    }
}

TEST_CASE("reach_pattern is the union of powers and saturates") {
    const Graph g = Graph::path(6);
    const SparsityPattern a = SparsityPattern::adjacency(g);
    for (int k = 0; k <= 6; ++k) {
        SparsityPattern expect = SparsityPattern::identity(6);
        for (int j = 1; j <= k; ++j) expect = expect | pattern_power(a, j);
        CHECK(reach_pattern(a, k) == expect);
    }
    // Path diameter 5: reach at 5 is full, and further powers add nothing.
    CHECK(reach_pattern(a, 5).count() == 36);
    CHECK(reach_pattern(a, 7) == reach_pattern(a, 5));
    // Distance-r reachability: (v,w) enters at k = d(v,w).
    for (int v = 0; v < 6; ++v) {
        for (int w = 0; w < 6; ++w) {
            const int d = *graph_distance(g, v, w);
            CHECK(reach_pattern(a, d).test(v, w));
            if (d > 0) CHECK_FALSE(reach_pattern(a, d - 1).test(v, w));
        }
    }
}

TEST_CASE("pattern_graph inverts adjacency") {
    const Graph g = Graph::ring(7);
    const Graph back = pattern_graph(SparsityPattern::adjacency(g));
    CHECK(back.vertex_count() == 7);
    CHECK(back.edge_count() == 7);
    for (const Edge& e : g.edges()) CHECK(back.has_edge(e.tail(), e.head()));

    // Diagonal entries are ignored, asymmetry is rejected.
    SparsityPattern p = SparsityPattern::identity(3);
    CHECK(pattern_graph(p).edge_count() == 0);
    p.set(0, 1);
    CHECK_THROWS_AS(pattern_graph(p), InvalidArgumentError);
}

TEST_CASE("edge coloring on fixed graphs") {
    for (const Graph& g : {Graph::ring(6), Graph::ring(7), Graph::path(5),
                           Graph::complete(4), Graph::complete(5), Graph::edgeless(3)}) {
        require_proper_coloring(g, edge_color(g));
    }
    // Petersen graph, 3-regular: at most 4 classes.
    const Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                              {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                              {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
    const EdgeColoring col = edge_color(petersen);
    require_proper_coloring(petersen, col);
    CHECK(col.color_count() <= 4);
}

TEST_CASE("edge coloring property test on random graphs") {
    for (unsigned seed = 1; seed <= 12; ++seed) {
        const Graph g = random_graph(14, 0.35, seed);
        require_proper_coloring(g, edge_color(g));
    }
    // Denser and sparser extremes.
    require_proper_coloring(random_graph(10, 0.9, 99), edge_color(random_graph(10, 0.9, 99)));
    require_proper_coloring(random_graph(20, 0.1, 7), edge_color(random_graph(20, 0.1, 7)));
}

TEST_CASE("edge coloring is deterministic") {
    const Graph g = random_graph(12, 0.4, 5);
    const EdgeColoring a = edge_color(g);
    const EdgeColoring b = edge_color(g);
    REQUIRE(a.color_count() == b.color_count());
    for (int c = 0; c < a.color_count(); ++c) {
        REQUIRE(a.classes[c].size() == b.classes[c].size());
        for (size_t i = 0; i < a.classes[c].size(); ++i) {
            CHECK(a.classes[c][i] == b.classes[c][i]);
        }
    }
}

TEST_CASE("valid_for detects broken colorings") {
    const Graph g = Graph::path(4);
    EdgeColoring col = edge_color(g);
    REQUIRE(col.valid_for(g));

    EdgeColoring missing = col;
    missing.classes[0].clear();
    CHECK_FALSE(missing.valid_for(g));

    EdgeColoring foreign = col;
    foreign.classes[0].push_back({0, 3});
    CHECK_FALSE(foreign.valid_for(g));

    // Two touching edges in one class break the matching property.
    EdgeColoring clash;
    clash.classes = {{{0, 1}, {1, 2}}, {{2, 3}}};
    CHECK_FALSE(clash.valid_for(g));
}
