#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "generators.hpp"
#include "kempe/coloring.hpp"
#include "kempe/degeneracy.hpp"
#include "kempe/errors.hpp"
#include "kempe/graph.hpp"

using namespace kempe;

namespace {

Graph path3() { return build_graph(3, {{0, 1}, {1, 2}}); }

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return build_graph(n, edges);
}

} // namespace

TEST_CASE("build_graph basics") {
    Graph k2 = build_graph(2, {{0, 1}});
    CHECK(k2.edge_count() == 1);
    CHECK(k2.has_edge(0, 1));
    CHECK(k2.has_edge(1, 0));

    Graph path = path3();
    CHECK(path.degree(0) == 1);
    CHECK(path.degree(1) == 2);
    CHECK(path.degree(2) == 1);

    Graph k4 = complete(4);
    CHECK(k4.edge_count() == 6);
    for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);

    Graph dup = build_graph(2, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(build_graph(2, {{0, 2}}), input_error);
    CHECK_THROWS_AS(build_graph(2, {{1, 1}}), input_error);
}

TEST_CASE("dimacs io round trip") {
    Graph g = build_graph(4, {{0, 1}, {1, 2}, {0, 3}});
    std::ostringstream out;
    write_dimacs(out, g);
    std::istringstream in(out.str());
    CHECK(read_dimacs(in) == g);

    std::istringstream bad("p edge x y\n");
    CHECK_THROWS_AS(read_dimacs(bad), input_error);
    std::istringstream headerless("e 1 2\n");
    CHECK_THROWS_AS(read_dimacs(headerless), input_error);
    std::istringstream commented("c hello\np edge 2 1\ne 1 2\n");
    CHECK(read_dimacs(commented).edge_count() == 1);
}

TEST_CASE("degeneracy on fixed graphs") {
    CHECK(degeneracy(build_graph(2, {{0, 1}})).value == 1);
    CHECK(degeneracy(path3()).value == 1);
    CHECK(degeneracy(complete(4)).value == 3);

    DegeneracyResult empty = degeneracy(build_graph(0, {}));
    CHECK(empty.value == 0);
    CHECK(empty.ordering.sequence.empty());
}

TEST_CASE("degeneracy equals the max-min characterization and the witness is tight") {
    std::mt19937 rng(7);
    auto check_graph = [](const Graph& g) {
        DegeneracyResult result = degeneracy(g);
        CHECK(result.value == testgen::brute_force_degeneracy(g));
        CHECK(covers_all(result.ordering, g));
        int worst = 0;
        for (int v = 0; v < g.vertex_count; ++v)
            worst = std::max(worst, pred_count(g, result.ordering, v));
        CHECK(worst == result.value);
    };
    // every graph on 4 vertices
    for (unsigned mask = 0; mask < (1u << 6); ++mask) {
        std::vector<std::pair<int, int>> edges;
        int bit = 0;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v, ++bit)
                if (mask & (1u << bit)) edges.emplace_back(u, v);
        check_graph(build_graph(4, edges));
    }
    for (int trial = 0; trial < 200; ++trial) {
        int n = 5 + trial % 4;
        check_graph(testgen::random_graph(rng, n, 0.4));
    }
}

TEST_CASE("pred_count") {
    Graph k2 = build_graph(2, {{0, 1}});
    VertexOrdering order = make_ordering({0, 1}, 2);
    CHECK(pred_count(k2, order, 1) == 1);

    Graph path = path3();
    VertexOrdering uwv = make_ordering({0, 2, 1}, 3);
    CHECK(pred_count(path, uwv, 1) == 2);
    VertexOrdering uvw = make_ordering({0, 1, 2}, 3);
    CHECK(pred_count(path, uvw, 2) == 1);

    VertexOrdering partial = make_ordering({0}, 3);
    CHECK_THROWS_AS(pred_count(path, partial, 1), contract_error);
}

TEST_CASE("kempe components") {
    Graph k2 = build_graph(2, {{0, 1}});
    Coloring c12 = make_coloring({1, 2}, 3);
    CHECK(kempe_component(k2, c12, 1, 2, 0) == std::vector<int>{0, 1});
    CHECK(kempe_component(k2, c12, 1, 3, 0) == std::vector<int>{0});

    Graph path = path3();
    Coloring c121 = make_coloring({1, 2, 1}, 2);
    CHECK(kempe_component(path, c121, 1, 2, 0) == std::vector<int>{0, 1, 2});

    CHECK_THROWS_AS(kempe_component(k2, c12, 2, 3, 0), contract_error);
    CHECK_THROWS_AS(kempe_component(k2, c12, 1, 1, 0), contract_error);
}

TEST_CASE("apply_exchange on K_2") {
    Graph k2 = build_graph(2, {{0, 1}});
    Coloring c = make_coloring({1, 2}, 3);
    CHECK(apply_exchange(k2, c, {1, 2, 0}).colors == std::vector<int>{2, 1});
    CHECK(apply_exchange(k2, c, {1, 3, 0}).colors == std::vector<int>{3, 2});

    Coloring once = apply_exchange(k2, c, {1, 2, 0});
    CHECK(apply_exchange(k2, once, {1, 2, 0}) == c);
}

TEST_CASE("exchanges are involutions and preserve properness") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + trial % 9;
        Graph g = testgen::random_graph(rng, n, 0.35);
        int k = 2 + trial % 4;
        auto coloring = testgen::random_proper_coloring(g, k, rng);
        if (!coloring) continue;
        std::uniform_int_distribution<int> vertex(0, n - 1);
        std::uniform_int_distribution<int> color(1, k);
        int u = vertex(rng);
        int a = coloring->colors[u];
        int b = color(rng);
        if (a == b) continue;
        KempeExchange x{a, b, u};
        Coloring swapped = apply_exchange(g, *coloring, x);
        CHECK(is_proper(g, swapped));
        CHECK(apply_exchange(g, swapped, x) == *coloring);
    }
}

TEST_CASE("is_proper") {
    Graph k2 = build_graph(2, {{0, 1}});
    CHECK_FALSE(is_proper(k2, make_coloring({1, 1}, 2)));
    CHECK(is_proper(k2, make_coloring({1, 2}, 2)));
}
