#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "generators.hpp"
#include "kempe/degeneracy.hpp"
#include "kempe/instance.hpp"
#include "kempe/oracle.hpp"
#include "kempe/reduction.hpp"
#include "kempe/subdegeneracy.hpp"

using namespace kempe;

TEST_CASE("empty fixed set reduces to degeneracy") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = testgen::random_graph(rng, 2 + trial % 6, 0.45);
        SubdegResult result = subdeg_ub(g, {});
        DegeneracyResult deg = degeneracy(g);
        CHECK(result.lambda_value == deg.value);
        CHECK(result.value == deg.value);
        CHECK(check_sprime(g, {}, result.ordering));
    }
}

TEST_CASE("path with the far endpoint fixed") {
    Graph path = build_graph(3, {{0, 1}, {1, 2}});
    const std::vector<int> fixed{2};

    // the leaf u is the unique minimum and is removed first
    CHECK(vertex_elimination(path, fixed) == std::vector<int>{1, 0});

    SubdegResult result = subdeg_ub(path, fixed);
    CHECK(result.lambda_value == 1);
    CHECK(result.value == 1);
    CHECK(result.moved_prefix == 1); // v alone moves; it is adjacent to u
    CHECK(check_sprime(path, fixed, result.ordering));
    CHECK(exact_subdeg(path, fixed) == 1);
}

TEST_CASE("ordering condition membership") {
    Graph path = build_graph(3, {{0, 1}, {1, 2}});
    const std::vector<int> fixed{2};
    CHECK(check_sprime(path, fixed, make_ordering({0, 2, 1}, 3)));
    CHECK_FALSE(check_sprime(path, fixed, make_ordering({0, 1, 2}, 3)));

    std::mt19937 rng(32);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = testgen::random_graph(rng, 3 + trial % 5, 0.5);
        std::vector<int> fset = testgen::random_subset(rng, g.vertex_count, 0.4);
        std::vector<int> sequence;
        std::vector<char> in_fixed(g.vertex_count, 0);
        for (int v : fset) in_fixed[v] = 1;
        for (int v = 0; v < g.vertex_count; ++v)
            if (in_fixed[v]) sequence.push_back(v);
        for (int v = 0; v < g.vertex_count; ++v)
            if (!in_fixed[v]) sequence.push_back(v);
        // placing all fixed vertices first always satisfies the condition
        CHECK(check_sprime(g, fset, make_ordering(sequence, g.vertex_count)));
    }
}

TEST_CASE("isolated vertex moves before the fixed pair") {
    Graph g = build_graph(3, {{0, 1}});
    const std::vector<int> fixed{0, 1};
    std::vector<int> tail = vertex_elimination(g, fixed);
    CHECK(tail == std::vector<int>{2});
    SubdegResult result = postprocess(g, fixed, tail);
    CHECK(result.value == 0);
    CHECK(result.moved_prefix == 1);
    CHECK(result.ordering.sequence.front() == 2);
}

TEST_CASE("toy reduced graph bound is exactly eleven") {
    std::istringstream in(toy_instance_text());
    UtpInstance toy = parse_cctt(in);
    ReducedGraph reduced =
        build_reduced(toy.conflict_graph, toy.timeslot_count, toy.availability);
    std::vector<int> fixed = fixed_set(reduced);
    SubdegResult result = subdeg_ub(reduced.graph, fixed);
    CHECK(result.value == 11);
    CHECK(result.lambda_value == 11);
    CHECK(result.moved_prefix == 1); // course events are pairwise adjacent
    CHECK(check_sprime(reduced.graph, fixed, result.ordering));
}

TEST_CASE("lambda equals the max-min characterization") {
    std::mt19937 rng(33);
    for (int trial = 0; trial < 150; ++trial) {
        Graph g = testgen::random_graph(rng, 2 + trial % 6, 0.45);
        std::vector<int> fixed = testgen::random_subset(rng, g.vertex_count, 0.35);
        std::vector<int> tail = vertex_elimination(g, fixed);
        SubdegResult result = postprocess(g, fixed, tail);
        CHECK(result.lambda_value == testgen::brute_force_lambda(g, fixed));
        CHECK(result.value <= result.lambda_value);
        CHECK(check_sprime(g, fixed, result.ordering));

        const int exact = exact_subdeg(g, fixed);
        CHECK(exact <= result.value);
        // no exact <= deg(G) check: the ordering condition can force a value
        // above the degeneracy (K_4 minus an edge with the nonadjacent pair
        // fixed reaches 3 while the degeneracy is 2)
    }
    Graph k4_minus = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(degeneracy(k4_minus).value == 2);
    CHECK(exact_subdeg(k4_minus, {2, 3}) == 3);
}

TEST_CASE("serialized form") {
    Graph path = build_graph(3, {{0, 1}, {1, 2}});
    SubdegResult result = subdeg_ub(path, {2});
    std::string text = format_subdeg(result);
    CHECK(text.find("subdeg_ub 1 lambda 1 prefix 1") == 0);
    CHECK(text.find('\n') != std::string::npos);
}
