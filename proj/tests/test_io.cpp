#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "memoria/io.hpp"
#include "memoria/memory_search.hpp"
#include "memoria/universal.hpp"

using namespace memoria;

TEST_CASE("graph round-trip") {
    ColoredGraph g = make_graph({"a", "b"}, {"u", "v"}, {{{"u", "a", "v"}}, {{"v", "b", "u"}}});
    ColoredGraph back = graph_from_json(graph_to_json(g));
    CHECK(back.vertices == g.vertices);
    CHECK(back.alphabet == g.alphabet);
    CHECK(back.edges == g.edges);
    CHECK(graph_to_json(back) == graph_to_json(g));
}

TEST_CASE("ordered graph round-trip keeps the order") {
    OrderedGraph u = builtin_universal("w3", 3, 1, 2);
    OrderedGraph back = ordered_from_json(ordered_to_json(u));
    CHECK(back.graph.edges == u.graph.edges);
    CHECK(back.leq == u.leq);
}

TEST_CASE("objective round-trips") {
    std::vector<Objective> objs = {
        builtin_objective("w1"),
        builtin_objective("w2"),
        builtin_objective("w3", {}, 1, 2),
        builtin_objective("w4"),
        make_parity({"x", "y"}, {0, 1}),
        make_union({builtin_objective("w1"), builtin_objective("w2", {"a", "b"})}),
        make_lexico(make_parity({"a"}, {0}), make_parity({"b"}, {1})),
    };
    for (const Objective& obj : objs) {
        Json j = objective_to_json(obj);
        CHECK(objective_to_json(objective_from_json(j)) == j);
    }
}

TEST_CASE("builtin objective documents parse") {
    Json j = {{"kind", "builtin"}, {"name", "w3"}, {"m", 1}, {"n", 2}};
    Objective obj = objective_from_json(j);
    CHECK(obj.kind == Objective::Kind::SafetyRegular);
}

TEST_CASE("game round-trip") {
    Game g = lower_bound_game("two-loops");
    Json j = game_to_json(g);
    Game back = game_from_json(j);
    CHECK(game_to_json(back) == j);
    CHECK(back.eve == g.eve);
    CHECK(back.initial == g.initial);
}

TEST_CASE("strategy round-trip") {
    Game g = lower_bound_game("two-loops");
    auto r = min_memory(g, StrategyKind::Chromatic, 3);
    REQUIRE(r.has_value());
    Json j = strategy_to_json(r->strategy, g.graph);
    ProductStrategy back = strategy_from_json(j, g.graph);
    CHECK(strategy_to_json(back, g.graph) == j);
    CHECK(verify_strategy(g, back).ok);
}

TEST_CASE("separated graph document carries parts and update") {
    auto [eg, tag] = w4_separated(3);
    Json j = separated_to_json(eg, &tag);
    CHECK(j.contains("parts"));
    CHECK(j.contains("delta"));
    EpsSeparatedGraph back = separated_from_json(j);
    CHECK(back.breadth() == eg.breadth());
    CHECK(back.graph.edges == eg.graph.edges);
}

TEST_CASE("dot rendering distinguishes owners") {
    Game g = lower_bound_game("two-loops");
    std::string dot = graph_dot(g.graph, &g.eve);
    CHECK(dot.find("circle") != std::string::npos);
    CHECK(dot.find("box") != std::string::npos);
    CHECK(dot.find("label=\"a\"") != std::string::npos);
}

TEST_CASE("malformed documents are rejected") {
    Json bad = {{"alphabet", {"a"}}, {"vertices", {"u"}}, {"edges", {{"u", "z", "u"}}}};
    CHECK_THROWS(graph_from_json(bad));
    Json badobj = {{"kind", "mystery"}, {"alphabet", {"a"}}};
    CHECK_THROWS(objective_from_json(badobj));
}
