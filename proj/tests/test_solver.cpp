#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "memoria/game.hpp"
#include "memoria/monitor.hpp"
#include "memoria/random_gen.hpp"
#include "memoria/solver.hpp"
#include "memoria/universal.hpp"

using namespace memoria;

namespace {

Game loop_game(bool eve_owns) {
    Game g;
    g.graph = make_graph({"a", "b"}, {"v"}, {{{"v", "a", "v"}}, {{"v", "b", "v"}}});
    g.eve = {static_cast<char>(eve_owns)};
    g.initial = 0;
    g.objective = builtin_objective("w1");
    return g;
}

}  // namespace

TEST_CASE("single vertex with two loops") {
    // Whoever moves decides whether both letters occur infinitely often.
    CHECK(solve_oracle(loop_game(true)) == std::vector<char>{1});
    CHECK(solve_oracle(loop_game(false)) == std::vector<char>{0});
}

TEST_CASE("satisfaction witnesses are genuine counterexamples") {
    ColoredGraph g = make_graph({"a", "b"}, {"u", "v"},
                                {{{"u", "a", "v"}}, {{"v", "b", "u"}}, {{"v", "a", "v"}}});
    Objective w1 = builtin_objective("w1");
    SatisfyResult r = graph_satisfies(g, w1);
    REQUIRE(!r.ok);
    CHECK(!lasso_membership(w1, r.counterexample));
    // Restricting Eve to the alternating cycle satisfies the objective.
    ColoredGraph h = make_graph({"a", "b"}, {"u", "v"}, {{{"u", "a", "v"}}, {{"v", "b", "u"}}});
    CHECK(graph_satisfies(h, w1).ok);
}

TEST_CASE("simulation solver matches the reference solver") {
    struct Case {
        const char* name;
    };
    Rng rng(41);
    for (const char* name : {"w1", "w2", "w4", "parity3"}) {
        CAPTURE(name);
        Objective obj = builtin_objective(name);
        OrderedGraph u = builtin_universal(name, 6);
        for (int i = 0; i < 30; ++i) {
            Game game = random_game(rng, obj, 5);
            CHECK(solve_oracle(game) == solve_via_universal(game, u).region);
        }
    }
}

TEST_CASE("extracted strategies win and respect the width bound") {
    Rng rng(42);
    Objective obj = builtin_objective("w2");
    OrderedGraph u = builtin_universal("w2", 6);
    int width = poset_width(u).width;
    int checked = 0;
    while (checked < 25) {
        Game game = random_game(rng, obj, 5);
        SimulationResult sim = solve_via_universal(game, u);
        if (!sim.region[game.initial]) continue;
        ProductStrategy s = extract_strategy(game, u, sim);
        VerifyResult v = verify_strategy(game, s);
        CAPTURE(v.reason);
        CHECK(v.ok);
        CHECK(s.memory <= width + 1);  // one extra state possible for the start
        ++checked;
    }
}

TEST_CASE("universality sampling rejects a non-universal graph") {
    // A single a-loop satisfies the no-repeat objective but embeds no tree
    // that uses the letter b.
    ColoredGraph g = make_graph({"a", "b", "c"}, {"v"}, {{{"v", "a", "v"}}});
    OrderedGraph og = make_ordered(g, {});
    UniversalitySample us =
        check_universality_sample(og, builtin_objective("w2"), 50, 3, 5);
    CHECK(us.failures > 0);
    CHECK(!us.first_failure.empty());
}
