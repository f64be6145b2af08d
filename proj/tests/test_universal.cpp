#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "memoria/monitor.hpp"
#include "memoria/order.hpp"
#include "memoria/solver.hpp"
#include "memoria/universal.hpp"

using namespace memoria;

namespace {

bool has_root(const OrderedGraph& u, const Objective& obj) {
    for (int v = 0; v < u.graph.n(); ++v)
        if (graph_satisfies(u.graph, obj, v).ok) return true;
    return false;
}

}  // namespace

TEST_CASE("builtin graphs are monotone and satisfy their objectives") {
    struct Case {
        const char* name;
        int m, n;
    };
    for (const Case& c : {Case{"w1", 1, 1}, Case{"w2", 1, 1}, Case{"w3", 1, 2}, Case{"w4", 1, 1},
                          Case{"w5", 1, 1}, Case{"alternation", 1, 1}, Case{"parity3", 1, 1}}) {
        CAPTURE(c.name);
        OrderedGraph u = builtin_universal(c.name, 4, c.m, c.n);
        CHECK(!check_monotone(u).has_value());
        Objective obj = builtin_objective(c.name, {}, c.m, c.n);
        CHECK(has_root(u, obj));
    }
}

TEST_CASE("pinned widths") {
    CHECK(poset_width(builtin_universal("w1", 4)).width == 2);
    CHECK(poset_width(builtin_universal("w3", 4, 1, 2)).width == 3);
    CHECK(poset_width(builtin_universal("w3", 4, 1, 3)).width == 4);
    CHECK(poset_width(builtin_universal("w4", 4)).width == 2);
    CHECK(poset_width(builtin_universal("alternation", 4)).width == 2);
}

TEST_CASE("no-repeat quotient over three colors") {
    OrderedGraph u = safety_quotient_universal(builtin_objective("w2"));
    CHECK(u.graph.n() == 5);  // start, one class per last letter, top
    CHECK(poset_width(u).width == 3);
}

TEST_CASE("repetition keeps the width, products multiply it") {
    OrderedGraph u = builtin_universal("w1", 3);
    int w = poset_width(u).width;
    CHECK(poset_width(ltimes_repeat(u, 4)).width == w);

    OrderedGraph v = builtin_universal("w3", 3, 1, 2);
    OrderedGraph left = builtin_universal("w1", 3);
    // Rename the left alphabet apart before the lexicographic product.
    left.graph.alphabet = {"x", "y"};
    left.graph.finalize();
    OrderedGraph prod = lexico_product(left, v);
    CHECK(!check_monotone(prod).has_value());
    CHECK(poset_width(prod).width <= w * poset_width(v).width);
}

TEST_CASE("direct sum takes the maximum width") {
    OrderedGraph a = builtin_universal("w1", 3);
    OrderedGraph b = builtin_universal("w1", 3);
    OrderedGraph s = direct_sum({a, b});
    CHECK(!check_monotone(s).has_value());
    CHECK(poset_width(s).width == poset_width(a).width);
}

TEST_CASE("direct product stays monotone") {
    OrderedGraph a = muller_universal(builtin_objective("w1"), 3);
    OrderedGraph b = safety_quotient_universal(builtin_objective("w2", {"a", "b"}));
    OrderedGraph p = direct_product(a, b);
    CHECK(!check_monotone(p).has_value());
}

TEST_CASE("w4 in separated chromatic form") {
    auto [eg, tag] = w4_separated(3);
    CHECK(eg.breadth() == 2);
    CHECK(!check_eps_separated(eg).has_value());
    CHECK(!check_chromatic(eg, tag).has_value());
}

TEST_CASE("small universality samples") {
    struct Case {
        const char* name;
        int m, n;
    };
    for (const Case& c : {Case{"w1", 1, 1}, Case{"w2", 1, 1}, Case{"w3", 1, 2}, Case{"w4", 1, 1},
                          Case{"parity3", 1, 1}}) {
        CAPTURE(c.name);
        OrderedGraph u = builtin_universal(c.name, 5, c.m, c.n);
        Objective obj = builtin_objective(c.name, {}, c.m, c.n);
        UniversalitySample us = check_universality_sample(u, obj, 40, 4, 91);
        CHECK(us.failures == 0);
        CHECK(us.satisfying > 0);
    }
}
