#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "memoria/order.hpp"
#include "memoria/random_gen.hpp"

using namespace memoria;

namespace {

/** Maximum antichain by subset enumeration; the reference for poset_width. */
int brute_force_width(const OrderedGraph& og) {
    int n = og.graph.n(), best = 0;
    for (int mask = 1; mask < (1 << n); ++mask) {
        bool anti = true;
        for (int i = 0; i < n && anti; ++i)
            for (int j = 0; j < n && anti; ++j)
                if (i != j && (mask >> i & 1) && (mask >> j & 1) && og.le(i, j)) anti = false;
        if (anti) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

OrderedGraph diamond() {
    ColoredGraph g = make_graph({"a"}, {"bot", "l", "r", "top"},
                                {{{"bot", "a", "bot"}},
                                 {{"l", "a", "bot"}},
                                 {{"r", "a", "bot"}},
                                 {{"top", "a", "top"}}});
    return make_ordered(g, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

}  // namespace

TEST_CASE("closure of generators") {
    OrderedGraph og = diamond();
    CHECK(og.le(0, 3));  // transitivity
    CHECK(og.le(1, 1));  // reflexivity
    CHECK(!og.le(1, 2));
    CHECK(og.lt(0, 1));
    CHECK(!og.lt(1, 1));
}

TEST_CASE("cyclic generators are rejected") {
    ColoredGraph g = make_graph({"a"}, {"u", "v"}, {{{"u", "a", "u"}}, {{"v", "a", "v"}}});
    CHECK_THROWS(make_ordered(g, {{0, 1}, {1, 0}}));
}

TEST_CASE("monotonicity check and closure") {
    // u >= v, v -a-> v, so monotonicity demands u -a-> v (and u -a-> u is absent too).
    ColoredGraph g = make_graph({"a"}, {"v", "u"}, {{{"v", "a", "v"}}, {{"u", "a", "u"}}});
    OrderedGraph og = make_ordered(g, {{0, 1}});
    auto w = check_monotone(og);
    REQUIRE(w.has_value());
    OrderedGraph closed = monotone_closure(og);
    CHECK(!check_monotone(closed).has_value());
    CHECK(closed.graph.has_edge(1, 0, 0));
}

TEST_CASE("width of the diamond") {
    WidthResult w = poset_width(diamond());
    CHECK(w.width == 2);
    CHECK(w.antichain == std::vector<int>{1, 2});
}

TEST_CASE("width agrees with subset enumeration") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        OrderedGraph og = random_poset(rng, 8);
        CHECK(poset_width(og).width == brute_force_width(og));
    }
}

TEST_CASE("chain decomposition covers with width many chains") {
    Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        OrderedGraph og = random_poset(rng, 7);
        auto chains = chain_decomposition(og);
        CHECK(static_cast<int>(chains.size()) == poset_width(og).width);
        std::vector<char> seen(og.graph.n(), 0);
        for (const auto& ch : chains) {
            for (size_t k = 0; k + 1 < ch.size(); ++k) CHECK(og.lt(ch[k], ch[k + 1]));
            for (int v : ch) {
                CHECK(!seen[v]);
                seen[v] = 1;
            }
        }
        for (char s : seen) CHECK(s);
    }
}

TEST_CASE("eps separation of a monotone graph") {
    ColoredGraph g = make_graph({"a"}, {"v", "u"},
                                {{{"v", "a", "v"}}, {{"u", "a", "u"}}, {{"u", "a", "v"}}});
    OrderedGraph og = make_ordered(g, {{0, 1}});
    REQUIRE(!check_monotone(og).has_value());
    EpsSeparatedGraph eg = eps_separate(og);
    CHECK(eg.breadth() == 1);
    CHECK(!check_eps_separated(eg).has_value());
    // The induced order recovers the original one.
    OrderedGraph back = induced_order(eg);
    for (int i = 0; i < og.graph.n(); ++i)
        for (int j = 0; j < og.graph.n(); ++j) CHECK(og.le(i, j) == back.le(i, j));
}

TEST_CASE("separation breadth equals width on random posets") {
    Rng rng(13);
    for (int i = 0; i < 50; ++i) {
        OrderedGraph og = random_poset(rng, 6);
        // A poset with no non-eps edges is trivially monotone.
        EpsSeparatedGraph eg = eps_separate(og);
        CHECK(eg.breadth() == poset_width(og).width);
        CHECK(!check_eps_separated(eg).has_value());
    }
}
