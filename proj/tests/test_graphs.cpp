#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "memoria/graph.hpp"
#include "memoria/random_gen.hpp"

using namespace memoria;

namespace {

/** Exhaustive vertex-map enumeration; the reference for the backtracking search. */
bool brute_force_morphism(const ColoredGraph& src, const ColoredGraph& dst) {
    std::vector<int> map(src.n(), 0);
    while (true) {
        if (!check_morphism(src, dst, map)) return true;
        int i = 0;
        while (i < src.n() && ++map[i] == dst.n()) map[i++] = 0;
        if (i == src.n()) return false;
    }
}

}  // namespace

TEST_CASE("construction and lookups") {
    ColoredGraph g = make_graph({"a", "b"}, {"u", "v"},
                                {{{"u", "a", "v"}}, {{"v", "b", "u"}}, {{"u", "a", "v"}}});
    CHECK(g.n() == 2);
    CHECK(g.num_colors() == 2);
    CHECK(g.edges.size() == 2);  // duplicate edge removed
    CHECK(g.vid("v") == 1);
    CHECK(g.cid("b") == 1);
    CHECK(g.has_edge(0, 0, 1));
    CHECK(!g.has_edge(0, 1, 1));
    CHECK(!g.eps_color().has_value());
}

TEST_CASE("validation diagnostics") {
    RawGraph raw;
    raw.alphabet = {"a"};
    raw.vertices = {"u", "v"};
    raw.edges = {{{"u", "a", "w"}}};
    Diagnostic diag;
    CHECK(!validate(raw, diag).has_value());
    CHECK(!diag.errors.empty());

    raw.edges = {{{"u", "a", "u"}}};
    Diagnostic diag2;
    auto g = validate(raw, diag2);
    CHECK(!g.has_value());  // v is a sink
    CHECK(diag2.sinks == std::vector<std::string>{"v"});

    raw.want_graph = false;
    Diagnostic diag3;
    CHECK(validate(raw, diag3).has_value());
}

TEST_CASE("morphism check on an identity map") {
    ColoredGraph g = make_graph({"a"}, {"u", "v"}, {{{"u", "a", "v"}}, {{"v", "a", "u"}}});
    VertexMap id = {0, 1};
    CHECK(!check_morphism(g, g, id).has_value());
    VertexMap swap = {1, 0};
    CHECK(!check_morphism(g, g, swap).has_value());
}

TEST_CASE("morphism search agrees with exhaustive enumeration") {
    Rng rng(7);
    for (int i = 0; i < 150; ++i) {
        ColoredGraph src = random_graph(rng, {"a", "b"}, 4);
        ColoredGraph dst = random_graph(rng, {"a", "b"}, 4);
        CHECK(find_graph_morphism(src, dst).has_value() == brute_force_morphism(src, dst));
    }
}

TEST_CASE("morphism search respects an anchor") {
    // Two disjoint self-loops of different colors: u maps only to like-colored targets.
    ColoredGraph src = make_graph({"a", "b"}, {"s"}, {{{"s", "a", "s"}}});
    ColoredGraph dst =
        make_graph({"a", "b"}, {"x", "y"}, {{{"x", "a", "x"}}, {{"y", "b", "y"}}});
    auto free = find_graph_morphism(src, dst);
    REQUIRE(free.has_value());
    CHECK((*free)[0] == 0);
    auto anchored = find_graph_morphism(src, dst, {{0, {1}}});
    CHECK(!anchored.has_value());
}

TEST_CASE("unfolding sizes and base vertices") {
    ColoredGraph g = make_graph({"a"}, {"u", "v"}, {{{"u", "a", "v"}}, {{"v", "a", "u"}}});
    RootedTree t = unfold(g, 0, 3);
    // One path per length 0..3 from a deterministic cycle.
    CHECK(t.graph.n() == 4);
    CHECK(!t.graph.is_graph);
    CHECK(t.base_vertex[t.root] == 0);
    for (int v = 0; v < t.graph.n(); ++v) CHECK((t.base_vertex[v] == 0 || t.base_vertex[v] == 1));
}

TEST_CASE("reachability and strongly connected components") {
    ColoredGraph g = make_graph({"a"}, {"p", "q", "r"},
                                {{{"p", "a", "q"}}, {{"q", "a", "p"}}, {{"q", "a", "r"}},
                                 {{"r", "a", "r"}}});
    auto reach = reachable_from(g, 0);
    CHECK(reach.size() == 3);
    auto comp = sccs(g);
    REQUIRE(comp.size() == 2);
    // Reverse topological order: the sink component {r} first.
    CHECK(comp[0] == std::vector<int>{2});
    CHECK(comp[1].size() == 2);
}

TEST_CASE("restriction keeps only induced edges") {
    ColoredGraph g = make_graph({"a"}, {"p", "q", "r"},
                                {{{"p", "a", "q"}}, {{"q", "a", "r"}}, {{"r", "a", "p"}}});
    ColoredGraph h = restrict_to(g, {0, 1});
    CHECK(h.n() == 2);
    CHECK(h.edges.size() == 1);
    CHECK(!h.is_graph);
}
