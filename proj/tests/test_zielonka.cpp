#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "memoria/objective.hpp"
#include "memoria/random_gen.hpp"
#include "memoria/zielonka.hpp"

using namespace memoria;

namespace {

long long memory_of(const Objective& muller) {
    return zielonka_memory(build_zielonka(muller));
}

}  // namespace

TEST_CASE("tree shapes on small families") {
    Objective f = make_muller({"a", "b"}, {{"a", "b"}});
    ZielonkaTree zt = build_zielonka(f);
    REQUIRE(zt.nodes.size() == 3);
    CHECK(zt.nodes[0].positive);
    CHECK(zt.nodes[0].children.size() == 2);  // {a} and {b}, both negative leaves
    CHECK(!zt.nodes[zt.nodes[0].children[0]].positive);
    CHECK(memory_of(f) == 2);
}

TEST_CASE("memory values of pinned families") {
    CHECK(memory_of(make_muller({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b"}})) == 2);
    CHECK(memory_of(builtin_objective("w5")) == 2);
    // A family containing every nonempty subset needs no memory at all.
    CHECK(memory_of(make_muller({"a", "b"}, {{"a"}, {"b"}, {"a", "b"}})) == 1);
    // Single negative chain: still memoryless.
    CHECK(memory_of(make_muller({"a", "b"}, {{"a"}})) == 1);
}

TEST_CASE("renderings mention every color") {
    ZielonkaTree zt = build_zielonka(builtin_objective("w5"));
    std::string pretty = zielonka_pretty(zt);
    std::string dot = zielonka_dot(zt);
    for (const std::string& c : {"a", "b", "c"}) {
        CHECK(pretty.find(c) != std::string::npos);
        CHECK(dot.find(c) != std::string::npos);
    }
}

TEST_CASE("parity translation recognizes the Muller condition") {
    Rng rng(31);
    std::vector<Objective> families = {
        make_muller({"a", "b"}, {{"a", "b"}}),
        make_muller({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b"}}),
        builtin_objective("w5"),
        make_muller({"a", "b", "c"}, {{"a"}, {"a", "b", "c"}}),
        make_muller({"a", "b"}, {{"a"}}),
    };
    for (const Objective& f : families) {
        Objective dpa = zielonka_to_parity(build_zielonka(f));
        for (int i = 0; i < 200; ++i) {
            LassoWord w = random_lasso(rng, f.alphabet, 5);
            CHECK(lasso_membership(dpa, w) == lasso_membership(f, w));
        }
    }
}
