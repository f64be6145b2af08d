#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "memoria/objective.hpp"
#include "memoria/random_gen.hpp"

using namespace memoria;

namespace {

LassoWord lasso(const std::string& prefix, const std::string& cycle) {
    LassoWord w;
    for (char ch : prefix) w.prefix.push_back(std::string(1, ch));
    for (char ch : cycle) w.cycle.push_back(std::string(1, ch));
    return w;
}

std::string flat(const LassoWord& w) {
    std::string p, c;
    for (const auto& s : w.prefix) p += s;
    for (const auto& s : w.cycle) c += s;
    return p + c + c;  // two cycle copies: enough lookahead for local patterns
}

bool cycle_has_pair(const LassoWord& w, char x, char y) {
    const auto& c = w.cycle;
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] == std::string(1, x) && c[(i + 1) % c.size()] == std::string(1, y)) return true;
    return false;
}

/** Direct reading of the gap condition (m leading a's, a gap of >= n, one more a). */
bool oracle_w3(const LassoWord& w, int m, int n) {
    bool cycle_a = std::count(w.cycle.begin(), w.cycle.end(), "a") > 0;
    if (cycle_a) return true;  // infinitely many a's: all quantifiers are satisfiable
    std::vector<int> pos;
    for (size_t i = 0; i < w.prefix.size(); ++i)
        if (w.prefix[i] == "a") pos.push_back(static_cast<int>(i));
    if (static_cast<int>(pos.size()) < m + 1) return false;
    int im = pos[m - 1];  // greedily take the earliest m a's
    for (size_t t = m; t < pos.size(); ++t)
        if (pos[t] >= im + n + 1) return true;
    return false;
}

bool oracle_w4(const LassoWord& w) {
    if (cycle_has_pair(w, 'b', 'b')) return true;
    bool fin_b = std::count(w.cycle.begin(), w.cycle.end(), "b") == 0;
    bool fin_aa = !cycle_has_pair(w, 'a', 'a');
    return fin_b && fin_aa;
}

bool oracle_w2(const LassoWord& w) {
    std::string s = flat(w);
    for (size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == s[i + 1]) return false;
    return true;
}

bool oracle_w1(const LassoWord& w) {
    return std::count(w.cycle.begin(), w.cycle.end(), "a") > 0 &&
           std::count(w.cycle.begin(), w.cycle.end(), "b") > 0;
}

bool oracle_w5(const LassoWord& w) {
    std::set<std::string> inf(w.cycle.begin(), w.cycle.end());
    return inf.size() == 2;
}

bool oracle_alternation(const LassoWord& w) {
    std::string s = flat(w);
    for (size_t i = 0; i < s.size(); ++i)
        if (s[i] != (i % 2 == 0 ? 'a' : 'b')) return false;
    return true;
}

}  // namespace

TEST_CASE("reserved and duplicate colors are rejected") {
    CHECK_THROWS(make_muller({"a", "eps"}, {{"a"}}));
    CHECK_THROWS(make_muller({"a", "a"}, {{"a"}}));
    CHECK_THROWS(make_lexico(make_parity({"a"}, {0}), make_parity({"a"}, {1})));
}

TEST_CASE("membership on pinned words") {
    Objective w4 = builtin_objective("w4");
    CHECK(lasso_membership(w4, lasso("", "c")));
    CHECK(!lasso_membership(w4, lasso("", "a")));
    CHECK(lasso_membership(w4, lasso("", "b")));
    CHECK(lasso_membership(w4, lasso("", "ac")));
    CHECK(!lasso_membership(w4, lasso("", "aac")));
    CHECK(!lasso_membership(w4, lasso("", "bac")));
    CHECK(lasso_membership(w4, lasso("", "bbac")));

    Objective w3 = builtin_objective("w3", {}, 1, 2);
    CHECK(lasso_membership(w3, lasso("abbba", "b")));
    CHECK(!lasso_membership(w3, lasso("aba", "b")));
    CHECK(lasso_membership(w3, lasso("", "ab")));

    Objective w2 = builtin_objective("w2");
    CHECK(lasso_membership(w2, lasso("", "abc")));
    CHECK(!lasso_membership(w2, lasso("ab", "ba")));

    Objective alt = builtin_objective("alternation");
    CHECK(lasso_membership(alt, lasso("ab", "ab")));
    CHECK(!lasso_membership(alt, lasso("ab", "a")));

    Objective w5 = builtin_objective("w5");
    CHECK(lasso_membership(w5, lasso("c", "ab")));
    CHECK(!lasso_membership(w5, lasso("", "abc")));
    CHECK(!lasso_membership(w5, lasso("ab", "a")));
}

TEST_CASE("membership agrees with direct word-level readings") {
    Rng rng(21);
    Objective w1 = builtin_objective("w1");
    Objective w2 = builtin_objective("w2");
    Objective w4 = builtin_objective("w4");
    Objective w5 = builtin_objective("w5");
    Objective alt = builtin_objective("alternation");
    Objective w3_12 = builtin_objective("w3", {}, 1, 2);
    Objective w3_23 = builtin_objective("w3", {}, 2, 3);
    for (int i = 0; i < 400; ++i) {
        LassoWord wab = random_lasso(rng, {"a", "b"}, 6);
        CHECK(lasso_membership(w1, wab) == oracle_w1(wab));
        CHECK(lasso_membership(alt, wab) == oracle_alternation(wab));
        CHECK(lasso_membership(w3_12, wab) == oracle_w3(wab, 1, 2));
        CHECK(lasso_membership(w3_23, wab) == oracle_w3(wab, 2, 3));
        LassoWord wabc = random_lasso(rng, {"a", "b", "c"}, 6);
        CHECK(lasso_membership(w2, wabc) == oracle_w2(wabc));
        CHECK(lasso_membership(w4, wabc) == oracle_w4(wabc));
        CHECK(lasso_membership(w5, wabc) == oracle_w5(wabc));
    }
}

TEST_CASE("combinations follow their parts") {
    Objective w1 = builtin_objective("w1");
    Objective w2ab = builtin_objective("w2", {"a", "b"});
    Objective uni = make_union({w1, w2ab});
    Objective inter = make_intersection({w1, w2ab});
    Rng rng(22);
    for (int i = 0; i < 300; ++i) {
        LassoWord w = random_lasso(rng, {"a", "b"}, 6);
        bool in1 = lasso_membership(w1, w), in2 = lasso_membership(w2ab, w);
        CHECK(lasso_membership(uni, w) == (in1 || in2));
        CHECK(lasso_membership(inter, w) == (in1 && in2));
    }
}

TEST_CASE("lexicographic combination is judged by its dominant part") {
    Objective left = make_muller({"a", "b"}, {{"a", "b"}});
    Objective right = make_muller({"c", "d"}, {{"c", "d"}});
    Objective lx = make_lexico(left, right);
    // Right letters appear infinitely often: only they matter.
    CHECK(lasso_membership(lx, lasso("", "acd")));
    CHECK(!lasso_membership(lx, lasso("", "abc")));
    // Right letters run out: the left restriction decides.
    CHECK(lasso_membership(lx, lasso("cd", "ab")));
    CHECK(!lasso_membership(lx, lasso("cd", "a")));
}

TEST_CASE("eps-neutral membership") {
    Objective w2 = builtin_objective("w2");
    LassoWord neutral = lasso("", "ab");
    neutral.cycle.insert(neutral.cycle.begin() + 1, kEps);
    CHECK(eps_lasso_membership(w2, neutral));
    // A word ending in eps^w is judged by extendability of its finite part.
    LassoWord tail_ok = lasso("ab", "");
    tail_ok.cycle.push_back(kEps);
    CHECK(eps_lasso_membership(w2, tail_ok));
    LassoWord tail_bad = lasso("aa", "");
    tail_bad.cycle.push_back(kEps);
    CHECK(!eps_lasso_membership(w2, tail_bad));
    // Safety words are never recoverable after a violation, but any finite
    // both-letters history extends inside w1.
    Objective w1 = builtin_objective("w1");
    LassoWord any = lasso("bbb", "");
    any.cycle.push_back(kEps);
    CHECK(eps_lasso_membership(w1, any));
}
