#include "memoria/objective.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "memoria/graph.hpp"
#include "memoria/monitor.hpp"

namespace memoria {

int Objective::cid(const std::string& color) const {
    for (int c = 0; c < static_cast<int>(alphabet.size()); ++c)
        if (alphabet[c] == color) return c;
    throw std::runtime_error("color not in objective alphabet: " + color);
}

namespace {

void check_alphabet(const std::vector<std::string>& alphabet) {
    std::set<std::string> seen;
    for (const auto& c : alphabet) {
        if (c == kEps) throw std::runtime_error("'eps' is reserved and cannot be a color");
        if (!seen.insert(c).second) throw std::runtime_error("duplicate color: " + c);
    }
    if (alphabet.empty()) throw std::runtime_error("objective alphabet is empty");
}

}  // namespace

Objective make_muller(std::vector<std::string> alphabet,
                      std::vector<std::vector<std::string>> family) {
    check_alphabet(alphabet);
    Objective o;
    o.kind = Objective::Kind::Muller;
    o.alphabet = std::move(alphabet);
    std::set<std::vector<int>> sets;
    for (const auto& raw : family) {
        std::vector<int> s;
        for (const auto& c : raw) s.push_back(o.cid(c));
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty()) throw std::runtime_error("Muller family contains the empty set");
        sets.insert(std::move(s));
    }
    o.family.assign(sets.begin(), sets.end());
    o.declared_prefix_independent = true;
    return o;
}

Objective make_parity(std::vector<std::string> alphabet, std::vector<int> priorities) {
    check_alphabet(alphabet);
    if (priorities.size() != alphabet.size())
        throw std::runtime_error("parity: one priority per color required");
    for (int p : priorities)
        if (p < 0) throw std::runtime_error("parity: priorities must be nonnegative");
    Objective o;
    o.kind = Objective::Kind::Parity;
    o.alphabet = std::move(alphabet);
    o.priorities = std::move(priorities);
    o.declared_prefix_independent = true;
    return o;
}

Objective make_parity_automaton(Dfa dfa, std::vector<std::vector<int>> trans_priority) {
    check_alphabet(dfa.alphabet);
    if (static_cast<int>(dfa.delta.size()) != dfa.num_states ||
        static_cast<int>(trans_priority.size()) != dfa.num_states)
        throw std::runtime_error("parity automaton: delta/priority tables must cover all states");
    Objective o;
    o.kind = Objective::Kind::ParityAutomaton;
    o.alphabet = dfa.alphabet;
    o.dfa = std::move(dfa);
    o.trans_priority = std::move(trans_priority);
    return o;
}

Objective make_safety(Dfa bad_prefix_dfa, bool complemented) {
    check_alphabet(bad_prefix_dfa.alphabet);
    if (bad_prefix_dfa.sink < 0) throw std::runtime_error("safety: a sink state is required");
    for (int c = 0; c < static_cast<int>(bad_prefix_dfa.alphabet.size()); ++c)
        if (bad_prefix_dfa.step(bad_prefix_dfa.sink, c) != bad_prefix_dfa.sink)
            throw std::runtime_error("safety: the sink must be absorbing");
    Objective o;
    o.kind = Objective::Kind::SafetyRegular;
    o.alphabet = bad_prefix_dfa.alphabet;
    o.dfa = std::move(bad_prefix_dfa);
    o.complemented = complemented;
    return o;
}

Objective make_lexico(Objective left, Objective right) {
    for (const auto& c : left.alphabet)
        for (const auto& d : right.alphabet)
            if (c == d) throw std::runtime_error("lexico: component alphabets must be disjoint");
    Objective o;
    o.kind = Objective::Kind::Lexico;
    o.alphabet = left.alphabet;
    o.alphabet.insert(o.alphabet.end(), right.alphabet.begin(), right.alphabet.end());
    o.parts.push_back(std::make_shared<Objective>(std::move(left)));
    o.parts.push_back(std::make_shared<Objective>(std::move(right)));
    return o;
}

namespace {

Objective combine(Objective::Kind kind, std::vector<Objective> parts) {
    if (parts.empty()) throw std::runtime_error("combination of zero objectives");
    Objective o;
    o.kind = kind;
    o.alphabet = parts.front().alphabet;
    for (const auto& p : parts)
        if (p.alphabet != o.alphabet)
            throw std::runtime_error("combined objectives must share one alphabet");
    for (auto& p : parts) o.parts.push_back(std::make_shared<Objective>(std::move(p)));
    return o;
}

}  // namespace

Objective make_union(std::vector<Objective> parts) {
    return combine(Objective::Kind::Union, std::move(parts));
}

Objective make_intersection(std::vector<Objective> parts) {
    return combine(Objective::Kind::Intersection, std::move(parts));
}

namespace {

/** DFA for "no two consecutive equal colors": state 0 = start, state 1+c =
 *  last color was c, last state = bad sink. */
Dfa repetition_dfa(const std::vector<std::string>& alphabet) {
    int k = static_cast<int>(alphabet.size());
    Dfa d;
    d.alphabet = alphabet;
    d.num_states = k + 2;
    d.initial = 0;
    d.sink = k + 1;
    d.delta.assign(d.num_states, std::vector<int>(k, d.sink));
    for (int c = 0; c < k; ++c) d.delta[0][c] = 1 + c;
    for (int last = 0; last < k; ++last)
        for (int c = 0; c < k; ++c) d.delta[1 + last][c] = (c == last) ? d.sink : 1 + c;
    return d;
}

/**
 * DFA matching prefixes that contain m a's followed, at least n letters after
 * the m-th a, by another a. Greedy maximal progress is optimal because the
 * tracked quantities (a's counted, letters elapsed) only ever help.
 * States: 0..m-1 = a's counted so far; m+i (i in 0..n-1) = i letters elapsed
 * since the m-th a; m+n = at least n elapsed; m+n+1 = matched sink.
 */
Dfa gap_pattern_dfa(int m, int n) {
    if (m < 1 || n < 1) throw std::runtime_error("gap pattern: m, n must be positive");
    Dfa d;
    d.alphabet = {"a", "b"};
    d.num_states = m + n + 2;
    d.initial = 0;
    d.sink = m + n + 1;
    d.delta.assign(d.num_states, std::vector<int>(2, d.sink));
    for (int j = 0; j < m; ++j) {
        d.delta[j][0] = j + 1;  // an 'a' advances the count (to elapsed-0 when j+1 == m)
        d.delta[j][1] = j;
    }
    for (int i = 0; i < n; ++i)
        d.delta[m + i][0] = d.delta[m + i][1] = m + i + 1;  // any letter elapses
    d.delta[m + n][0] = d.sink;  // a far-enough 'a' completes the pattern
    d.delta[m + n][1] = m + n;
    return d;
}

/**
 * 3-state last-letter automaton for InfOften(bb) or (FinOften(b) and
 * FinOften(aa)). State 0 = last letter was c (or start), 1 = last was a,
 * 2 = last was b. Priorities: b after b is 2 (a bb block), any other b is 1,
 * a after a is 1 (an aa block), everything else 0; max-even acceptance.
 */
Objective w4_objective() {
    Dfa d;
    d.alphabet = {"a", "b", "c"};
    d.num_states = 3;
    d.initial = 0;
    d.delta = {{1, 2, 0}, {1, 2, 0}, {1, 2, 0}};
    std::vector<std::vector<int>> pr = {{0, 1, 0}, {1, 1, 0}, {0, 2, 0}};
    Objective o = make_parity_automaton(std::move(d), std::move(pr));
    o.declared_prefix_independent = true;
    return o;
}

Dfa alternation_dfa() {
    // Accept prefixes of (ab)^w: state 0 expects a, state 1 expects b, 2 = bad.
    Dfa d;
    d.alphabet = {"a", "b"};
    d.num_states = 3;
    d.initial = 0;
    d.sink = 2;
    d.delta = {{1, 2}, {2, 0}, {2, 2}};
    return d;
}

}  // namespace

Objective builtin_objective(const std::string& name, const std::vector<std::string>& alphabet,
                            int m, int n) {
    if (name == "w1") return make_muller({"a", "b"}, {{"a", "b"}});
    if (name == "w2") {
        auto sigma = alphabet.empty() ? std::vector<std::string>{"a", "b", "c"} : alphabet;
        Objective o = make_safety(repetition_dfa(sigma));
        o.declared_prefix_increasing = true;
        return o;
    }
    if (name == "w3") return make_safety(gap_pattern_dfa(m, n), /*complemented=*/true);
    if (name == "w4") return w4_objective();
    if (name == "w5") {
        auto sigma = alphabet.empty() ? std::vector<std::string>{"a", "b", "c"} : alphabet;
        std::vector<std::vector<std::string>> family;
        for (size_t i = 0; i < sigma.size(); ++i)
            for (size_t j = i + 1; j < sigma.size(); ++j)
                family.push_back({sigma[i], sigma[j]});
        return make_muller(sigma, family);
    }
    if (name == "alternation") return make_safety(alternation_dfa());
    if (name == "parity3") {
        auto sigma = alphabet.empty() ? std::vector<std::string>{"0", "1", "2"} : alphabet;
        if (sigma.size() != 3) throw std::runtime_error("parity3 needs three colors");
        return make_parity(sigma, {0, 1, 2});
    }
    throw std::runtime_error("unknown builtin objective: " + name);
}

bool lasso_membership(const Objective& obj, const LassoWord& w) {
    Monitor mon = compile_monitor(obj);
    return monitor_lasso_accepts(mon, w, /*eps_neutral=*/false);
}

bool eps_lasso_membership(const Objective& obj, const LassoWord& w) {
    Monitor mon = compile_monitor(obj);
    return monitor_lasso_accepts(mon, w, /*eps_neutral=*/true);
}

}  // namespace memoria
