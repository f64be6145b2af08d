#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace memoria {

/**
 * Deterministic finite automaton with a total transition function and an
 * optional absorbing sink state. For safety objectives the sink marks bad
 * prefixes; for reachability-style (complemented) objectives it marks
 * matched prefixes.
 */
struct Dfa {
    std::vector<std::string> alphabet;
    int num_states = 0;
    int initial = 0;
    int sink = -1;                         // absorbing; -1 = none
    std::vector<std::vector<int>> delta;   // state x color -> state

    int step(int q, int c) const { return delta[q][c]; }
};

struct Objective;
using ObjectivePtr = std::shared_ptr<const Objective>;

/**
 * Symbolic winning condition. Muller / Parity / SafetyRegular are the leaf
 * classes from the theory; ParityAutomaton covers objectives given by a
 * deterministic automaton with transition priorities (needed for W4);
 * Lexico / Union / Intersection combine objectives.
 */
struct Objective {
    enum class Kind { Muller, Parity, ParityAutomaton, SafetyRegular, Lexico, Union, Intersection };

    Kind kind;
    std::vector<std::string> alphabet;

    // Muller: family of nonempty color sets, stored as sorted index lists.
    std::vector<std::vector<int>> family;

    // Parity: priority per color, max-even acceptance.
    std::vector<int> priorities;

    // ParityAutomaton / SafetyRegular.
    Dfa dfa;
    std::vector<std::vector<int>> trans_priority;  // state x color (ParityAutomaton)
    bool complemented = false;  // SafetyRegular: W = complement of Safe(L) (reach the sink)

    // Lexico (exactly two parts, disjoint alphabets; left is the inner/less
    // significant component), Union, Intersection.
    std::vector<ObjectivePtr> parts;

    bool declared_prefix_independent = false;
    bool declared_prefix_increasing = false;

    int cid(const std::string& color) const;
};

Objective make_muller(std::vector<std::string> alphabet,
                      std::vector<std::vector<std::string>> family);
Objective make_parity(std::vector<std::string> alphabet, std::vector<int> priorities);
Objective make_parity_automaton(Dfa dfa, std::vector<std::vector<int>> trans_priority);
Objective make_safety(Dfa bad_prefix_dfa, bool complemented = false);
Objective make_lexico(Objective left, Objective right);
Objective make_union(std::vector<Objective> parts);
Objective make_intersection(std::vector<Objective> parts);

/**
 * Named example objectives:
 *   w1                          — Muller({{a,b}}) over {a,b}
 *   w2 (alphabet)               — no two consecutive equal colors (safety)
 *   w3 (m, n)                   — (C* a)^m C^{>=n} a C^w over {a,b} (reachability,
 *                                 stored as complemented safety)
 *   w4                          — InfOften(bb) or (FinOften(b) and FinOften(aa))
 *                                 over {a,b,c}, as a 3-state transition-priority automaton
 *   w5 (alphabet)               — exactly two colors seen infinitely often (Muller)
 *   alternation                 — the single word (ab)^w (safety)
 */
Objective builtin_objective(const std::string& name,
                            const std::vector<std::string>& alphabet = {},
                            int m = 1, int n = 1);

/** An ultimately periodic word u v^w; letters are color names (eps permitted). */
struct LassoWord {
    std::vector<std::string> prefix;
    std::vector<std::string> cycle;
};

bool lasso_membership(const Objective& obj, const LassoWord& w);

/** Membership in the eps-extension: eps letters are neutral; an eventually-eps
 *  word u eps^w belongs iff u has some winning continuation. */
bool eps_lasso_membership(const Objective& obj, const LassoWord& w);

}  // namespace memoria
