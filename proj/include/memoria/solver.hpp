#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "memoria/game.hpp"
#include "memoria/order.hpp"
#include "memoria/universal.hpp"

namespace memoria {

/**
 * Reference solver: products the game with its objective's monitor, turns
 * the acceptance condition over transition classes into a deterministic
 * parity automaton via the alternating-membership tree, and solves the
 * resulting parity game with the recursive attractor algorithm. Returns
 * Eve's winning region (one flag per game vertex, as starting vertex).
 */
std::vector<char> solve_oracle(const Game& game);

/**
 * Simulation-based solver against a monotone graph u: Eve wins the safety
 * game where she must mirror every game move by a u-edge of the same color
 * without ever getting stuck, starting from a u-vertex all of whose infinite
 * paths satisfy the objective.
 */
struct SimulationResult {
    std::vector<char> region;          // per game vertex: Eve wins from it
    std::vector<std::vector<char>> alive;  // [game vertex][u vertex]: safe pair
    std::vector<char> root;            // u vertices from which u satisfies the objective
};

SimulationResult solve_via_universal(const Game& game, const OrderedGraph& u);

/**
 * Strategy with at most width(u) memory states (plus possibly one initial
 * state) read off the simulation: memory states are the chains of u, and the
 * position (v, m) stands for the least u-vertex of chain m that is safe at v.
 * Requires u monotone and closed (check_monotone passes).
 */
ProductStrategy extract_strategy(const Game& game, const OrderedGraph& u,
                                 const SimulationResult& sim);

/**
 * Randomized universality check: samples random trees over the objective's
 * alphabet; every tree all of whose branches stay extendable inside the
 * objective must map into u with its root sent to a vertex of
 * SimulationResult-style root set. Returns the number of failures.
 */
struct UniversalitySample {
    int samples = 0;
    int satisfying = 0;
    int failures = 0;
    std::string first_failure;
};

UniversalitySample check_universality_sample(const OrderedGraph& u, const Objective& obj,
                                             int samples, int max_size, uint64_t seed);

/**
 * Exhaustive search over all two-state transition-priority automata on
 * {a, b, c} with priorities {0, 1, 2}, rejecting each on a fixed family of
 * lassos whose membership in the w4 objective is known; also checks that the
 * shipped three-state automaton classifies the whole family correctly.
 */
struct ProbeResult {
    int tested = 0;
    int consistent_two_state = 0;
    bool three_state_ok = false;
};

ProbeResult parity_automaton_minimality_probe();

}  // namespace memoria
