#pragma once

#include <optional>
#include <string>
#include <vector>

#include "memoria/graph.hpp"
#include "memoria/objective.hpp"

namespace memoria {

/**
 * Two-player game on a colored graph: Eve owns the vertices flagged in
 * `eve`, Adam the rest. Plays start at `initial`; Eve wins a play iff the
 * produced color word lies in the objective (eps-extension when eps edges
 * are allowed).
 */
struct Game {
    ColoredGraph graph;
    std::vector<char> eve;
    int initial = 0;
    Objective objective;
    bool allows_eps = false;
};

/** Throws unless ownership is total, the initial vertex exists, every color
 *  is either eps (when allowed) or an objective color, and no vertex is a sink. */
void validate_game(const Game& game);

/**
 * Strategy with explicit memory: positions are pairs (vertex, memory state).
 * At an Eve position the listed edges are her moves (several allowed; all
 * must win); at an Adam position every game edge must be covered with a
 * successor memory state. delta, when present, claims the memory update is
 * chromatic: mem2 = delta[mem][color] on every edge.
 */
struct ProductStrategy {
    struct SEdge {
        int src, mem, color, dst, mem2;
    };
    int memory = 1;
    int initial_mem = 0;
    std::vector<SEdge> edges;
    std::optional<std::vector<std::vector<int>>> delta;  // [mem][color]
};

struct VerifyResult {
    bool ok = true;
    std::string reason;
    LassoWord losing_play;  // set when a reachable play violates the objective
};

/** Checks well-formedness (moves exist, Adam is fully covered, chromatic
 *  claim holds) and that every play consistent with the strategy wins. */
VerifyResult verify_strategy(const Game& game, const ProductStrategy& strategy);

/**
 * Named games with known memory requirements:
 *   two-loops            — one Adam fork plus a two-loop Eve vertex, objective
 *                          alternation; Eve needs two memory states
 *   count-then-exit(m,n) — solitaire chain for w3(m, n); Eve needs n+1 states
 *   answer-last          — one-letter exchange for w4; Eve needs two states
 *   recolor-eps(sigma)   — Eve picks an eps edge, Adam answers any other
 *                          color, for w2; Eve needs |sigma| states
 *   spell-then-commit(L, sigma) — Adam spells a repeat-free word (up to
 *                          length L) or commits to a two-color loop, for w2;
 *                          chromatic memory |sigma| is required
 */
Game lower_bound_game(const std::string& name, int m = 1, int n = 1,
                      const std::vector<std::string>& sigma = {});

/** Vertices 0..m-1 with a-edges going up and b-edges coming down; satisfies
 *  the objective requiring both letters infinitely often. */
ColoredGraph ascent_descent_graph(int m);

/**
 * Removes Eve moves after which the opponent or the position forces an
 * immediate color repetition (target Adam vertex can answer with the same
 * color, or target Eve vertex only has that color), iterating to a fixpoint.
 * Sound on games won by Eve from everywhere: winning moves are never removed.
 */
Game normalize_no_repeat(Game game);

/**
 * Two-memory-state strategy for a no-repetition game that Eve wins from
 * every vertex, after normalize_no_repeat: each Eve vertex fixes two moves
 * of distinct colors and plays the second exactly when the play arrived by
 * the first one's color.
 */
ProductStrategy w2_two_state_strategy(const Game& normalized);

}  // namespace memoria
