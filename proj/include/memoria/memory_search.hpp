#pragma once

#include <optional>

#include "memoria/game.hpp"

namespace memoria {

/**
 * Strategy classes for the memory search:
 *   General       — any memory update (eps-free games only)
 *   EpsPreserving — eps moves must keep the memory state unchanged
 *   Chromatic     — the memory update is a function of (state, color) only
 *                   (and keeps the state on eps)
 */
enum class StrategyKind { General, EpsPreserving, Chromatic };

struct MemoryResult {
    int memory = 0;
    ProductStrategy strategy;
};

/**
 * Least number of memory states of a winning product strategy of the given
 * class, found by exhaustive search with symmetry breaking (fresh memory
 * states are introduced in increasing order; for the chromatic class the
 * update function is enumerated outermost) and sound pruning (a partial
 * strategy already exhibiting a losing consistent play is abandoned —
 * adding moves never removes consistent plays). nullopt if no winning
 * strategy with at most k_max states exists.
 */
std::optional<MemoryResult> min_memory(const Game& game, StrategyKind kind, int k_max);

}  // namespace memoria
