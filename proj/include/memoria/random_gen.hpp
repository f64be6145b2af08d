#pragma once

#include <random>
#include <vector>

#include "memoria/game.hpp"
#include "memoria/graph.hpp"
#include "memoria/objective.hpp"
#include "memoria/order.hpp"

namespace memoria {

using Rng = std::mt19937_64;

/** Sink-free random graph: 2..max_n vertices, out-degree 1..3 each. */
ColoredGraph random_graph(Rng& rng, const std::vector<std::string>& alphabet, int max_n);

/** Random game over the objective's alphabet: random ownership and start. */
Game random_game(Rng& rng, const Objective& obj, int max_n);

/** Random partial order on 1..max_n otherwise edge-less vertices. */
OrderedGraph random_poset(Rng& rng, int max_n);

/** Random ultimately periodic word: prefix 0..max_len, cycle 1..max_len letters. */
LassoWord random_lasso(Rng& rng, const std::vector<std::string>& alphabet, int max_len);

}  // namespace memoria
