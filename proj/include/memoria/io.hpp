#pragma once

#include <string>

#include <json.hpp>

#include "memoria/game.hpp"
#include "memoria/graph.hpp"
#include "memoria/objective.hpp"
#include "memoria/order.hpp"

namespace memoria {

using Json = nlohmann::json;

/**
 * Graph document: {"alphabet": [...], "vertices": [{"id": ...}, ...],
 * "edges": [[src, color, dst], ...]}. Vertices and colors are referenced by
 * name throughout; the color name "eps" is reserved for neutral edges.
 * Ordered graphs add "order" (list of [lesser, greater] pairs, the full
 * non-reflexive relation); eps-separated graphs add "parts" (vertex -> part
 * name) and, when chromatic, "delta" (part name -> color -> part name).
 */
Json graph_to_json(const ColoredGraph& g);
ColoredGraph graph_from_json(const Json& j);

Json ordered_to_json(const OrderedGraph& og);
OrderedGraph ordered_from_json(const Json& j);

Json separated_to_json(const EpsSeparatedGraph& eg, const ChromaticTag* tag = nullptr);
EpsSeparatedGraph separated_from_json(const Json& j);

/** Objective document, tagged by "kind": muller / parity / parity_automaton /
 *  safety / lexico / union / intersection / builtin. */
Json objective_to_json(const Objective& obj);
Objective objective_from_json(const Json& j);

/** Game document = graph document + "eve" (list of vertex ids) +
 *  "initial" + "objective" (inline document) + "epsilon". */
Json game_to_json(const Game& game);
Game game_from_json(const Json& j);

/** Strategy document: {"memory": ["m0", ...], "initial": "m0",
 *  "edges": [[src, mem, color, dst, mem], ...], "delta"?: {mem: {color: mem}}}. */
Json strategy_to_json(const ProductStrategy& s, const ColoredGraph& g);
ProductStrategy strategy_from_json(const Json& j, const ColoredGraph& g);

/** DOT rendering; eve (when given) draws owned vertices as circles, the rest
 *  as boxes. Edge labels are color names. */
std::string graph_dot(const ColoredGraph& g, const std::vector<char>* eve = nullptr);

Json load_json(const std::string& path);
void save_text(const std::string& path, const std::string& text);

}  // namespace memoria
