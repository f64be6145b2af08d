#pragma once

#include <optional>
#include <string>
#include <vector>

#include "memoria/graph.hpp"

namespace memoria {

/**
 * A colored graph together with a partial order on its vertices, stored as
 * the full reflexive-transitive closure (leq[i][j] means i <= j).
 */
struct OrderedGraph {
    ColoredGraph graph;
    std::vector<std::vector<char>> leq;

    bool le(int i, int j) const { return leq[i][j] != 0; }
    bool lt(int i, int j) const { return i != j && leq[i][j]; }
};

/**
 * Builds an OrderedGraph from generator pairs (lesser, greater); computes the
 * reflexive-transitive closure and rejects cycles (antisymmetry violations).
 */
OrderedGraph make_ordered(ColoredGraph g, const std::vector<std::pair<int, int>>& generators);

struct MonotoneWitness {
    int u, v, vp, up, color;  // u >= v -c-> v' >= u' but no u -c-> u'
};

/** nullopt = monotone; otherwise the first violating quadruple. */
std::optional<MonotoneWitness> check_monotone(const OrderedGraph& og);

/** Adds every edge implied by monotonicity (u >= v -c-> v' >= u' gives u -c-> u'). */
OrderedGraph monotone_closure(OrderedGraph og);

struct WidthResult {
    int width;
    std::vector<int> antichain;  // a maximum antichain, sorted by vertex index
};

/** Maximum-antichain size, computed via minimum chain cover (Dilworth duality). */
WidthResult poset_width(const OrderedGraph& og);

/**
 * Dilworth chain decomposition by bipartite-matching reduction: returns
 * poset_width-many disjoint chains covering all vertices, each listed in
 * increasing order, canonicalized smallest-minimal-element-first.
 */
std::vector<std::vector<int>> chain_decomposition(const OrderedGraph& og);

/**
 * Monotone graph with a chain partition and intra-chain eps-edges; the order
 * is the one induced by the eps-edges (v <= v' iff v' -eps-> v), total within
 * each part and empty across parts.
 */
struct EpsSeparatedGraph {
    ColoredGraph graph;  // alphabet contains "eps"
    std::vector<int> part;
    std::vector<std::string> part_names;

    int breadth() const { return static_cast<int>(part_names.size()); }
};

/** Update function of a chromatic eps-separated graph: part x color -> part. */
struct ChromaticTag {
    std::vector<std::vector<int>> update;  // indexed by [part][color of graph alphabet]
};

/**
 * Turns a monotone ordered graph into an eps-separated one: decomposes into
 * width-many chains and adds v -eps-> v' whenever v >= v' within one chain
 * (including eps-loops). Non-eps edges are unchanged.
 */
EpsSeparatedGraph eps_separate(const OrderedGraph& og);

/** nullopt = all EpsSeparatedGraph invariants hold; else a description of the violation. */
std::optional<std::string> check_eps_separated(const EpsSeparatedGraph& eg);

/** nullopt = every edge's part change follows the update function and update(m, eps) = m. */
std::optional<std::string> check_chromatic(const EpsSeparatedGraph& eg, const ChromaticTag& tag);

/** The order induced by eps-edges of an eps-separated graph, as an OrderedGraph. */
OrderedGraph induced_order(const EpsSeparatedGraph& eg);

}  // namespace memoria
