#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "memoria/graph.hpp"
#include "memoria/objective.hpp"

namespace memoria {

/**
 * Uniform operational form of an objective: a deterministic transducer that
 * assigns each transition a class id, plus an acceptance predicate over sets
 * of classes. A word belongs to the objective iff the set of classes seen
 * infinitely often along its run is accepted. accept_finite[q] tells whether
 * some infinite continuation from state q is accepted (used for the
 * eps-extension, where a word may end in eps^w).
 */
struct Monitor {
    std::vector<std::string> alphabet;
    int num_states = 0;
    int initial = 0;
    std::vector<std::vector<int>> delta;  // state x color -> state
    std::vector<std::vector<int>> cls;    // state x color -> class in [0, num_classes)
    int num_classes = 0;
    std::function<bool(uint64_t)> accept;  // over bitmasks of classes
    std::vector<char> accept_finite;       // per state
};

Monitor compile_monitor(const Objective& obj);

/**
 * Runs the monitor on an ultimately periodic word. With eps_neutral, eps
 * letters are skipped and an all-eps cycle is judged by accept_finite;
 * without it, eps letters are rejected as invalid input.
 */
bool monitor_lasso_accepts(const Monitor& mon, const LassoWord& w, bool eps_neutral);

/** A directed graph whose edges carry a class id and an opaque payload. */
struct ClassGraph {
    struct CEdge {
        int src, cls, dst, payload;
    };
    int n = 0;
    int num_classes = 0;
    std::vector<CEdge> edges;
};

/**
 * All sets S of classes for which some infinite path from start eventually
 * sees exactly the classes in S (each infinitely often). Computed by submask
 * enumeration over the classes present plus SCC decomposition.
 */
std::vector<uint64_t> achievable_inf_sets(const ClassGraph& cg, int start);

/**
 * A lasso from start whose cycle visits exactly the edges of class set S
 * (every class in S infinitely often, nothing else): returns the payload
 * sequences of the prefix and the cycle. Throws if S is not achievable.
 */
std::pair<std::vector<int>, std::vector<int>> realize_inf_set(const ClassGraph& cg, int start,
                                                              uint64_t S);

/**
 * How a path that ends in a sink vertex is judged: Vacuous ignores it (only
 * infinite paths count), EpsTail continues it with eps^w, so the finite word
 * read so far must have some winning continuation. EpsTail is the right rule
 * for trees and truncated unfoldings.
 */
enum class SinkRule { Vacuous, EpsTail };

/**
 * Product of a colored graph with a monitor. Extended classes: ids below
 * mon.num_classes are monitor transition classes; id num_classes + q marks an
 * eps-edge taken while the monitor sits in state q. Edge payloads are indices
 * into g.edges (-1 for synthesized eps-tail loops).
 */
struct MonitorProduct {
    ClassGraph cg;
    std::vector<std::pair<int, int>> nodes;  // node id -> (graph vertex, monitor state)
    int start = -1;
};

MonitorProduct monitor_product(const ColoredGraph& g, const Monitor& mon, int from,
                               SinkRule rule = SinkRule::Vacuous);

/** Acceptance over extended-class sets: a set with real classes is judged by
 *  mon.accept on its real part; a pure eps set by accept_finite of its state. */
bool extended_accept(const Monitor& mon, uint64_t S);

struct SatisfyResult {
    bool ok = true;
    int witness_vertex = -1;   // a vertex from which satisfaction fails
    LassoWord counterexample;  // a rejected path from witness_vertex (colors of g's alphabet)
};

/**
 * Does every infinite path of g (from `from`, or from every vertex when
 * unset) produce a word in the objective's eps-extension? On failure returns
 * a concrete rejected lasso.
 */
SatisfyResult graph_satisfies(const ColoredGraph& g, const Monitor& mon,
                              std::optional<int> from = std::nullopt,
                              SinkRule rule = SinkRule::Vacuous);
SatisfyResult graph_satisfies(const ColoredGraph& g, const Objective& obj,
                              std::optional<int> from = std::nullopt,
                              SinkRule rule = SinkRule::Vacuous);

}  // namespace memoria
