#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace memoria {

/** Reserved meta-color for neutral edges; never part of an objective alphabet. */
inline const std::string kEps = "eps";

struct Edge {
    int src = -1;
    int color = -1;
    int dst = -1;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/**
 * A finite directed graph with edges labeled by colors from a declared
 * alphabet. Colors and vertices are opaque string identifiers; internally
 * everything is indexed. Edges are kept sorted and duplicate-free so that
 * serialization is deterministic and membership tests are binary searches.
 *
 * A value flagged is_graph has at least one outgoing edge from every vertex
 * (no sinks); otherwise it is a pregraph.
 */
struct ColoredGraph {
    std::vector<std::string> alphabet;
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    bool is_graph = true;

    // Derived indexes, rebuilt by finalize().
    std::vector<std::vector<int>> out;  // vertex -> indices into edges
    std::unordered_map<std::string, int> vindex;
    std::unordered_map<std::string, int> cindex;

    int n() const { return static_cast<int>(vertices.size()); }
    int num_colors() const { return static_cast<int>(alphabet.size()); }
    int vid(const std::string& name) const;
    int cid(const std::string& name) const;
    bool has_edge(int src, int color, int dst) const;
    bool is_eps_color(int c) const { return alphabet[c] == kEps; }
    std::optional<int> eps_color() const;

    /** Sorts/dedups edges and rebuilds all derived indexes. */
    void finalize();
};

struct Diagnostic {
    std::vector<std::string> errors;
    std::vector<std::string> sinks;  // vertices with no outgoing edge when graph status was requested
    bool ok() const { return errors.empty() && sinks.empty(); }
    std::string str() const;
};

/** Raw, unchecked graph description as it comes from a file or a caller. */
struct RawGraph {
    std::vector<std::string> alphabet;
    std::vector<std::string> vertices;
    std::vector<std::array<std::string, 3>> edges;  // [src, color, dst]
    bool want_graph = true;                         // request sink-free validation
};

/**
 * Validates a raw description: every edge endpoint declared, every color in
 * the alphabet, no duplicate identifiers. When graph status is requested the
 * diagnostic lists every sink. Returns the validated value on success.
 */
std::optional<ColoredGraph> validate(const RawGraph& raw, Diagnostic& diag);

/** Convenience builder for internal constructions; throws on invalid input. */
ColoredGraph make_graph(std::vector<std::string> alphabet,
                        std::vector<std::string> vertices,
                        std::vector<std::array<std::string, 3>> edges,
                        bool graph = true);

struct RootedTree {
    ColoredGraph graph;
    int root = 0;
    /** For unfoldings: tree vertex -> base-graph vertex (last vertex of the path). */
    std::vector<int> base_vertex;
};

/** Total map from source vertices (by index) to target vertices (by index). */
using VertexMap = std::vector<int>;

/** nullopt = ok; otherwise the first source edge whose image is missing. */
std::optional<Edge> check_morphism(const ColoredGraph& source, const ColoredGraph& target,
                                   const VertexMap& map);

/**
 * Backtracking search for a color-preserving morphism source -> target.
 * anchor, when given, constrains one source vertex to a set of allowed
 * target vertices. Complete: returns none only if no morphism exists.
 */
std::optional<VertexMap> find_graph_morphism(
    const ColoredGraph& source, const ColoredGraph& target,
    std::optional<std::pair<int, std::vector<int>>> anchor = std::nullopt);

/**
 * Unfolding from v0 truncated at the given depth. Tree vertices are the
 * paths of length <= depth from v0; frontier nodes are sinks, so the result
 * is tagged pregraph.
 */
RootedTree unfold(const ColoredGraph& g, int v0, int depth);

/** Induced subgraph on `keep`; result tagged pregraph (may have sinks). */
ColoredGraph restrict_to(const ColoredGraph& g, const std::vector<int>& keep);

std::vector<int> reachable_from(const ColoredGraph& g, int v);

/** Strongly connected components in reverse topological order. */
std::vector<std::vector<int>> sccs(const ColoredGraph& g);

}  // namespace memoria
