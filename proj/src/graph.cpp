#include "memoria/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace memoria {

int ColoredGraph::vid(const std::string& name) const {
    auto it = vindex.find(name);
    if (it == vindex.end()) throw std::runtime_error("unknown vertex: " + name);
    return it->second;
}

int ColoredGraph::cid(const std::string& name) const {
    auto it = cindex.find(name);
    if (it == cindex.end()) throw std::runtime_error("unknown color: " + name);
    return it->second;
}

bool ColoredGraph::has_edge(int src, int color, int dst) const {
    Edge e{src, color, dst};
    return std::binary_search(edges.begin(), edges.end(), e);
}

std::optional<int> ColoredGraph::eps_color() const {
    auto it = cindex.find(kEps);
    if (it == cindex.end()) return std::nullopt;
    return it->second;
}

void ColoredGraph::finalize() {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    vindex.clear();
    cindex.clear();
    for (int i = 0; i < n(); ++i) vindex[vertices[i]] = i;
    for (int c = 0; c < num_colors(); ++c) cindex[alphabet[c]] = c;
    out.assign(n(), {});
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) out[edges[i].src].push_back(i);
}

std::string Diagnostic::str() const {
    std::ostringstream os;
    for (const auto& e : errors) os << "error: " << e << "\n";
    if (!sinks.empty()) {
        os << "sinks:";
        for (const auto& s : sinks) os << " " << s;
        os << "\n";
    }
    return os.str();
}

std::optional<ColoredGraph> validate(const RawGraph& raw, Diagnostic& diag) {
    diag = {};
    ColoredGraph g;
    g.alphabet = raw.alphabet;
    g.vertices = raw.vertices;
    {
        std::set<std::string> seen;
        for (const auto& v : raw.vertices)
            if (!seen.insert(v).second) diag.errors.push_back("duplicate vertex identifier: " + v);
        seen.clear();
        for (const auto& c : raw.alphabet)
            if (!seen.insert(c).second) diag.errors.push_back("duplicate color identifier: " + c);
    }
    std::unordered_map<std::string, int> vi, ci;
    for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i) vi[g.vertices[i]] = i;
    for (int c = 0; c < static_cast<int>(g.alphabet.size()); ++c) ci[g.alphabet[c]] = c;
    for (const auto& [src, color, dst] : raw.edges) {
        auto s = vi.find(src), d = vi.find(dst);
        auto c = ci.find(color);
        if (s == vi.end()) diag.errors.push_back("dangling edge endpoint: " + src);
        if (d == vi.end()) diag.errors.push_back("dangling edge endpoint: " + dst);
        if (c == ci.end()) diag.errors.push_back("unknown color: " + color);
        if (s != vi.end() && d != vi.end() && c != ci.end())
            g.edges.push_back({s->second, c->second, d->second});
    }
    if (!diag.errors.empty()) return std::nullopt;
    g.is_graph = raw.want_graph;
    g.finalize();
    if (raw.want_graph) {
        for (int v = 0; v < g.n(); ++v)
            if (g.out[v].empty()) diag.sinks.push_back(g.vertices[v]);
        if (!diag.sinks.empty()) return std::nullopt;
    }
    return g;
}

ColoredGraph make_graph(std::vector<std::string> alphabet, std::vector<std::string> vertices,
                        std::vector<std::array<std::string, 3>> edges, bool graph) {
    RawGraph raw{std::move(alphabet), std::move(vertices), std::move(edges), graph};
    Diagnostic diag;
    auto g = validate(raw, diag);
    if (!g) throw std::runtime_error("make_graph: " + diag.str());
    return *g;
}

std::optional<Edge> check_morphism(const ColoredGraph& source, const ColoredGraph& target,
                                   const VertexMap& map) {
    if (static_cast<int>(map.size()) != source.n())
        throw std::runtime_error("check_morphism: map not total on source vertices");
    for (const Edge& e : source.edges) {
        // Colors are matched by name: source and target may index their alphabets differently.
        int tc = target.cid(source.alphabet[e.color]);
        if (!target.has_edge(map[e.src], tc, map[e.dst])) return e;
    }
    return std::nullopt;
}

namespace {

bool morphism_backtrack(const ColoredGraph& s, const ColoredGraph& t,
                        const std::vector<int>& order, size_t pos,
                        const std::vector<std::vector<int>>& allowed,
                        const std::vector<int>& color_map,
                        const std::vector<std::vector<Edge>>& incident, VertexMap& phi) {
    if (pos == order.size()) return true;
    int v = order[pos];
    for (int w : allowed[v]) {
        bool okay = true;
        for (const Edge& e : incident[v]) {
            int a = (e.src == v) ? w : phi[e.src];
            int b = (e.dst == v) ? w : phi[e.dst];
            if (e.src != v && phi[e.src] < 0) continue;
            if (e.dst != v && phi[e.dst] < 0) continue;
            if (!t.has_edge(a, color_map[e.color], b)) {
                okay = false;
                break;
            }
        }
        if (!okay) continue;
        phi[v] = w;
        if (morphism_backtrack(s, t, order, pos + 1, allowed, color_map, incident, phi)) return true;
        phi[v] = -1;
    }
    return false;
}

}  // namespace

std::optional<VertexMap> find_graph_morphism(
    const ColoredGraph& source, const ColoredGraph& target,
    std::optional<std::pair<int, std::vector<int>>> anchor) {
    std::vector<int> color_map(source.num_colors());
    for (int c = 0; c < source.num_colors(); ++c) {
        auto it = target.cindex.find(source.alphabet[c]);
        if (it == target.cindex.end()) {
            // A used color missing from the target alphabet rules out any morphism.
            bool used = false;
            for (const Edge& e : source.edges) used = used || e.color == c;
            if (used) return std::nullopt;
            color_map[c] = -1;
        } else {
            color_map[c] = it->second;
        }
    }

    std::vector<std::vector<int>> allowed(source.n());
    std::vector<int> all(target.n());
    for (int i = 0; i < target.n(); ++i) all[i] = i;
    for (int v = 0; v < source.n(); ++v) allowed[v] = all;
    if (anchor) allowed[anchor->first] = anchor->second;

    std::vector<std::vector<Edge>> incident(source.n());
    for (const Edge& e : source.edges) {
        incident[e.src].push_back(e);
        if (e.dst != e.src) incident[e.dst].push_back(e);
    }

    // Visit the anchored vertex first, then grow along edges so that partial
    // assignments are checked as early as possible.
    std::vector<int> order;
    std::vector<char> queued(source.n(), 0);
    std::queue<int> bfs;
    auto push = [&](int v) {
        if (!queued[v]) {
            queued[v] = 1;
            bfs.push(v);
        }
    };
    if (anchor) push(anchor->first);
    for (int v = 0; v < source.n(); ++v) {
        push(v);
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            order.push_back(u);
            for (const Edge& e : incident[u]) {
                push(e.src);
                push(e.dst);
            }
        }
    }

    VertexMap phi(source.n(), -1);
    if (morphism_backtrack(source, target, order, 0, allowed, color_map, incident, phi))
        return phi;
    return std::nullopt;
}

RootedTree unfold(const ColoredGraph& g, int v0, int depth) {
    RootedTree t;
    t.graph.alphabet = g.alphabet;
    t.graph.is_graph = false;
    struct Node {
        int base;
        int depth;
    };
    std::vector<Node> nodes;
    auto add = [&](int base, int d, const std::string& name) {
        nodes.push_back({base, d});
        t.graph.vertices.push_back(name);
        t.base_vertex.push_back(base);
        return static_cast<int>(nodes.size()) - 1;
    };
    add(v0, 0, g.vertices[v0]);
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].depth == depth) continue;
        for (int ei : g.out[nodes[i].base]) {
            const Edge& e = g.edges[ei];
            std::string name =
                t.graph.vertices[i] + "." + g.alphabet[e.color] + "." + g.vertices[e.dst];
            int child = add(e.dst, nodes[i].depth + 1, name);
            t.graph.edges.push_back({static_cast<int>(i), e.color, child});
        }
    }
    t.graph.finalize();
    t.root = 0;
    return t;
}

ColoredGraph restrict_to(const ColoredGraph& g, const std::vector<int>& keep) {
    std::vector<char> in(g.n(), 0);
    for (int v : keep) in[v] = 1;
    ColoredGraph r;
    r.alphabet = g.alphabet;
    r.is_graph = false;
    std::vector<int> remap(g.n(), -1);
    for (int v = 0; v < g.n(); ++v)
        if (in[v]) {
            remap[v] = static_cast<int>(r.vertices.size());
            r.vertices.push_back(g.vertices[v]);
        }
    for (const Edge& e : g.edges)
        if (in[e.src] && in[e.dst]) r.edges.push_back({remap[e.src], e.color, remap[e.dst]});
    r.finalize();
    return r;
}

std::vector<int> reachable_from(const ColoredGraph& g, int v) {
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack{v}, result;
    seen[v] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        result.push_back(u);
        for (int ei : g.out[u]) {
            int w = g.edges[ei].dst;
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<std::vector<int>> sccs(const ColoredGraph& g) {
    // Iterative Tarjan; components are emitted in reverse topological order.
    int n = g.n();
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stk;
    std::vector<std::vector<int>> result;
    int counter = 0;

    struct Frame {
        int v;
        size_t ei;
    };
    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stk.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.ei < g.out[f.v].size()) {
                int w = g.edges[g.out[f.v][f.ei++]].dst;
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stk.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    std::vector<int> component;
                    int w;
                    do {
                        w = stk.back();
                        stk.pop_back();
                        on_stack[w] = 0;
                        comp[w] = static_cast<int>(result.size());
                        component.push_back(w);
                    } while (w != f.v);
                    std::sort(component.begin(), component.end());
                    result.push_back(std::move(component));
                }
                int v = f.v;
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
        }
    }
    return result;
}

}  // namespace memoria
