#include "memoria/order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace memoria {

OrderedGraph make_ordered(ColoredGraph g, const std::vector<std::pair<int, int>>& generators) {
    int n = g.n();
    OrderedGraph og;
    og.graph = std::move(g);
    og.leq.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) og.leq[i][i] = 1;
    for (auto [lo, hi] : generators) og.leq[lo][hi] = 1;
    // Floyd-Warshall style transitive closure.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (og.leq[i][k])
                for (int j = 0; j < n; ++j)
                    if (og.leq[k][j]) og.leq[i][j] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (og.leq[i][j] && og.leq[j][i])
                throw std::runtime_error("order is not antisymmetric: " + og.graph.vertices[i] +
                                         " and " + og.graph.vertices[j]);
    return og;
}

std::optional<MonotoneWitness> check_monotone(const OrderedGraph& og) {
    const ColoredGraph& g = og.graph;
    int n = g.n();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (!og.le(v, u)) continue;  // u >= v
            for (int ei : g.out[v]) {
                const Edge& e = g.edges[ei];
                for (int up = 0; up < n; ++up) {
                    if (!og.le(up, e.dst)) continue;  // v' >= u'
                    if (!g.has_edge(u, e.color, up)) return MonotoneWitness{u, v, e.dst, up, e.color};
                }
            }
        }
    return std::nullopt;
}

OrderedGraph monotone_closure(OrderedGraph og) {
    int n = og.graph.n();
    // For each color build the relation and close it: u >= v -c-> v' >= u'.
    std::vector<Edge> extra;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (!og.le(v, u)) continue;
            for (int ei : og.graph.out[v]) {
                const Edge& e = og.graph.edges[ei];
                for (int up = 0; up < n; ++up)
                    if (og.le(up, e.dst)) extra.push_back({u, e.color, up});
            }
        }
    og.graph.edges.insert(og.graph.edges.end(), extra.begin(), extra.end());
    og.graph.finalize();
    return og;
}

namespace {

/** Kuhn's augmenting-path matching on the strict-order bipartite graph. */
struct Matching {
    int n;
    const OrderedGraph& og;
    std::vector<int> match_right;  // right vertex -> left vertex or -1
    std::vector<int> match_left;   // left vertex -> right vertex or -1

    explicit Matching(const OrderedGraph& og_) : n(og_.graph.n()), og(og_) {
        match_right.assign(n, -1);
        match_left.assign(n, -1);
        for (int i = 0; i < n; ++i) {
            std::vector<char> used(n, 0);
            try_augment(i, used);
        }
    }

    bool try_augment(int left, std::vector<char>& used) {
        for (int right = 0; right < n; ++right) {
            if (used[right] || !og.lt(left, right)) continue;
            used[right] = 1;
            if (match_right[right] < 0 || try_augment(match_right[right], used)) {
                match_right[right] = left;
                match_left[left] = right;
                return true;
            }
        }
        return false;
    }
};

}  // namespace

WidthResult poset_width(const OrderedGraph& og) {
    int n = og.graph.n();
    if (n == 0) throw std::runtime_error("poset_width: empty poset");
    Matching m(og);
    // Koenig: alternating reachability from unmatched left vertices gives a
    // minimum vertex cover; vertices free on both sides form a max antichain.
    std::vector<char> visited_left(n, 0), visited_right(n, 0);
    std::vector<int> stack;
    for (int i = 0; i < n; ++i)
        if (m.match_left[i] < 0) {
            visited_left[i] = 1;
            stack.push_back(i);
        }
    while (!stack.empty()) {
        int left = stack.back();
        stack.pop_back();
        for (int right = 0; right < n; ++right) {
            if (!og.lt(left, right) || visited_right[right]) continue;
            visited_right[right] = 1;
            int nl = m.match_right[right];
            if (nl >= 0 && !visited_left[nl]) {
                visited_left[nl] = 1;
                stack.push_back(nl);
            }
        }
    }
    // Cover = (unvisited left) + (visited right); antichain = both-free vertices.
    WidthResult res;
    for (int v = 0; v < n; ++v)
        if (visited_left[v] && !visited_right[v]) res.antichain.push_back(v);
    res.width = static_cast<int>(res.antichain.size());
    return res;
}

std::vector<std::vector<int>> chain_decomposition(const OrderedGraph& og) {
    int n = og.graph.n();
    Matching m(og);
    std::vector<std::vector<int>> chains;
    std::vector<char> is_start(n, 1);
    for (int r = 0; r < n; ++r)
        if (m.match_right[r] >= 0) is_start[r] = 0;
    for (int v = 0; v < n; ++v) {
        if (!is_start[v]) continue;
        std::vector<int> chain;
        int cur = v;
        while (cur >= 0) {
            chain.push_back(cur);
            cur = m.match_left[cur];
        }
        chains.push_back(std::move(chain));
    }
    // Canonical order: smallest minimal element (by vertex id) first.
    std::sort(chains.begin(), chains.end(), [&](const auto& a, const auto& b) {
        return og.graph.vertices[a.front()] < og.graph.vertices[b.front()];
    });
    return chains;
}

EpsSeparatedGraph eps_separate(const OrderedGraph& og) {
    if (check_monotone(og)) throw std::runtime_error("eps_separate: input is not monotone");
    auto chains = chain_decomposition(og);
    EpsSeparatedGraph eg;
    eg.graph = og.graph;
    if (!eg.graph.cindex.count(kEps)) eg.graph.alphabet.push_back(kEps);
    eg.graph.finalize();
    int eps = *eg.graph.eps_color();
    eg.part.assign(eg.graph.n(), -1);
    for (size_t ci = 0; ci < chains.size(); ++ci) {
        eg.part_names.push_back("m" + std::to_string(ci));
        for (int v : chains[ci]) eg.part[v] = static_cast<int>(ci);
        for (int v : chains[ci])
            for (int w : chains[ci])
                if (og.le(w, v)) eg.graph.edges.push_back({v, eps, w});  // v >= w gives v -eps-> w
    }
    eg.graph.finalize();
    return eg;
}

OrderedGraph induced_order(const EpsSeparatedGraph& eg) {
    OrderedGraph og;
    og.graph = eg.graph;
    int n = eg.graph.n();
    og.leq.assign(n, std::vector<char>(n, 0));
    auto eps = eg.graph.eps_color();
    for (int i = 0; i < n; ++i) og.leq[i][i] = 1;
    if (eps)
        for (const Edge& e : eg.graph.edges)
            if (e.color == *eps) og.leq[e.dst][e.src] = 1;  // v' -eps-> v means v <= v'
    return og;
}

std::optional<std::string> check_eps_separated(const EpsSeparatedGraph& eg) {
    const ColoredGraph& g = eg.graph;
    int n = g.n();
    auto epsOpt = g.eps_color();
    if (!epsOpt) return "alphabet has no eps color";
    int eps = *epsOpt;
    if (static_cast<int>(eg.part.size()) != n) return "partition is not total";
    for (int v = 0; v < n; ++v)
        if (eg.part[v] < 0 || eg.part[v] >= eg.breadth())
            return "vertex " + g.vertices[v] + " has no valid part";

    // eps is a partial order: reflexive, transitive, antisymmetric.
    std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
    for (const Edge& e : g.edges)
        if (e.color == eps) le[e.dst][e.src] = 1;
    for (int v = 0; v < n; ++v)
        if (!le[v][v]) return "missing eps-loop at " + g.vertices[v];
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (le[a][b] && le[b][c] && !le[a][c])
                    return "eps order not transitive at " + g.vertices[a] + "," + g.vertices[b] +
                           "," + g.vertices[c];
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (le[a][b] && le[b][a])
                return "eps order not antisymmetric: " + g.vertices[a] + "," + g.vertices[b];

    // eps-edges stay inside one part; parts are chains.
    for (const Edge& e : g.edges)
        if (e.color == eps && eg.part[e.src] != eg.part[e.dst])
            return "eps-edge crosses parts: " + g.vertices[e.src] + " -> " + g.vertices[e.dst];
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (eg.part[a] == eg.part[b] && !le[a][b] && !le[b][a])
                return "part " + eg.part_names[eg.part[a]] + " is not a chain: " + g.vertices[a] +
                       " vs " + g.vertices[b];

    // Monotone for the induced order.
    OrderedGraph og = induced_order(eg);
    if (auto w = check_monotone(og)) {
        std::ostringstream os;
        os << "not monotone: " << g.vertices[w->u] << " >= " << g.vertices[w->v] << " -"
           << g.alphabet[w->color] << "-> " << g.vertices[w->vp] << " >= " << g.vertices[w->up];
        return os.str();
    }
    return std::nullopt;
}

std::optional<std::string> check_chromatic(const EpsSeparatedGraph& eg, const ChromaticTag& tag) {
    const ColoredGraph& g = eg.graph;
    if (static_cast<int>(tag.update.size()) != eg.breadth()) return "update not total on parts";
    for (const auto& row : tag.update)
        if (static_cast<int>(row.size()) != g.num_colors()) return "update not total on colors";
    auto eps = g.eps_color();
    if (eps)
        for (int m = 0; m < eg.breadth(); ++m)
            if (tag.update[m][*eps] != m)
                return "update(" + eg.part_names[m] + ", eps) != " + eg.part_names[m];
    for (const Edge& e : g.edges)
        if (tag.update[eg.part[e.src]][e.color] != eg.part[e.dst])
            return "edge " + g.vertices[e.src] + " -" + g.alphabet[e.color] + "-> " +
                   g.vertices[e.dst] + " lands in the wrong part";
    return std::nullopt;
}

}  // namespace memoria
