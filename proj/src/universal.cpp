#include "memoria/universal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace memoria {

namespace {

struct Assembly {
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    std::vector<std::pair<int, int>> gens;  // (lesser, greater)

    int add(std::string name) {
        vertices.push_back(std::move(name));
        return static_cast<int>(vertices.size()) - 1;
    }
};

OrderedGraph finish(std::vector<std::string> alphabet, Assembly a) {
    ColoredGraph g;
    g.alphabet = std::move(alphabet);
    g.vertices = std::move(a.vertices);
    g.edges = std::move(a.edges);
    g.is_graph = false;
    g.finalize();
    return make_ordered(std::move(g), a.gens);
}

/** Copies the parts into one assembly (prefixing names); returns per-part vertex lists. */
std::vector<std::vector<int>> merge_parts(Assembly& a, const std::vector<OrderedGraph>& parts) {
    std::vector<std::vector<int>> ids(parts.size());
    for (size_t i = 0; i < parts.size(); ++i) {
        const ColoredGraph& g = parts[i].graph;
        for (int v = 0; v < g.n(); ++v)
            ids[i].push_back(a.add("p" + std::to_string(i) + "." + g.vertices[v]));
        for (const Edge& e : g.edges) a.edges.push_back({ids[i][e.src], e.color, ids[i][e.dst]});
        for (int x = 0; x < g.n(); ++x)
            for (int y = 0; y < g.n(); ++y)
                if (parts[i].lt(x, y)) a.gens.push_back({ids[i][x], ids[i][y]});
    }
    return ids;
}

}  // namespace

OrderedGraph ltimes_repeat(const OrderedGraph& u, int kappa) {
    if (kappa < 1) throw std::runtime_error("ltimes_repeat: kappa must be positive");
    const ColoredGraph& g = u.graph;
    Assembly a;
    auto id = [&](int v, int lam) { return lam * g.n() + v; };
    for (int lam = 0; lam < kappa; ++lam)
        for (int v = 0; v < g.n(); ++v) a.add(g.vertices[v] + "@" + std::to_string(lam));
    for (int lam = 0; lam < kappa; ++lam) {
        for (const Edge& e : g.edges) a.edges.push_back({id(e.src, lam), e.color, id(e.dst, lam)});
        for (int lam2 = 0; lam2 < lam; ++lam2)
            for (int v = 0; v < g.n(); ++v)
                for (int w = 0; w < g.n(); ++w)
                    for (int c = 0; c < g.num_colors(); ++c)
                        a.edges.push_back({id(v, lam), c, id(w, lam2)});
        for (int x = 0; x < g.n(); ++x)
            for (int y = 0; y < g.n(); ++y) {
                if (u.lt(x, y)) a.gens.push_back({id(x, lam), id(y, lam)});
                if (lam + 1 < kappa) a.gens.push_back({id(x, lam), id(y, lam + 1)});
            }
    }
    return finish(g.alphabet, std::move(a));
}

OrderedGraph lexico_product(const OrderedGraph& left, const OrderedGraph& right) {
    const ColoredGraph& lg = left.graph;
    const ColoredGraph& rg = right.graph;
    for (const auto& c : lg.alphabet)
        for (const auto& d : rg.alphabet)
            if (c == d) throw std::runtime_error("lexico_product: alphabets must be disjoint");
    std::vector<std::string> alphabet = lg.alphabet;
    alphabet.insert(alphabet.end(), rg.alphabet.begin(), rg.alphabet.end());
    int kl = lg.num_colors();
    Assembly a;
    auto id = [&](int l, int r) { return r * lg.n() + l; };
    for (int r = 0; r < rg.n(); ++r)
        for (int l = 0; l < lg.n(); ++l) a.add(lg.vertices[l] + "|" + rg.vertices[r]);
    for (int r = 0; r < rg.n(); ++r)
        for (int l = 0; l < lg.n(); ++l) {
            // Left colors: keep the dominant component and advance, or drop it.
            for (int ei : lg.out[l]) {
                const Edge& e = lg.edges[ei];
                a.edges.push_back({id(l, r), e.color, id(e.dst, r)});
            }
            for (int r2 = 0; r2 < rg.n(); ++r2)
                if (right.lt(r2, r))
                    for (int l2 = 0; l2 < lg.n(); ++l2)
                        for (int c = 0; c < kl; ++c) a.edges.push_back({id(l, r), c, id(l2, r2)});
            // Right colors: advance the dominant component, reset the other.
            for (int ei : rg.out[r]) {
                const Edge& e = rg.edges[ei];
                for (int l2 = 0; l2 < lg.n(); ++l2)
                    a.edges.push_back({id(l, r), kl + e.color, id(l2, e.dst)});
            }
        }
    for (int r = 0; r < rg.n(); ++r)
        for (int r2 = 0; r2 < rg.n(); ++r2)
            for (int l = 0; l < lg.n(); ++l)
                for (int l2 = 0; l2 < lg.n(); ++l2) {
                    if (right.lt(r, r2)) a.gens.push_back({id(l, r), id(l2, r2)});
                    if (r == r2 && left.lt(l, l2)) a.gens.push_back({id(l, r), id(l2, r)});
                }
    return finish(std::move(alphabet), std::move(a));
}

OrderedGraph direct_product(const OrderedGraph& ga, const OrderedGraph& gb) {
    const ColoredGraph& g1 = ga.graph;
    const ColoredGraph& g2 = gb.graph;
    if (g1.alphabet != g2.alphabet)
        throw std::runtime_error("direct_product: alphabets must coincide");
    Assembly a;
    auto id = [&](int x, int y) { return x * g2.n() + y; };
    for (int x = 0; x < g1.n(); ++x)
        for (int y = 0; y < g2.n(); ++y) a.add(g1.vertices[x] + "|" + g2.vertices[y]);
    for (const Edge& e1 : g1.edges)
        for (const Edge& e2 : g2.edges)
            if (e1.color == e2.color)
                a.edges.push_back({id(e1.src, e2.src), e1.color, id(e1.dst, e2.dst)});
    for (int x = 0; x < g1.n(); ++x)
        for (int y = 0; y < g2.n(); ++y)
            for (int x2 = 0; x2 < g1.n(); ++x2)
                for (int y2 = 0; y2 < g2.n(); ++y2)
                    if (ga.le(x, x2) && gb.le(y, y2) && (x != x2 || y != y2))
                        a.gens.push_back({id(x, y), id(x2, y2)});
    return finish(g1.alphabet, std::move(a));
}

OrderedGraph direct_sum(const std::vector<OrderedGraph>& parts) {
    if (parts.empty()) throw std::runtime_error("direct_sum: no parts");
    for (const auto& p : parts)
        if (p.graph.alphabet != parts[0].graph.alphabet)
            throw std::runtime_error("direct_sum: alphabets must coincide");
    Assembly a;
    auto ids = merge_parts(a, parts);
    int k = parts[0].graph.num_colors();
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            for (int v : ids[i])
                for (int w : ids[j]) {
                    for (int c = 0; c < k; ++c) a.edges.push_back({v, c, w});
                    a.gens.push_back({w, v});  // later parts dominate
                }
    return finish(parts[0].graph.alphabet, std::move(a));
}

namespace {

OrderedGraph single_loop_vertex(const std::vector<std::string>& alphabet,
                                const std::vector<int>& loop_colors, const std::string& name) {
    Assembly a;
    int v = a.add(name);
    for (int c : loop_colors) a.edges.push_back({v, c, v});
    return finish(alphabet, std::move(a));
}

OrderedGraph descending_chain(const std::vector<std::string>& alphabet,
                              const std::vector<int>& colors, int kappa) {
    Assembly a;
    for (int i = 0; i < kappa; ++i) a.add("x" + std::to_string(i));
    for (int i = 0; i < kappa; ++i)
        for (int j = 0; j < i; ++j)
            for (int c : colors) a.edges.push_back({i, c, j});
    for (int i = 0; i + 1 < kappa; ++i) a.gens.push_back({i, i + 1});
    return finish(alphabet, std::move(a));
}

/** Cyclic parallel composition: colors outside child i's label lead from
 *  anywhere in part i to everywhere in part i+1 (cyclically). */
OrderedGraph parallel_compose(const std::vector<OrderedGraph>& parts,
                              const std::vector<std::vector<int>>& part_colors,
                              const std::vector<int>& node_colors) {
    Assembly a;
    auto ids = merge_parts(a, parts);
    size_t k = parts.size();
    for (size_t i = 0; i < k; ++i) {
        size_t next = (i + 1) % k;
        for (int c : node_colors) {
            if (std::binary_search(part_colors[i].begin(), part_colors[i].end(), c)) continue;
            for (int v : ids[i])
                for (int w : ids[next]) a.edges.push_back({v, c, w});
        }
    }
    return finish(parts[0].graph.alphabet, std::move(a));
}

/** Ordered series restricted to the node's colors (the parent supplies the rest). */
OrderedGraph series_compose(const std::vector<OrderedGraph>& parts,
                            const std::vector<int>& node_colors) {
    Assembly a;
    auto ids = merge_parts(a, parts);
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            for (int v : ids[i])
                for (int w : ids[j]) {
                    for (int c : node_colors) a.edges.push_back({v, c, w});
                    a.gens.push_back({w, v});
                }
    return finish(parts[0].graph.alphabet, std::move(a));
}

OrderedGraph muller_build(const ZielonkaTree& zt, const std::vector<std::string>& alphabet,
                          int node, int kappa) {
    const ZielonkaNode& zn = zt.nodes[node];
    if (zn.children.empty()) {
        if (zn.positive)
            return single_loop_vertex(alphabet, zn.colors, "u" + std::to_string(node));
        OrderedGraph chain = descending_chain(alphabet, zn.colors, kappa);
        for (auto& name : chain.graph.vertices) name = "u" + std::to_string(node) + "." + name;
        chain.graph.finalize();
        return chain;
    }
    std::vector<OrderedGraph> parts;
    std::vector<std::vector<int>> part_colors;
    for (int child : zn.children) {
        parts.push_back(muller_build(zt, alphabet, child, kappa));
        part_colors.push_back(zt.nodes[child].colors);
    }
    if (zn.positive) return parallel_compose(parts, part_colors, zn.colors);
    return ltimes_repeat(series_compose(parts, zn.colors), kappa);
}

}  // namespace

OrderedGraph muller_universal(const Objective& muller, int kappa) {
    ZielonkaTree zt = build_zielonka(muller);
    return muller_build(zt, muller.alphabet, 0, kappa);
}

OrderedGraph safety_quotient_universal(const Objective& safety) {
    if (safety.kind != Objective::Kind::SafetyRegular || safety.complemented)
        throw std::runtime_error("safety_quotient_universal requires a plain safety objective");
    const Dfa& d = safety.dfa;
    int k = static_cast<int>(d.alphabet.size());
    // Live states: from them some infinite run avoids the sink.
    std::vector<char> live(d.num_states, 1);
    live[d.sink] = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (int q = 0; q < d.num_states; ++q) {
            if (!live[q]) continue;
            bool any = false;
            for (int c = 0; c < k; ++c) any = any || live[d.step(q, c)];
            if (!any) {
                live[q] = 0;
                changed = true;
            }
        }
    }
    std::vector<char> reach(d.num_states, 0);
    reach[d.initial] = 1;
    std::deque<int> queue{d.initial};
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (int c = 0; c < k; ++c)
            if (!reach[d.step(q, c)]) {
                reach[d.step(q, c)] = 1;
                queue.push_back(d.step(q, c));
            }
    }
    std::vector<int> states;
    for (int q = 0; q < d.num_states; ++q)
        if (live[q] && reach[q]) states.push_back(q);
    if (states.empty()) throw std::runtime_error("safety objective is empty");

    // incl(q, q') <=> the safe words from q are safe from q': no word may stay
    // alive on the q side while the q' side dies.
    auto incl = [&](int q0, int q1) {
        std::vector<std::vector<char>> seen(d.num_states, std::vector<char>(d.num_states, 0));
        std::deque<std::pair<int, int>> bfs{{q0, q1}};
        seen[q0][q1] = 1;
        while (!bfs.empty()) {
            auto [x, y] = bfs.front();
            bfs.pop_front();
            if (!live[y]) return false;
            for (int c = 0; c < k; ++c) {
                int x2 = d.step(x, c), y2 = d.step(y, c);
                if (!live[x2] || seen[x2][y2]) continue;
                seen[x2][y2] = 1;
                bfs.push_back({x2, y2});
            }
        }
        return true;
    };
    std::vector<std::vector<char>> leq(d.num_states, std::vector<char>(d.num_states, 0));
    for (int x : states)
        for (int y : states) leq[x][y] = incl(x, y);

    std::vector<int> cls(d.num_states, -1);
    std::vector<int> reps;
    for (int q : states) {
        for (size_t i = 0; i < reps.size(); ++i)
            if (leq[q][reps[i]] && leq[reps[i]][q]) {
                cls[q] = static_cast<int>(i);
                break;
            }
        if (cls[q] < 0) {
            cls[q] = static_cast<int>(reps.size());
            reps.push_back(q);
        }
    }

    Assembly a;
    for (size_t i = 0; i < reps.size(); ++i) a.add("r" + std::to_string(i));
    int top = a.add("top");
    for (size_t i = 0; i < reps.size(); ++i)
        for (int c = 0; c < k; ++c) {
            int t = d.step(reps[i], c);
            if (!live[t]) continue;
            for (size_t j = 0; j < reps.size(); ++j)
                if (leq[reps[j]][t]) a.edges.push_back({static_cast<int>(i), c,
                                                        static_cast<int>(j)});
        }
    for (int c = 0; c < k; ++c)
        for (int v = 0; v <= top; ++v) a.edges.push_back({top, c, v});
    for (size_t i = 0; i < reps.size(); ++i) {
        a.gens.push_back({static_cast<int>(i), top});
        for (size_t j = 0; j < reps.size(); ++j)
            if (i != j && leq[reps[i]][reps[j]])
                a.gens.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
    return finish(d.alphabet, std::move(a));
}

OrderedGraph w3_universal(int n, int kappa) {
    if (n < 1 || kappa < 1) throw std::runtime_error("w3_universal: n, kappa must be positive");
    Assembly a;
    std::vector<int> q(kappa), pn(kappa), p(n);
    for (int l = 0; l < kappa; ++l) q[l] = a.add("q" + std::to_string(l));
    for (int i = 0; i < n; ++i) p[i] = a.add("p" + std::to_string(i));
    for (int l = 0; l < kappa; ++l) pn[l] = a.add("pn" + std::to_string(l));
    int top = a.add("top");
    const int ca = 0, cb = 1;
    for (int l = 0; l < kappa; ++l) {
        for (int l2 = 0; l2 < l; ++l2) {
            a.edges.push_back({q[l], cb, q[l2]});
            a.edges.push_back({pn[l], cb, pn[l2]});
        }
        a.edges.push_back({q[l], ca, p[0]});
        a.edges.push_back({pn[l], ca, top});
        if (l + 1 < kappa) {
            a.gens.push_back({q[l], q[l + 1]});
            a.gens.push_back({pn[l], pn[l + 1]});
        }
    }
    for (int i = 0; i < n; ++i)
        for (int c : {ca, cb}) {
            if (i + 1 < n)
                a.edges.push_back({p[i], c, p[i + 1]});
            else
                for (int l = 0; l < kappa; ++l) a.edges.push_back({p[i], c, pn[l]});
        }
    for (int v = 0; v <= top; ++v)
        for (int c : {ca, cb}) a.edges.push_back({top, c, v});
    // Counting stages sit above the waiting chain and below the absorbing top.
    for (int i = 0; i < n; ++i) {
        a.gens.push_back({q[kappa - 1], p[i]});
        a.gens.push_back({p[i], top});
    }
    a.gens.push_back({q[kappa - 1], pn[0]});
    a.gens.push_back({pn[kappa - 1], top});
    return monotone_closure(finish({"a", "b"}, std::move(a)));
}

OrderedGraph w4_universal(int kappa) {
    if (kappa < 1) throw std::runtime_error("w4_universal: kappa must be positive");
    Assembly a;
    std::vector<int> q(kappa), pp(kappa), p(kappa);
    for (int l = 0; l < kappa; ++l) q[l] = a.add("q" + std::to_string(l));
    for (int l = 0; l < kappa; ++l) {
        p[l] = a.add("p" + std::to_string(l));
        pp[l] = a.add("pp" + std::to_string(l));
    }
    const int ca = 0, cb = 1, cc = 2;
    for (int l = 0; l < kappa; ++l) {
        for (int l2 = 0; l2 < kappa; ++l2) {
            a.edges.push_back({q[l], cb, q[l2]});  // a repeated b restores the budget
            for (int r : {p[l], pp[l]}) {
                if (l > l2) a.edges.push_back({r, cb, q[l2]});
                for (int r2 : {p[l2], pp[l2]}) {
                    if (l >= l2)
                        for (int c : {ca, cc}) a.edges.push_back({q[l], c, r2});
                    if (l > l2)
                        for (int c : {ca, cc}) a.edges.push_back({r, c, r2});
                    if (l == l2) a.edges.push_back({r, cc, r2});
                }
            }
        }
        a.edges.push_back({pp[l], ca, p[l]});  // an a after a non-a costs nothing
        if (l + 1 < kappa) {
            a.gens.push_back({q[l], q[l + 1]});
            a.gens.push_back({pp[l], p[l + 1]});
        }
        a.gens.push_back({p[l], pp[l]});
    }
    return finish({"a", "b", "c"}, std::move(a));
}

OrderedGraph parity_universal(const std::vector<std::string>& colors,
                              const std::vector<int>& priorities, int kappa) {
    if (colors.size() != priorities.size())
        throw std::runtime_error("parity_universal: one priority per color required");
    int maxp = 0;
    for (int p : priorities) maxp = std::max(maxp, p);
    auto level = [&](int p) {
        std::vector<std::string> sigma;
        for (size_t i = 0; i < colors.size(); ++i)
            if (priorities[i] == p) sigma.push_back(colors[i]);
        std::vector<int> all(sigma.size());
        for (size_t i = 0; i < sigma.size(); ++i) all[i] = static_cast<int>(i);
        if (p % 2 == 0) return single_loop_vertex(sigma, all, "w" + std::to_string(p));
        return descending_chain(sigma, all, kappa);
    };
    OrderedGraph u = level(0);
    for (int p = 1; p <= maxp; ++p) u = lexico_product(u, level(p));
    return u;
}

std::pair<EpsSeparatedGraph, ChromaticTag> w4_separated(int kappa) {
    OrderedGraph og = w4_universal(kappa);
    EpsSeparatedGraph eg = eps_separate(og);
    ChromaticTag tag;
    tag.update.assign(eg.breadth(), std::vector<int>(eg.graph.num_colors(), -1));
    int eps = *eg.graph.eps_color();
    for (int m = 0; m < eg.breadth(); ++m) tag.update[m][eps] = m;
    for (const Edge& e : eg.graph.edges) {
        int& slot = tag.update[eg.part[e.src]][e.color];
        if (slot >= 0 && slot != eg.part[e.dst])
            throw std::runtime_error("w4_separated: update function is ambiguous");
        slot = eg.part[e.dst];
    }
    for (const auto& row : tag.update)
        for (int t : row)
            if (t < 0) throw std::runtime_error("w4_separated: update function is partial");
    return {std::move(eg), std::move(tag)};
}

OrderedGraph builtin_universal(const std::string& name, int kappa, int m, int n) {
    if (name == "w1") return muller_universal(builtin_objective("w1"), kappa);
    if (name == "w2") return safety_quotient_universal(builtin_objective("w2"));
    if (name == "w3") {
        if (m != 1) throw std::runtime_error("builtin w3 graph supports m = 1 only");
        return w3_universal(n, kappa);
    }
    if (name == "w4") return w4_universal(kappa);
    if (name == "w5") return muller_universal(builtin_objective("w5"), kappa);
    if (name == "alternation") return safety_quotient_universal(builtin_objective("alternation"));
    if (name == "parity3") return parity_universal({"0", "1", "2"}, {0, 1, 2}, kappa);
    throw std::runtime_error("unknown builtin graph: " + name);
}

}  // namespace memoria
