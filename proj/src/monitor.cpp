#include "memoria/monitor.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace memoria {

namespace {

/** Iterative Tarjan on an adjacency-list graph; returns component id per node
 *  (components numbered in reverse topological order). */
std::vector<int> scc_ids(int n, const std::vector<std::vector<int>>& adj, int& num_comps) {
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stk;
    int counter = 0;
    num_comps = 0;
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
            if (f.ei < adj[f.v].size()) {
                int w = adj[f.v][f.ei++];
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
                    int w;
                    do {
                        w = stk.back();
                        stk.pop_back();
                        on_stack[w] = 0;
                        comp[w] = num_comps;
                    } while (w != f.v);
                    ++num_comps;
                }
                int v = f.v;
                call.pop_back();
                if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            }
        }
    }
    return comp;
}

Monitor compile_muller(const Objective& obj) {
    Monitor m;
    m.alphabet = obj.alphabet;
    m.num_states = 1;
    m.initial = 0;
    int k = static_cast<int>(obj.alphabet.size());
    m.delta = {std::vector<int>(k, 0)};
    m.cls.resize(1);
    for (int c = 0; c < k; ++c) m.cls[0].push_back(c);
    m.num_classes = k;
    std::set<uint64_t> masks;
    for (const auto& s : obj.family) {
        uint64_t mask = 0;
        for (int c : s) mask |= uint64_t{1} << c;
        masks.insert(mask);
    }
    m.accept = [masks](uint64_t S) { return masks.count(S) > 0; };
    return m;
}

Monitor compile_parity(const Objective& obj) {
    Monitor m;
    m.alphabet = obj.alphabet;
    m.num_states = 1;
    m.initial = 0;
    int k = static_cast<int>(obj.alphabet.size());
    m.delta = {std::vector<int>(k, 0)};
    m.cls = {obj.priorities};
    m.num_classes = *std::max_element(obj.priorities.begin(), obj.priorities.end()) + 1;
    m.accept = [](uint64_t S) { return S != 0 && (63 - std::countl_zero(S)) % 2 == 0; };
    return m;
}

Monitor compile_parity_automaton(const Objective& obj) {
    Monitor m;
    m.alphabet = obj.alphabet;
    m.num_states = obj.dfa.num_states;
    m.initial = obj.dfa.initial;
    m.delta = obj.dfa.delta;
    m.cls = obj.trans_priority;
    int maxp = 0;
    for (const auto& row : m.cls)
        for (int p : row) maxp = std::max(maxp, p);
    m.num_classes = maxp + 1;
    m.accept = [](uint64_t S) { return S != 0 && (63 - std::countl_zero(S)) % 2 == 0; };
    return m;
}

Monitor compile_safety(const Objective& obj) {
    Monitor m;
    m.alphabet = obj.alphabet;
    m.num_states = obj.dfa.num_states;
    m.initial = obj.dfa.initial;
    m.delta = obj.dfa.delta;
    int k = static_cast<int>(obj.alphabet.size());
    m.cls.assign(m.num_states, std::vector<int>(k, 0));
    // Class 1 marks transitions into the absorbing sink; a run hits the sink
    // iff class 1 occurs (then occurs forever).
    for (int q = 0; q < m.num_states; ++q)
        for (int c = 0; c < k; ++c)
            if (m.delta[q][c] == obj.dfa.sink) m.cls[q][c] = 1;
    m.num_classes = 2;
    bool complemented = obj.complemented;
    m.accept = [complemented](uint64_t S) { return ((S & 2) != 0) == complemented; };
    return m;
}

Monitor compile_combination(const Objective& obj) {
    std::vector<Monitor> parts;
    for (const auto& p : obj.parts) parts.push_back(compile_monitor(*p));
    Monitor m;
    m.alphabet = obj.alphabet;
    int k = static_cast<int>(obj.alphabet.size());
    // States and classes are mixed-radix tuples over the parts.
    std::vector<int> sstride(parts.size()), cstride(parts.size());
    int ns = 1, nc = 1;
    for (size_t i = 0; i < parts.size(); ++i) {
        sstride[i] = ns;
        cstride[i] = nc;
        ns *= parts[i].num_states;
        nc *= parts[i].num_classes;
    }
    if (nc > 32) throw std::runtime_error("combined objective has too many classes");
    m.num_states = ns;
    m.num_classes = nc;
    m.initial = 0;
    for (size_t i = 0; i < parts.size(); ++i) m.initial += sstride[i] * parts[i].initial;
    m.delta.assign(ns, std::vector<int>(k, 0));
    m.cls.assign(ns, std::vector<int>(k, 0));
    for (int s = 0; s < ns; ++s)
        for (int c = 0; c < k; ++c) {
            int t = 0, cl = 0;
            for (size_t i = 0; i < parts.size(); ++i) {
                int qi = (s / sstride[i]) % parts[i].num_states;
                t += sstride[i] * parts[i].delta[qi][c];
                cl += cstride[i] * parts[i].cls[qi][c];
            }
            m.delta[s][c] = t;
            m.cls[s][c] = cl;
        }
    bool disjunctive = obj.kind == Objective::Kind::Union;
    std::vector<std::function<bool(uint64_t)>> accepts;
    std::vector<int> ncs;
    for (const auto& p : parts) {
        accepts.push_back(p.accept);
        ncs.push_back(p.num_classes);
    }
    m.accept = [accepts, ncs, cstride, disjunctive](uint64_t S) {
        // The infinitely-seen part-i classes are the projections of S.
        for (size_t i = 0; i < accepts.size(); ++i) {
            uint64_t Pi = 0;
            for (int t = 0; t < 64; ++t)
                if (S & (uint64_t{1} << t)) Pi |= uint64_t{1} << ((t / cstride[i]) % ncs[i]);
            bool ok = accepts[i](Pi);
            if (disjunctive && ok) return true;
            if (!disjunctive && !ok) return false;
        }
        return !disjunctive;
    };
    return m;
}

Monitor compile_lexico(const Objective& obj) {
    Monitor l = compile_monitor(*obj.parts[0]);
    Monitor r = compile_monitor(*obj.parts[1]);
    int kl = static_cast<int>(l.alphabet.size());
    int kr = static_cast<int>(r.alphabet.size());
    Monitor m;
    m.alphabet = obj.alphabet;
    m.num_states = l.num_states * r.num_states;
    m.num_classes = l.num_classes + r.num_classes;
    if (m.num_classes > 32) throw std::runtime_error("lexico objective has too many classes");
    m.initial = l.initial * r.num_states + r.initial;
    m.delta.assign(m.num_states, std::vector<int>(kl + kr, 0));
    m.cls.assign(m.num_states, std::vector<int>(kl + kr, 0));
    for (int ql = 0; ql < l.num_states; ++ql)
        for (int qr = 0; qr < r.num_states; ++qr) {
            int s = ql * r.num_states + qr;
            for (int c = 0; c < kl; ++c) {
                m.delta[s][c] = l.delta[ql][c] * r.num_states + qr;
                m.cls[s][c] = l.cls[ql][c];
            }
            for (int c = 0; c < kr; ++c) {
                m.delta[s][kl + c] = ql * r.num_states + r.delta[qr][c];
                m.cls[s][kl + c] = l.num_classes + r.cls[qr][c];
            }
        }
    auto la = l.accept, ra = r.accept;
    int lnc = l.num_classes;
    m.accept = [la, ra, lnc](uint64_t S) {
        uint64_t right = S >> lnc;
        // Infinitely many dominant-side letters: the dominant side decides;
        // otherwise the word is ultimately over the inner alphabet.
        if (right != 0) return ra(right);
        return la(S & ((uint64_t{1} << lnc) - 1));
    };
    return m;
}

}  // namespace

Monitor compile_monitor(const Objective& obj) {
    Monitor m;
    switch (obj.kind) {
        case Objective::Kind::Muller: m = compile_muller(obj); break;
        case Objective::Kind::Parity: m = compile_parity(obj); break;
        case Objective::Kind::ParityAutomaton: m = compile_parity_automaton(obj); break;
        case Objective::Kind::SafetyRegular: m = compile_safety(obj); break;
        case Objective::Kind::Union:
        case Objective::Kind::Intersection: m = compile_combination(obj); break;
        case Objective::Kind::Lexico: m = compile_lexico(obj); break;
    }
    // accept_finite[q]: some achievable class set from q is accepted.
    ClassGraph cg;
    cg.n = m.num_states;
    cg.num_classes = m.num_classes;
    for (int q = 0; q < m.num_states; ++q)
        for (int c = 0; c < static_cast<int>(m.alphabet.size()); ++c)
            cg.edges.push_back({q, m.cls[q][c], m.delta[q][c], c});
    m.accept_finite.assign(m.num_states, 0);
    for (int q = 0; q < m.num_states; ++q)
        for (uint64_t S : achievable_inf_sets(cg, q))
            if (m.accept(S)) {
                m.accept_finite[q] = 1;
                break;
            }
    return m;
}

bool monitor_lasso_accepts(const Monitor& mon, const LassoWord& w, bool eps_neutral) {
    std::map<std::string, int> ci;
    for (int c = 0; c < static_cast<int>(mon.alphabet.size()); ++c) ci[mon.alphabet[c]] = c;
    auto letter = [&](const std::string& name) -> int {
        if (name == kEps) {
            if (!eps_neutral) throw std::runtime_error("eps letter outside the eps-extension");
            return -1;
        }
        auto it = ci.find(name);
        if (it == ci.end()) throw std::runtime_error("letter not in objective alphabet: " + name);
        return it->second;
    };
    int q = mon.initial;
    for (const auto& name : w.prefix) {
        int c = letter(name);
        if (c >= 0) q = mon.delta[q][c];
    }
    std::vector<int> cycle;
    for (const auto& name : w.cycle) {
        int c = letter(name);
        if (c >= 0) cycle.push_back(c);
    }
    if (w.cycle.empty()) throw std::runtime_error("lasso cycle is empty");
    if (cycle.empty()) return mon.accept_finite[q] != 0;
    // Iterate the cycle until the state at a cycle boundary repeats; the
    // classes of the repeating passes are exactly those seen infinitely often.
    std::vector<int> start_state;
    std::vector<uint64_t> pass_mask;
    while (true) {
        for (size_t i = 0; i < start_state.size(); ++i)
            if (start_state[i] == q) {
                uint64_t S = 0;
                for (size_t j = i; j < pass_mask.size(); ++j) S |= pass_mask[j];
                return mon.accept(S);
            }
        start_state.push_back(q);
        uint64_t mask = 0;
        for (int c : cycle) {
            mask |= uint64_t{1} << mon.cls[q][c];
            q = mon.delta[q][c];
        }
        pass_mask.push_back(mask);
    }
}

std::vector<uint64_t> achievable_inf_sets(const ClassGraph& cg, int start) {
    std::vector<std::vector<int>> adj(cg.n);
    for (int i = 0; i < static_cast<int>(cg.edges.size()); ++i)
        adj[cg.edges[i].src].push_back(i);
    std::vector<char> reach(cg.n, 0);
    std::vector<int> stack{start};
    reach[start] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int ei : adj[v]) {
            int w = cg.edges[ei].dst;
            if (!reach[w]) {
                reach[w] = 1;
                stack.push_back(w);
            }
        }
    }
    uint64_t present = 0;
    for (const auto& e : cg.edges)
        if (reach[e.src]) present |= uint64_t{1} << e.cls;
    if (std::popcount(present) > 22)
        throw std::runtime_error("too many transition classes for exhaustive analysis");

    std::vector<uint64_t> result;
    for (uint64_t S = present;; S = (S - 1) & present) {
        if (S != 0) {
            std::vector<std::vector<int>> sub(cg.n);
            for (const auto& e : cg.edges)
                if (reach[e.src] && (S >> e.cls) & 1) sub[e.src].push_back(e.dst);
            int nc = 0;
            std::vector<int> comp = scc_ids(cg.n, sub, nc);
            std::vector<uint64_t> comp_classes(nc, 0);
            for (const auto& e : cg.edges)
                if (reach[e.src] && ((S >> e.cls) & 1) && comp[e.src] == comp[e.dst])
                    comp_classes[comp[e.src]] |= uint64_t{1} << e.cls;
            if (std::find(comp_classes.begin(), comp_classes.end(), S) != comp_classes.end())
                result.push_back(S);
        }
        if (S == 0) break;
    }
    std::sort(result.begin(), result.end());
    return result;
}

namespace {

/** BFS over the given edge subset; returns edge indices of a path src -> dst. */
std::vector<int> bfs_path(const ClassGraph& cg, const std::vector<char>& edge_ok, int src,
                          int dst) {
    std::vector<int> via(cg.n, -2);
    via[src] = -1;
    std::deque<int> queue{src};
    std::vector<std::vector<int>> adj(cg.n);
    for (int i = 0; i < static_cast<int>(cg.edges.size()); ++i)
        if (edge_ok[i]) adj[cg.edges[i].src].push_back(i);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (v == dst) break;
        for (int ei : adj[v]) {
            int w = cg.edges[ei].dst;
            if (via[w] == -2) {
                via[w] = ei;
                queue.push_back(w);
            }
        }
    }
    if (via[dst] == -2) throw std::runtime_error("bfs_path: destination unreachable");
    std::vector<int> path;
    for (int v = dst; via[v] != -1; v = cg.edges[via[v]].src) path.push_back(via[v]);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> realize_inf_set(const ClassGraph& cg, int start,
                                                              uint64_t S) {
    int m = static_cast<int>(cg.edges.size());
    // Find a reachable SCC of the S-restricted graph whose classes are exactly S.
    std::vector<std::vector<int>> sub(cg.n);
    for (const auto& e : cg.edges)
        if ((S >> e.cls) & 1) sub[e.src].push_back(e.dst);
    int nc = 0;
    std::vector<int> comp = scc_ids(cg.n, sub, nc);
    std::vector<uint64_t> comp_classes(nc, 0);
    for (const auto& e : cg.edges)
        if (((S >> e.cls) & 1) && comp[e.src] == comp[e.dst])
            comp_classes[comp[e.src]] |= uint64_t{1} << e.cls;
    std::vector<char> all_edges(m, 1), internal(m, 0);
    int target = -1;
    std::vector<char> reach(cg.n, 0);
    {
        std::vector<int> stack{start};
        reach[start] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int i = 0; i < m; ++i)
                if (cg.edges[i].src == v && !reach[cg.edges[i].dst]) {
                    reach[cg.edges[i].dst] = 1;
                    stack.push_back(cg.edges[i].dst);
                }
        }
    }
    for (int v = 0; v < cg.n; ++v)
        if (reach[v] && comp_classes[comp[v]] == S) {
            target = comp[v];
            break;
        }
    if (target < 0) throw std::runtime_error("realize_inf_set: class set is not achievable");
    for (int i = 0; i < m; ++i) {
        const auto& e = cg.edges[i];
        internal[i] = ((S >> e.cls) & 1) && comp[e.src] == target && comp[e.dst] == target;
    }
    int entry = -1;
    for (int v = 0; v < cg.n && entry < 0; ++v)
        if (reach[v] && comp[v] == target) entry = v;

    auto payloads = [&](const std::vector<int>& eids) {
        std::vector<int> p;
        for (int ei : eids) p.push_back(cg.edges[ei].payload);
        return p;
    };
    std::vector<int> prefix = payloads(bfs_path(cg, all_edges, start, entry));

    // Edge-covering closed walk inside the component: repeatedly walk to an
    // uncovered internal edge, traverse it, and finally return to the entry.
    std::vector<char> covered(m, 0);
    std::vector<int> cycle;
    int cur = entry;
    while (true) {
        int next_edge = -1;
        for (int i = 0; i < m; ++i)
            if (internal[i] && !covered[i]) {
                next_edge = i;
                break;
            }
        if (next_edge < 0) break;
        for (int ei : bfs_path(cg, internal, cur, cg.edges[next_edge].src)) {
            cycle.push_back(cg.edges[ei].payload);
            covered[ei] = 1;
        }
        cycle.push_back(cg.edges[next_edge].payload);
        covered[next_edge] = 1;
        cur = cg.edges[next_edge].dst;
    }
    for (int ei : bfs_path(cg, internal, cur, entry)) cycle.push_back(cg.edges[ei].payload);
    if (cycle.empty()) throw std::runtime_error("realize_inf_set: empty cycle");
    return {prefix, cycle};
}

MonitorProduct monitor_product(const ColoredGraph& g, const Monitor& mon, int from,
                               SinkRule rule) {
    if (mon.num_classes + mon.num_states > 62)
        throw std::runtime_error("monitor product: extended class space exceeds 62 bits");
    std::vector<int> color_map(g.num_colors(), -1);
    for (int c = 0; c < g.num_colors(); ++c) {
        if (g.is_eps_color(c)) continue;
        bool found = false;
        for (int d = 0; d < static_cast<int>(mon.alphabet.size()); ++d)
            if (mon.alphabet[d] == g.alphabet[c]) {
                color_map[c] = d;
                found = true;
            }
        if (!found) throw std::runtime_error("graph color not in objective alphabet: " +
                                             g.alphabet[c]);
    }
    MonitorProduct p;
    p.cg.num_classes = mon.num_classes + mon.num_states;
    std::map<std::pair<int, int>, int> idx;
    auto node = [&](int v, int q) {
        auto [it, fresh] = idx.try_emplace({v, q}, static_cast<int>(p.nodes.size()));
        if (fresh) p.nodes.push_back({v, q});
        return it->second;
    };
    p.start = node(from, mon.initial);
    for (size_t i = 0; i < p.nodes.size(); ++i) {
        auto [v, q] = p.nodes[i];
        if (g.out[v].empty()) {
            if (rule == SinkRule::EpsTail)
                // A sink truncates the path: model the stopped run as eps^w.
                p.cg.edges.push_back({static_cast<int>(i), mon.num_classes + q,
                                      static_cast<int>(i), -1});
            continue;
        }
        for (int ei : g.out[v]) {
            const Edge& e = g.edges[ei];
            if (color_map[e.color] < 0) {
                p.cg.edges.push_back(
                    {static_cast<int>(i), mon.num_classes + q, node(e.dst, q), ei});
            } else {
                int c = color_map[e.color];
                p.cg.edges.push_back(
                    {static_cast<int>(i), mon.cls[q][c], node(e.dst, mon.delta[q][c]), ei});
            }
        }
    }
    p.cg.n = static_cast<int>(p.nodes.size());
    return p;
}

bool extended_accept(const Monitor& mon, uint64_t S) {
    uint64_t real = S & ((uint64_t{1} << mon.num_classes) - 1);
    if (real != 0) return mon.accept(real);
    if (S == 0) throw std::runtime_error("extended_accept: empty class set");
    int bit = std::countr_zero(S);
    return mon.accept_finite[bit - mon.num_classes] != 0;
}

SatisfyResult graph_satisfies(const ColoredGraph& g, const Monitor& mon, std::optional<int> from,
                              SinkRule rule) {
    std::vector<int> starts;
    if (from)
        starts.push_back(*from);
    else
        for (int v = 0; v < g.n(); ++v) starts.push_back(v);
    for (int v : starts) {
        MonitorProduct p = monitor_product(g, mon, v, rule);
        for (uint64_t S : achievable_inf_sets(p.cg, p.start)) {
            if (extended_accept(mon, S)) continue;
            auto [pre, cyc] = realize_inf_set(p.cg, p.start, S);
            SatisfyResult r;
            r.ok = false;
            r.witness_vertex = v;
            auto colorize = [&](const std::vector<int>& payloads, std::vector<std::string>& out) {
                for (int ei : payloads)
                    out.push_back(ei < 0 ? kEps : g.alphabet[g.edges[ei].color]);
            };
            colorize(pre, r.counterexample.prefix);
            colorize(cyc, r.counterexample.cycle);
            return r;
        }
    }
    return {};
}

SatisfyResult graph_satisfies(const ColoredGraph& g, const Objective& obj,
                              std::optional<int> from, SinkRule rule) {
    return graph_satisfies(g, compile_monitor(obj), from, rule);
}

}  // namespace memoria
