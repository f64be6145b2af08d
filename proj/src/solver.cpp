#include "memoria/solver.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "memoria/monitor.hpp"
#include "memoria/zielonka.hpp"

namespace memoria {

namespace {

/** Max-even parity game with vertex priorities; owner 1 moves for even. */
struct ParityGame {
    std::vector<char> eve;
    std::vector<int> prio;
    std::vector<std::vector<int>> succ;

    int n() const { return static_cast<int>(eve.size()); }
};

std::vector<int> attractor(const ParityGame& pg, bool for_eve, const std::vector<char>& target,
                           const std::vector<char>& active, std::vector<char>& in_attr) {
    int n = pg.n();
    std::vector<std::vector<int>> pred(n);
    std::vector<int> degree(n, 0);
    for (int v = 0; v < n; ++v) {
        if (!active[v]) continue;
        for (int w : pg.succ[v])
            if (active[w]) {
                pred[w].push_back(v);
                ++degree[v];
            }
    }
    in_attr.assign(n, 0);
    std::deque<int> queue;
    std::vector<int> result;
    for (int v = 0; v < n; ++v)
        if (active[v] && target[v]) {
            in_attr[v] = 1;
            queue.push_back(v);
        }
    while (!queue.empty()) {
        int w = queue.front();
        queue.pop_front();
        result.push_back(w);
        for (int v : pred[w]) {
            if (in_attr[v]) continue;
            if (pg.eve[v] == static_cast<char>(for_eve) || --degree[v] == 0) {
                in_attr[v] = 1;
                queue.push_back(v);
            }
        }
    }
    return result;
}

/** Recursive attractor decomposition; fills win[v] (1 = Eve) for active vertices. */
void solve_parity_rec(const ParityGame& pg, std::vector<char> active, std::vector<char>& win) {
    int n = pg.n();
    int d = -1;
    for (int v = 0; v < n; ++v)
        if (active[v]) d = std::max(d, pg.prio[v]);
    if (d < 0) return;
    bool p_eve = d % 2 == 0;
    std::vector<char> target(n, 0);
    for (int v = 0; v < n; ++v)
        if (active[v] && pg.prio[v] == d) target[v] = 1;
    std::vector<char> in_a;
    attractor(pg, p_eve, target, active, in_a);
    std::vector<char> sub = active;
    for (int v = 0; v < n; ++v)
        if (in_a[v]) sub[v] = 0;
    solve_parity_rec(pg, sub, win);
    bool opp_wins_some = false;
    std::vector<char> opp(n, 0);
    for (int v = 0; v < n; ++v)
        if (sub[v] && win[v] != static_cast<char>(p_eve)) {
            opp[v] = 1;
            opp_wins_some = true;
        }
    if (!opp_wins_some) {
        for (int v = 0; v < n; ++v)
            if (active[v]) win[v] = p_eve;
        return;
    }
    std::vector<char> in_b;
    attractor(pg, !p_eve, opp, active, in_b);
    std::vector<char> rest = active;
    for (int v = 0; v < n; ++v)
        if (in_b[v]) rest[v] = 0;
    solve_parity_rec(pg, rest, win);
    for (int v = 0; v < n; ++v)
        if (in_b[v]) win[v] = !p_eve;
}

std::vector<char> solve_parity(const ParityGame& pg) {
    std::vector<char> win(pg.n(), 0), active(pg.n(), 1);
    solve_parity_rec(pg, active, win);
    return win;
}

}  // namespace

std::vector<char> solve_oracle(const Game& game) {
    validate_game(game);
    const ColoredGraph& g = game.graph;
    Monitor mon = compile_monitor(game.objective);
    std::vector<int> cmap(g.num_colors(), -1);
    for (int c = 0; c < g.num_colors(); ++c)
        if (!g.is_eps_color(c))
            for (int d = 0; d < static_cast<int>(mon.alphabet.size()); ++d)
                if (mon.alphabet[d] == g.alphabet[c]) cmap[c] = d;

    // Extended classes actually occurring on product edges, compacted.
    std::vector<int> ext_of_edge(g.edges.size() * mon.num_states);
    uint64_t used = 0;
    for (size_t ei = 0; ei < g.edges.size(); ++ei)
        for (int q = 0; q < mon.num_states; ++q) {
            int c = cmap[g.edges[ei].color];
            int ext = c < 0 ? mon.num_classes + q : mon.cls[q][c];
            ext_of_edge[ei * mon.num_states + q] = ext;
            used |= uint64_t{1} << ext;
        }
    std::vector<int> ext_ids;
    for (int t = 0; t < 64; ++t)
        if ((used >> t) & 1) ext_ids.push_back(t);
    int K = static_cast<int>(ext_ids.size());
    if (K > 16) throw std::runtime_error("solve_oracle: too many transition classes");
    std::vector<int> compact(64, -1);
    for (int i = 0; i < K; ++i) compact[ext_ids[i]] = i;

    // Acceptance over the compact classes as a Muller condition, then a
    // deterministic parity automaton via the alternating-membership tree.
    std::vector<std::string> knames;
    for (int i = 0; i < K; ++i) knames.push_back("k" + std::to_string(i));
    std::vector<std::vector<std::string>> family;
    for (uint64_t T = 1; T < (uint64_t{1} << K); ++T) {
        uint64_t S = 0;
        for (int i = 0; i < K; ++i)
            if ((T >> i) & 1) S |= uint64_t{1} << ext_ids[i];
        if (!extended_accept(mon, S)) continue;
        std::vector<std::string> set;
        for (int i = 0; i < K; ++i)
            if ((T >> i) & 1) set.push_back(knames[i]);
        family.push_back(std::move(set));
    }
    Objective cls_muller = make_muller(knames, family);
    Objective dpa = zielonka_to_parity(build_zielonka(cls_muller));

    // Parity game over (vertex, monitor state, automaton state); transition
    // priorities move onto split vertices, shifted by 2 to keep the original
    // vertices (priority 0) irrelevant on every cycle.
    int numQ = mon.num_states, numL = dpa.dfa.num_states;
    auto id = [&](int v, int q, int l) { return (v * numQ + q) * numL + l; };
    ParityGame pg;
    int base = g.n() * numQ * numL;
    pg.eve.assign(base, 0);
    pg.prio.assign(base, 0);
    pg.succ.assign(base, {});
    for (int v = 0; v < g.n(); ++v)
        for (int q = 0; q < numQ; ++q)
            for (int l = 0; l < numL; ++l) pg.eve[id(v, q, l)] = game.eve[v];
    for (size_t ei = 0; ei < g.edges.size(); ++ei) {
        const Edge& e = g.edges[ei];
        for (int q = 0; q < numQ; ++q) {
            int ext = ext_of_edge[ei * mon.num_states + q];
            int k = compact[ext];
            int q2 = cmap[e.color] < 0 ? q : mon.delta[q][cmap[e.color]];
            for (int l = 0; l < numL; ++l) {
                int l2 = dpa.dfa.delta[l][k];
                int split = static_cast<int>(pg.eve.size());
                pg.eve.push_back(0);
                pg.prio.push_back(dpa.trans_priority[l][k] + 2);
                pg.succ.push_back({id(e.dst, q2, l2)});
                pg.succ[id(e.src, q, l)].push_back(split);
            }
        }
    }
    std::vector<char> win = solve_parity(pg);
    std::vector<char> region(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) region[v] = win[id(v, mon.initial, dpa.dfa.initial)];
    return region;
}

SimulationResult solve_via_universal(const Game& game, const OrderedGraph& u) {
    validate_game(game);
    const ColoredGraph& g = game.graph;
    const ColoredGraph& ug = u.graph;
    std::vector<int> cmap(g.num_colors(), -1);
    for (int c = 0; c < g.num_colors(); ++c) {
        if (g.is_eps_color(c))
            throw std::runtime_error("solve_via_universal: eps-free games only");
        cmap[c] = ug.cid(g.alphabet[c]);
    }
    SimulationResult res;
    res.alive.assign(g.n(), std::vector<char>(ug.n(), 1));
    auto has_response = [&](int x, int c, int w) {
        for (int ei : ug.out[x]) {
            const Edge& e = ug.edges[ei];
            if (e.color == cmap[c] && res.alive[w][e.dst]) return true;
        }
        return false;
    };
    for (bool changed = true; changed;) {
        changed = false;
        for (int v = 0; v < g.n(); ++v)
            for (int x = 0; x < ug.n(); ++x) {
                if (!res.alive[v][x]) continue;
                bool ok;
                if (game.eve[v]) {
                    ok = false;
                    for (int ei : g.out[v])
                        ok = ok || has_response(x, g.edges[ei].color, g.edges[ei].dst);
                } else {
                    ok = true;
                    for (int ei : g.out[v])
                        ok = ok && has_response(x, g.edges[ei].color, g.edges[ei].dst);
                }
                if (!ok) {
                    res.alive[v][x] = 0;
                    changed = true;
                }
            }
    }
    Monitor mon = compile_monitor(game.objective);
    res.root.assign(ug.n(), 0);
    for (int x = 0; x < ug.n(); ++x)
        res.root[x] = graph_satisfies(ug, mon, x, SinkRule::Vacuous).ok;
    res.region.assign(g.n(), 0);
    for (int v = 0; v < g.n(); ++v)
        for (int x = 0; x < ug.n(); ++x)
            res.region[v] = res.region[v] || (res.root[x] && res.alive[v][x]);
    return res;
}

ProductStrategy extract_strategy(const Game& game, const OrderedGraph& u,
                                 const SimulationResult& sim) {
    const ColoredGraph& g = game.graph;
    const ColoredGraph& ug = u.graph;
    if (!sim.region[game.initial])
        throw std::runtime_error("extract_strategy: initial vertex is not winning");
    auto chains = chain_decomposition(u);
    int width = static_cast<int>(chains.size());
    std::vector<int> cmap(g.num_colors());
    for (int c = 0; c < g.num_colors(); ++c) cmap[c] = ug.cid(g.alphabet[c]);

    // least(v, k): least safe u-vertex of chain k at game vertex v.
    auto least = [&](int v, int k) {
        for (int x : chains[k])
            if (sim.alive[v][x]) return x;
        return -1;
    };
    std::vector<int> chain_of(ug.n(), -1);
    for (int k = 0; k < width; ++k)
        for (int x : chains[k]) chain_of[x] = k;

    // Start at a least safe vertex whose paths all satisfy the objective.
    int x0 = -1;
    for (int k = 0; k < width && x0 < 0; ++k)
        for (int x : chains[k])
            if (sim.alive[game.initial][x] && sim.root[x]) {
                x0 = x;
                break;
            }
    bool extra = x0 != least(game.initial, chain_of[x0]);

    ProductStrategy s;
    s.memory = width + (extra ? 1 : 0);
    s.initial_mem = extra ? width : chain_of[x0];

    // The response to a game move (c, w) from u-vertex x: the least safe
    // vertex of some chain that x reaches by c (closure under the order
    // guarantees one exists whenever the pair is safe).
    auto response = [&](int x, int c, int w) -> std::pair<int, int> {
        for (int k = 0; k < width; ++k) {
            int z = least(w, k);
            if (z >= 0 && ug.has_edge(x, cmap[c], z)) return {k, z};
        }
        return {-1, -1};
    };
    auto emit = [&](int v, int m, int x) {
        if (game.eve[v]) {
            for (int ei : g.out[v]) {
                const Edge& e = g.edges[ei];
                auto [k, z] = response(x, e.color, e.dst);
                if (k >= 0) {
                    s.edges.push_back({v, m, e.color, e.dst, k});
                    return;
                }
            }
        } else {
            for (int ei : g.out[v]) {
                const Edge& e = g.edges[ei];
                auto [k, z] = response(x, e.color, e.dst);
                if (k >= 0) s.edges.push_back({v, m, e.color, e.dst, k});
            }
        }
    };
    for (int v = 0; v < g.n(); ++v)
        for (int k = 0; k < width; ++k) {
            int x = least(v, k);
            if (x >= 0) emit(v, k, x);
        }
    if (extra) emit(game.initial, width, x0);
    return s;
}

UniversalitySample check_universality_sample(const OrderedGraph& u, const Objective& obj,
                                             int samples, int max_size, uint64_t seed) {
    Monitor mon = compile_monitor(obj);
    std::vector<int> roots;
    for (int x = 0; x < u.graph.n(); ++x)
        if (graph_satisfies(u.graph, mon, x, SinkRule::Vacuous).ok) roots.push_back(x);
    std::mt19937_64 rng(seed);
    int k = static_cast<int>(obj.alphabet.size());
    UniversalitySample out;
    out.samples = samples;
    for (int s = 0; s < samples; ++s) {
        int nv = 1 + static_cast<int>(rng() % max_size);
        ColoredGraph tree;
        tree.alphabet = obj.alphabet;
        tree.is_graph = false;
        tree.vertices.push_back("t0");
        for (int i = 1; i < nv; ++i) {
            tree.vertices.push_back("t" + std::to_string(i));
            tree.edges.push_back({static_cast<int>(rng() % i), static_cast<int>(rng() % k), i});
        }
        tree.finalize();
        if (!graph_satisfies(tree, mon, 0, SinkRule::EpsTail).ok) continue;
        ++out.satisfying;
        if (!find_graph_morphism(tree, u.graph, std::make_pair(0, roots))) {
            ++out.failures;
            if (out.first_failure.empty()) {
                out.first_failure = "no embedding for tree with edges:";
                for (const Edge& e : tree.edges)
                    out.first_failure += " " + std::to_string(e.src) + "-" +
                                         tree.alphabet[e.color] + "->" + std::to_string(e.dst);
            }
        }
    }
    return out;
}

namespace {

/** Max-even acceptance of cycle^w, iterated from q0 until the state repeats. */
bool dpa_accepts_cycle(int q0, const std::vector<int>& cycle,
                       const std::function<int(int, int)>& step,
                       const std::function<int(int, int)>& prio) {
    std::vector<int> starts;
    std::vector<int> maxes;
    int q = q0;
    while (true) {
        for (size_t i = 0; i < starts.size(); ++i)
            if (starts[i] == q) {
                int m = 0;
                for (size_t j = i; j < maxes.size(); ++j) m = std::max(m, maxes[j]);
                return m % 2 == 0;
            }
        starts.push_back(q);
        int m = 0;
        for (int c : cycle) {
            m = std::max(m, prio(q, c));
            q = step(q, c);
        }
        maxes.push_back(m);
    }
}

}  // namespace

ProbeResult parity_automaton_minimality_probe() {
    // Lassos (all with empty prefix) with known membership in the w4
    // objective: InfOften(bb) or (FinOften(b) and FinOften(aa)).
    const int A = 0, B = 1, C = 2;
    std::vector<std::pair<std::vector<int>, bool>> cases = {
        {{C}, true},  {{A}, false}, {{B}, true},
        {{A, C}, true}, {{A, A, C}, false},
    };
    for (int x : {A, C})
        for (int y : {A, C}) {
            cases.push_back({{B, x, y}, false});
            cases.push_back({{B, B, x, y}, true});
            cases.push_back({{B, y, x, B, x, y}, false});
        }

    ProbeResult res;
    // All two-state automata: 2^6 transition tables, 3^6 priority tables.
    for (int init = 0; init < 2; ++init)
        for (int dmask = 0; dmask < 64; ++dmask)
            for (int pcode = 0; pcode < 729; ++pcode) {
                int d[2][3], p[2][3], pc = pcode;
                for (int q = 0; q < 2; ++q)
                    for (int c = 0; c < 3; ++c) {
                        d[q][c] = (dmask >> (q * 3 + c)) & 1;
                        p[q][c] = pc % 3;
                        pc /= 3;
                    }
                ++res.tested;
                bool consistent = true;
                for (const auto& [cycle, expected] : cases) {
                    bool got = dpa_accepts_cycle(
                        init, cycle, [&](int q, int c) { return d[q][c]; },
                        [&](int q, int c) { return p[q][c]; });
                    if (got != expected) {
                        consistent = false;
                        break;
                    }
                }
                if (consistent) ++res.consistent_two_state;
            }

    Objective w4 = builtin_objective("w4");
    res.three_state_ok = true;
    for (const auto& [cycle, expected] : cases) {
        LassoWord w;
        for (int c : cycle) w.cycle.push_back(w4.alphabet[c]);
        if (lasso_membership(w4, w) != expected) res.three_state_ok = false;
    }
    return res;
}

}  // namespace memoria
