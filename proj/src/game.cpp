#include "memoria/game.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "memoria/monitor.hpp"

namespace memoria {

void validate_game(const Game& game) {
    const ColoredGraph& g = game.graph;
    if (static_cast<int>(game.eve.size()) != g.n())
        throw std::runtime_error("game: ownership is not total");
    if (game.initial < 0 || game.initial >= g.n())
        throw std::runtime_error("game: initial vertex out of range");
    std::set<std::string> sigma(game.objective.alphabet.begin(), game.objective.alphabet.end());
    for (int c = 0; c < g.num_colors(); ++c) {
        if (g.is_eps_color(c)) {
            if (!game.allows_eps) throw std::runtime_error("game: eps edges are not allowed here");
        } else if (!sigma.count(g.alphabet[c])) {
            throw std::runtime_error("game: color not in the objective alphabet: " + g.alphabet[c]);
        }
    }
    for (int v = 0; v < g.n(); ++v)
        if (g.out[v].empty()) throw std::runtime_error("game: sink vertex " + g.vertices[v]);
}

VerifyResult verify_strategy(const Game& game, const ProductStrategy& strategy) {
    const ColoredGraph& g = game.graph;
    auto fail = [](std::string why) {
        VerifyResult r;
        r.ok = false;
        r.reason = std::move(why);
        return r;
    };
    if (strategy.memory < 1) return fail("memory must be positive");
    for (const auto& e : strategy.edges) {
        if (e.src < 0 || e.src >= g.n() || e.dst < 0 || e.dst >= g.n() || e.mem < 0 ||
            e.mem >= strategy.memory || e.mem2 < 0 || e.mem2 >= strategy.memory)
            return fail("strategy edge out of range");
        if (!g.has_edge(e.src, e.color, e.dst)) return fail("strategy edge is not a game edge");
        if (strategy.delta && (*strategy.delta)[e.mem][e.color] != e.mem2)
            return fail("memory update contradicts the declared update function");
    }

    std::map<std::pair<int, int>, std::vector<const ProductStrategy::SEdge*>> moves;
    for (const auto& e : strategy.edges) moves[{e.src, e.mem}].push_back(&e);

    // Explore reachable positions and assemble the strategy graph.
    std::map<std::pair<int, int>, int> idx;
    ColoredGraph sg;
    sg.alphabet = g.alphabet;
    sg.is_graph = false;
    std::vector<std::pair<int, int>> nodes;
    auto node = [&](int v, int m) {
        auto [it, fresh] = idx.try_emplace({v, m}, static_cast<int>(nodes.size()));
        if (fresh) {
            nodes.push_back({v, m});
            sg.vertices.push_back(g.vertices[v] + "#" + std::to_string(m));
        }
        return it->second;
    };
    node(game.initial, strategy.initial_mem);
    for (size_t i = 0; i < nodes.size(); ++i) {
        auto [v, m] = nodes[i];
        auto it = moves.find({v, m});
        const auto& list = it == moves.end() ? std::vector<const ProductStrategy::SEdge*>{}
                                             : it->second;
        if (game.eve[v]) {
            if (list.empty())
                return fail("no move at Eve position " + g.vertices[v] + "#" + std::to_string(m));
        } else {
            for (int ei : g.out[v]) {
                const Edge& e = g.edges[ei];
                bool covered = false;
                for (const auto* se : list)
                    covered = covered || (se->color == e.color && se->dst == e.dst);
                if (!covered)
                    return fail("uncovered opponent move at " + g.vertices[v] + "#" +
                                std::to_string(m));
            }
        }
        for (const auto* se : list)
            sg.edges.push_back({static_cast<int>(i), se->color, node(se->dst, se->mem2)});
    }
    sg.finalize();

    SatisfyResult sat = graph_satisfies(sg, game.objective, 0, SinkRule::Vacuous);
    if (!sat.ok) {
        VerifyResult r = fail("a consistent play violates the objective");
        r.losing_play = sat.counterexample;
        return r;
    }
    return {};
}

namespace {

Game finish_game(std::vector<std::string> alphabet, std::vector<std::string> vertices,
                 std::vector<std::array<std::string, 3>> edges, std::vector<char> eve,
                 const std::string& initial, Objective obj, bool eps) {
    Game game;
    game.graph = make_graph(std::move(alphabet), std::move(vertices), std::move(edges));
    game.eve = std::move(eve);
    game.initial = game.graph.vid(initial);
    game.objective = std::move(obj);
    game.allows_eps = eps;
    validate_game(game);
    return game;
}

Game two_loops_game() {
    return finish_game({"a", "b"}, {"v0", "v1", "v2"},
                       {{"v0", "a", "v1"},
                        {"v0", "a", "v2"},
                        {"v1", "b", "v0"},
                        {"v2", "a", "v2"},
                        {"v2", "b", "v2"}},
                       {0, 1, 1}, "v0", builtin_objective("alternation"), false);
}

Game count_then_exit_game(int m, int n) {
    std::vector<std::string> vs;
    std::vector<std::array<std::string, 3>> es;
    for (int k = 1; k <= m; ++k) {
        std::string v = "e" + std::to_string(k);
        std::string next = k == m ? "f" : "e" + std::to_string(k + 1);
        vs.push_back(v);
        es.push_back({v, "b", v});
        es.push_back({v, "a", next});
    }
    vs.push_back("f");
    vs.push_back("t");
    es.push_back({"f", "b", "f"});
    es.push_back({"f", "a", "t"});
    es.push_back({"t", "b", "t"});
    return finish_game({"a", "b"}, vs, es, std::vector<char>(vs.size(), 1), "e1",
                       builtin_objective("w3", {}, m, n), false);
}

Game answer_last_game() {
    return finish_game({"a", "b", "c"}, {"u", "e"},
                       {{"u", "b", "e"},
                        {"u", "c", "e"},
                        {"e", "a", "u"},
                        {"e", "b", "u"},
                        {"e", "c", "u"}},
                       {0, 1}, "u", builtin_objective("w4"), false);
}

Game recolor_eps_game(std::vector<std::string> sigma) {
    if (sigma.empty()) sigma = {"a", "b", "c"};
    std::vector<std::string> alphabet = sigma;
    alphabet.push_back(kEps);
    std::vector<std::string> vs{"v0"};
    std::vector<char> eve{1};
    std::vector<std::array<std::string, 3>> es;
    for (const auto& c : sigma) {
        vs.push_back("x_" + c);
        eve.push_back(0);
        es.push_back({"v0", kEps, "x_" + c});
        for (const auto& d : sigma)
            if (d != c) es.push_back({"x_" + c, d, "v0"});
    }
    return finish_game(alphabet, vs, es, eve, "v0", builtin_objective("w2", sigma), true);
}

Game spell_then_commit_game(int max_len, std::vector<std::string> sigma) {
    if (sigma.empty()) sigma = {"a", "b", "c"};
    if (max_len < 1 || sigma.size() < 2)
        throw std::runtime_error("spell-then-commit: need max_len >= 1 and two colors");
    std::vector<std::string> vs;
    std::vector<char> eve;
    std::vector<std::array<std::string, 3>> es;
    std::vector<std::string> pair_names;
    for (size_t i = 0; i < sigma.size(); ++i)
        for (size_t j = i + 1; j < sigma.size(); ++j) {
            std::string name = "pick_" + sigma[i] + sigma[j];
            pair_names.push_back(name);
            vs.push_back(name);
            eve.push_back(1);
            es.push_back({name, sigma[i], name});
            es.push_back({name, sigma[j], name});
        }
    // Repeat-free words up to max_len, generated shortest-first.
    std::vector<std::pair<std::string, std::string>> words{{"w_", ""}};  // (vertex name, last color)
    vs.push_back("w_");
    eve.push_back(0);
    for (size_t i = 0; i < words.size(); ++i) {
        auto [name, last] = words[i];
        for (const auto& c : sigma) {
            if (c == last) continue;
            if (name.size() - 2 < static_cast<size_t>(max_len)) {
                std::string child = name + c;
                vs.push_back(child);
                eve.push_back(0);
                es.push_back({name, c, child});
                words.push_back({child, c});
            }
            for (const auto& p : pair_names) es.push_back({name, c, p});
        }
    }
    return finish_game(sigma, vs, es, eve, "w_", builtin_objective("w2", sigma), false);
}

}  // namespace

Game lower_bound_game(const std::string& name, int m, int n,
                      const std::vector<std::string>& sigma) {
    if (name == "two-loops") return two_loops_game();
    if (name == "count-then-exit") return count_then_exit_game(m, n);
    if (name == "answer-last") return answer_last_game();
    if (name == "recolor-eps") return recolor_eps_game(sigma);
    if (name == "spell-then-commit") return spell_then_commit_game(m, sigma);
    throw std::runtime_error("unknown game: " + name);
}

ColoredGraph ascent_descent_graph(int m) {
    if (m < 2) throw std::runtime_error("ascent_descent_graph: need at least two vertices");
    std::vector<std::string> vs;
    std::vector<std::array<std::string, 3>> es;
    for (int i = 0; i < m; ++i) vs.push_back(std::to_string(i));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            es.push_back({vs[i], "a", vs[j]});
            es.push_back({vs[j], "b", vs[i]});
        }
    return make_graph({"a", "b"}, vs, es);
}

Game normalize_no_repeat(Game game) {
    if (game.allows_eps) throw std::runtime_error("normalize_no_repeat: eps-free games only");
    ColoredGraph& g = game.graph;
    std::vector<Edge> edges = g.edges;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Edge> kept;
        for (const Edge& e : edges) {
            bool bad = false;
            if (game.eve[e.src]) {
                // Would the play be forced (or allowed, for an opponent
                // vertex) to repeat the color immediately after this move?
                bool all_same = true, any_same = false;
                for (const Edge& f : edges) {
                    if (f.src != e.dst) continue;
                    all_same = all_same && f.color == e.color;
                    any_same = any_same || f.color == e.color;
                }
                bad = game.eve[e.dst] ? all_same : any_same;
            }
            if (bad)
                changed = true;
            else
                kept.push_back(e);
        }
        edges = std::move(kept);
    }
    g.edges = std::move(edges);
    g.finalize();
    return game;
}

ProductStrategy w2_two_state_strategy(const Game& game) {
    const ColoredGraph& g = game.graph;
    // first[v] / second[v]: two moves of distinct colors where possible.
    std::vector<int> first(g.n(), -1), second(g.n(), -1);
    for (int v = 0; v < g.n(); ++v) {
        if (!game.eve[v]) continue;
        if (g.out[v].empty())
            throw std::runtime_error("no move left at Eve vertex " + g.vertices[v]);
        first[v] = g.out[v][0];
        second[v] = first[v];
        for (int ei : g.out[v])
            if (g.edges[ei].color != g.edges[first[v]].color) {
                second[v] = ei;
                break;
            }
    }
    auto mem_after = [&](const Edge& e) {
        // Memory 1 records: the play arrived at an Eve vertex by the color of
        // its first move, so the second one must be played.
        return (game.eve[e.dst] && first[e.dst] >= 0 &&
                g.edges[first[e.dst]].color == e.color)
                   ? 1
                   : 0;
    };
    ProductStrategy s;
    s.memory = 2;
    s.initial_mem = 0;
    for (int v = 0; v < g.n(); ++v)
        for (int m = 0; m < 2; ++m) {
            if (game.eve[v]) {
                const Edge& e = g.edges[m == 0 ? first[v] : second[v]];
                s.edges.push_back({v, m, e.color, e.dst, mem_after(e)});
            } else {
                for (int ei : g.out[v]) {
                    const Edge& e = g.edges[ei];
                    s.edges.push_back({v, m, e.color, e.dst, mem_after(e)});
                }
            }
        }
    return s;
}

}  // namespace memoria
