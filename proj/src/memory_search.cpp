#include "memoria/memory_search.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "memoria/monitor.hpp"

namespace memoria {

namespace {

/**
 * Backtracking search for a deterministic winning product strategy with
 * exactly k memory states. Decisions are discovered on the fly: reaching a
 * fresh position (vertex, state) queues one decision for Eve (pick a move and
 * a successor state) or one per edge for Adam (pick a successor state).
 */
class Search {
  public:
    Search(const Game& game, StrategyKind kind, int k,
           const std::vector<std::vector<int>>* delta)
        : game_(game), g_(game.graph), kind_(kind), k_(k), delta_(delta),
          mon_(compile_monitor(game.objective)) {
        auto e = g_.eps_color();
        eps_ = e ? *e : -1;
    }

    bool run(ProductStrategy& out) {
        discovered_.assign(g_.n() * k_, 0);
        max_used_ = 0;
        discover(game_.initial, 0);
        if (!rec(0)) return false;
        out.memory = k_;
        out.initial_mem = 0;
        out.edges = edges_;
        if (kind_ == StrategyKind::Chromatic && delta_) out.delta = *delta_;
        return true;
    }

  private:
    struct Decision {
        int v, m, ei;  // ei = -1: Eve picks any move; otherwise Adam's edge ei
    };

    void discover(int v, int m) {
        discovered_[v * k_ + m] = 1;
        discover_log_.push_back(v * k_ + m);
        if (game_.eve[v]) {
            agenda_.push_back({v, m, -1});
        } else {
            for (int ei : g_.out[v]) agenda_.push_back({v, m, ei});
        }
    }

    std::vector<int> allowed(int m, int color) const {
        if (color == eps_) return {m};
        if (kind_ == StrategyKind::Chromatic) return {(*delta_)[m][color]};
        std::vector<int> ms;
        for (int m2 = 0; m2 <= std::min(k_ - 1, max_used_ + 1); ++m2) ms.push_back(m2);
        return ms;
    }

    /** Does the partial strategy graph already admit a losing consistent play? */
    bool doomed() const {
        ColoredGraph sg;
        sg.alphabet = g_.alphabet;
        sg.is_graph = false;
        std::vector<int> node(g_.n() * k_, -1);
        for (int p = 0; p < g_.n() * k_; ++p)
            if (discovered_[p]) {
                node[p] = static_cast<int>(sg.vertices.size());
                sg.vertices.push_back(std::to_string(p));
            }
        for (const auto& e : edges_)
            sg.edges.push_back({node[e.src * k_ + e.mem], e.color, node[e.dst * k_ + e.mem2]});
        sg.finalize();
        int start = node[game_.initial * k_];
        return !graph_satisfies(sg, mon_, start, SinkRule::Vacuous).ok;
    }

    bool try_option(size_t di, int ei, int m2) {
        const Decision& d = agenda_[di];
        const Edge& e = g_.edges[ei];
        size_t asize = agenda_.size();
        size_t dsize = discover_log_.size();
        int saved_max = max_used_;
        edges_.push_back({d.v, d.m, e.color, e.dst, m2});
        max_used_ = std::max(max_used_, m2);
        if (!discovered_[e.dst * k_ + m2]) discover(e.dst, m2);
        if (!doomed() && rec(di + 1)) return true;
        edges_.pop_back();
        while (discover_log_.size() > dsize) {
            discovered_[discover_log_.back()] = 0;
            discover_log_.pop_back();
        }
        agenda_.resize(asize);
        max_used_ = saved_max;
        return false;
    }

    bool rec(size_t di) {
        if (di == agenda_.size()) return true;
        const Decision d = agenda_[di];
        if (d.ei >= 0) {
            for (int m2 : allowed(d.m, g_.edges[d.ei].color))
                if (try_option(di, d.ei, m2)) return true;
            return false;
        }
        for (int ei : g_.out[d.v])
            for (int m2 : allowed(d.m, g_.edges[ei].color))
                if (try_option(di, ei, m2)) return true;
        return false;
    }

    const Game& game_;
    const ColoredGraph& g_;
    StrategyKind kind_;
    int k_;
    const std::vector<std::vector<int>>* delta_;
    Monitor mon_;
    int eps_ = -1;
    std::vector<char> discovered_;
    std::vector<int> discover_log_;
    std::vector<Decision> agenda_;
    std::vector<ProductStrategy::SEdge> edges_;
    int max_used_ = 0;
};

bool found_with_k(const Game& game, StrategyKind kind, int k, ProductStrategy& out) {
    if (kind != StrategyKind::Chromatic) {
        Search s(game, kind, k, nullptr);
        return s.run(out);
    }
    // Enumerate update functions; eps (when present) must keep the state.
    const ColoredGraph& g = game.graph;
    auto eps = g.eps_color();
    std::vector<int> free_cols;
    for (int c = 0; c < g.num_colors(); ++c)
        if (!eps || c != *eps) free_cols.push_back(c);
    int cells = k * static_cast<int>(free_cols.size());
    double count = 1;
    for (int i = 0; i < cells; ++i) count *= k;
    if (count > 4e6) throw std::runtime_error("chromatic search space too large");
    std::vector<std::vector<int>> delta(k, std::vector<int>(g.num_colors(), 0));
    if (eps)
        for (int m = 0; m < k; ++m) delta[m][*eps] = m;
    std::vector<int> code(cells, 0);
    while (true) {
        for (int i = 0; i < cells; ++i)
            delta[i / free_cols.size()][free_cols[i % free_cols.size()]] = code[i];
        Search s(game, kind, k, &delta);
        if (s.run(out)) return true;
        int i = 0;
        while (i < cells && ++code[i] == k) code[i++] = 0;
        if (i == cells) return false;
    }
}

}  // namespace

std::optional<MemoryResult> min_memory(const Game& game, StrategyKind kind, int k_max) {
    validate_game(game);
    if (kind == StrategyKind::General && game.allows_eps)
        throw std::runtime_error("min_memory: the general class applies to eps-free games");
    for (int k = 1; k <= k_max; ++k) {
        ProductStrategy s;
        if (found_with_k(game, kind, k, s)) {
            VerifyResult v = verify_strategy(game, s);
            if (!v.ok)
                throw std::runtime_error("memory search produced a losing strategy: " + v.reason);
            return MemoryResult{k, std::move(s)};
        }
    }
    return std::nullopt;
}

}  // namespace memoria
