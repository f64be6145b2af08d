#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "memoria/acceptance.hpp"
#include "memoria/game.hpp"
#include "memoria/io.hpp"
#include "memoria/memory_search.hpp"
#include "memoria/monitor.hpp"
#include "memoria/order.hpp"
#include "memoria/solver.hpp"
#include "memoria/universal.hpp"
#include "memoria/zielonka.hpp"

namespace {

using namespace memoria;

int max_search_budget(int fallback) {
    const char* env = std::getenv("MEMORIA_MAX_SEARCH");
    if (!env) return fallback;
    int v = std::atoi(env);
    return v > 0 ? std::min(v, fallback) : fallback;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text;
    else
        save_text(out_path, text);
}

int cmd_zielonka(const std::string& file, bool dot) {
    Objective obj = objective_from_json(load_json(file));
    if (obj.kind != Objective::Kind::Muller) {
        std::cerr << "zielonka: the objective must be of kind muller\n";
        return 2;
    }
    ZielonkaTree zt = build_zielonka(obj);
    if (dot)
        std::cout << zielonka_dot(zt);
    else
        std::cout << zielonka_pretty(zt);
    std::cout << "memory: " << zielonka_memory(zt) << "\n";
    return 0;
}

int cmd_build(const std::string& name, int bound, int m, int n, const std::string& out_path,
              bool dot) {
    OrderedGraph u = builtin_universal(name, bound, m, n);
    std::cerr << "width: " << poset_width(u).width << "\n";
    emit(out_path, dot ? graph_dot(u.graph) : ordered_to_json(u).dump(2) + "\n");
    return 0;
}

int cmd_solve(const std::string& game_file, const std::string& universal_file,
              const std::string& out_path) {
    Game game = game_from_json(load_json(game_file));
    std::vector<char> region;
    if (universal_file.empty()) {
        region = solve_oracle(game);
    } else {
        OrderedGraph u = ordered_from_json(load_json(universal_file));
        SimulationResult sim = solve_via_universal(game, u);
        region = sim.region;
        if (region[game.initial] && !out_path.empty()) {
            ProductStrategy s = extract_strategy(game, u, sim);
            save_text(out_path, strategy_to_json(s, game.graph).dump(2) + "\n");
        }
    }
    for (int v = 0; v < game.graph.n(); ++v)
        std::cout << game.graph.vertices[v] << ": " << (region[v] ? "eve" : "adam") << "\n";
    return 0;
}

int cmd_minmem(const std::string& game_file, const std::string& variant, int kmax) {
    Game game = game_from_json(load_json(game_file));
    StrategyKind kind;
    if (variant == "general")
        kind = StrategyKind::General;
    else if (variant == "eps")
        kind = StrategyKind::EpsPreserving;
    else if (variant == "chromatic")
        kind = StrategyKind::Chromatic;
    else {
        std::cerr << "minmem: variant must be general, eps, or chromatic\n";
        return 2;
    }
    auto r = min_memory(game, kind, max_search_budget(kmax));
    if (!r) {
        std::cout << "no winning strategy within the budget\n";
        return 1;
    }
    std::cout << r->memory << "\n";
    return 0;
}

int cmd_checkuniv(const std::string& universal_file, const std::string& objective_file,
                  int samples, int size, uint64_t seed) {
    OrderedGraph u = ordered_from_json(load_json(universal_file));
    Objective obj = objective_from_json(load_json(objective_file));
    if (auto w = check_monotone(u)) {
        std::cout << "FAIL: not monotone at " << u.graph.vertices[w->u] << " >= "
                  << u.graph.vertices[w->v] << " -" << u.graph.alphabet[w->color] << "-> "
                  << u.graph.vertices[w->vp] << " >= " << u.graph.vertices[w->up] << "\n";
        return 1;
    }
    UniversalitySample us = check_universality_sample(u, obj, samples, size, seed);
    std::cout << "samples: " << us.samples << ", satisfying: " << us.satisfying
              << ", failures: " << us.failures << "\n";
    if (us.failures > 0) {
        std::cout << "first failure: " << us.first_failure << "\n";
        return 1;
    }
    std::cout << "PASS\n";
    return 0;
}

int cmd_table1(const std::string& rows) {
    std::vector<int> indices;
    for (char ch : rows)
        if (ch >= '1' && ch <= '9') indices.push_back(ch - '0');
    auto reports = run_acceptance(indices);
    std::cout << render_report(reports, true);
    for (const auto& rep : reports)
        if (!rep.pass) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"memoria: memory requirements of objectives over infinite plays"};
    app.require_subcommand(1);

    std::string file, universal, objective, out_path, variant = "general", name, rows;
    int bound = 5, m = 1, n = 1, kmax = 6, samples = 100, size = 4;
    uint64_t seed = 1;
    bool dot = false;

    auto* z = app.add_subcommand("zielonka", "tree and memory value of a Muller objective");
    z->add_option("file", file)->required();
    z->add_flag("--dot", dot);

    auto* b = app.add_subcommand("build", "emit a named monotone graph");
    b->add_option("name", name)->required();
    b->add_option("--bound", bound);
    b->add_option("--m", m);
    b->add_option("--n", n);
    b->add_option("--out", out_path);
    b->add_flag("--dot", dot);

    auto* s = app.add_subcommand("solve", "winning regions of a game");
    s->add_option("game", file)->required();
    s->add_option("--universal", universal);
    s->add_option("--out", out_path);

    auto* mm = app.add_subcommand("minmem", "least memory of a winning strategy");
    mm->add_option("game", file)->required();
    mm->add_option("variant", variant);
    mm->add_option("--kmax", kmax);

    auto* cu = app.add_subcommand("checkuniv", "sampled universality check");
    cu->add_option("universal", universal)->required();
    cu->add_option("objective", objective)->required();
    cu->add_option("--samples", samples);
    cu->add_option("--size", size);
    cu->add_option("--seed", seed);

    auto* t = app.add_subcommand("table1", "run the acceptance rows");
    t->add_option("--row", rows, "digits 1-9 selecting rows; empty = all");

    CLI11_PARSE(app, argc, argv);

    try {
        if (z->parsed()) return cmd_zielonka(file, dot);
        if (b->parsed()) return cmd_build(name, bound, m, n, out_path, dot);
        if (s->parsed()) return cmd_solve(file, universal, out_path);
        if (mm->parsed()) return cmd_minmem(file, variant, kmax);
        if (cu->parsed()) return cmd_checkuniv(universal, objective, samples, size, seed);
        if (t->parsed()) return cmd_table1(rows);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
