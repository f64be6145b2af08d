#include "memoria/random_gen.hpp"

#include <stdexcept>
#include <string>

namespace memoria {

namespace {

int uni(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

ColoredGraph random_graph(Rng& rng, const std::vector<std::string>& alphabet, int max_n) {
    if (alphabet.empty() || max_n < 2) throw std::runtime_error("random_graph: bad parameters");
    ColoredGraph g;
    g.alphabet = alphabet;
    int n = uni(rng, 2, max_n);
    for (int v = 0; v < n; ++v) g.vertices.push_back("v" + std::to_string(v));
    int k = static_cast<int>(alphabet.size());
    for (int v = 0; v < n; ++v) {
        int deg = uni(rng, 1, 3);
        for (int i = 0; i < deg; ++i)
            g.edges.push_back({v, uni(rng, 0, k - 1), uni(rng, 0, n - 1)});
    }
    g.finalize();
    return g;
}

Game random_game(Rng& rng, const Objective& obj, int max_n) {
    Game game;
    game.graph = random_graph(rng, obj.alphabet, max_n);
    int n = game.graph.n();
    game.eve.resize(n);
    for (int v = 0; v < n; ++v) game.eve[v] = static_cast<char>(uni(rng, 0, 1));
    game.initial = uni(rng, 0, n - 1);
    game.objective = obj;
    game.allows_eps = false;
    return game;
}

OrderedGraph random_poset(Rng& rng, int max_n) {
    if (max_n < 1) throw std::runtime_error("random_poset: bad size");
    ColoredGraph g;
    g.alphabet = {"a"};
    int n = uni(rng, 1, max_n);
    for (int v = 0; v < n; ++v) g.vertices.push_back("v" + std::to_string(v));
    g.finalize();
    // Random relations i < j over a fixed linear candidate order keep the
    // generator set acyclic, so transitive closure always yields a poset.
    std::vector<std::pair<int, int>> gens;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (uni(rng, 0, 1)) gens.emplace_back(i, j);
    return make_ordered(g, gens);
}

LassoWord random_lasso(Rng& rng, const std::vector<std::string>& alphabet, int max_len) {
    if (alphabet.empty() || max_len < 1) throw std::runtime_error("random_lasso: bad parameters");
    int k = static_cast<int>(alphabet.size());
    LassoWord w;
    int plen = uni(rng, 0, max_len);
    int clen = uni(rng, 1, max_len);
    for (int i = 0; i < plen; ++i) w.prefix.push_back(alphabet[uni(rng, 0, k - 1)]);
    for (int i = 0; i < clen; ++i) w.cycle.push_back(alphabet[uni(rng, 0, k - 1)]);
    return w;
}

}  // namespace memoria
