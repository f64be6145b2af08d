#include "memoria/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace memoria {

namespace {

Json edges_to_json(const ColoredGraph& g) {
    Json arr = Json::array();
    for (const auto& e : g.edges)
        arr.push_back({g.vertices[e.src], g.alphabet[e.color], g.vertices[e.dst]});
    return arr;
}

std::vector<std::array<std::string, 3>> edges_from_json(const Json& j) {
    std::vector<std::array<std::string, 3>> edges;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3)
            throw std::runtime_error("edge must be [src, color, dst]");
        edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(),
                         e[2].get<std::string>()});
    }
    return edges;
}

Json dfa_to_json(const Dfa& d) {
    return Json{{"alphabet", d.alphabet},
                {"num_states", d.num_states},
                {"initial", d.initial},
                {"sink", d.sink},
                {"delta", d.delta}};
}

Dfa dfa_from_json(const Json& j) {
    Dfa d;
    d.alphabet = j.at("alphabet").get<std::vector<std::string>>();
    d.num_states = j.at("num_states").get<int>();
    d.initial = j.at("initial").get<int>();
    d.sink = j.value("sink", -1);
    d.delta = j.at("delta").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(d.delta.size()) != d.num_states)
        throw std::runtime_error("dfa delta has wrong number of rows");
    for (const auto& row : d.delta)
        if (row.size() != d.alphabet.size())
            throw std::runtime_error("dfa delta has wrong number of columns");
    return d;
}

}  // namespace

Json graph_to_json(const ColoredGraph& g) {
    Json verts = Json::array();
    for (const auto& v : g.vertices) verts.push_back(Json{{"id", v}});
    return Json{{"alphabet", g.alphabet},
                {"vertices", verts},
                {"edges", edges_to_json(g)},
                {"graph", g.is_graph}};
}

ColoredGraph graph_from_json(const Json& j) {
    RawGraph raw;
    raw.alphabet = j.at("alphabet").get<std::vector<std::string>>();
    for (const auto& v : j.at("vertices")) {
        if (v.is_string())
            raw.vertices.push_back(v.get<std::string>());
        else
            raw.vertices.push_back(v.at("id").get<std::string>());
    }
    raw.edges = edges_from_json(j.at("edges"));
    raw.want_graph = j.value("graph", true);
    Diagnostic diag;
    auto g = validate(raw, diag);
    if (!g) throw std::runtime_error("invalid graph document: " + diag.str());
    return *g;
}

Json ordered_to_json(const OrderedGraph& og) {
    Json j = graph_to_json(og.graph);
    Json order = Json::array();
    for (int i = 0; i < og.graph.n(); ++i)
        for (int k = 0; k < og.graph.n(); ++k)
            if (i != k && og.le(i, k))
                order.push_back({og.graph.vertices[i], og.graph.vertices[k]});
    j["order"] = order;
    return j;
}

OrderedGraph ordered_from_json(const Json& j) {
    ColoredGraph g = graph_from_json(j);
    std::vector<std::pair<int, int>> gens;
    for (const auto& p : j.at("order"))
        gens.emplace_back(g.vid(p.at(0).get<std::string>()), g.vid(p.at(1).get<std::string>()));
    return make_ordered(std::move(g), gens);
}

Json separated_to_json(const EpsSeparatedGraph& eg, const ChromaticTag* tag) {
    Json j = graph_to_json(eg.graph);
    Json parts = Json::object();
    for (int v = 0; v < eg.graph.n(); ++v)
        parts[eg.graph.vertices[v]] = eg.part_names[eg.part[v]];
    j["parts"] = parts;
    if (tag) {
        Json delta = Json::object();
        for (int p = 0; p < eg.breadth(); ++p) {
            Json row = Json::object();
            for (int c = 0; c < eg.graph.num_colors(); ++c)
                row[eg.graph.alphabet[c]] = eg.part_names[tag->update[p][c]];
            delta[eg.part_names[p]] = row;
        }
        j["delta"] = delta;
    }
    return j;
}

EpsSeparatedGraph separated_from_json(const Json& j) {
    EpsSeparatedGraph eg;
    eg.graph = graph_from_json(j);
    const Json& parts = j.at("parts");
    eg.part.assign(eg.graph.n(), -1);
    for (int v = 0; v < eg.graph.n(); ++v) {
        std::string pname = parts.at(eg.graph.vertices[v]).get<std::string>();
        int pi = -1;
        for (size_t i = 0; i < eg.part_names.size(); ++i)
            if (eg.part_names[i] == pname) pi = static_cast<int>(i);
        if (pi < 0) {
            pi = static_cast<int>(eg.part_names.size());
            eg.part_names.push_back(pname);
        }
        eg.part[v] = pi;
    }
    return eg;
}

Json objective_to_json(const Objective& obj) {
    Json j;
    j["alphabet"] = obj.alphabet;
    switch (obj.kind) {
        case Objective::Kind::Muller: {
            j["kind"] = "muller";
            Json fam = Json::array();
            for (const auto& set : obj.family) {
                Json s = Json::array();
                for (int c : set) s.push_back(obj.alphabet[c]);
                fam.push_back(s);
            }
            j["family"] = fam;
            break;
        }
        case Objective::Kind::Parity:
            j["kind"] = "parity";
            j["priorities"] = obj.priorities;
            break;
        case Objective::Kind::ParityAutomaton:
            j["kind"] = "parity_automaton";
            j["dfa"] = dfa_to_json(obj.dfa);
            j["trans_priority"] = obj.trans_priority;
            break;
        case Objective::Kind::SafetyRegular:
            j["kind"] = "safety";
            j["dfa"] = dfa_to_json(obj.dfa);
            j["complemented"] = obj.complemented;
            break;
        case Objective::Kind::Lexico:
        case Objective::Kind::Union:
        case Objective::Kind::Intersection: {
            j["kind"] = obj.kind == Objective::Kind::Lexico    ? "lexico"
                        : obj.kind == Objective::Kind::Union   ? "union"
                                                               : "intersection";
            Json parts = Json::array();
            for (const auto& p : obj.parts) parts.push_back(objective_to_json(*p));
            j["parts"] = parts;
            break;
        }
    }
    return j;
}

Objective objective_from_json(const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "builtin")
        return builtin_objective(j.at("name").get<std::string>(),
                                 j.value("alphabet", std::vector<std::string>{}),
                                 j.value("m", 1), j.value("n", 1));
    auto alphabet = j.at("alphabet").get<std::vector<std::string>>();
    if (kind == "muller") {
        std::vector<std::vector<std::string>> fam;
        for (const auto& s : j.at("family")) fam.push_back(s.get<std::vector<std::string>>());
        return make_muller(alphabet, fam);
    }
    if (kind == "parity") return make_parity(alphabet, j.at("priorities").get<std::vector<int>>());
    if (kind == "parity_automaton")
        return make_parity_automaton(dfa_from_json(j.at("dfa")),
                                     j.at("trans_priority").get<std::vector<std::vector<int>>>());
    if (kind == "safety")
        return make_safety(dfa_from_json(j.at("dfa")), j.value("complemented", false));
    if (kind == "lexico") {
        const Json& parts = j.at("parts");
        if (parts.size() != 2) throw std::runtime_error("lexico objective needs two parts");
        return make_lexico(objective_from_json(parts[0]), objective_from_json(parts[1]));
    }
    if (kind == "union" || kind == "intersection") {
        std::vector<Objective> parts;
        for (const auto& p : j.at("parts")) parts.push_back(objective_from_json(p));
        return kind == "union" ? make_union(std::move(parts))
                               : make_intersection(std::move(parts));
    }
    throw std::runtime_error("unknown objective kind: " + kind);
}

Json game_to_json(const Game& game) {
    Json j = graph_to_json(game.graph);
    Json eve = Json::array();
    for (int v = 0; v < game.graph.n(); ++v)
        if (game.eve[v]) eve.push_back(game.graph.vertices[v]);
    j["eve"] = eve;
    j["initial"] = game.graph.vertices[game.initial];
    j["objective"] = objective_to_json(game.objective);
    j["epsilon"] = game.allows_eps;
    return j;
}

Game game_from_json(const Json& j) {
    Game game;
    game.graph = graph_from_json(j);
    game.eve.assign(game.graph.n(), 0);
    for (const auto& v : j.at("eve")) game.eve[game.graph.vid(v.get<std::string>())] = 1;
    game.initial = game.graph.vid(j.at("initial").get<std::string>());
    game.objective = objective_from_json(j.at("objective"));
    game.allows_eps = j.value("epsilon", false);
    validate_game(game);
    return game;
}

Json strategy_to_json(const ProductStrategy& s, const ColoredGraph& g) {
    Json j;
    std::vector<std::string> mnames;
    for (int m = 0; m < s.memory; ++m) mnames.push_back("m" + std::to_string(m));
    j["memory"] = mnames;
    j["initial"] = mnames[s.initial_mem];
    Json edges = Json::array();
    for (const auto& e : s.edges)
        edges.push_back({g.vertices[e.src], mnames[e.mem], g.alphabet[e.color],
                         g.vertices[e.dst], mnames[e.mem2]});
    j["edges"] = edges;
    if (s.delta) {
        Json delta = Json::object();
        for (int m = 0; m < s.memory; ++m) {
            Json row = Json::object();
            for (int c = 0; c < g.num_colors(); ++c) row[g.alphabet[c]] = mnames[(*s.delta)[m][c]];
            delta[mnames[m]] = row;
        }
        j["delta"] = delta;
    }
    return j;
}

ProductStrategy strategy_from_json(const Json& j, const ColoredGraph& g) {
    ProductStrategy s;
    auto mnames = j.at("memory").get<std::vector<std::string>>();
    s.memory = static_cast<int>(mnames.size());
    auto mid = [&](const std::string& name) {
        for (size_t i = 0; i < mnames.size(); ++i)
            if (mnames[i] == name) return static_cast<int>(i);
        throw std::runtime_error("unknown memory state: " + name);
    };
    s.initial_mem = mid(j.at("initial").get<std::string>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 5)
            throw std::runtime_error("strategy edge must be [src, mem, color, dst, mem]");
        s.edges.push_back({g.vid(e[0].get<std::string>()), mid(e[1].get<std::string>()),
                           g.cid(e[2].get<std::string>()), g.vid(e[3].get<std::string>()),
                           mid(e[4].get<std::string>())});
    }
    if (j.contains("delta")) {
        std::vector<std::vector<int>> delta(s.memory, std::vector<int>(g.num_colors(), 0));
        for (int m = 0; m < s.memory; ++m) {
            const Json& row = j.at("delta").at(mnames[m]);
            for (int c = 0; c < g.num_colors(); ++c)
                delta[m][c] = mid(row.at(g.alphabet[c]).get<std::string>());
        }
        s.delta = std::move(delta);
    }
    return s;
}

std::string graph_dot(const ColoredGraph& g, const std::vector<char>* eve) {
    std::ostringstream out;
    out << "digraph g {\n";
    for (int v = 0; v < g.n(); ++v) {
        const char* shape = (eve && !(*eve)[v]) ? "box" : "circle";
        out << "  \"" << g.vertices[v] << "\" [shape=" << shape << "];\n";
    }
    for (const auto& e : g.edges)
        out << "  \"" << g.vertices[e.src] << "\" -> \"" << g.vertices[e.dst]
            << "\" [label=\"" << g.alphabet[e.color] << "\"];\n";
    out << "}\n";
    return out.str();
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return Json::parse(in);
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

}  // namespace memoria
