#include "memoria/zielonka.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

namespace memoria {

namespace {

std::vector<int> mask_to_colors(uint64_t mask) {
    std::vector<int> colors;
    for (int c = 0; c < 64; ++c)
        if ((mask >> c) & 1) colors.push_back(c);
    return colors;
}

}  // namespace

ZielonkaTree build_zielonka(const Objective& muller) {
    if (muller.kind != Objective::Kind::Muller)
        throw std::runtime_error("zielonka tree requires a Muller objective");
    int k = static_cast<int>(muller.alphabet.size());
    if (k > 16) throw std::runtime_error("alphabet too large for zielonka construction");
    std::set<uint64_t> family;
    for (const auto& s : muller.family) {
        uint64_t mask = 0;
        for (int c : s) mask |= uint64_t{1} << c;
        family.insert(mask);
    }
    auto in_family = [&](uint64_t mask) { return family.count(mask) > 0; };

    ZielonkaTree zt;
    zt.alphabet = muller.alphabet;
    uint64_t full = (uint64_t{1} << k) - 1;
    std::vector<uint64_t> node_mask;
    zt.nodes.push_back({mask_to_colors(full), in_family(full), -1, 0, {}});
    node_mask.push_back(full);
    for (size_t i = 0; i < zt.nodes.size(); ++i) {
        uint64_t mask = node_mask[i];
        bool pos = zt.nodes[i].positive;
        // Maximal nonempty strict subsets with flipped membership.
        std::vector<uint64_t> flipped;
        for (uint64_t sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask)
            if (in_family(sub) != pos) flipped.push_back(sub);
        std::vector<uint64_t> maximal;
        for (uint64_t a : flipped) {
            bool dominated = false;
            for (uint64_t b : flipped) dominated = dominated || (a != b && (a & b) == a);
            if (!dominated) maximal.push_back(a);
        }
        std::sort(maximal.begin(), maximal.end());
        for (uint64_t child : maximal) {
            zt.nodes[i].children.push_back(static_cast<int>(zt.nodes.size()));
            zt.nodes.push_back({mask_to_colors(child), !pos, static_cast<int>(i),
                                zt.nodes[i].depth + 1, {}});
            node_mask.push_back(child);
        }
    }
    return zt;
}

long long zielonka_memory(const ZielonkaTree& zt) {
    std::vector<long long> mem(zt.nodes.size(), 0);
    // Children appear after their parent, so one reverse pass suffices.
    for (int i = static_cast<int>(zt.nodes.size()) - 1; i >= 0; --i) {
        const ZielonkaNode& node = zt.nodes[i];
        if (node.children.empty()) {
            mem[i] = 1;
        } else if (node.positive) {
            for (int c : node.children) mem[i] += mem[c];
        } else {
            for (int c : node.children) mem[i] = std::max(mem[i], mem[c]);
        }
    }
    return mem[0];
}

Objective zielonka_to_parity(const ZielonkaTree& zt) {
    int k = static_cast<int>(zt.alphabet.size());
    std::vector<int> leaves;
    std::vector<int> leaf_index(zt.nodes.size(), -1);
    for (int i = 0; i < static_cast<int>(zt.nodes.size()); ++i)
        if (zt.nodes[i].children.empty()) {
            leaf_index[i] = static_cast<int>(leaves.size());
            leaves.push_back(i);
        }
    int max_depth = 0;
    for (const auto& node : zt.nodes) max_depth = std::max(max_depth, node.depth);
    // Priority decreases with depth; the offset makes positive nodes even.
    int off = ((max_depth % 2 == 0) == zt.nodes[0].positive) ? 0 : 1;
    auto priority = [&](int node) { return max_depth - zt.nodes[node].depth + off; };
    auto has_color = [&](int node, int c) {
        const auto& cs = zt.nodes[node].colors;
        return std::binary_search(cs.begin(), cs.end(), c);
    };
    auto leftmost_leaf = [&](int node) {
        while (!zt.nodes[node].children.empty()) node = zt.nodes[node].children.front();
        return node;
    };

    Dfa d;
    d.alphabet = zt.alphabet;
    d.num_states = static_cast<int>(leaves.size());
    d.initial = 0;
    d.delta.assign(d.num_states, std::vector<int>(k, 0));
    std::vector<std::vector<int>> pr(d.num_states, std::vector<int>(k, 0));
    for (int li = 0; li < d.num_states; ++li)
        for (int c = 0; c < k; ++c) {
            // Deepest ancestor-or-self whose label contains c; the root always does.
            int u = leaves[li], below = -1;
            while (!has_color(u, c)) {
                below = u;
                u = zt.nodes[u].parent;
            }
            pr[li][c] = priority(u);
            if (below < 0) {
                d.delta[li][c] = li;  // the leaf itself contains c: stay
            } else {
                const auto& ch = zt.nodes[u].children;
                size_t pos = std::find(ch.begin(), ch.end(), below) - ch.begin();
                int next = ch[(pos + 1) % ch.size()];
                d.delta[li][c] = leaf_index[leftmost_leaf(next)];
            }
        }
    Objective o = make_parity_automaton(std::move(d), std::move(pr));
    o.declared_prefix_independent = true;
    return o;
}

std::string zielonka_pretty(const ZielonkaTree& zt) {
    std::ostringstream os;
    // Depth-first listing; children follow parents in construction order.
    std::vector<std::pair<int, int>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [node, indent] = stack.back();
        stack.pop_back();
        os << std::string(indent * 2, ' ') << (zt.nodes[node].positive ? "+ {" : "- {");
        for (size_t i = 0; i < zt.nodes[node].colors.size(); ++i)
            os << (i ? "," : "") << zt.alphabet[zt.nodes[node].colors[i]];
        os << "}\n";
        const auto& ch = zt.nodes[node].children;
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back({*it, indent + 1});
    }
    return os.str();
}

std::string zielonka_dot(const ZielonkaTree& zt) {
    std::ostringstream os;
    os << "digraph zielonka {\n  node [fontname=\"monospace\"];\n";
    for (int i = 0; i < static_cast<int>(zt.nodes.size()); ++i) {
        os << "  n" << i << " [label=\"{";
        for (size_t j = 0; j < zt.nodes[i].colors.size(); ++j)
            os << (j ? "," : "") << zt.alphabet[zt.nodes[i].colors[j]];
        os << "}\", shape=" << (zt.nodes[i].positive ? "ellipse" : "box") << "];\n";
    }
    for (int i = 0; i < static_cast<int>(zt.nodes.size()); ++i)
        for (int c : zt.nodes[i].children) os << "  n" << i << " -> n" << c << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace memoria
