#pragma once

#include <string>
#include <vector>

#include "memoria/objective.hpp"

namespace memoria {

/**
 * Alternating-membership tree of a Muller condition: the root carries the
 * full alphabet, each child carries a maximal nonempty subset whose
 * membership in the family differs from its parent's.
 */
struct ZielonkaNode {
    std::vector<int> colors;  // sorted color ids
    bool positive = false;    // the color set belongs to the family
    int parent = -1;
    int depth = 0;
    std::vector<int> children;
};

struct ZielonkaTree {
    std::vector<std::string> alphabet;
    std::vector<ZielonkaNode> nodes;  // index 0 is the root
};

ZielonkaTree build_zielonka(const Objective& muller);

/**
 * Memory requirement read off the tree: 1 at a leaf, the sum over children at
 * a positive inner node, the max over children at a negative inner node.
 */
long long zielonka_memory(const ZielonkaTree& zt);

/**
 * Deterministic parity automaton equivalent to the Muller condition. States
 * are the leaves; on color c the run jumps to the deepest ancestor containing
 * c, emits that node's priority, and descends into its cyclically next child.
 */
Objective zielonka_to_parity(const ZielonkaTree& zt);

std::string zielonka_pretty(const ZielonkaTree& zt);
std::string zielonka_dot(const ZielonkaTree& zt);

}  // namespace memoria
