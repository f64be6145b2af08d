#pragma once

#include <string>
#include <utility>
#include <vector>

#include "memoria/objective.hpp"
#include "memoria/order.hpp"
#include "memoria/zielonka.hpp"

namespace memoria {

/**
 * kappa-fold repetition: vertices (v, lambda); an edge of any color drops
 * lambda, and within one lambda the base edges apply. Order: lambda-dominant
 * lexicographic, so the width is unchanged.
 */
OrderedGraph ltimes_repeat(const OrderedGraph& u, int kappa);

/**
 * Lexicographic product for objectives over disjoint alphabets; the right
 * component is dominant: a right-color edge advances the right component and
 * resets the left one, a left-color edge either drops the right component or
 * keeps it and advances the left. Order: right-dominant lexicographic.
 */
OrderedGraph lexico_product(const OrderedGraph& left, const OrderedGraph& right);

/** Componentwise product over one alphabet; serves intersections of objectives. */
OrderedGraph direct_product(const OrderedGraph& a, const OrderedGraph& b);

/**
 * Ordered disjoint union over one alphabet: every vertex of a later part gets
 * edges of every color to every vertex of earlier parts, and the order makes
 * later parts dominate, so the width is the maximum of the parts' widths.
 * With a kappa-repetition on top this serves unions of objectives.
 */
OrderedGraph direct_sum(const std::vector<OrderedGraph>& parts);

/**
 * Monotone graph for a Muller condition, built by recursion on the
 * alternating-membership tree: positive leaves become single vertices with
 * self-loops, negative leaves kappa-chains, positive inner nodes a cyclic
 * parallel composition of their children, negative inner nodes an ordered sum
 * of their children repeated kappa times. Width <= the tree's memory value.
 */
OrderedGraph muller_universal(const Objective& muller, int kappa);

/**
 * Monotone graph for a safety condition from its residuals: vertices are the
 * live automaton classes (minimized, ordered by inclusion of their safe
 * languages) plus a fresh greatest vertex with every outgoing edge; the class
 * of u has a c-edge to every class below the class of uc.
 */
OrderedGraph safety_quotient_universal(const Objective& safety);

/** Monotone graph of width n+1 for the objective w3 with m = 1. */
OrderedGraph w3_universal(int n, int kappa);

/** Monotone two-chain graph for the objective w4 (breadth 2 once separated). */
OrderedGraph w4_universal(int kappa);

/** Monotone graph for a parity condition: colors of even priority contribute
 *  self-loop vertices, odd priorities kappa-chains, composed lexicographically
 *  from the least priority outward. */
OrderedGraph parity_universal(const std::vector<std::string>& colors,
                              const std::vector<int>& priorities, int kappa);

/** The w4 graph in separated form together with its update function. */
std::pair<EpsSeparatedGraph, ChromaticTag> w4_separated(int kappa);

/**
 * Dispatcher by name: w1, w2, w3, w4, w5, alternation, parity3.
 * kappa bounds the chain lengths; m, n parameterize w3.
 */
OrderedGraph builtin_universal(const std::string& name, int kappa, int m = 1, int n = 1);

}  // namespace memoria
