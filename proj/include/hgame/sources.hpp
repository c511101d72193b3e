#pragma once

#include "hgame/graph.hpp"

#include <array>
#include <string>
#include <vector>

namespace hgame {

// Literals are signed 1-based variable ids: 3 means x3, -3 means not x3.
struct CnfFormula {
    int n_vars = 0;
    std::vector<std::array<int, 3>> clauses;
};

// Elements 0..n_elements-1; every set has exactly three distinct elements.
struct X3cInstance {
    int n_elements = 0;
    std::vector<std::array<int, 3>> sets;
};

// DIMACS subset: "p cnf V C" header, clauses of exactly 3 literals ending in 0.
CnfFormula parse_dimacs(const std::string& text);
std::string serialize_dimacs(const CnfFormula& f);

// Edge list: optional "vertices n" line, then "u v" lines (1-based).
UGraph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const UGraph& g);

// "elements 3n" then "set e1 e2 e3" lines (1-based).
X3cInstance parse_x3c(const std::string& text);
std::string serialize_x3c(const X3cInstance& x);

// occurrences[v][0] = positive, [1] = negative occurrence count of variable v (1-based).
std::vector<std::array<int, 2>> literal_occurrences(const CnfFormula& f);

}  // namespace hgame
