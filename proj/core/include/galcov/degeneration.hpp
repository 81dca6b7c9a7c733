#pragma once

// Planar degenerations: unions of planes with numbered intersection edges and
// classified vertices, loaded from JSON case files, plus their combinatorial
// consequences (arity classification, parasitic pairs, transposition map).

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "perm.hpp"

namespace galcov {

struct Edge {
    int index = 0;
    std::vector<int> planes;  // exactly two distinct plane indices when valid
};

struct Vertex {
    int id = 0;
    std::vector<int> incident;        // edge indices
    std::string kind;                 // "one-point", "two-point", ...
    std::string variant;              // optional sub-flavor, e.g. "a", "veronese"
    std::map<std::string, int> roles;  // slot letter -> edge index

    // Schema lookup key: kind, or kind "/" variant when a variant is set.
    std::string schema_key() const {
        return variant.empty() ? kind : kind + "/" + variant;
    }
};

struct PlanarDegeneration {
    std::string name;
    int planes = 0;  // n
    std::vector<Edge> edges;
    std::vector<Vertex> vertices;

    int edge_count() const { return static_cast<int>(edges.size()); }  // m
    const Edge* find_edge(int index) const {
        for (const auto& e : edges)
            if (e.index == index) return &e;
        return nullptr;
    }
};

struct Violation {
    std::string rule;     // stable rule id
    std::string message;  // human-readable
    std::string element;  // offending element, e.g. "edge 3", "vertex 2"
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

struct KindMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownEdge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parse a case file (JSON document text). Throws std::invalid_argument on
// structurally unparseable input; semantic problems are left to validate().
PlanarDegeneration parse_case(const std::string& json_text);
PlanarDegeneration load_case(const std::string& path);

ValidationReport validate(const PlanarDegeneration& d);

// Vertex id -> arity (incident edge count). Throws KindMismatch when a
// declared kind's arity disagrees with the incidence count.
std::map<int, int> classify(const PlanarDegeneration& d);

// Unordered pairs of edges that share no vertex, sorted lexicographically.
std::vector<std::pair<int, int>> parasitic_pairs(const PlanarDegeneration& d);

// The transposition in S_n swapping the two planes of edge j.
Permutation edge_transposition(const PlanarDegeneration& d, int j);

// Arity implied by a vertex kind name; -1 for unknown kinds.
int kind_arity(const std::string& kind);

}  // namespace galcov
