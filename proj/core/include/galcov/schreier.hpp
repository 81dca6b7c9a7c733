#pragma once

// Reidemeister-Schreier rewriting: a presentation of the subgroup described
// by a closed coset table, with the rewriting map from ambient words lying in
// the subgroup to words in the Schreier generators.

#include <stdexcept>

#include "coset_table.hpp"
#include "presentation.hpp"

namespace galcov {

struct OpenTable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotInSubgroup : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct KernelData {
    CosetTable table{0, 0};
    int schreier_generators = 0;
    // (coset, ambient generator-1) -> Schreier generator id (1-based);
    // 0 marks a spanning-tree edge (trivial generator).
    std::vector<std::vector<int>> sgen;
    Presentation kernel;  // generators k1..kN, relators from ambient relator traces

    // Rewrite an ambient word whose trace from `start` returns to `start`;
    // throws NotInSubgroup otherwise.
    Word rewrite(const Word& ambient, int start = 0) const;
};

KernelData reidemeister_schreier(const Presentation& p, const CosetTable& t);

}  // namespace galcov
