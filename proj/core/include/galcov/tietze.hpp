#pragma once

// Tietze simplification: generator elimination via defining relators g = w
// (g absent from w) and length-reducing relator-against-relator substitution,
// under an explicit pass budget.

#include "presentation.hpp"

namespace galcov {

struct TietzeResult {
    Presentation presentation;
    bool budget_exceeded = false;
    int eliminated_generators = 0;
    int passes_used = 0;
};

// budget counts simplification passes (one elimination or one substitution
// sweep each); when exhausted the best-so-far presentation is returned with
// budget_exceeded set. The result presents an isomorphic group.
TietzeResult tietze_simplify(const Presentation& p, int budget = 10000);

}  // namespace galcov
