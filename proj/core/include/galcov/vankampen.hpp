#pragma once

// Instantiation of the branch-curve-complement presentation from a validated
// degeneration: per-vertex relation schemas, parasitic commutators, the
// projective relation, and the homomorphism onto S_n.

#include <string>
#include <vector>

#include "degeneration.hpp"
#include "perm.hpp"
#include "presentation.hpp"

namespace galcov {

struct GeneratedPresentation {
    Presentation presentation;  // 2m generators g<j>/g<j>p; provenance per relator
    PermutationHom image;       // both generators of edge j map to its transposition
    bool projective = true;
};

// Build the presentation. Relator order: vertices by ascending id (templates
// in schema order), then parasitic pairs lexicographically (four commutators
// each), then the projective relator when enabled.
GeneratedPresentation generate(const PlanarDegeneration& d, bool projective);

// True iff every relator maps to the identity permutation.
bool check_image_consistency(const GeneratedPresentation& gp);

// Image-level consistency of the instantiated relators: every relator maps to
// the identity; cusp pairs map to transpositions sharing exactly one letter;
// node pairs map to commuting transpositions; parasitic pairs are disjoint;
// the projective relator maps to the identity.
struct ConsistencyReport {
    bool ok = true;
    std::vector<std::string> failures;
};
ConsistencyReport consistency_suite(const PlanarDegeneration& d);

// Generator display name for edge j: "g<j>" plain, "g<j>p" primed.
std::string generator_name(int edge, bool primed);

}  // namespace galcov
