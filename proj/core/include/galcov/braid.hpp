#pragma once

// Symbolic bookkeeping for braid monodromy factorizations: compound-factor
// expansion, exponent sums, and induced strand permutations. An audit layer
// only — no geometric braid computation.
//
// Strand labels follow the doubled-line convention: line j contributes the
// two strands "j" (index 2j-1) and "j'" (index 2j). A factor's second support
// may be the compound label "j,j'" covering both strands of line j.

#include <stdexcept>
#include <string>
#include <vector>

#include "perm.hpp"

namespace galcov {

struct HalfTwistFactor {
    int exponent = 1;                        // epsilon >= 1 (conjugators may carry sign -1)
    int sign = 1;                            // +1, or -1 for an inverse conjugator
    std::string a, b;                        // strand labels; b may be compound "j,j'"
    std::vector<HalfTwistFactor> conjugators;  // applied left to right

    bool compound() const { return b.find(',') != std::string::npos; }
};

struct Factorization {
    int strands = 0;  // p
    std::vector<HalfTwistFactor> factors;
};

struct UnknownCompound : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BadFactorization : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Strand label -> strand index in 1..p ("3" -> 5, "3'" -> 6).
int strand_index(const std::string& label);

// Expand one factor into atomic factors (identity on atomic input):
//   Z^2 on (i, j j') -> Z^2 on (i,j), Z^2 on (i,j')
//   Z^3 on (i, j j') -> Z^3 on (i,j), its conjugate by Z(j,j'), and by Z(j,j')^-1
std::vector<HalfTwistFactor> expand(const HalfTwistFactor& f);

// Sum of exponents over the fully expanded factor list.
long exponent_sum(const Factorization& F);

// Product of the expanded factors' strand permutations: each atomic factor
// contributes its support transposition iff its exponent is odd, conjugated
// by its conjugators' permutations.
Permutation induced_permutation(const Factorization& F);

// Text format, one factor per line:
//   Z<exp> <a> <b> [^ Z<exp> <c> <d>]...
// '#' starts a comment; exp may be negative only on conjugators.
Factorization parse_factorization(const std::string& text, int strands);
Factorization load_factorization(const std::string& path, int strands);

}  // namespace galcov
