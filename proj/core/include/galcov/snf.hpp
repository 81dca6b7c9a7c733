#pragma once

// Integer linear algebra for abelianization: Smith normal form with
// transforming matrices (dense, arbitrary precision) and a sparse
// Hermite-style row reduction for large relator lattices.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

#include "presentation.hpp"

namespace galcov {

using Int = boost::multiprecision::cpp_int;
using SparseRow = std::map<int, Int>;  // column -> entry, zero entries absent

struct IntegerMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<Int>> a;

    IntegerMatrix() = default;
    IntegerMatrix(int r, int c) : rows(r), cols(c), a(r, std::vector<Int>(c, 0)) {}
    static IntegerMatrix identity(int n);
    Int& at(int i, int j) { return a[i][j]; }
    const Int& at(int i, int j) const { return a[i][j]; }
};

IntegerMatrix multiply(const IntegerMatrix& x, const IntegerMatrix& y);

struct SNFResult {
    IntegerMatrix S, U, V;  // U*A*V = S, U and V unimodular, S diagonal d1|d2|...
};

// Minimal-absolute-value pivoting to limit coefficient growth.
SNFResult smith_normal_form(const IntegerMatrix& A);

struct AbelianInvariants {
    long free_rank = 0;
    std::vector<Int> torsion;  // divisor chain d1 | d2 | ..., each > 1

    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const AbelianInvariants&) const = default;
    // Canonical string "Z^r + Z/d1 + Z/d2 + ..."; "0" for the trivial group.
    std::string str() const;
};

// Incremental integer row reduction over sparse rows (Hermite-style echelon
// basis of the row lattice).
class HermiteBasis {
public:
    void add(SparseRow row);
    // Echelon basis rows, reduced against each other, ordered by pivot column.
    std::vector<SparseRow> reduced_rows();

private:
    std::map<int, SparseRow> pivots_;  // pivot column -> row
};

// Invariants of coker(Z^rows -> Z^ncols).
AbelianInvariants invariants_from_rows(const std::vector<SparseRow>& rows, long ncols);

// Invariants of the presented group's abelianization.
AbelianInvariants abelianization(const Presentation& p);

// Exponent vector of a word (column = generator - 1).
SparseRow exponent_vector(const Word& w);

// Canonical residual of vec modulo the lattice spanned by reduced echelon
// rows; nonzero residual certifies vec lies outside the lattice.
SparseRow residual(SparseRow vec, const std::vector<SparseRow>& reduced);

}  // namespace galcov
