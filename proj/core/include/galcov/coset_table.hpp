#pragma once

// Coset enumeration: Todd-Coxeter (relator-tracing strategy with periodic
// lookahead and compaction) and direct coset tables from permutation
// homomorphisms; certification of the "is the squares quotient the symmetric
// group" question.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "perm.hpp"
#include "presentation.hpp"

namespace galcov {

// Closed coset table: rows are cosets 0..N-1; for generator g (1-based) the
// action columns are g and g^-1.
class CosetTable {
public:
    CosetTable(int ngens, int ncosets)
        : ngens_(ngens), tab_(static_cast<size_t>(ncosets) * 2 * ngens, -1) {}

    int size() const { return static_cast<int>(tab_.size() / (2 * ngens_)); }
    int ngens() const { return ngens_; }

    // coset after applying the (signed) generator x
    int apply(int coset, int x) const {
        int col = x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1;
        return tab_[static_cast<size_t>(coset) * 2 * ngens_ + col];
    }
    void set(int coset, int x, int target) {
        int col = x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1;
        tab_[static_cast<size_t>(coset) * 2 * ngens_ + col] = target;
    }
    int trace(int coset, const Word& w) const {
        for (int x : w) coset = apply(coset, x);
        return coset;
    }

    std::vector<Word> subgroup;  // subgroup generator words (coset 0 stabilized)

private:
    int ngens_;
    std::vector<int> tab_;
};

struct EnumerationLimits {
    long max_cosets = 1'000'000;
};

struct InconsistentHom : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonSurjective : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Todd-Coxeter over the given subgroup; nullopt on overflow (inconclusive).
std::optional<CosetTable> todd_coxeter(const Presentation& p,
                                       const std::vector<Word>& subgroup,
                                       const EnumerationLimits& lim = {});

// Coset table of the kernel of h, built by closing the image subgroup under
// right multiplication by generator images. Throws InconsistentHom when a
// relator image is not the identity.
CosetTable table_from_hom(const Presentation& p, const PermutationHom& h);

enum class Verdict { IsoSymmetric, KernelNontrivial, Inconclusive };
const char* verdict_name(Verdict v);

struct Certification {
    Verdict verdict = Verdict::Inconclusive;
    long cosets = 0;     // enumeration count when it completed, else 0
    long kernel_index = 0;  // order of the image subgroup (n! when surjective)
    std::string detail;
};

// IsoSymmetric iff enumeration over the trivial subgroup completes with
// exactly n! cosets; KernelNontrivial on completion with more cosets or, on
// overflow, when the kernel abelianization is nonzero; otherwise Inconclusive.
// Throws NonSurjective when the images do not generate S_n.
Certification certify_symmetric(const Presentation& p, const PermutationHom& h,
                                const EnumerationLimits& lim = {});

// Header (generators, subgroup words, coset count) then row-major entries.
std::string dump_table(const CosetTable& t, const Presentation& p);

}  // namespace galcov
