#pragma once

// End-to-end orchestration: case file -> presentation -> squares quotient ->
// symmetric-group certification -> kernel presentation -> abelian invariants
// -> report; plus the affine-complement element probe and the corpus runner.

#include <string>
#include <vector>

#include "coset_table.hpp"
#include "degeneration.hpp"
#include "schreier.hpp"
#include "snf.hpp"
#include "tietze.hpp"
#include "vankampen.hpp"

namespace galcov {

struct AnalysisOptions {
    long max_cosets = 20000;   // enumeration bound for certification
    int tietze_budget = 10000;  // kernel simplification budget
};

struct AnalysisReport {
    std::string name;
    int planes = 0;
    int generators = 0;
    int relators = 0;
    std::vector<std::string> image_map;  // one line per edge
    bool image_consistent = false;
    std::string verdict;          // IsoSymmetric | KernelNontrivial | Inconclusive
    long enumeration_cosets = 0;  // coset count when enumeration completed, else 0
    long kernel_index = 0;        // order of the symmetric image (n!)
    AbelianInvariants projective_invariants;
    AbelianInvariants affine_invariants;
    bool tietze_budget_exceeded = false;
    std::vector<std::string> notes;
    double elapsed_ms = 0;

    std::string text() const;
    std::string json() const;  // machine mirror of text()
};

AnalysisReport analyze(const PlanarDegeneration& d, const AnalysisOptions& opt = {});

// Squares quotient of a generated presentation (one g^2 relator per generator).
Presentation squares_quotient(const GeneratedPresentation& gp);

// Kernel of the squares quotient's map to S_n: coset table from the
// homomorphism, Reidemeister-Schreier presentation, raw and Tietze-simplified
// abelian invariants (asserted equal).
struct KernelAnalysis {
    KernelData data;
    AbelianInvariants invariants;
    bool tietze_budget_exceeded = false;
};
KernelAnalysis kernel_analysis(const GeneratedPresentation& gp, int tietze_budget = 10000);

struct CaffProbe {
    std::string element;
    std::string classification;  // disjoint-transposition commutator /
                                 // one-common-letter triple relation / unclassified
    std::string verdict;         // nontrivial | inconclusive | not-in-kernel
    std::vector<std::string> notes;
};

// Probe an element of the affine squares quotient: classify its shape from
// the images of its constituent words and certify non-triviality via its
// abelianized image in the kernel. The word is parsed over g<j>/g<j>p names.
CaffProbe caff_probe(const PlanarDegeneration& d, const std::string& element_text,
                     const AnalysisOptions& opt = {});

struct CorpusSummary {
    int total = 0;
    int passed = 0;
    std::vector<std::string> lines;  // one per fixture

    bool ok() const { return passed == total; }
};

// Run every <name>.case.json in dir against its <name>.expected.json.
CorpusSummary run_corpus(const std::string& dir, const AnalysisOptions& opt = {});

}  // namespace galcov
