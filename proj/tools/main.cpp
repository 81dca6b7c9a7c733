// Command-line front end: validate / present / analyze / probe / corpus /
// audit over degeneration case files and factorization files.
//
// Exit codes: 0 success, 1 assertion or validation failure, 2 inconclusive
// (enumeration overflow or exhausted simplification budget).

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "galcov/braid.hpp"
#include "galcov/pipeline.hpp"

namespace {

int cmd_validate(const std::string& path) {
    galcov::PlanarDegeneration d = galcov::load_case(path);
    galcov::ValidationReport r = galcov::validate(d);
    if (r.ok) {
        std::cout << d.name << ": ok\n";
        return 0;
    }
    std::cout << d.name << ": " << r.violations.size() << " violation(s)\n";
    for (const auto& v : r.violations)
        std::cout << "  [" << v.rule << "] " << v.element << ": " << v.message << "\n";
    return 1;
}

int cmd_present(const std::string& path, bool affine) {
    galcov::PlanarDegeneration d = galcov::load_case(path);
    galcov::ValidationReport r = galcov::validate(d);
    if (!r.ok) {
        std::cerr << d.name << ": case is invalid; run validate for details\n";
        return 1;
    }
    galcov::GeneratedPresentation gp = galcov::generate(d, !affine);
    std::cout << galcov::dump_presentation(gp.presentation);
    return 0;
}

int cmd_analyze(const std::string& path, long max_cosets, bool as_json) {
    galcov::PlanarDegeneration d = galcov::load_case(path);
    galcov::AnalysisOptions opt;
    opt.max_cosets = max_cosets;
    galcov::AnalysisReport rep = galcov::analyze(d, opt);
    std::cout << (as_json ? rep.json() + "\n" : rep.text());
    return rep.verdict == "Inconclusive" ? 2 : 0;
}

int cmd_probe(const std::string& path, const std::string& element) {
    galcov::PlanarDegeneration d = galcov::load_case(path);
    galcov::CaffProbe probe = galcov::caff_probe(d, element);
    std::cout << "element: " << probe.element << "\n"
              << "classification: " << probe.classification << "\n"
              << "verdict: " << probe.verdict << "\n";
    for (const auto& n : probe.notes) std::cout << "note: " << n << "\n";
    return probe.verdict == "inconclusive" ? 2 : 0;
}

int cmd_corpus(const std::string& dir) {
    galcov::CorpusSummary sum = galcov::run_corpus(dir);
    for (const auto& l : sum.lines) std::cout << l << "\n";
    std::cout << sum.passed << "/" << sum.total << " fixtures passed\n";
    return sum.ok() ? 0 : 1;
}

int cmd_audit(const std::string& path, int strands) {
    galcov::Factorization F = galcov::load_factorization(path, strands);
    long sum = galcov::exponent_sum(F);
    galcov::Permutation perm = galcov::induced_permutation(F);
    long full = static_cast<long>(strands) * (strands - 1);
    std::cout << "factors: " << F.factors.size() << "\n"
              << "exponent sum: " << sum << "\n"
              << "induced permutation: " << perm.cycle_string() << "\n"
              << "full-twist exponent sum (" << full
              << "): " << (sum == full ? "yes" : "no") << "\n"
              << "pure braid (identity permutation): "
              << (perm.is_identity() ? "yes" : "no") << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar degeneration analysis: branch-curve presentations and "
                 "Galois-cover fundamental-group verdicts"};
    app.require_subcommand(1);

    std::string case_path, element, dir, fact_path;
    long max_cosets = 20000;
    int strands = 0;
    bool affine = false, as_json = false;

    auto* validate = app.add_subcommand("validate", "check a case file's invariants");
    validate->add_option("case", case_path, "case JSON file")->required();

    auto* present = app.add_subcommand("present", "emit the generated presentation");
    present->add_option("case", case_path, "case JSON file")->required();
    present->add_flag("--affine", affine, "omit the projective relator");

    auto* analyze = app.add_subcommand("analyze", "full certification pipeline");
    analyze->add_option("case", case_path, "case JSON file")->required();
    analyze->add_option("--max-cosets", max_cosets, "enumeration bound")
        ->default_val(20000);
    analyze->add_flag("--json", as_json, "emit the machine-readable report");

    auto* probe = app.add_subcommand("probe", "probe an element of the affine kernel");
    probe->add_option("case", case_path, "case JSON file")->required();
    probe->add_option("--element", element, "word over g<j>/g<j>p")->required();

    auto* corpus = app.add_subcommand("corpus", "run all fixtures in a directory");
    corpus->add_option("dir", dir, "fixture directory")->required();

    auto* audit = app.add_subcommand("audit", "audit a braid monodromy factorization");
    audit->add_option("factorization", fact_path, "factorization text file")->required();
    audit->add_option("--strands", strands, "strand count p")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(case_path);
        if (present->parsed()) return cmd_present(case_path, affine);
        if (analyze->parsed()) return cmd_analyze(case_path, max_cosets, as_json);
        if (probe->parsed()) return cmd_probe(case_path, element);
        if (corpus->parsed()) return cmd_corpus(dir);
        if (audit->parsed()) return cmd_audit(fact_path, strands);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
