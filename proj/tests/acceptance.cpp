// Acceptance gate: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Expected values come from the frozen fixture files, which
// were computed by an independent oracle before this implementation existed.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "algebra_oracles.hpp"
#include "galcov/braid.hpp"
#include "galcov/pipeline.hpp"
#include "json.hpp"

using namespace galcov;
using nlohmann::json;

namespace {

const std::string kData = GALCOV_DATA_DIR;

PlanarDegeneration fixture(const std::string& name) {
    return load_case(kData + "/cases/" + name + ".case.json");
}

json expected(const std::string& name) {
    std::ifstream in(kData + "/cases/" + name + ".expected.json");
    return json::parse(in);
}

AbelianInvariants invariants_of(const json& j) {
    AbelianInvariants inv;
    inv.free_rank = j.at("free_rank").get<long>();
    for (const auto& t : j.at("torsion")) inv.torsion.push_back(Int(t.get<long>()));
    return inv;
}

bool two_power_torsion(const AbelianInvariants& inv) {
    for (Int d : inv.torsion) {
        while (d % 2 == 0) d /= 2;
        if (d != 1) return false;
    }
    return true;
}

int failures = 0;

void report(int criterion, bool pass, const std::string& what) {
    std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL")
              << " - " << what << "\n";
    if (!pass) ++failures;
}

bool criterion1() {
    struct Row {
        const char* name;
        long cosets;
    };
    for (const Row& row : {Row{"fig3-cp1xcp1-plane", 120},
                           Row{"fig7-quartic-4pt-plane", 120},
                           Row{"fig8-quintic-5pt", 120},
                           Row{"fig9-quintic-4pt", 120},
                           Row{"fig11-quartic-scroll", 24}}) {
        AnalysisReport rep = analyze(fixture(row.name));
        if (rep.verdict != "IsoSymmetric" || rep.enumeration_cosets != row.cosets ||
            !rep.projective_invariants.trivial())
            return false;
    }
    return true;
}

bool criterion2(std::string& detail) {
    json exp = expected("fig4-veronese-plane");
    AnalysisReport rep = analyze(fixture("fig4-veronese-plane"));
    AbelianInvariants want = invariants_of(exp.at("kernel_invariants"));
    bool pass = rep.projective_invariants == want &&
                rep.affine_invariants == invariants_of(exp.at("affine_kernel_invariants"));
    AbelianInvariants published = invariants_of(exp.at("published_invariants"));
    std::ostringstream os;
    os << "veronese-plane kernel invariants " << rep.projective_invariants.str()
       << " match the frozen independent recomputation; the published claim of "
       << published.str() << " is not reproduced (see the fixture note)";
    detail = os.str();
    return pass;
}

bool criterion34(const std::string& name, bool check_rank16) {
    json exp = expected(name);
    AnalysisReport rep = analyze(fixture(name));
    AbelianInvariants want = invariants_of(exp.at("kernel_invariants"));
    if (rep.kernel_index != 120 || rep.verdict != "KernelNontrivial") return false;
    if (!(rep.projective_invariants == want)) return false;
    if (!two_power_torsion(rep.projective_invariants)) return false;
    if (check_rank16 && rep.projective_invariants.free_rank > 16) return false;
    return true;
}

bool criterion5() {
    json exp = expected("fig6-cayley-type-ii");
    CaffProbe probe = caff_probe(fixture("fig6-cayley-type-ii"),
                                 exp.at("probe").at("element").get<std::string>());
    return probe.classification == "disjoint-transposition commutator" &&
           probe.verdict == "nontrivial";
}

bool criterion6() {
    for (const auto& name :
         {"fig2-hirzebruch-f121", "fig3-cp1xcp1-plane", "fig4-veronese-plane",
          "fig5-cayley-type-i", "fig6-cayley-type-ii", "fig7-quartic-4pt-plane",
          "fig8-quintic-5pt", "fig9-quintic-4pt", "fig11-quartic-scroll"}) {
        ConsistencyReport r = consistency_suite(fixture(name));
        if (!r.ok) {
            for (const auto& f : r.failures)
                std::cout << "  consistency failure (" << name << "): " << f << "\n";
            return false;
        }
    }
    return true;
}

bool snf_suite() {
    std::mt19937 rng(20260823);
    std::uniform_int_distribution<int> dim(1, 5), entry(-5, 5);
    for (int trial = 0; trial < 1000; ++trial) {
        IntegerMatrix A(dim(rng), dim(rng));
        for (int i = 0; i < A.rows; ++i)
            for (int j = 0; j < A.cols; ++j) A.at(i, j) = entry(rng);
        SNFResult r = smith_normal_form(A);
        if (multiply(multiply(r.U, A), r.V).a != r.S.a) return false;
        Int du = testing::determinant(r.U), dv = testing::determinant(r.V);
        if ((du != 1 && du != -1) || (dv != 1 && dv != -1)) return false;
        std::vector<Int> diag;
        for (int i = 0; i < r.S.rows; ++i)
            for (int j = 0; j < r.S.cols; ++j) {
                if (i == j && r.S.at(i, j) != 0) diag.push_back(r.S.at(i, j));
                if (i != j && r.S.at(i, j) != 0) return false;
            }
        for (size_t i = 0; i + 1 < diag.size(); ++i)
            if (diag[i] <= 0 || diag[i + 1] % diag[i] != 0) return false;
        std::vector<Int> oracle = testing::naive_diagonal(A);
        oracle.erase(std::remove(oracle.begin(), oracle.end(), Int(0)), oracle.end());
        std::sort(oracle.begin(), oracle.end());
        std::sort(diag.begin(), diag.end());
        if (diag != oracle) return false;
    }
    return true;
}

bool table_agreement_suite() {
    for (const auto& name :
         {"fig3-cp1xcp1-plane", "fig7-quartic-4pt-plane", "fig8-quintic-5pt",
          "fig9-quintic-4pt", "fig11-quartic-scroll"}) {
        GeneratedPresentation gp = generate(fixture(name), true);
        Presentation q = squares_quotient(gp);
        CosetTable direct = table_from_hom(q, gp.image);
        auto enumerated = todd_coxeter(q, {}, {20000});
        if (!enumerated || enumerated->size() != direct.size()) return false;
        if (testing::canonical_table(*enumerated) != testing::canonical_table(direct))
            return false;
    }
    return true;
}

bool schreier_rank_suite() {
    for (int g = 1; g <= 4; ++g)
        for (int i = 1; i <= 24; ++i) {
            Presentation p = make_presentation(g);
            std::vector<int> img(i);
            std::iota(img.begin(), img.end(), 1);
            img.back() = 0;
            PermutationHom h{i, std::vector<Permutation>(g, Permutation(img))};
            CosetTable t = table_from_hom(p, h);
            if (t.size() != i) return false;
            KernelData kd = reidemeister_schreier(p, t);
            if (kd.schreier_generators != i * (g - 1) + 1) return false;
            if (!kd.kernel.relators.empty()) return false;
        }
    return true;
}

bool invariance_suite() {
    std::mt19937 rng(42);
    GeneratedPresentation gp = generate(fixture("fig6-cayley-type-ii"), true);
    Presentation q = squares_quotient(gp);
    AbelianInvariants base = abelianization(q);
    for (int trial = 0; trial < 5; ++trial) {
        Presentation shuffled = q;
        std::shuffle(shuffled.relators.begin(), shuffled.relators.end(), rng);
        if (!(abelianization(shuffled) == base)) return false;
    }
    CosetTable t = table_from_hom(q, gp.image);
    KernelData kd = reidemeister_schreier(q, t);
    AbelianInvariants raw = abelianization(kd.kernel);
    TietzeResult simp = tietze_simplify(kd.kernel);
    return !simp.budget_exceeded && abelianization(simp.presentation) == raw;
}

bool criterion8() {
    struct Row {
        const char* file;
        int strands;
    };
    for (const Row& row : {Row{"delta2_p8.txt", 8}, Row{"delta2_p10.txt", 10}}) {
        Factorization F =
            load_factorization(kData + "/factorizations/" + row.file, row.strands);
        if (exponent_sum(F) != static_cast<long>(row.strands) * (row.strands - 1))
            return false;
        if (!induced_permutation(F).is_identity()) return false;
    }
    // expansion conserves exponent sums on the compound forms
    for (int exp : {2, 3}) {
        HalfTwistFactor f;
        f.exponent = exp;
        f.a = "1";
        f.b = "3,3'";
        long before = exp, after = 0;
        auto expanded = expand(f);
        if (exp == 2 && expanded.size() != 2) return false;
        if (exp == 3 && expanded.size() != 3) return false;
        for (const auto& g : expanded) after += g.exponent;
        if (after != before * static_cast<long>(expanded.size())) return false;
        if (exponent_sum({8, {f}}) != after) return false;
    }
    return true;
}

}  // namespace

int main() {
    report(1, criterion1(),
           "trivial-kernel cases certify IsoSymmetric with exactly 120 cosets "
           "(24 for the degree-4 scroll)");
    std::string detail2;
    bool pass2 = criterion2(detail2);
    report(2, pass2, detail2);
    report(3, criterion34("fig6-cayley-type-ii", false),
           "cayley-type-ii: kernel index 120, invariants match the frozen "
           "fixture, torsion all 2-powers");
    report(4, criterion34("fig5-cayley-type-i", true),
           "cayley-type-i: kernel index 120, invariants match the frozen "
           "fixture, torsion all 2-powers, free rank <= 16");
    report(5, criterion5(),
           "affine probe classifies the disjoint-transposition commutator and "
           "certifies a nonzero abelianized kernel image");
    report(6, criterion6(),
           "image-level consistency suite holds on all nine fixtures");
    report(7, snf_suite() && table_agreement_suite() && schreier_rank_suite() &&
                  invariance_suite(),
           "algebra property suites: SNF identities vs naive oracle (1000 "
           "random matrices), enumeration/homomorphism table agreement, "
           "Schreier rank formula, abelianization invariance");
    report(8, criterion8(),
           "full-twist factorizations audit to exponent sum p(p-1) with "
           "identity permutation; compound expansion conserves exponent sums");
    return failures == 0 ? 0 : 1;
}
