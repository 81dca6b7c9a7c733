// End-to-end corpus checks: every shipped case reproduces its frozen
// expectations, the image-level consistency suite holds on every fixture,
// and a deliberately corrupted expectation is caught.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "galcov/pipeline.hpp"

using namespace galcov;

namespace {

const std::string kCases = std::string(GALCOV_DATA_DIR) + "/cases";

PlanarDegeneration fixture(const std::string& name) {
    return load_case(kCases + "/" + name);
}

}  // namespace

TEST_CASE("every shipped fixture validates") {
    int count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(kCases)) {
        std::string fn = entry.path().filename().string();
        if (fn.size() < 10 || fn.substr(fn.size() - 10) != ".case.json") continue;
        CAPTURE(fn);
        ValidationReport r = validate(load_case(entry.path().string()));
        for (const auto& v : r.violations) CAPTURE(v.rule + ": " + v.message);
        CHECK(r.ok);
        ++count;
    }
    CHECK(count == 9);
}

TEST_CASE("image-level consistency suite holds on every fixture") {
    for (const auto& entry : std::filesystem::directory_iterator(kCases)) {
        std::string fn = entry.path().filename().string();
        if (fn.size() < 10 || fn.substr(fn.size() - 10) != ".case.json") continue;
        CAPTURE(fn);
        ConsistencyReport r = consistency_suite(load_case(entry.path().string()));
        for (const auto& f : r.failures) CAPTURE(f);
        CHECK(r.ok);
    }
}

TEST_CASE("corpus run reproduces every frozen expectation") {
    CorpusSummary sum = run_corpus(kCases);
    for (const auto& line : sum.lines) CAPTURE(line);
    CHECK(sum.total == 9);
    CHECK(sum.passed == 9);
    CHECK(sum.ok());
}

TEST_CASE("a corrupted expectation is detected") {
    auto dir = std::filesystem::temp_directory_path() / "galcov-corrupt-corpus";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    const std::string name = "fig3-cp1xcp1-plane";
    std::filesystem::copy_file(kCases + "/" + name + ".case.json",
                               dir / (name + ".case.json"));
    {
        std::ifstream in(kCases + "/" + name + ".expected.json");
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        size_t pos = text.find("\"kernel_index\": 120");
        REQUIRE(pos != std::string::npos);
        text.replace(pos, 19, "\"kernel_index\": 121");
        std::ofstream out(dir / (name + ".expected.json"));
        out << text;
    }
    CorpusSummary sum = run_corpus(dir.string());
    CHECK(sum.total == 1);
    CHECK(sum.passed == 0);
    CHECK(!sum.ok());
    std::filesystem::remove_all(dir);
}

TEST_CASE("probe matches the frozen cayley-type-ii expectation") {
    PlanarDegeneration d = fixture("fig6-cayley-type-ii.case.json");
    CaffProbe probe = caff_probe(d, "g3 g4 g3 g2^-1 g3^-1 g4^-1 g3^-1 g2");
    CHECK(probe.verdict == "nontrivial");
    CHECK(probe.classification == "disjoint-transposition commutator");
}

TEST_CASE("analysis reports carry stable machine output") {
    AnalysisReport rep = analyze(fixture("fig8-quintic-5pt.case.json"));
    CHECK(rep.verdict == "IsoSymmetric");
    CHECK(rep.kernel_index == 120);
    CHECK(rep.enumeration_cosets == 120);
    CHECK(rep.generators == 10);
    CHECK(rep.image_consistent);
    CHECK(rep.projective_invariants.trivial());
    CHECK(rep.json().find("\"verdict\": \"IsoSymmetric\"") != std::string::npos);
    CHECK(rep.text().find("IsoSymmetric") != std::string::npos);
}
