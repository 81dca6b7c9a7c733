// Per-module unit tests over small hand-checkable inputs plus the shipped
// case fixtures.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <set>

#include "doctest.h"
#include "galcov/braid.hpp"
#include "galcov/pipeline.hpp"
#include "galcov/schemas.hpp"

using namespace galcov;

namespace {

PlanarDegeneration fixture(const std::string& name) {
    return load_case(std::string(GALCOV_DATA_DIR) + "/cases/" + name);
}

}  // namespace

TEST_CASE("free reduction") {
    CHECK(free_reduce({1, -1}) == Word{});
    CHECK(free_reduce({1, 2, -2, 1}) == Word{1, 1});
    Word w{3, -2, 1};
    CHECK(free_reduce(w) == w);                // already reduced
    CHECK(free_reduce(free_reduce({1, 2, -2, -1, 4})) ==
          free_reduce({1, 2, -2, -1, 4}));     // idempotent
    CHECK(cyclic_reduce({2, 1, 3, -1, -2}) == Word{3});
    CHECK(inverse(Word{1, -2, 3}) == Word{-3, 2, -1});
    CHECK(commutator({1}, {2}) == Word{1, 2, -1, -2});
    CHECK(triple_relator({1}, {2}) == Word{1, 2, 1, -2, -1, -2});
}

TEST_CASE("permutations") {
    Permutation t = Permutation::transposition(2, 4, 5);
    CHECK(t(2) == 4);
    CHECK(t(4) == 2);
    CHECK(t(1) == 1);
    CHECK(t.support() == std::set<int>{2, 4});
    CHECK(t.then(t).is_identity());
    CHECK(t.cycle_string() == "(2 4)");
    Permutation s = Permutation::transposition(1, 2, 5);
    CHECK(s.then(t).inverse().then(s.then(t)).is_identity());
    CHECK(Permutation(4).cycle_string() == "()");
}

TEST_CASE("presentation dump/parse round trip") {
    Presentation p = make_presentation(3);
    p.add_relator({1, 2, -1, -2}, "node");
    p.add_relator({3, 3}, "square g3");
    std::string dump = dump_presentation(p);
    Presentation q = parse_presentation(dump);
    CHECK(q.names == p.names);
    CHECK(q.relators == p.relators);
    CHECK(dump_presentation(q) == dump);
    CHECK(parse_word(p, "g1 g3^-1 g2") == Word{1, -3, 2});
    CHECK(parse_word(p, "1") == Word{});
    CHECK_THROWS_AS(parse_word(p, "g9"), std::invalid_argument);
}

TEST_CASE("square relators") {
    Presentation p = make_presentation(1);
    Presentation q = add_square_relators(p);
    CHECK(q.relators == std::vector<Word>{{1, 1}});
    auto t = todd_coxeter(q, {}, {100});
    REQUIRE(t.has_value());
    CHECK(t->size() == 2);  // cyclic of order 2
    Presentation empty;
    CHECK(add_square_relators(empty).relators.empty());
}

TEST_CASE("tietze elimination") {
    Presentation p = make_presentation(2);
    p.add_relator({2, -1, -1, -1});  // b = a^3
    TietzeResult r = tietze_simplify(p);
    CHECK(r.presentation.ngens() == 1);
    CHECK(r.presentation.relators.empty());
    CHECK(!r.budget_exceeded);
    CHECK(r.eliminated_generators == 1);
}

TEST_CASE("tietze preserves abelianization and enumeration counts") {
    PlanarDegeneration d = fixture("fig3-cp1xcp1-plane.case.json");
    GeneratedPresentation gp = generate(d, true);
    Presentation q = squares_quotient(gp);
    TietzeResult r = tietze_simplify(q);
    CHECK(abelianization(q) == abelianization(r.presentation));
    auto t1 = todd_coxeter(q, {}, {100000});
    auto t2 = todd_coxeter(r.presentation, {}, {100000});
    REQUIRE(t1.has_value());
    REQUIRE(t2.has_value());
    CHECK(t1->size() == t2->size());
}

TEST_CASE("validation") {
    SUBCASE("shipped quintic is valid") {
        CHECK(validate(fixture("fig8-quintic-5pt.case.json")).ok);
    }
    SUBCASE("single plane with nothing else is vacuously valid") {
        PlanarDegeneration d;
        d.name = "plane";
        d.planes = 1;
        CHECK(validate(d).ok);
    }
    SUBCASE("three planes on one edge violate the line hypothesis") {
        PlanarDegeneration d;
        d.name = "bad";
        d.planes = 3;
        d.edges.push_back({1, {1, 2, 3}});
        ValidationReport r = validate(d);
        CHECK(!r.ok);
        bool found = false;
        for (const auto& v : r.violations)
            if (v.rule == "no-three-planes-in-a-line") found = true;
        CHECK(found);
    }
    SUBCASE("doubled line is rejected") {
        PlanarDegeneration d = fixture("fig9-quintic-4pt.case.json");
        Edge dup = *d.find_edge(1);
        dup.index = 5;
        d.edges.push_back(dup);
        d.vertices[0].incident.push_back(5);  // same endpoints as edge 1
        d.vertices[4].incident.push_back(5);
        ValidationReport r = validate(d);
        CHECK(!r.ok);
    }
}

TEST_CASE("classification") {
    auto k3 = classify(fixture("fig3-cp1xcp1-plane.case.json"));
    CHECK(k3 == std::map<int, int>{{1, 1}, {2, 3}, {3, 1}, {4, 1}, {5, 2}});
    auto k7 = classify(fixture("fig7-quartic-4pt-plane.case.json"));
    CHECK(k7.at(5) == 4);
    PlanarDegeneration d = fixture("fig8-quintic-5pt.case.json");
    d.vertices[0].kind = "two-point";  // arity 2 vs one incident edge
    CHECK_THROWS_AS(classify(d), KindMismatch);
}

TEST_CASE("parasitic pairs") {
    using P = std::vector<std::pair<int, int>>;
    CHECK(parasitic_pairs(fixture("fig3-cp1xcp1-plane.case.json")) ==
          P{{1, 4}, {2, 4}});
    CHECK(parasitic_pairs(fixture("fig4-veronese-plane.case.json")) == P{{2, 4}});
    CHECK(parasitic_pairs(fixture("fig6-cayley-type-ii.case.json")) ==
          P{{1, 3}, {1, 5}, {2, 5}});
}

TEST_CASE("edge transpositions") {
    PlanarDegeneration d6 = fixture("fig6-cayley-type-ii.case.json");
    std::vector<std::string> want{"(1 2)", "(1 3)", "(3 4)", "(2 3)", "(4 5)"};
    for (int j = 1; j <= 5; ++j)
        CHECK(edge_transposition(d6, j).cycle_string() == want[j - 1]);
    PlanarDegeneration d4 = fixture("fig4-veronese-plane.case.json");
    CHECK(edge_transposition(d4, 1).cycle_string() == "(1 3)");
    CHECK_THROWS_AS(edge_transposition(d4, 9), UnknownEdge);
}

TEST_CASE("schema registry and instantiation") {
    CHECK(find_schema("one-point").templates.size() == 1);
    CHECK_THROWS_AS(find_schema("six-point"), MissingSchema);
    // one-point at edge 4: the branch relation between the doubled generators
    InstantiatedRelator ir = instantiate("a = a'", {{"a", 4}});
    CHECK(ir.kind == RelatorKind::Branch);
    CHECK(ir.relator == Word{7, -8});
    InstantiatedRelator cusp = instantiate("<u, v>", {{"u", 1}, {"v", 2}});
    CHECK(cusp.kind == RelatorKind::Cusp);
    CHECK(cusp.relator == triple_relator({1}, {3}));
    InstantiatedRelator node = instantiate("[c, d^-1 d' d]", {{"c", 1}, {"d", 2}});
    CHECK(node.kind == RelatorKind::Node);
    CHECK(node.right == Word{-3, 4, 3});
    CHECK_THROWS_AS(instantiate("<u, w>", {{"u", 1}, {"v", 2}}), RoleArityMismatch);
    // every fixture vertex kind has a registered schema
    for (const auto& name :
         {"fig3-cp1xcp1-plane", "fig4-veronese-plane", "fig5-cayley-type-i",
          "fig6-cayley-type-ii", "fig7-quartic-4pt-plane", "fig8-quintic-5pt",
          "fig9-quintic-4pt", "fig11-quartic-scroll", "fig2-hirzebruch-f121"})
        for (const auto& v : fixture(std::string(name) + ".case.json").vertices)
            CHECK_NOTHROW(find_schema(v.schema_key()));
}

TEST_CASE("presentation generation") {
    PlanarDegeneration d8 = fixture("fig8-quintic-5pt.case.json");
    GeneratedPresentation gp = generate(d8, true);
    CHECK(gp.presentation.ngens() == 10);  // 2m
    CHECK(check_image_consistency(gp));

    // affine run drops exactly the one projective relator
    GeneratedPresentation ga = generate(d8, false);
    CHECK(ga.presentation.relators.size() + 1 == gp.presentation.relators.size());
    CHECK(gp.presentation.provenance.back() == "projective");
    for (size_t i = 0; i < ga.presentation.relators.size(); ++i)
        CHECK(ga.presentation.relators[i] == gp.presentation.relators[i]);

    // determinism: byte-identical dumps across runs
    CHECK(dump_presentation(generate(d8, true).presentation) ==
          dump_presentation(gp.presentation));

    // perturbing the map breaks consistency
    GeneratedPresentation bad = gp;
    std::swap(bad.image.images[0], bad.image.images[2]);
    CHECK(!check_image_consistency(bad));

    // empty relator set is vacuously consistent
    GeneratedPresentation empty;
    empty.image.degree = 3;
    CHECK(check_image_consistency(empty));
}

TEST_CASE("two planes with one shared edge collapse to order 2") {
    PlanarDegeneration d;
    d.name = "segment";
    d.planes = 2;
    d.edges.push_back({1, {1, 2}});
    d.vertices.push_back({1, {1}, "one-point", "", {{"a", 1}}});
    d.vertices.push_back({2, {1}, "one-point", "", {{"a", 1}}});
    CHECK(validate(d).ok);
    GeneratedPresentation gp = generate(d, true);
    auto t = todd_coxeter(gp.presentation, {}, {100});
    REQUIRE(t.has_value());
    CHECK(t->size() == 2);
}

TEST_CASE("braid factor expansion") {
    HalfTwistFactor f;
    f.exponent = 2;
    f.a = "1";
    f.b = "4,4'";
    auto e2 = expand(f);
    REQUIRE(e2.size() == 2);
    CHECK(e2[0].b == "4");
    CHECK(e2[1].b == "4'");
    CHECK(exponent_sum({10, {f}}) == 4);

    f.exponent = 3;
    f.a = "2'";
    f.b = "3,3'";
    auto e3 = expand(f);
    REQUIRE(e3.size() == 3);
    CHECK(exponent_sum({10, {f}}) == 9);
    CHECK(e3[1].conjugators.size() == 1);
    CHECK(e3[2].conjugators[0].sign == -1);

    HalfTwistFactor atomic;
    atomic.exponent = 1;
    atomic.a = "1";
    atomic.b = "1'";
    CHECK(expand(atomic).size() == 1);  // identity expansion

    f.exponent = 4;
    CHECK_THROWS_AS(expand(f), UnknownCompound);
}

TEST_CASE("braid permutations and exponent sums") {
    CHECK(exponent_sum({6, {}}) == 0);
    Factorization single = parse_factorization("Z1 1 1'", 6);
    CHECK(induced_permutation(single).cycle_string() == "(1 2)");
    Factorization even = parse_factorization("Z2 1 2", 6);
    CHECK(induced_permutation(even).is_identity());
    // conjugation relabels the support
    Factorization conj = parse_factorization("Z1 1 2 ^ Z1 2 3", 6);
    CHECK(induced_permutation(conj).cycle_string() == "(1 5)");
    CHECK_THROWS_AS(parse_factorization("Z-2 1 2", 6), BadFactorization);
    CHECK_THROWS_AS(parse_factorization("Z1 7 8", 6), BadFactorization);
    CHECK(strand_index("3") == 5);
    CHECK(strand_index("3'") == 6);
}

TEST_CASE("smith normal form basics") {
    IntegerMatrix A(2, 2);
    A.at(0, 0) = 2;
    A.at(1, 1) = 3;
    SNFResult r = smith_normal_form(A);
    CHECK(r.S.at(0, 0) == 1);
    CHECK(r.S.at(1, 1) == 6);
    CHECK(multiply(multiply(r.U, A), r.V).a == r.S.a);

    IntegerMatrix Z(3, 2);
    SNFResult rz = smith_normal_form(Z);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j) CHECK(rz.S.at(i, j) == 0);
}

TEST_CASE("abelianization basics") {
    Presentation free2 = make_presentation(2);
    free2.add_relator(commutator({1}, {2}));
    AbelianInvariants a = abelianization(free2);
    CHECK(a.free_rank == 2);
    CHECK(a.torsion.empty());
    CHECK(a.str() == "Z^2");

    Presentation c3 = make_presentation(1);
    c3.add_relator({1, 1, 1});
    AbelianInvariants b = abelianization(c3);
    CHECK(b.free_rank == 0);
    REQUIRE(b.torsion.size() == 1);
    CHECK(b.torsion[0] == 3);
    CHECK(b.str() == "Z/3");
    CHECK(AbelianInvariants{}.str() == "0");
}

TEST_CASE("todd-coxeter") {
    Presentation c5 = make_presentation(1);
    c5.add_relator({1, 1, 1, 1, 1});
    auto t = todd_coxeter(c5, {}, {100});
    REQUIRE(t.has_value());
    CHECK(t->size() == 5);

    Presentation free1 = make_presentation(1);
    CHECK(!todd_coxeter(free1, {}, {1000}).has_value());  // overflow

    PlanarDegeneration d8 = fixture("fig8-quintic-5pt.case.json");
    Presentation q = squares_quotient(generate(d8, true));
    auto t8 = todd_coxeter(q, {}, {100000});
    REQUIRE(t8.has_value());
    CHECK(t8->size() == 120);

    // subgroup enumeration: index of <x> in C5 is 1
    auto ts = todd_coxeter(c5, {{1}}, {100});
    REQUIRE(ts.has_value());
    CHECK(ts->size() == 1);
}

TEST_CASE("table from hom") {
    Presentation p = make_presentation(2);
    PermutationHom trivial{3, {Permutation(3), Permutation(3)}};
    CHECK(table_from_hom(p, trivial).size() == 1);

    // two disjoint transpositions generate a Klein four-group inside S5
    PermutationHom klein{5,
                         {Permutation::transposition(1, 2, 5),
                          Permutation::transposition(3, 4, 5)}};
    CHECK(table_from_hom(p, klein).size() == 4);

    Presentation bad = make_presentation(2);
    bad.add_relator({1, 2});
    CHECK_THROWS_AS(table_from_hom(bad, klein), InconsistentHom);
}

TEST_CASE("reidemeister-schreier on an index-2 kernel of Z") {
    Presentation p = make_presentation(1);
    PermutationHom swap{2, {Permutation::transposition(1, 2, 2)}};
    CosetTable t = table_from_hom(p, swap);
    REQUIRE(t.size() == 2);
    KernelData kd = reidemeister_schreier(p, t);
    CHECK(kd.schreier_generators == 1);  // y = x^2
    CHECK(kd.kernel.relators.empty());
    CHECK(kd.rewrite({1, 1}) == Word{1});
    CHECK_THROWS_AS(kd.rewrite({1}), NotInSubgroup);
    AbelianInvariants inv = abelianization(kd.kernel);
    CHECK(inv.free_rank == 1);  // infinite cyclic
}

TEST_CASE("index-1 kernel is the whole group") {
    PlanarDegeneration d = fixture("fig9-quintic-4pt.case.json");
    Presentation q = squares_quotient(generate(d, true));
    PermutationHom trivial{1, std::vector<Permutation>(q.ngens(), Permutation(1))};
    CosetTable t = table_from_hom(q, trivial);
    REQUIRE(t.size() == 1);
    KernelData kd = reidemeister_schreier(q, t);
    CHECK(abelianization(kd.kernel) == abelianization(q));
}

TEST_CASE("coset table dump") {
    Presentation c2 = make_presentation(1);
    c2.add_relator({1, 1});
    auto t = todd_coxeter(c2, {}, {100});
    REQUIRE(t.has_value());
    std::string dump = dump_table(*t, c2);
    CHECK(dump.find("generators: g1") != std::string::npos);
    CHECK(dump.find("cosets: 2") != std::string::npos);
    CHECK(dump.find("subgroup: trivial") != std::string::npos);
}

TEST_CASE("probe edge cases") {
    PlanarDegeneration d = fixture("fig6-cayley-type-ii.case.json");
    CaffProbe id = caff_probe(d, "1");
    CHECK(id.verdict == "inconclusive");
    CaffProbe gen = caff_probe(d, "g1");
    CHECK(gen.verdict == "not-in-kernel");
    CaffProbe cyc = caff_probe(d, "g1 g2");  // image is a 3-cycle
    CHECK(cyc.verdict == "not-in-kernel");
}

TEST_CASE("empty corpus directory") {
    auto dir = std::filesystem::temp_directory_path() / "galcov-empty-corpus";
    std::filesystem::create_directories(dir);
    CorpusSummary sum = run_corpus(dir.string());
    CHECK(sum.total == 0);
    CHECK(sum.ok());
}
