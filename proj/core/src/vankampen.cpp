#include "galcov/vankampen.hpp"

#include <algorithm>

#include "galcov/schemas.hpp"

namespace galcov {

std::string generator_name(int edge, bool primed) {
    return "g" + std::to_string(edge) + (primed ? "p" : "");
}

GeneratedPresentation generate(const PlanarDegeneration& d, bool projective) {
    GeneratedPresentation gp;
    gp.projective = projective;

    int m = d.edge_count();
    for (int j = 1; j <= m; ++j) {
        gp.presentation.names.push_back(generator_name(j, false));
        gp.presentation.names.push_back(generator_name(j, true));
        Permutation t = edge_transposition(d, j);
        gp.image.images.push_back(t);
        gp.image.images.push_back(t);
    }
    gp.image.degree = d.planes;

    std::vector<Vertex> verts = d.vertices;
    std::sort(verts.begin(), verts.end(),
              [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    for (const auto& v : verts) {
        const RelationSchema& schema = find_schema(v.schema_key());
        for (const auto& tpl : schema.templates) {
            InstantiatedRelator ir = instantiate(tpl, v.roles);
            gp.presentation.add_relator(
                ir.relator,
                "vertex " + std::to_string(v.id) + " " + relator_kind_name(ir.kind));
        }
    }

    for (const auto& [a, b] : parasitic_pairs(d)) {
        std::string tag = "parasitic (" + std::to_string(a) + "," + std::to_string(b) + ")";
        for (bool pa : {false, true})
            for (bool pb : {false, true})
                gp.presentation.add_relator(
                    commutator(Word{gen_id(a, pa)}, Word{gen_id(b, pb)}), tag);
    }

    if (projective) {
        Word w;
        for (int j = m; j >= 1; --j) {
            w.push_back(gen_id(j, true));
            w.push_back(gen_id(j, false));
        }
        gp.presentation.add_relator(w, "projective");
    }
    return gp;
}

bool check_image_consistency(const GeneratedPresentation& gp) {
    for (const auto& r : gp.presentation.relators)
        if (!gp.image.word_image(r).is_identity()) return false;
    return true;
}

namespace {

void fail(ConsistencyReport& r, std::string msg) {
    r.ok = false;
    r.failures.push_back(std::move(msg));
}

}  // namespace

ConsistencyReport consistency_suite(const PlanarDegeneration& d) {
    ConsistencyReport rep;
    GeneratedPresentation gp = generate(d, true);

    std::vector<Vertex> verts = d.vertices;
    std::sort(verts.begin(), verts.end(),
              [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    for (const auto& v : verts) {
        const RelationSchema& schema = find_schema(v.schema_key());
        for (const auto& tpl : schema.templates) {
            InstantiatedRelator ir = instantiate(tpl, v.roles);
            std::string where = "vertex " + std::to_string(v.id) + " " +
                                relator_kind_name(ir.kind) + " '" + tpl + "'";
            if (!gp.image.word_image(ir.relator).is_identity())
                fail(rep, where + ": relator image is not the identity");
            if (ir.kind == RelatorKind::Cusp) {
                auto sx = gp.image.word_image(ir.left).support();
                auto sy = gp.image.word_image(ir.right).support();
                std::vector<int> common;
                std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(),
                                      std::back_inserter(common));
                if (sx.size() != 2 || sy.size() != 2 || common.size() != 1)
                    fail(rep, where + ": cusp pair does not share exactly one letter");
            }
            if (ir.kind == RelatorKind::Node) {
                auto sx = gp.image.word_image(ir.left).support();
                auto sy = gp.image.word_image(ir.right).support();
                std::vector<int> common;
                std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(),
                                      std::back_inserter(common));
                bool commute = sx == sy || common.empty();
                if (sx.size() != 2 || sy.size() != 2 || !commute)
                    fail(rep, where + ": node pair images do not commute");
            }
        }
    }

    for (const auto& [a, b] : parasitic_pairs(d)) {
        auto sa = edge_transposition(d, a).support();
        auto sb = edge_transposition(d, b).support();
        std::vector<int> common;
        std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                              std::back_inserter(common));
        if (!common.empty())
            fail(rep, "parasitic pair (" + std::to_string(a) + "," + std::to_string(b) +
                          "): transpositions are not disjoint");
    }

    // projective relator image (last relator of the projective run)
    if (!gp.presentation.relators.empty() &&
        !gp.image.word_image(gp.presentation.relators.back()).is_identity())
        fail(rep, "projective relator image is not the identity");

    return rep;
}

}  // namespace galcov
