#include "galcov/schemas.hpp"

#include <sstream>

namespace galcov {

namespace {

std::vector<RelationSchema> build_registry() {
    return {
        {"one-point", "a", {"a = a'"}},
        {"two-point/a",
         "uv",
         {
             "<u, v>", "<u', v>", "<u^-1 u' u, v>",
             "v' = v u' u v u^-1 u'^-1 v^-1",
         }},
        {"two-point/b",
         "uv",
         {
             "<u', v>", "<u', v'>", "<u', v^-1 v' v>",
             "u = v' v u' v^-1 v'^-1",
         }},
        {"three-point-generic/tangent-conics",
         "tcd",
         {
             "[c, d]", "[c', d]", "[c, d^-1 d' d]", "[c', d^-1 d' d]",
             "<t, d>", "<t', d>", "<t^-1 t' t, d>",
             "d' = d t' t d t^-1 t'^-1 d^-1",
             "<t, c>", "<t', c>", "<t^-1 t' t, c>",
             "c' = c t' t c t^-1 t'^-1 c^-1",
         }},
        {"three-point-generic/conic-between",
         "cuv",
         {
             "<u, c>", "<u', c>", "<u^-1 u' u, c>",
             "<c', v>", "<c', v'>", "<c', v^-1 v' v>",
             "v' v c' v^-1 v'^-1 = c u' u c u^-1 u'^-1 c^-1",
             "[c u c^-1, v]", "[c u c^-1, v']",
             "[c u' c^-1, v]", "[c u' c^-1, v']",
         }},
        {"three-point-generic/veronese",
         "ctd",
         {
             "<c', t>", "<c', t'>", "<c', t^-1 t' t>",
             "c = t' t c' t^-1 t'^-1",
             "<d, t' t c' t c'^-1 t^-1 t'^-1>",
             "<d, t' t c' t' c'^-1 t^-1 t'^-1>",
             "<d, t' t c' t^-1 t' t c'^-1 t^-1 t'^-1>",
             "d' = d t' t c' t' t c'^-1 t^-1 t'^-1 d t' t c' t^-1 t'^-1 c'^-1 t^-1 t'^-1 d^-1",
             "[c, d]", "[c, d']", "[c', d]", "[c', d']",
         }},
        {"three-point-cayley",
         "abc",
         {
             "b = b'",
             "[a', b'^-1 c b']", "[a', b'^-1 c^-1 c' c b']",
             "[a, b'^-1 c b']", "[a, b'^-1 c^-1 c' c b']",
             "<a, b'>", "<a', b'>", "<a'^-1 a a', b'>",
             "b' = a^-1 a'^-1 b'^-1 c' c b' b b'^-1 c^-1 c'^-1 b' a' a",
             "<b' b b'^-1, c>", "<b' b b'^-1, c'>", "<b' b b'^-1, c' c c'^-1>",
         }},
        {"four-point-standard",
         "abcd",
         {
             "<a', b>", "<a', b'>", "<a', b^-1 b' b>",
             "<c, d>", "<c', d>", "<c^-1 c' c, d>",
             "[b' b a' b^-1 b'^-1, d]",
             "[b' b a' b^-1 b'^-1, c^-1 c'^-1 d^-1 d' d c' c]",
             "<a, b>", "<a, b'>", "<a, b^-1 b' b>",
             "<c, d^-1 d' d>", "<c', d^-1 d' d>", "<c^-1 c' c, d^-1 d' d>",
             "[b' b a b^-1 b'^-1, d^-1 d' d]",
             "[b' b a b^-1 b'^-1, c^-1 c'^-1 d^-1 d'^-1 d d' d c' c]",
             "b' b a' b a'^-1 b^-1 b'^-1 = d c' d^-1",
             "b' b a' b' a'^-1 b^-1 b'^-1 = d c' c c'^-1 d^-1",
             "b' b a b a^-1 b^-1 b'^-1 = d^-1 d' d c' d^-1 d'^-1 d",
             "b' b a b' a^-1 b^-1 b'^-1 = d^-1 d' d c' c c'^-1 d^-1 d'^-1 d",
         }},
        {"four-point-fan",
         "abcd",
         {
             "[b, c]", "[b', c]", "[a, c]", "[a', c]",
             "<a, b>", "<a', b>", "<a^-1 a' a, b>",
             "<c', d>", "<c', d'>", "<c', d^-1 d' d>",
             "[c b' c^-1, d' d c' d^-1 d'^-1]",
             "[b a' a b a^-1 a'^-1 b^-1, c^-1 d' d c' d^-1 d'^-1 c]",
             "[b a b^-1, c^-1 d' d c' d^-1 d'^-1 c]",
             "<c^-1 b' c, d>", "<c^-1 b' c, d'>", "<c^-1 b' c, d^-1 d' d>",
             "b a' a b a^-1 a'^-1 b^-1 = c^-1 d' d c b' c^-1 d^-1 d'^-1 c",
             "c = d' d c' d^-1 d'^-1",
             "[b a b^-1, c^-1 d c]", "[b a' b^-1, c^-1 d c]",
             "[b a b^-1, c^-1 d' c]", "[b a' b^-1, c^-1 d' c]",
         }},
        {"five-point",
         "abcdf",
         {
             "[c, d]", "[c', d]",
             "<d', f>", "<d', f'>", "<d', f^-1 f' f>",
             "<b, d>", "<b', d>", "<b^-1 b' b, d>",
             "[d c d^-1, f' f d' f^-1 f'^-1]",
             "[d c' d^-1, f' f d' f^-1 f'^-1]",
             "d b' b d b^-1 b'^-1 d^-1 = f' f d' f^-1 f'^-1",
             "[a, d]", "[a', d]",
             "[a, f' f d' f^-1 f'^-1]", "[a', f' f d' f^-1 f'^-1]",
             "<a', b>", "<a', b'>", "<a', b^-1 b' b>",
             "<d c d^-1, f>", "<d c' d^-1, f>", "<d c^-1 c' c d^-1, f>",
             "b' b a' b a'^-1 b^-1 b'^-1 = d^-1 f d c' d^-1 f^-1 d",
             "b' b a' b' a'^-1 b^-1 b'^-1 = d^-1 f d c' c c'^-1 d^-1 f^-1 d",
             "[b' b a' b^-1 b'^-1, d^-1 f d]",
             "[c' c b' b a' b^-1 b'^-1 c^-1 c'^-1, d^-1 f^-1 f' f d]",
             "<a, b>", "<a, b'>", "<a, b^-1 b' b>",
             "<d c d^-1, f^-1 f' f>", "<d c' d^-1, f^-1 f' f>",
             "<d c^-1 c' c d^-1, f^-1 f' f>",
             "b' b a b a^-1 b^-1 b'^-1 = d^-1 f^-1 f' f d c' d^-1 f^-1 f'^-1 f d",
             "b' b a b' a^-1 b^-1 b'^-1 = d^-1 f^-1 f' f d c' c c'^-1 d^-1 f^-1 f'^-1 f d",
             "[b' b a b^-1 b'^-1, d^-1 f^-1 f' f d]",
             "[c' c b' b a b^-1 b'^-1 c^-1 c'^-1, d^-1 f^-1 f'^-1 f f' f d]",
         }},
    };
}

Word parse_atoms(const std::string& text, const std::map<std::string, int>& roles) {
    Word w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        int sign = 1;
        if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
            sign = -1;
            tok = tok.substr(0, tok.size() - 3);
        }
        bool primed = !tok.empty() && tok.back() == '\'';
        if (primed) tok.pop_back();
        auto it = roles.find(tok);
        if (it == roles.end())
            throw RoleArityMismatch("unbound slot '" + tok + "' in relation template");
        w.push_back(sign * gen_id(it->second, primed));
    }
    return w;
}

}  // namespace

const std::vector<RelationSchema>& schema_registry() {
    static const std::vector<RelationSchema> registry = build_registry();
    return registry;
}

const RelationSchema& find_schema(const std::string& key) {
    for (const auto& s : schema_registry())
        if (s.key == key) return s;
    throw MissingSchema("no relation schema registered for '" + key + "'");
}

InstantiatedRelator instantiate(const std::string& tpl,
                                const std::map<std::string, int>& roles) {
    std::string t = tpl;
    // trim
    size_t lo = t.find_first_not_of(' ');
    size_t hi = t.find_last_not_of(' ');
    t = lo == std::string::npos ? "" : t.substr(lo, hi - lo + 1);

    InstantiatedRelator out;
    if (t.size() >= 2 && t.front() == '<' && t.back() == '>') {
        size_t comma = t.find(',');
        out.kind = RelatorKind::Cusp;
        out.left = parse_atoms(t.substr(1, comma - 1), roles);
        out.right = parse_atoms(t.substr(comma + 1, t.size() - comma - 2), roles);
        out.relator = free_reduce(triple_relator(out.left, out.right));
        return out;
    }
    if (t.size() >= 2 && t.front() == '[' && t.back() == ']') {
        size_t comma = t.find(',');
        out.kind = RelatorKind::Node;
        out.left = parse_atoms(t.substr(1, comma - 1), roles);
        out.right = parse_atoms(t.substr(comma + 1, t.size() - comma - 2), roles);
        out.relator = commutator(out.left, out.right);
        return out;
    }
    size_t eq = t.find('=');
    if (eq != std::string::npos) {
        out.kind = RelatorKind::Branch;
        out.left = parse_atoms(t.substr(0, eq), roles);
        out.right = parse_atoms(t.substr(eq + 1), roles);
        out.relator = concat(out.left, inverse(out.right));
        return out;
    }
    out.kind = RelatorKind::Plain;
    out.relator = free_reduce(parse_atoms(t, roles));
    return out;
}

const char* relator_kind_name(RelatorKind k) {
    switch (k) {
        case RelatorKind::Branch: return "branch";
        case RelatorKind::Node: return "node";
        case RelatorKind::Cusp: return "cusp";
        case RelatorKind::Plain: return "word";
    }
    return "word";
}

}  // namespace galcov
