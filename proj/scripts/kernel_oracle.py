#!/usr/bin/env python3
"""Independent oracle for the degeneration corpus.

Given a case file it instantiates the branch-curve presentation, builds the
coset table of the kernel of the squares-quotient map to S_n directly from the
permutation images, rewrites the relators with Reidemeister-Schreier, and
computes the abelian invariants of the kernel by integer row reduction.

This is a from-scratch computation path (no shared code with the C++ library);
its outputs are frozen into data/cases/<name>.expected.json and the library is
tested against them.

Usage: kernel_oracle.py [--write] [case.json ...]
"""

import json
import math
import sys
from itertools import combinations
from pathlib import Path

# ---------------------------------------------------------------------------
# relation schemas, one template list per vertex kind
#
# Slot letters refer to the incident edges named in the vertex "roles" map.
# An atom is letter [']['^-1']; templates are either a cusp <X, Y>, a node
# [X, Y], a relation U = V (emitted as U V^-1), or a bare word.

SCHEMAS = {
    "one-point": ["a = a'"],
    "two-point/a": [
        "<u, v>", "<u', v>", "<u^-1 u' u, v>",
        "v' = v u' u v u^-1 u'^-1 v^-1",
    ],
    "two-point/b": [
        "<u', v>", "<u', v'>", "<u', v^-1 v' v>",
        "u = v' v u' v^-1 v'^-1",
    ],
    "three-point-generic/tangent-conics": [
        "[c, d]", "[c', d]", "[c, d^-1 d' d]", "[c', d^-1 d' d]",
        "<t, d>", "<t', d>", "<t^-1 t' t, d>",
        "d' = d t' t d t^-1 t'^-1 d^-1",
        "<t, c>", "<t', c>", "<t^-1 t' t, c>",
        "c' = c t' t c t^-1 t'^-1 c^-1",
    ],
    "three-point-generic/conic-between": [
        "<u, c>", "<u', c>", "<u^-1 u' u, c>",
        "<c', v>", "<c', v'>", "<c', v^-1 v' v>",
        "v' v c' v^-1 v'^-1 = c u' u c u^-1 u'^-1 c^-1",
        "[c u c^-1, v]", "[c u c^-1, v']",
        "[c u' c^-1, v]", "[c u' c^-1, v']",
    ],
    "three-point-generic/veronese": [
        "<c', t>", "<c', t'>", "<c', t^-1 t' t>",
        "c = t' t c' t^-1 t'^-1",
        "<d, t' t c' t c'^-1 t^-1 t'^-1>",
        "<d, t' t c' t' c'^-1 t^-1 t'^-1>",
        "<d, t' t c' t^-1 t' t c'^-1 t^-1 t'^-1>",
        "d' = d t' t c' t' t c'^-1 t^-1 t'^-1 d t' t c' t^-1 t'^-1 c'^-1 t^-1 t'^-1 d^-1",
        "[c, d]", "[c, d']", "[c', d]", "[c', d']",
    ],
    "three-point-cayley": [
        "b = b'",
        "[a', b'^-1 c b']", "[a', b'^-1 c^-1 c' c b']",
        "[a, b'^-1 c b']", "[a, b'^-1 c^-1 c' c b']",
        "<a, b'>", "<a', b'>", "<a'^-1 a a', b'>",
        "b' = a^-1 a'^-1 b'^-1 c' c b' b b'^-1 c^-1 c'^-1 b' a' a",
        "<b' b b'^-1, c>", "<b' b b'^-1, c'>", "<b' b b'^-1, c' c c'^-1>",
    ],
    "four-point-standard": [
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
    ],
    "four-point-fan": [
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
    ],
    "five-point": [
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
    ],
}

ROLE_LETTERS = {
    "one-point": "a",
    "two-point": "uv",
    "three-point-generic/tangent-conics": "tcd",
    "three-point-generic/conic-between": "cuv",
    "three-point-generic/veronese": "ctd",
    "three-point-cayley": "abc",
    "four-point-standard": "abcd",
    "four-point-fan": "abcd",
    "five-point": "abcdf",
}


# ---------------------------------------------------------------------------
# words: lists of signed generator ids; edge j gives ids 2j-1 (plain), 2j (')

def gen_id(edge, primed):
    return 2 * edge - (0 if primed else 1)


def inv(word):
    return [-x for x in reversed(word)]


def free_reduce(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def parse_atoms(text, roles):
    word = []
    for tok in text.split():
        sign = 1
        if tok.endswith("^-1"):
            sign = -1
            tok = tok[:-3]
        primed = tok.endswith("'")
        if primed:
            tok = tok[:-1]
        if tok not in roles:
            raise ValueError(f"unbound slot {tok!r}")
        word.append(sign * gen_id(roles[tok], primed))
    return word


def instantiate(template, roles):
    """Template string -> (kind, relator-word)."""
    t = template.strip()
    if t.startswith("<") and t.endswith(">"):
        x, y = t[1:-1].split(",")
        X, Y = parse_atoms(x, roles), parse_atoms(y, roles)
        return "cusp", free_reduce(X + Y + X + inv(Y) + inv(X) + inv(Y)), (X, Y)
    if t.startswith("[") and t.endswith("]"):
        x, y = t[1:-1].split(",")
        X, Y = parse_atoms(x, roles), parse_atoms(y, roles)
        return "node", free_reduce(X + Y + inv(X) + inv(Y)), (X, Y)
    if "=" in t:
        u, v = t.split("=")
        U, V = parse_atoms(u, roles), parse_atoms(v, roles)
        return "branch", free_reduce(U + inv(V)), (U, V)
    return "word", free_reduce(parse_atoms(t, roles)), None


# ---------------------------------------------------------------------------
# permutations: 0-indexed tuples; p*q applies p first, then q

def p_mul(p, q):
    return tuple(q[i] for i in p)


def p_transposition(a, b, n):
    img = list(range(n))
    img[a - 1], img[b - 1] = img[b - 1], img[a - 1]
    return tuple(img)


def p_identity(n):
    return tuple(range(n))


def p_support(p):
    return frozenset(i for i, v in enumerate(p) if v != i)


# ---------------------------------------------------------------------------
# case handling

class Case:
    def __init__(self, doc):
        self.name = doc["name"]
        self.n = doc["planes"]
        self.edges = {e["index"]: tuple(e["planes"]) for e in doc["edges"]}
        self.m = len(self.edges)
        assert sorted(self.edges) == list(range(1, self.m + 1))
        self.vertices = sorted(doc["vertices"], key=lambda v: v["id"])
        for v in self.vertices:
            kind = v["kind"]
            key = kind
            if "variant" in v.get("roles", {}):
                key = f"{kind}/{v['roles']['variant']}"
            assert key in SCHEMAS, key
            letters = ROLE_LETTERS[key if "/" in key and key in ROLE_LETTERS else kind]
            assert sorted(v["roles"].get(l) for l in letters) == sorted(v["incident"]), \
                (self.name, v["id"])
        self.transpositions = {
            j: p_transposition(a, b, self.n) for j, (a, b) in self.edges.items()
        }

    def edge_vertex_map(self):
        member = {j: set() for j in self.edges}
        for v in self.vertices:
            for j in v["incident"]:
                member[j].add(v["id"])
        return member

    def parasitic_pairs(self):
        member = self.edge_vertex_map()
        return sorted(
            (a, b)
            for a, b in combinations(sorted(self.edges), 2)
            if not (member[a] & member[b])
        )

    def image(self, x):
        return self.transpositions[(abs(x) + 1) // 2]

    def word_image(self, word):
        acc = p_identity(self.n)
        for x in word:
            acc = p_mul(acc, self.image(x))
        return acc

    def relators(self, projective=True):
        """(tag, word) list in canonical emission order."""
        out = []
        for v in self.vertices:
            key = v["kind"]
            if "variant" in v["roles"]:
                key = f"{key}/{v['roles']['variant']}"
            for tpl in SCHEMAS[key]:
                kind, word, parts = instantiate(tpl, v["roles"])
                out.append((f"vertex {v['id']} {kind}", word, parts))
        for a, b in self.parasitic_pairs():
            for pa in (False, True):
                for pb in (False, True):
                    ga, gb = gen_id(a, pa), gen_id(b, pb)
                    out.append((f"parasitic ({a},{b})", [ga, gb, -ga, -gb], None))
        if projective:
            word = []
            for j in range(self.m, 0, -1):
                word += [gen_id(j, True), gen_id(j, False)]
            out.append(("projective", word, None))
        return out

    def consistency_check(self):
        for tag, word, parts in self.relators(True):
            assert self.word_image(word) == p_identity(self.n), (self.name, tag)
            if parts and tag.endswith("cusp"):
                sx = p_support(self.word_image(parts[0]))
                sy = p_support(self.word_image(parts[1]))
                assert len(sx) == len(sy) == 2 and len(sx & sy) == 1, (self.name, tag)
            if parts and tag.endswith("node"):
                # node images commute: disjoint or equal transpositions
                sx = p_support(self.word_image(parts[0]))
                sy = p_support(self.word_image(parts[1]))
                assert len(sx) == len(sy) == 2 and (sx == sy or not (sx & sy)), \
                    (self.name, tag)
        for a, b in self.parasitic_pairs():
            sa, sb = p_support(self.transpositions[a]), p_support(self.transpositions[b])
            assert not (sa & sb), (self.name, a, b)


# ---------------------------------------------------------------------------
# coset table of the kernel, straight from the permutation images

def coset_table(case):
    gens = list(range(1, 2 * case.m + 1))
    start = p_identity(case.n)
    index = {start: 0}
    order = [start]
    table = []
    head = 0
    while head < len(order):
        p = order[head]
        row = []
        for g in gens:
            q = p_mul(p, case.image(g))
            if q not in index:
                index[q] = len(order)
                order.append(q)
            row.append(index[q])
        table.append(row)
        head += 1
    return table


def schreier_data(table, ngens):
    """BFS tree; returns (tree pair set, column index of each non-tree pair)."""
    ncosets = len(table)
    seen = [False] * ncosets
    seen[0] = True
    tree = set()
    queue = [0]
    while queue:
        c = queue.pop(0)
        for g in range(ngens):
            d = table[c][g]
            if not seen[d]:
                seen[d] = True
                tree.add((c, g))
                queue.append(d)
    cols = {}
    for c in range(ncosets):
        for g in range(ngens):
            if (c, g) not in tree:
                cols[(c, g)] = len(cols)
    return tree, cols


def rewrite_row(word, start, table, tree, cols):
    """Exponent vector of the relator trace started at a coset.

    Generator images are involutions, so the inverse of letter g acts like g.
    """
    row = {}
    cur = start
    for x in word:
        g = abs(x) - 1
        nxt = table[cur][g]
        if x > 0:
            key = (cur, g)
            sgn = 1
        else:
            key = (nxt, g)
            sgn = -1
        if key not in tree:
            col = cols[key]
            row[col] = row.get(col, 0) + sgn
        cur = nxt
    assert cur == start
    return {c: v for c, v in row.items() if v}


# ---------------------------------------------------------------------------
# integer row reduction (Hermite form on sparse rows) and invariant factors

def row_axpy(r, a, s, b):
    """a*r + b*s for dict rows."""
    out = {c: a * v for c, v in r.items() if a * v}
    for c, v in s.items():
        w = out.get(c, 0) + b * v
        if w:
            out[c] = w
        elif c in out:
            del out[c]
    return out


class Hermite:
    def __init__(self):
        self.pivots = {}

    def add(self, row):
        row = {c: v for c, v in row.items() if v}
        while row:
            c = min(row)
            if c in self.pivots:
                p = self.pivots[c]
                a, b = p[c], row[c]
                if b % a == 0:
                    row = row_axpy(row, 1, p, -(b // a))
                else:
                    g, u, v = xgcd(a, b)
                    self.pivots[c] = row_axpy(p, u, row, v)
                    row = row_axpy(row, a // g, p, -(b // g))
            else:
                if row[c] < 0:
                    row = {k: -v for k, v in row.items()}
                self.pivots[c] = row
                return

    def reduced_rows(self):
        for c in sorted(self.pivots):
            p = self.pivots[c]
            for c2, q in self.pivots.items():
                if c2 != c and c in q:
                    k = q[c] // p[c]
                    if k:
                        self.pivots[c2] = row_axpy(q, 1, p, -k)
        return [self.pivots[c] for c in sorted(self.pivots)]


def xgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def transpose_rows(rows):
    cols = {}
    for i, r in enumerate(rows):
        for c, v in r.items():
            cols.setdefault(c, {})[i] = v
    return [cols[c] for c in sorted(cols)]


def invariant_factors(rows, ncols):
    """coker(Z^rows -> Z^ncols) as (free rank, torsion divisors)."""
    h = Hermite()
    for r in rows:
        h.add(r)
    reduced = h.reduced_rows()
    free_rank = ncols - len(reduced)
    cur = reduced
    for _ in range(1000):
        if all(len(r) == 1 for r in cur):
            break
        h = Hermite()
        for r in transpose_rows(cur):
            h.add(r)
        cur = h.reduced_rows()
    else:
        raise RuntimeError("diagonalization did not converge")
    diag = sorted(abs(v) for r in cur for v in r.values())
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            a, b = diag[i], diag[i + 1]
            if b % a:
                g = math.gcd(a, b)
                diag[i], diag[i + 1] = g, a * b // g
                changed = True
        diag.sort()
    return free_rank, [d for d in diag if d != 1], reduced


def residual_nonzero(vec, reduced_rows):
    """Whether vec lies outside the row lattice (nonzero abelianized image)."""
    vec = dict(vec)
    for p in reduced_rows:
        c = min(p)
        if c in vec:
            k = vec[c] // p[c]
            if k:
                vec = row_axpy(vec, 1, p, -k)
    return any(v for v in vec.values())


# ---------------------------------------------------------------------------

def kernel_invariants(case, projective, probe_word=None):
    relators = [w for _, w, _ in case.relators(projective)]
    relators += [[g, g] for g in range(1, 2 * case.m + 1)]
    table = coset_table(case)
    tree, cols = schreier_data(table, 2 * case.m)
    rows = []
    for word in relators:
        for c in range(len(table)):
            r = rewrite_row(word, c, table, tree, cols)
            if r:
                rows.append(r)
    free_rank, torsion, reduced = invariant_factors(rows, len(cols))
    probe = None
    if probe_word is not None:
        assert case.word_image(probe_word) == p_identity(case.n)
        vec = rewrite_row(probe_word, 0, table, tree, cols)
        probe = residual_nonzero(vec, reduced)
    return len(table), free_rank, torsion, probe


def process(path, write):
    doc = json.loads(Path(path).read_text())
    case = Case(doc)
    expected = {
        "name": case.name,
        "symmetric_degree": case.n,
        "source": "scripts/kernel_oracle.py (independent recomputation)",
    }
    if case.name == "hirzebruch-f121":
        expected["mode"] = "validate-only"
        print(f"{case.name}: validate-only fixture")
    else:
        case.consistency_check()
        probe_word = None
        if case.name == "cayley-type-ii":
            # commutator of a disjoint-image pair, used by the probe test
            g2, g3, g4 = gen_id(2, False), gen_id(3, False), gen_id(4, False)
            probe_word = [g3, g4, g3, -g2, -g3, -g4, -g3, g2]
        idx, rank, torsion, _ = kernel_invariants(case, True)
        aidx, arank, atorsion, probe = kernel_invariants(case, False, probe_word)
        assert idx == aidx == math.factorial(case.n), case.name
        trivial = rank == 0 and not torsion
        expected.update({
            "mode": "full",
            "kernel_index": idx,
            "verdict": "IsoSymmetric" if trivial else "KernelNontrivial",
            "kernel_invariants": {"free_rank": rank, "torsion": torsion},
            "affine_kernel_invariants": {"free_rank": arank, "torsion": atorsion},
        })
        if case.name == "veronese-plane":
            # Two independent computations (this script and a from-scratch
            # sympy Reidemeister-Schreier run) both give free rank 5; the
            # published statement of rank 8 is not reproduced by the published
            # relation list under any consistent role/variant reading.
            expected["published_invariants"] = {"free_rank": 8, "torsion": []}
            expected["note"] = ("recomputed invariants differ from the "
                                "published rank; this fixture ships the "
                                "recomputed value")
        if probe_word is not None:
            expected["probe"] = {
                "element": "g3 g4 g3 g2^-1 g3^-1 g4^-1 g3^-1 g2",
                "affine": True,
                "nonzero_abelianized_image": probe,
            }
        print(f"{case.name}: index={idx} projective=(Z^{rank}, {torsion}) "
              f"affine=(Z^{arank}, {atorsion})"
              + (f" probe_nonzero={probe}" if probe_word else ""))
    if write:
        out = Path(path).with_name(Path(path).name.replace(".case.json", ".expected.json"))
        out.write_text(json.dumps(expected, indent=2) + "\n")


def main(argv):
    write = "--write" in argv
    paths = [a for a in argv if not a.startswith("--")]
    if not paths:
        paths = sorted(str(p) for p in Path(__file__).resolve().parent.parent
                       .joinpath("data/cases").glob("*.case.json"))
    for p in paths:
        process(p, write)


if __name__ == "__main__":
    main(sys.argv[1:])
