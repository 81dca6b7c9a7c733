#include "galcov/tietze.hpp"

#include <algorithm>
#include <map>

namespace galcov {

namespace {

// Canonical form of a cyclic word: lexicographically least rotation of the
// word and of its inverse. Used for duplicate removal only.
Word cyclic_canonical(const Word& w) {
    Word best;
    bool have = false;
    for (const Word& base : {w, inverse(w)}) {
        for (size_t r = 0; r < std::max<size_t>(base.size(), 1); ++r) {
            Word rot(base.begin() + r, base.end());
            rot.insert(rot.end(), base.begin(), base.begin() + r);
            if (!have || rot < best) {
                best = rot;
                have = true;
            }
        }
    }
    return best;
}

void substitute(std::vector<Word>& relators, int g, const Word& w) {
    Word wi = inverse(w);
    for (auto& r : relators) {
        bool hit = std::any_of(r.begin(), r.end(),
                               [g](int x) { return std::abs(x) == g; });
        if (!hit) continue;
        Word out;
        out.reserve(r.size());
        for (int x : r) {
            if (x == g)
                out.insert(out.end(), w.begin(), w.end());
            else if (x == -g)
                out.insert(out.end(), wi.begin(), wi.end());
            else
                out.push_back(x);
        }
        r = cyclic_reduce(out);
    }
}

void dedup(std::vector<Word>& relators) {
    std::map<Word, bool> seen;
    std::vector<Word> out;
    for (auto& r : relators) {
        Word red = cyclic_reduce(r);
        if (red.empty()) continue;
        Word key = cyclic_canonical(red);
        if (seen.emplace(std::move(key), true).second) out.push_back(std::move(red));
    }
    relators = std::move(out);
}

size_t total_length(const std::vector<Word>& relators) {
    size_t n = 0;
    for (const auto& r : relators) n += r.size();
    return n;
}

// One sweep of relator-against-relator length reduction: if more than half of
// a short relator s (or its inverse, cyclically rotated) occurs inside a
// longer relator r, replace the occurrence by the inverse of the remainder.
bool reduce_with_relators(std::vector<Word>& relators, size_t max_source_len) {
    bool changed = false;
    for (size_t si = 0; si < relators.size(); ++si) {
        const Word s = relators[si];
        if (s.empty() || s.size() > max_source_len) continue;
        std::vector<Word> variants;
        for (const Word& base : {s, inverse(s)})
            for (size_t r = 0; r < base.size(); ++r) {
                Word rot(base.begin() + r, base.end());
                rot.insert(rot.end(), base.begin(), base.begin() + r);
                variants.push_back(std::move(rot));
            }
        for (size_t ri = 0; ri < relators.size(); ++ri) {
            if (ri == si) continue;
            Word& r = relators[ri];
            if (r.size() < s.size()) continue;
            bool local = true;
            while (local) {
                local = false;
                for (const Word& u : variants) {
                    // longest prefix of u strictly longer than half of s
                    for (size_t k = u.size(); k > u.size() / 2; --k) {
                        auto it = std::search(r.begin(), r.end(), u.begin(),
                                              u.begin() + k);
                        if (it == r.end()) continue;
                        Word repl = inverse(Word(u.begin() + k, u.end()));
                        Word out(r.begin(), it);
                        out.insert(out.end(), repl.begin(), repl.end());
                        out.insert(out.end(), it + k, r.end());
                        out = cyclic_reduce(out);
                        if (out.size() < r.size()) {
                            r = std::move(out);
                            changed = local = true;
                        }
                        break;
                    }
                    if (local) break;
                }
            }
        }
    }
    return changed;
}

}  // namespace

TietzeResult tietze_simplify(const Presentation& p, int budget) {
    TietzeResult res;
    std::vector<Word> relators = p.relators;
    int ng = p.ngens();
    std::vector<bool> alive(ng + 1, true);
    dedup(relators);
    const size_t length_cap = total_length(relators) * 4 + 1'000'000;

    // scratch occurrence counter, reset via the touched list
    std::vector<int> occ(ng + 1, 0);
    std::vector<int> touched;

    bool progress = true;
    while (progress) {
        progress = false;

        // Generator eliminations: relators containing a generator exactly once.
        while (res.passes_used < budget) {
            int best_g = 0;
            size_t best_len = 0, best_rel = 0;
            for (size_t ri = 0; ri < relators.size(); ++ri) {
                const Word& r = relators[ri];
                touched.clear();
                for (int x : r) {
                    int g = std::abs(x);
                    if (occ[g] == 0) touched.push_back(g);
                    ++occ[g];
                }
                for (int g : touched) {
                    if (occ[g] == 1 && alive[g]) {
                        size_t len = r.size() - 1;
                        if (best_g == 0 || g < best_g ||
                            (g == best_g && len < best_len)) {
                            best_g = g;
                            best_len = len;
                            best_rel = ri;
                        }
                    }
                    occ[g] = 0;
                }
            }
            if (best_g == 0) break;
            // rotate so the +-g letter leads, then read off g = (rest)^-1 / rest
            Word r = relators[best_rel];
            size_t pos = 0;
            while (std::abs(r[pos]) != best_g) ++pos;
            Word rot(r.begin() + pos, r.end());
            rot.insert(rot.end(), r.begin(), r.begin() + pos);
            Word rest(rot.begin() + 1, rot.end());
            Word w = rot[0] > 0 ? inverse(rest) : rest;
            relators.erase(relators.begin() + best_rel);
            substitute(relators, best_g, w);
            alive[best_g] = false;
            ++res.eliminated_generators;
            ++res.passes_used;
            progress = true;
            if (total_length(relators) > length_cap) {
                res.budget_exceeded = true;
                break;
            }
        }
        dedup(relators);
        if (res.budget_exceeded) break;

        // Length-reducing substitutions between relators. Quadratic in the
        // relator count, so only worthwhile on already-small presentations.
        if (relators.size() <= 1000) {
            while (res.passes_used < budget) {
                ++res.passes_used;
                if (!reduce_with_relators(relators, 64)) break;
                dedup(relators);
                progress = true;
            }
        }
        if (res.passes_used >= budget) {
            res.budget_exceeded = true;
            break;
        }
    }

    // Compact surviving generators into a fresh presentation.
    std::vector<int> remap(ng + 1, 0);
    int next = 0;
    for (int g = 1; g <= ng; ++g)
        if (alive[g]) {
            remap[g] = ++next;
            res.presentation.names.push_back(p.names[g - 1]);
        }
    for (const auto& r : relators) {
        Word out;
        out.reserve(r.size());
        for (int x : r) out.push_back(x > 0 ? remap[x] : -remap[-x]);
        if (!out.empty()) res.presentation.add_relator(out);
    }
    return res;
}

}  // namespace galcov
