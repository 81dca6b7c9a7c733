#include "galcov/coset_table.hpp"

#include <deque>
#include <map>
#include <sstream>

namespace galcov {

namespace {

// Growable enumeration table with coincidence (union-find) bookkeeping.
// Columns: 2g-2 for generator g, 2g-1 for its inverse.
struct Enumerator {
    int ncols;
    long limit;
    std::vector<int> tab;  // rows * ncols, -1 = undefined
    std::vector<int> uf;   // union-find parent; uf[c] == c iff c is a representative
    std::deque<int> queue;  // dead cosets whose rows await transfer
    long live = 0;

    explicit Enumerator(int ngens, long max_rows) : ncols(2 * ngens), limit(max_rows) {
        new_coset();
    }

    static int col(int x) { return x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1; }
    static int inv_col(int c) { return c ^ 1; }

    int rows() const { return static_cast<int>(uf.size()); }
    int& at(int coset, int c) { return tab[static_cast<size_t>(coset) * ncols + c]; }
    bool alive(int c) { return uf[c] == c; }

    int rep(int c) {
        while (uf[c] != c) c = uf[c];
        return c;
    }

    // returns -1 when the row limit is hit
    int new_coset() {
        if (rows() >= limit) return -1;
        uf.push_back(rows());
        tab.resize(tab.size() + ncols, -1);
        ++live;
        return rows() - 1;
    }

    void merge(int a, int b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        uf[b] = a;
        --live;
        queue.push_back(b);
    }

    void process_coincidences() {
        while (!queue.empty()) {
            int g = queue.front();
            queue.pop_front();
            for (int c = 0; c < ncols; ++c) {
                int d = at(g, c);
                if (d < 0) continue;
                at(d, inv_col(c)) = -1;
                int mu = rep(g), nu = rep(d);
                if (at(mu, c) >= 0)
                    merge(nu, at(mu, c));
                else if (at(nu, inv_col(c)) >= 0)
                    merge(mu, at(nu, inv_col(c)));
                else {
                    at(mu, c) = nu;
                    at(nu, inv_col(c)) = mu;
                }
            }
        }
    }

    // Scan relator w at coset a; fill gaps with new cosets when allowed.
    // Returns false when a needed definition hits the row limit.
    bool scan(int a, const Word& w, bool fill) {
        int f = a, b = a;
        size_t i = 0, j = w.size();
        while (true) {
            while (i < j) {
                int nxt = at(f, col(w[i]));
                if (nxt < 0) break;
                f = nxt;
                ++i;
            }
            if (i == j) {
                if (f != b) {
                    merge(f, b);
                    process_coincidences();
                }
                return true;
            }
            while (j > i) {
                int nxt = at(b, inv_col(col(w[j - 1])));
                if (nxt < 0) break;
                b = nxt;
                --j;
            }
            if (j < i) {  // unreachable with the loop bounds, kept for clarity
                return true;
            }
            if (j == i) {
                merge(f, b);
                process_coincidences();
                return true;
            }
            if (j == i + 1) {  // deduction closes the gap
                at(f, col(w[i])) = b;
                at(b, inv_col(col(w[i]))) = f;
                return true;
            }
            if (!fill) return true;
            int n = new_coset();
            if (n < 0) return false;
            at(f, col(w[i])) = n;
            at(n, inv_col(col(w[i]))) = f;
            f = n;
            ++i;
        }
    }
};

}  // namespace

std::optional<CosetTable> todd_coxeter(const Presentation& p,
                                       const std::vector<Word>& subgroup,
                                       const EnumerationLimits& lim) {
    int ng = p.ngens();
    Enumerator e(ng, std::max<long>(lim.max_cosets, 1));

    auto run = [&](bool fill) -> bool {  // false = overflow while filling
        for (const auto& w : subgroup) {
            if (!e.alive(0)) break;
            if (!e.scan(e.rep(0), w, fill)) return false;
        }
        for (int a = 0; a < e.rows(); ++a) {
            if (!e.alive(a)) continue;
            for (const auto& r : p.relators) {
                if (!e.scan(a, r, fill)) return false;
                if (!e.alive(a)) break;
            }
            if (!e.alive(a) || !fill) continue;
            for (int c = 0; c < e.ncols; ++c) {
                if (e.at(a, c) >= 0) continue;
                int n = e.new_coset();
                if (n < 0) return false;
                e.at(a, c) = n;
                e.at(n, Enumerator::inv_col(c)) = a;
            }
        }
        return true;
    };

    bool tried_lookahead = false;
    int lookahead_rounds = 0;
    while (true) {
        if (run(true)) {
            // verify closure; stray undefined entries or unclosed traces
            // (possible after coincidence cascades) trigger another pass
            bool closed = true;
            for (int a = 0; a < e.rows() && closed; ++a) {
                if (!e.alive(a)) continue;
                for (int c = 0; c < e.ncols; ++c) {
                    int d = e.at(a, c);
                    if (d < 0) {
                        closed = false;
                        break;
                    }
                    if (!e.alive(d)) e.at(a, c) = e.rep(d);
                }
            }
            for (int a = 0; a < e.rows() && closed; ++a) {
                if (!e.alive(a)) continue;
                for (const auto& r : p.relators) {
                    int cur = a;
                    for (int x : r) cur = e.at(cur, Enumerator::col(x));
                    if (cur != a) {
                        closed = false;
                        break;
                    }
                }
            }
            if (closed) break;
            continue;
        }
        // table full: one lookahead (scan without filling) may free rows
        if (++lookahead_rounds > 2) return std::nullopt;
        if (tried_lookahead && e.live >= lim.max_cosets) return std::nullopt;
        long before = e.live;
        run(false);
        tried_lookahead = true;
        if (e.live >= lim.max_cosets || e.live == before) return std::nullopt;
        // compact: rebuild the enumerator with live cosets renumbered in order
        Enumerator fresh(ng, std::max<long>(lim.max_cosets, 1));
        std::vector<int> remap(e.rows(), -1);
        int next = 0;
        for (int a = 0; a < e.rows(); ++a)
            if (e.alive(a)) remap[a] = next++;
        fresh.uf.assign(next, 0);
        for (int i = 0; i < next; ++i) fresh.uf[i] = i;
        fresh.tab.assign(static_cast<size_t>(next) * e.ncols, -1);
        fresh.live = next;
        for (int a = 0; a < e.rows(); ++a) {
            if (!e.alive(a)) continue;
            for (int c = 0; c < e.ncols; ++c) {
                int d = e.at(a, c);
                fresh.at(remap[a], c) = d < 0 ? -1 : remap[e.rep(d)];
            }
        }
        e = std::move(fresh);
        tried_lookahead = false;
    }

    // emit the compacted closed table
    std::vector<int> remap(e.rows(), -1);
    int n = 0;
    for (int a = 0; a < e.rows(); ++a)
        if (e.alive(a)) remap[a] = n++;
    CosetTable t(ng, n);
    for (int a = 0; a < e.rows(); ++a) {
        if (!e.alive(a)) continue;
        for (int g = 1; g <= ng; ++g) {
            t.set(remap[a], g, remap[e.rep(e.at(a, Enumerator::col(g)))]);
            t.set(remap[a], -g, remap[e.rep(e.at(a, Enumerator::col(-g)))]);
        }
    }
    t.subgroup = subgroup;
    return t;
}

CosetTable table_from_hom(const Presentation& p, const PermutationHom& h) {
    for (const auto& r : p.relators)
        if (!h.word_image(r).is_identity())
            throw InconsistentHom("relator '" + p.word_string(r) +
                                  "' does not map to the identity");
    int ng = p.ngens();
    std::vector<Permutation> order{Permutation(h.degree)};
    std::map<Permutation, int> index{{order[0], 0}};
    std::vector<std::vector<int>> rows;
    for (size_t head = 0; head < order.size(); ++head) {
        Permutation cur = order[head];
        std::vector<int> row(2 * ng);
        for (int g = 1; g <= ng; ++g) {
            for (int s : {1, -1}) {
                Permutation nxt =
                    cur.then(s > 0 ? h.image(g) : h.image(g).inverse());
                auto [it, fresh] = index.emplace(nxt, static_cast<int>(order.size()));
                if (fresh) order.push_back(nxt);
                row[s > 0 ? 2 * (g - 1) : 2 * (g - 1) + 1] = it->second;
            }
        }
        rows.push_back(std::move(row));
    }
    CosetTable t(ng, static_cast<int>(rows.size()));
    for (size_t a = 0; a < rows.size(); ++a)
        for (int g = 1; g <= ng; ++g) {
            t.set(static_cast<int>(a), g, rows[a][2 * (g - 1)]);
            t.set(static_cast<int>(a), -g, rows[a][2 * (g - 1) + 1]);
        }
    return t;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::IsoSymmetric: return "IsoSymmetric";
        case Verdict::KernelNontrivial: return "KernelNontrivial";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

std::string dump_table(const CosetTable& t, const Presentation& p) {
    std::ostringstream os;
    os << "generators:";
    for (const auto& n : p.names) os << ' ' << n;
    os << "\nsubgroup:";
    if (t.subgroup.empty()) os << " trivial";
    for (const auto& w : t.subgroup) os << ' ' << p.word_string(w) << ';';
    os << "\ncosets: " << t.size() << "\n";
    for (int a = 0; a < t.size(); ++a) {
        for (int g = 1; g <= t.ngens(); ++g) {
            if (g > 1) os << ' ';
            os << t.apply(a, g) + 1 << ' ' << t.apply(a, -g) + 1;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace galcov
