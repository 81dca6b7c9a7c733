#include "galcov/schreier.hpp"

#include <deque>

namespace galcov {

Word KernelData::rewrite(const Word& ambient, int start) const {
    Word out;
    int cur = start;
    for (int x : ambient) {
        int nxt = table.apply(cur, x);
        if (x > 0) {
            int s = sgen[cur][x - 1];
            if (s) out.push_back(s);
        } else {
            int s = sgen[nxt][-x - 1];
            if (s) out.push_back(-s);
        }
        cur = nxt;
    }
    if (cur != start)
        throw NotInSubgroup("word does not return to its starting coset");
    return free_reduce(out);
}

KernelData reidemeister_schreier(const Presentation& p, const CosetTable& t) {
    int ng = p.ngens();
    int n = t.size();
    for (int a = 0; a < n; ++a)
        for (int g = 1; g <= ng; ++g)
            if (t.apply(a, g) < 0 || t.apply(a, -g) < 0)
                throw OpenTable("coset table has undefined entries");

    KernelData kd;
    kd.table = t;
    kd.sgen.assign(n, std::vector<int>(ng, -1));  // -1 = not yet decided

    // Spanning tree by BFS from coset 0; a tree edge (c, g) joins c to c*g.
    std::vector<bool> seen(n, false);
    seen[0] = true;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int c = queue.front();
        queue.pop_front();
        for (int g = 1; g <= ng; ++g)
            for (int s : {1, -1}) {
                int d = t.apply(c, s * g);
                if (seen[d]) continue;
                seen[d] = true;
                if (s > 0)
                    kd.sgen[c][g - 1] = 0;  // tree edge c --g--> d
                else
                    kd.sgen[d][g - 1] = 0;  // tree edge d --g--> c
                queue.push_back(d);
            }
    }

    int next = 0;
    for (int c = 0; c < n; ++c)
        for (int g = 1; g <= ng; ++g)
            if (kd.sgen[c][g - 1] < 0) kd.sgen[c][g - 1] = ++next;
    kd.schreier_generators = next;

    for (int i = 1; i <= next; ++i)
        kd.kernel.names.push_back("k" + std::to_string(i));
    for (const auto& r : p.relators)
        for (int c = 0; c < n; ++c) {
            Word w = cyclic_reduce(kd.rewrite(r, c));
            if (!w.empty()) kd.kernel.add_relator(std::move(w));
        }
    return kd;
}

}  // namespace galcov
