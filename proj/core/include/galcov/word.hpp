#pragma once

// Words in a free group: a word is a sequence of nonzero signed generator
// ids; -x is the inverse of x.

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace galcov {

using Word = std::vector<int>;

inline Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

inline Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

// Cyclic reduction of an already freely reduced word.
inline Word cyclic_reduce(Word w) {
    w = free_reduce(w);
    size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
        ++lo;
        --hi;
    }
    return Word(w.begin() + lo, w.begin() + hi);
}

inline Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return free_reduce(out);
}

inline Word conjugate(const Word& w, const Word& by) {  // by * w * by^-1
    return concat(concat(by, w), inverse(by));
}

inline Word commutator(const Word& a, const Word& b) {  // a b a^-1 b^-1
    return concat(concat(a, b), concat(inverse(a), inverse(b)));
}

// Triple relator <a,b>: a b a b^-1 a^-1 b^-1 (i.e. aba = bab).
inline Word triple_relator(const Word& a, const Word& b) {
    return concat(concat(concat(a, b), a), inverse(concat(concat(b, a), b)));
}

inline int max_generator(const Word& w) {
    int m = 0;
    for (int x : w) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace galcov
