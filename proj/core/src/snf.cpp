#include "galcov/snf.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace galcov {

namespace {

Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

Int int_gcd(Int a, Int b) {
    a = int_abs(a);
    b = int_abs(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// g = u*a + v*b with g > 0 (for nonzero input).
void xgcd(const Int& a, const Int& b, Int& g, Int& u, Int& v) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    g = old_r;
    u = old_s;
    v = old_t;
}

// a*r + b*s over sparse rows.
SparseRow row_axpy(const SparseRow& r, const Int& a, const SparseRow& s, const Int& b) {
    SparseRow out;
    for (const auto& [c, v] : r) {
        Int w = a * v;
        if (w != 0) out[c] = w;
    }
    for (const auto& [c, v] : s) {
        Int w = b * v;
        auto it = out.find(c);
        if (it == out.end()) {
            if (w != 0) out[c] = w;
        } else {
            it->second += w;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

std::vector<SparseRow> transpose_rows(const std::vector<SparseRow>& rows) {
    std::map<int, SparseRow> cols;
    for (size_t i = 0; i < rows.size(); ++i)
        for (const auto& [c, v] : rows[i]) cols[c][static_cast<int>(i)] = v;
    std::vector<SparseRow> out;
    for (auto& [_, r] : cols) out.push_back(std::move(r));
    return out;
}

}  // namespace

void HermiteBasis::add(SparseRow row) {
    for (auto it = row.begin(); it != row.end();)
        it = it->second == 0 ? row.erase(it) : std::next(it);
    while (!row.empty()) {
        int c = row.begin()->first;
        auto pit = pivots_.find(c);
        if (pit == pivots_.end()) {
            if (row.begin()->second < 0)
                for (auto& [_, v] : row) v = -v;
            pivots_[c] = std::move(row);
            return;
        }
        SparseRow& p = pit->second;
        Int a = p.at(c), b = row.at(c);
        if (b % a == 0) {
            row = row_axpy(row, 1, p, -(b / a));
        } else {
            Int g, u, v;
            xgcd(a, b, g, u, v);
            SparseRow np = row_axpy(p, u, row, v);
            row = row_axpy(row, a / g, p, -(b / g));
            pit->second = std::move(np);
        }
    }
}

std::vector<SparseRow> HermiteBasis::reduced_rows() {
    for (auto& [c, p] : pivots_) {
        for (auto& [c2, q] : pivots_) {
            if (c2 == c) continue;
            auto it = q.find(c);
            if (it == q.end()) continue;
            Int k = it->second / p.at(c);
            if (k != 0) q = row_axpy(q, 1, p, -k);
        }
    }
    std::vector<SparseRow> out;
    for (auto& [_, p] : pivots_) out.push_back(p);
    return out;
}

AbelianInvariants invariants_from_rows(const std::vector<SparseRow>& rows, long ncols) {
    // duplicate rows are common (the same relator traced from many cosets);
    // dropping them and feeding short rows first keeps the reduction cheap
    std::vector<SparseRow> work;
    work.reserve(rows.size());
    for (const auto& r : rows)
        if (!r.empty()) work.push_back(r);
    std::sort(work.begin(), work.end(),
              [](const SparseRow& a, const SparseRow& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
              });
    work.erase(std::unique(work.begin(), work.end()), work.end());

    HermiteBasis h;
    for (const auto& r : work) h.add(r);
    std::vector<SparseRow> cur = h.reduced_rows();

    AbelianInvariants inv;
    inv.free_rank = ncols - static_cast<long>(cur.size());

    // alternate row reduction with transposition until diagonal
    for (int iter = 0;; ++iter) {
        bool diagonal = true;
        for (const auto& r : cur)
            if (r.size() != 1) {
                diagonal = false;
                break;
            }
        if (diagonal) break;
        if (iter >= 1000)
            throw std::runtime_error("diagonalization did not converge");
        HermiteBasis h2;
        for (auto& r : transpose_rows(cur)) h2.add(std::move(r));
        cur = h2.reduced_rows();
    }

    std::vector<Int> diag;
    for (const auto& r : cur) diag.push_back(int_abs(r.begin()->second));
    std::sort(diag.begin(), diag.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < diag.size(); ++i) {
            if (diag[i + 1] % diag[i] != 0) {
                Int g = int_gcd(diag[i], diag[i + 1]);
                Int l = diag[i] / g * diag[i + 1];
                diag[i] = g;
                diag[i + 1] = l;
                changed = true;
            }
        }
        std::sort(diag.begin(), diag.end());
    }
    for (auto& d : diag)
        if (d != 1) inv.torsion.push_back(d);
    return inv;
}

SparseRow exponent_vector(const Word& w) {
    SparseRow out;
    for (int x : w) {
        int c = std::abs(x) - 1;
        auto it = out.find(c);
        if (it == out.end())
            out[c] = x > 0 ? 1 : -1;
        else {
            it->second += x > 0 ? 1 : -1;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

AbelianInvariants abelianization(const Presentation& p) {
    std::vector<SparseRow> rows;
    for (const auto& r : p.relators) {
        SparseRow v = exponent_vector(r);
        if (!v.empty()) rows.push_back(std::move(v));
    }
    return invariants_from_rows(rows, p.ngens());
}

SparseRow residual(SparseRow vec, const std::vector<SparseRow>& reduced) {
    for (auto it = vec.begin(); it != vec.end();)
        it = it->second == 0 ? vec.erase(it) : std::next(it);
    for (const auto& p : reduced) {
        int c = p.begin()->first;
        auto it = vec.find(c);
        if (it == vec.end()) continue;
        Int k = it->second / p.at(c);
        if (k != 0) vec = row_axpy(vec, 1, p, -k);
    }
    return vec;
}

std::string AbelianInvariants::str() const {
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const auto& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

IntegerMatrix IntegerMatrix::identity(int n) {
    IntegerMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.a[i][i] = 1;
    return m;
}

IntegerMatrix multiply(const IntegerMatrix& x, const IntegerMatrix& y) {
    IntegerMatrix out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x.a[i][k] == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                if (y.a[k][j] != 0) out.a[i][j] += x.a[i][k] * y.a[k][j];
        }
    return out;
}

SNFResult smith_normal_form(const IntegerMatrix& A) {
    SNFResult res;
    res.S = A;
    res.U = IntegerMatrix::identity(A.rows);
    res.V = IntegerMatrix::identity(A.cols);
    IntegerMatrix& S = res.S;
    IntegerMatrix& U = res.U;
    IntegerMatrix& V = res.V;

    auto row_sub = [&](int i, int k, const Int& q) {  // row_i -= q * row_k
        for (int j = 0; j < S.cols; ++j) S.a[i][j] -= q * S.a[k][j];
        for (int j = 0; j < U.cols; ++j) U.a[i][j] -= q * U.a[k][j];
    };
    auto col_sub = [&](int j, int k, const Int& q) {  // col_j -= q * col_k
        for (int i = 0; i < S.rows; ++i) S.a[i][j] -= q * S.a[i][k];
        for (int i = 0; i < V.rows; ++i) V.a[i][j] -= q * V.a[i][k];
    };
    auto row_swap = [&](int i, int k) {
        std::swap(S.a[i], S.a[k]);
        std::swap(U.a[i], U.a[k]);
    };
    auto col_swap = [&](int j, int k) {
        for (int i = 0; i < S.rows; ++i) std::swap(S.a[i][j], S.a[i][k]);
        for (int i = 0; i < V.rows; ++i) std::swap(V.a[i][j], V.a[i][k]);
    };

    int t = 0;
    while (t < S.rows && t < S.cols) {
        // minimal-absolute-value nonzero pivot in the trailing submatrix
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = t; i < S.rows; ++i)
            for (int j = t; j < S.cols; ++j)
                if (S.a[i][j] != 0 &&
                    (pi < 0 || int_abs(S.a[i][j]) < best)) {
                    pi = i;
                    pj = j;
                    best = int_abs(S.a[i][j]);
                }
        if (pi < 0) break;
        if (pi != t) row_swap(pi, t);
        if (pj != t) col_swap(pj, t);

        while (true) {
            bool again = false;
            for (int i = t + 1; i < S.rows; ++i) {
                if (S.a[i][t] == 0) continue;
                Int q = S.a[i][t] / S.a[t][t];
                row_sub(i, t, q);
                if (S.a[i][t] != 0) {  // remainder beats the pivot
                    row_swap(i, t);
                    again = true;
                }
            }
            if (again) continue;
            for (int j = t + 1; j < S.cols; ++j) {
                if (S.a[t][j] == 0) continue;
                Int q = S.a[t][j] / S.a[t][t];
                col_sub(j, t, q);
                if (S.a[t][j] != 0) {
                    col_swap(j, t);
                    again = true;
                }
            }
            if (again) continue;
            // enforce divisibility of the trailing submatrix by the pivot
            bool fixed = false;
            for (int i = t + 1; i < S.rows && !fixed; ++i)
                for (int j = t + 1; j < S.cols && !fixed; ++j)
                    if (S.a[i][j] % S.a[t][t] != 0) {
                        row_sub(t, i, -1);  // add row i to row t
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (S.a[t][t] < 0) {
            for (int j = 0; j < S.cols; ++j) S.a[t][j] = -S.a[t][j];
            for (int j = 0; j < U.cols; ++j) U.a[t][j] = -U.a[t][j];
        }
        ++t;
    }
    return res;
}

}  // namespace galcov
