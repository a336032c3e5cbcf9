#include "sgspec/matrix.hpp"

namespace sgspec {

bool IntMatrix::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntPoly berkowitz_charpoly(int n, const SparseRows& rows) {
    // c[i] holds the coefficient of x^(r-i) for the leading principal r x r
    // submatrix; c[0] = 1 throughout.
    std::vector<Int> c{Int(1)};
    std::vector<Int> t, cnew, w, wnext;
    for (int r = 1; r <= n; ++r) {
        t.assign(r + 1, Int(0));
        t[0] = 1;
        for (const auto& [j, val] : rows[r - 1])
            if (j == r - 1) t[1] = -val;
        if (r >= 2) {
            // t[k] = -(row_{r-1} . A^{k-2} . col_{r-1}) over indices < r-1
            w.assign(r - 1, Int(0));
            for (int i = 0; i < r - 1; ++i)
                for (const auto& [j, val] : rows[i])
                    if (j == r - 1) w[i] = val;
            for (int k = 2; k <= r; ++k) {
                Int dot = 0;
                for (const auto& [j, val] : rows[r - 1])
                    if (j < r - 1 && w[j] != 0) dot += val * w[j];
                t[k] = -dot;
                if (k == r) break;
                wnext.assign(r - 1, Int(0));
                for (int i = 0; i < r - 1; ++i) {
                    Int acc = 0;
                    for (const auto& [j, val] : rows[i])
                        if (j < r - 1 && w[j] != 0) acc += val * w[j];
                    wnext[i] = acc;
                }
                w.swap(wnext);
            }
        }
        cnew.assign(r + 1, Int(0));
        for (int k = 0; k <= r; ++k) {
            if (t[k] == 0) continue;
            int top = std::min<int>(r - k, static_cast<int>(c.size()) - 1);
            for (int i = 0; i <= top; ++i) cnew[k + i] += t[k] * c[i];
        }
        c.swap(cnew);
    }
    std::vector<Int> low(n + 1);
    for (int i = 0; i <= n; ++i) low[i] = c[n - i];
    return IntPoly(std::move(low));
}

IntPoly charpoly(const IntMatrix& m) {
    SparseRows rows(m.order());
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j)
            if (m.at(i, j) != 0) rows[i].emplace_back(j, m.at(i, j));
    return berkowitz_charpoly(m.order(), rows);
}

Int det(const IntMatrix& m) {
    IntPoly p = charpoly(m);
    Int d = p.coeff(0);
    return (m.order() % 2 == 1) ? Int(-d) : d;
}

Int det_prime(const IntMatrix& m) {
    if (m.order() == 0) return 1;
    IntPoly p = charpoly(m);
    Int a1 = p.coeff(1);
    return (m.order() % 2 == 0) ? Int(-a1) : a1;
}

}  // namespace sgspec
