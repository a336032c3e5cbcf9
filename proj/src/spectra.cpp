#include "sgspec/spectra.hpp"

#include <stdexcept>

namespace sgspec {

IntMatrix adjacency_matrix(const SignedGraph& g) {
    IntMatrix m(g.order());
    for (const auto& e : g.edges()) {
        m.at(e.u, e.v) = e.sign;
        m.at(e.v, e.u) = e.sign;
    }
    return m;
}

IntPoly charpoly(const SignedGraph& g) {
    SparseRows rows(g.order());
    for (const auto& e : g.edges()) {
        rows[e.u].emplace_back(e.v, Int(e.sign));
        rows[e.v].emplace_back(e.u, Int(e.sign));
    }
    return berkowitz_charpoly(g.order(), rows);
}

SpectrumApprox eigenvalues(const SignedGraph& g, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("eigenvalues: tol must be positive");
    SpectrumApprox s;
    s.tol = tol;
    if (g.order() == 0) return s;
    s.values = isolate_real_roots(charpoly(g), tol);
    if (static_cast<int>(s.values.size()) != g.order())
        throw std::logic_error("eigenvalues: real root count mismatch");
    return s;
}

Int walk_sum(const SignedGraph& g, int k) {
    if (k < 0) throw std::invalid_argument("walk_sum: length must be nonnegative");
    int n = g.order();
    if (k == 0) return n;
    auto adj = g.adjacency();
    Int total = 0;
    std::vector<Int> v(n), w(n);
    for (int s = 0; s < n; ++s) {
        std::fill(v.begin(), v.end(), Int(0));
        v[s] = 1;
        for (int step = 0; step < k; ++step) {
            std::fill(w.begin(), w.end(), Int(0));
            for (int u = 0; u < n; ++u) {
                if (v[u] == 0) continue;
                for (auto [t, sgn] : adj[u]) w[t] += sgn > 0 ? v[u] : -v[u];
            }
            v.swap(w);
        }
        total += v[s];
    }
    return total;
}

Int det_adj(const SignedGraph& g) {
    IntPoly p = charpoly(g);
    Int d = p.coeff(0);
    return (g.order() % 2 == 1) ? Int(-d) : d;
}

Int det_prime(const SignedGraph& g) {
    if (g.order() == 0) return 1;
    IntPoly p = charpoly(g);
    Int a1 = p.coeff(1);
    return (g.order() % 2 == 0) ? Int(-a1) : a1;
}

bool is_cospectral(const SignedGraph& g, const SignedGraph& h) {
    return charpoly(g) == charpoly(h);
}

bool is_simple_spectrum(const IntPoly& phi) {
    return poly_is_squarefree(phi);
}

bool roots_strictly_inside_two(const IntPoly& phi) {
    if (phi.degree() <= 0) return true;
    return count_roots_in(phi, Rat(-2), Rat(2), /*open=*/true) == phi.degree();
}

}  // namespace sgspec
