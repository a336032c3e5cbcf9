#pragma once

// Symmetric integer matrices and the division-free Berkowitz characteristic
// polynomial. Matrix-vector products run over sparse rows, which keeps
// charpoly cheap for adjacency matrices.

#include <utility>
#include <vector>

#include "sgspec/bigint.hpp"
#include "sgspec/poly.hpp"

namespace sgspec {

class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, Int(0)) {}

    int order() const { return n_; }
    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    bool is_symmetric() const;

private:
    int n_ = 0;
    std::vector<Int> a_;
};

using SparseRows = std::vector<std::vector<std::pair<int, Int>>>;

// Coefficients of det(xI - A), low-to-high degree, monic of degree n.
IntPoly berkowitz_charpoly(int n, const SparseRows& rows);
IntPoly charpoly(const IntMatrix& m);

Int det(const IntMatrix& m);

// (-1)^(n-1) * a_1: the product of the nonzero eigenvalues when 0 has
// multiplicity exactly one, and 0 when the multiplicity is larger.
Int det_prime(const IntMatrix& m);

}  // namespace sgspec
