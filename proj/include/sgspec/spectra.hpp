#pragma once

// Exact spectral functionals of signed graphs: characteristic polynomials,
// Sturm-based root location, walk sums and determinant functionals. All
// decisions are exact; tol only controls the width of reported approximations.

#include <vector>

#include "sgspec/graph.hpp"
#include "sgspec/matrix.hpp"
#include "sgspec/poly.hpp"

namespace sgspec {

struct SpectrumApprox {
    std::vector<double> values;  // ascending, with multiplicity
    double tol = 0.0;
};

constexpr double kDefaultTol = 1e-10;

IntMatrix adjacency_matrix(const SignedGraph& g);

IntPoly charpoly(const SignedGraph& g);

SpectrumApprox eigenvalues(const SignedGraph& g, double tol = kDefaultTol);

// trace(A^k), the signed closed-walk count of length k.
Int walk_sum(const SignedGraph& g, int k);

Int det_adj(const SignedGraph& g);

// Product of the nonzero eigenvalues when 0 has multiplicity at most one
// ((-1)^(n-1) a_1); zero when the kernel is larger.
Int det_prime(const SignedGraph& g);

bool is_cospectral(const SignedGraph& g, const SignedGraph& h);

bool is_simple_spectrum(const IntPoly& phi);

// All eigenvalues strictly inside (-2, 2)?
bool roots_strictly_inside_two(const IntPoly& phi);

}  // namespace sgspec
