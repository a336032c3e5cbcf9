#pragma once

// Exact univariate integer polynomials: arithmetic, gcd, square-free
// decomposition, Sturm chains and real-root isolation. Everything here is
// exact; doubles appear only in the final reported root approximations.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgspec/bigint.hpp"

namespace sgspec {

// Coefficients stored low-to-high degree; leading zeros trimmed.
// The zero polynomial has an empty coefficient vector and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly constant(Int v) { return IntPoly(std::vector<Int>{std::move(v)}); }
    static IntPoly identity() { return constant(1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& lead() const { return c_.back(); }
    Int coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Int(0);
    }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_neg(const IntPoly& a);
IntPoly poly_scale(const IntPoly& a, const Int& k);
IntPoly poly_derivative(const IntPoly& a);

// Exact division; nullopt when b does not divide a over the integers.
std::optional<IntPoly> poly_divide_exact(const IntPoly& a, const IntPoly& b);
bool poly_divides(const IntPoly& divisor, const IntPoly& dividend);

Int poly_content(const IntPoly& a);           // gcd of coefficients, >= 0
IntPoly poly_primitive_part(const IntPoly& a);  // content removed, positive lead

// Primitive gcd with positive leading coefficient (content of inputs folded in).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// Yun's algorithm for monic input: returns (factor, multiplicity) pairs with
// multiplicity ascending; the product of factor^multiplicity recovers the input.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f);

// Sign of a at num/den (den > 0), via homogeneous integer evaluation.
int poly_sign_at(const IntPoly& a, const Int& num, const Int& den);
int poly_sign_at(const IntPoly& a, const Rat& x);
bool poly_is_root(const IntPoly& a, const Rat& x);

// Generalized Sturm chain of a square-free polynomial (content-reduced
// pseudo-remainders with positive multipliers).
std::vector<IntPoly> sturm_chain(const IntPoly& f);
int sturm_variations(const std::vector<IntPoly>& chain, const Rat& x);

// Number of real roots in the interval, counted with multiplicity.
// Open intervals exclude roots at the endpoints, closed intervals include them.
int count_roots_in(const IntPoly& f, const Rat& a, const Rat& b, bool open);

// true iff gcd(f, f') is constant.
bool poly_is_squarefree(const IntPoly& f);

// All real roots with multiplicity, ascending, each approximated to within
// +-tol.
std::vector<double> isolate_real_roots(const IntPoly& f, double tol);

// Decimal serialization, low-to-high degree.
std::vector<std::string> poly_to_strings(const IntPoly& f);
IntPoly poly_from_strings(const std::vector<std::string>& coeffs);

}  // namespace sgspec
