#include "sgspec/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sgspec {

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.coeffs().size(), b.coeffs().size()), Int(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
    for (size_t i = 0; i < b.coeffs().size(); ++i) c[i] += b.coeffs()[i];
    return IntPoly(std::move(c));
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> c(std::max(a.coeffs().size(), b.coeffs().size()), Int(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) c[i] += a.coeffs()[i];
    for (size_t i = 0; i < b.coeffs().size(); ++i) c[i] -= b.coeffs()[i];
    return IntPoly(std::move(c));
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> c(a.coeffs().size() + b.coeffs().size() - 1, Int(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    return IntPoly(std::move(c));
}

IntPoly poly_neg(const IntPoly& a) {
    std::vector<Int> c(a.coeffs());
    for (auto& x : c) x = -x;
    return IntPoly(std::move(c));
}

IntPoly poly_scale(const IntPoly& a, const Int& k) {
    if (k == 0) return IntPoly();
    std::vector<Int> c(a.coeffs());
    for (auto& x : c) x *= k;
    return IntPoly(std::move(c));
}

IntPoly poly_derivative(const IntPoly& a) {
    if (a.degree() <= 0) return IntPoly();
    std::vector<Int> c(a.coeffs().size() - 1);
    for (size_t i = 1; i < a.coeffs().size(); ++i) c[i - 1] = a.coeffs()[i] * Int(static_cast<long>(i));
    return IntPoly(std::move(c));
}

std::optional<IntPoly> poly_divide_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<Int> rem(a.coeffs());
    std::vector<Int> quot(a.degree() - b.degree() + 1, Int(0));
    const auto& bc = b.coeffs();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Int& top = rem[k + b.degree()];
        if (top == 0) continue;
        Int q;
        mpz_fdiv_qr(q.get_mpz_t(), top.get_mpz_t(), top.get_mpz_t(), b.lead().get_mpz_t());
        if (top != 0) return std::nullopt;  // leading coefficient does not divide
        quot[k] = q;
        for (int i = 0; i < b.degree(); ++i) rem[k + i] -= q * bc[i];
    }
    for (int i = 0; i < b.degree(); ++i)
        if (rem[i] != 0) return std::nullopt;
    return IntPoly(std::move(quot));
}

bool poly_divides(const IntPoly& divisor, const IntPoly& dividend) {
    return poly_divide_exact(dividend, divisor).has_value();
}

Int poly_content(const IntPoly& a) {
    Int g = 0;
    for (const auto& c : a.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly poly_primitive_part(const IntPoly& a) {
    if (a.is_zero()) return a;
    Int g = poly_content(a);
    if (sign_of(a.lead()) < 0) g = -g;
    std::vector<Int> c(a.coeffs());
    for (auto& x : c) x /= g;
    return IntPoly(std::move(c));
}

namespace {

// Pseudo-remainder of a by b with an overall positive multiplier, so the
// result is a positive rational multiple of the true remainder.
IntPoly pseudo_rem_pos(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> r(a.coeffs());
    const auto& bc = b.coeffs();
    const Int& L = b.lead();
    int mult_sign = 1;
    auto deg = [&r]() { return static_cast<int>(r.size()) - 1; };
    auto trim = [&r]() { while (!r.empty() && r.back() == 0) r.pop_back(); };
    trim();
    while (!r.empty() && deg() >= b.degree()) {
        Int top = r.back();
        int shift = deg() - b.degree();
        // r = L*r - top * x^shift * b
        for (auto& x : r) x *= L;
        if (sign_of(L) < 0) mult_sign = -mult_sign;
        for (int i = 0; i <= b.degree(); ++i) r[shift + i] -= top * bc[i];
        trim();
    }
    IntPoly out{std::vector<Int>(std::move(r))};
    if (mult_sign < 0) out = poly_neg(out);
    return out;
}

IntPoly strip_content(const IntPoly& a) {
    if (a.is_zero()) return a;
    Int g = poly_content(a);
    std::vector<Int> c(a.coeffs());
    for (auto& x : c) x /= g;  // g > 0: sign preserved
    return IntPoly(std::move(c));
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return poly_primitive_part(b);
    if (b.is_zero()) return poly_primitive_part(a);
    Int cont;
    mpz_gcd(cont.get_mpz_t(), poly_content(a).get_mpz_t(), poly_content(b).get_mpz_t());
    IntPoly f = poly_primitive_part(a);
    IntPoly g = poly_primitive_part(b);
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        IntPoly r = strip_content(pseudo_rem_pos(f, g));
        f = std::move(g);
        g = std::move(r);
    }
    return poly_scale(poly_primitive_part(f), cont);
}

bool poly_is_squarefree(const IntPoly& f) {
    if (f.degree() <= 1) return true;
    return poly_gcd(f, poly_derivative(f)).degree() == 0;
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
    if (f.degree() < 0) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    if (abs_int(f.lead()) != 1)
        throw std::invalid_argument("squarefree_decomposition: expects monic input");
    std::vector<std::pair<IntPoly, int>> out;
    if (f.degree() == 0) return out;
    IntPoly fp = poly_derivative(f);
    IntPoly g = poly_gcd(f, fp);
    if (g.degree() == 0) {
        out.emplace_back(poly_primitive_part(f), 1);
        return out;
    }
    IntPoly w = *poly_divide_exact(f, g);
    IntPoly y = *poly_divide_exact(fp, g);
    IntPoly z = poly_sub(y, poly_derivative(w));
    int i = 1;
    while (w.degree() > 0) {
        IntPoly h = poly_gcd(w, z);
        if (h.degree() > 0) out.emplace_back(h, i);
        w = *poly_divide_exact(w, h);
        y = *poly_divide_exact(z, h);
        z = poly_sub(y, poly_derivative(w));
        ++i;
    }
    return out;
}

int poly_sign_at(const IntPoly& a, const Int& num, const Int& den) {
    if (a.is_zero()) return 0;
    Int acc = 0, qp = 1;
    for (int i = a.degree(); i >= 0; --i) {
        acc = acc * num + a.coeffs()[i] * qp;
        if (i > 0) qp *= den;
    }
    return sign_of(acc);
}

int poly_sign_at(const IntPoly& a, const Rat& x) {
    return poly_sign_at(a, Int(x.get_num()), Int(x.get_den()));
}

bool poly_is_root(const IntPoly& a, const Rat& x) { return poly_sign_at(a, x) == 0; }

std::vector<IntPoly> sturm_chain(const IntPoly& f) {
    std::vector<IntPoly> chain;
    chain.push_back(f);
    IntPoly d = poly_derivative(f);
    if (d.is_zero()) return chain;
    chain.push_back(strip_content(d));
    while (chain.back().degree() > 0) {
        IntPoly r = pseudo_rem_pos(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        chain.push_back(strip_content(poly_neg(r)));
    }
    return chain;
}

int sturm_variations(const std::vector<IntPoly>& chain, const Rat& x) {
    int count = 0, prev = 0;
    for (const auto& p : chain) {
        int s = poly_sign_at(p, x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

namespace {

// Distinct-root count of a square-free polynomial in (a, b], endpoints not roots.
int sturm_count_halfopen(const std::vector<IntPoly>& chain, const Rat& a, const Rat& b) {
    return sturm_variations(chain, a) - sturm_variations(chain, b);
}

// Distinct roots of square-free monic f strictly inside (a, b).
int distinct_roots_open(IntPoly f, const Rat& a, const Rat& b) {
    // Monic integer polynomials have only integer rational roots, so endpoint
    // roots can be divided out exactly.
    auto deflate_at = [&f](const Rat& x) {
        while (!f.is_zero() && f.degree() > 0 && poly_is_root(f, x)) {
            // x integral: divide by (den*x' - num) = (X - x) with den == 1
            IntPoly lin(std::vector<Int>{Int(-x.get_num()), Int(x.get_den())});
            f = *poly_divide_exact(f, lin);
        }
    };
    deflate_at(a);
    deflate_at(b);
    if (f.degree() <= 0) return 0;
    auto chain = sturm_chain(f);
    return sturm_count_halfopen(chain, a, b);
}

}  // namespace

int count_roots_in(const IntPoly& f, const Rat& a, const Rat& b, bool open) {
    if (f.is_zero()) throw std::invalid_argument("count_roots_in: zero polynomial");
    if (!(a < b)) throw std::invalid_argument("count_roots_in: requires a < b");
    if (f.degree() == 0) return 0;
    int total = 0;
    for (const auto& [factor, mult] : squarefree_decomposition(f)) {
        int n = distinct_roots_open(factor, a, b);
        if (!open) {
            n += poly_is_root(factor, a) ? 1 : 0;
            n += poly_is_root(factor, b) ? 1 : 0;
        }
        total += mult * n;
    }
    return total;
}

namespace {

Rat cauchy_bound(const IntPoly& f) {
    Int mx = 0;
    for (int i = 0; i < f.degree(); ++i) mx = std::max(mx, abs_int(f.coeffs()[i]));
    Int lead = abs_int(f.lead());
    Int b = mx / lead + 2;  // |root| < 1 + max|c_i|/|lead| <= b
    return Rat(b);
}

// One simple root of f in (lo, hi) with a sign change; bisect to width <= tol.
double refine_bisect(const IntPoly& f, Rat lo, Rat hi, const Rat& tol) {
    int slo = poly_sign_at(f, lo);
    while (hi - lo > tol) {
        Rat mid = (lo + hi) / 2;
        int sm = poly_sign_at(f, mid);
        if (sm == 0) return mid.get_d();
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return (Rat((lo + hi) / 2)).get_d();
}

struct Interval {
    Rat lo, hi;
    int count;
};

// Roots of a square-free polynomial, ascending.
std::vector<double> isolate_squarefree(const IntPoly& f, const Rat& tol) {
    std::vector<double> roots;
    if (f.degree() <= 0) return roots;
    if (f.degree() == 1) {
        Rat r(-f.coeffs()[0], f.coeffs()[1]);
        r.canonicalize();
        roots.push_back(r.get_d());
        return roots;
    }
    auto chain = sturm_chain(f);
    Rat bound = cauchy_bound(f);
    std::vector<Interval> stack;
    {
        Rat lo = -bound, hi = bound;
        stack.push_back({lo, hi, sturm_count_halfopen(chain, lo, hi)});
    }
    while (!stack.empty()) {
        Interval iv = stack.back();
        stack.pop_back();
        if (iv.count == 0) continue;
        if (iv.count == 1) {
            roots.push_back(refine_bisect(f, iv.lo, iv.hi, tol));
            continue;
        }
        Rat mid = (iv.lo + iv.hi) / 2;
        if (poly_is_root(f, mid)) {
            // Shrink a non-root collar around the exact root mid.
            Rat mlo = (iv.lo + mid) / 2, mhi = (mid + iv.hi) / 2;
            while (poly_is_root(f, mlo)) mlo = (mlo + mid) / 2;
            while (poly_is_root(f, mhi)) mhi = (mid + mhi) / 2;
            while (sturm_count_halfopen(chain, mlo, mhi) > 1) {
                mlo = (mlo + mid) / 2;
                mhi = (mid + mhi) / 2;
            }
            roots.push_back(mid.get_d());
            stack.push_back({iv.lo, mlo, sturm_count_halfopen(chain, iv.lo, mlo)});
            stack.push_back({mhi, iv.hi, sturm_count_halfopen(chain, mhi, iv.hi)});
        } else {
            int left = sturm_count_halfopen(chain, iv.lo, mid);
            stack.push_back({iv.lo, mid, left});
            stack.push_back({mid, iv.hi, iv.count - left});
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

std::vector<double> isolate_real_roots(const IntPoly& f, double tol) {
    if (f.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    if (!(tol > 0)) throw std::invalid_argument("isolate_real_roots: tol must be positive");
    std::vector<double> out;
    if (f.degree() == 0) return out;
    Rat rtol(tol);
    for (const auto& [factor, mult] : squarefree_decomposition(f)) {
        for (double r : isolate_squarefree(factor, rtol))
            for (int i = 0; i < mult; ++i) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> poly_to_strings(const IntPoly& f) {
    std::vector<std::string> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(c.get_str());
    return out;
}

IntPoly poly_from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Int> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.emplace_back(s);
    return IntPoly(std::move(c));
}

}  // namespace sgspec
