#ifndef DCONN_ALGEBRA_HPP
#define DCONN_ALGEBRA_HPP

#include <complex>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "dconn/errors.hpp"

namespace dconn {

using Cx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;

/* Tolerances.  All thresholds scale with a single profile knob so that
 * long-orbit experiments can tighten or loosen them uniformly.
 */
struct Precision {
    double profile = 1.0;
    double trim_rel() const { return 1e-13 * profile; }
    double integer_detect() const { return 1e-9 * profile; }
    double rank_rel() const { return 1e-9 * profile; }
    double division_rel() const { return 1e-9 * profile; }
    double indeterminate_rel() const { return 1e-12 * profile; }
    double boundary_cutoff() const { return 1e-10 / profile; }
};

Precision& precision();

bool is_finite(Cx v);
void ensure_finite(Cx v, const char* what);

// |x - nearest integer| as a complex distance
double integer_distance(Cx x);
bool near_integer(Cx x);

/* Dual numbers a + b*eps with eps^2 = 0; the eps part of f(a + b*eps)
 * is b*f'(a) for f built from the arithmetic below.
 */
struct DualCx {
    Cx value{};
    Cx eps{};

    DualCx() = default;
    DualCx(Cx v) : value(v) {}
    DualCx(Cx v, Cx e) : value(v), eps(e) {}

    DualCx operator+(const DualCx& o) const { return {value + o.value, eps + o.eps}; }
    DualCx operator-(const DualCx& o) const { return {value - o.value, eps - o.eps}; }
    DualCx operator-() const { return {-value, -eps}; }
    DualCx operator*(const DualCx& o) const {
        return {value * o.value, value * o.eps + eps * o.value};
    }
    DualCx operator/(const DualCx& o) const {
        return {value / o.value, (eps * o.value - value * o.eps) / (o.value * o.value)};
    }
};

/* A point of P^1 in homogeneous (num : den) form.  (0,0) is not a point;
 * equality is cross-multiplicative; infinity is (1 : 0).
 */
struct ProjVal {
    Cx num{};
    Cx den{1.0};

    static ProjVal finite(Cx v) { return {v, Cx(1.0)}; }
    static ProjVal infinity() { return {Cx(1.0), Cx(0.0)}; }

    bool is_zero_pair() const;
    bool is_infinite(double rel = 1e-12) const;
    Cx value() const { return num / den; }
    double magnitude() const; // |num/den|, inf-safe
    bool equals(const ProjVal& o, double tol = 1e-10) const;

    // scale so that the larger component becomes exactly 1
    ProjVal normalized() const;
};

/* Dense univariate polynomial over Cx, coefficients ascending in z.
 * Trailing coefficients below the relative trim threshold are dropped;
 * the zero polynomial has degree() == -1.
 */
class Poly {
public:
    Poly() = default;
    Poly(Cx c) : c_{c} { trim(); }
    Poly(double c) : c_{Cx(c)} { trim(); }
    Poly(std::initializer_list<Cx> coeffs) : c_(coeffs) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly variable() { return Poly{Cx(0.0), Cx(1.0)}; }
    static Poly from_coeffs(std::vector<Cx> coeffs);
    static Poly monomial(int k, Cx coeff = Cx(1.0));
    // lead * prod (z - r_i)
    static Poly from_roots(std::span<const Cx> roots, Cx lead = Cx(1.0));

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Cx coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Cx(0.0);
    }
    const std::vector<Cx>& coeffs() const { return c_; }
    double max_coeff_mag() const;

    Cx operator()(Cx z) const;
    DualCx operator()(const DualCx& z) const;
    // sum_k c_k num^k den^(deg_cap - k); deg_cap >= degree()
    Cx eval_homogeneous(Cx num, Cx den, int deg_cap) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(Cx s) const;
    Poly operator-() const { return *this * Cx(-1.0); }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    // z |-> p(z+1), exact binomial re-expansion
    Poly shifted() const;

    // synthetic division by (z - root); returns quotient, sets remainder
    Poly divide_by_linear(Cx root, Cx& remainder) const;

    // all roots (companion matrix; closed forms for degree <= 2)
    std::vector<Cx> roots() const;

private:
    std::vector<Cx> c_;
    void trim();
};

inline Poly operator*(Cx s, const Poly& p) { return p * s; }

// p(z+1), the basic shift used by every gauge identity
inline Poly poly_shift(const Poly& p) { return p.shifted(); }

/* 2x2 matrix of polynomials; carries d-connection and gauge matrices. */
class Mat2Poly {
public:
    Mat2Poly() = default;
    Mat2Poly(Poly m11, Poly m12, Poly m21, Poly m22)
        : e_{std::move(m11), std::move(m12), std::move(m21), std::move(m22)} {}

    static Mat2Poly from_constant(const Mat2& m);
    static Mat2Poly identity() { return from_constant(Mat2::Identity()); }
    static Mat2Poly diagonal(Poly d1, Poly d2) {
        return {std::move(d1), Poly(), Poly(), std::move(d2)};
    }

    const Poly& operator()(int i, int j) const { return e_[2 * i + j]; }
    Poly& operator()(int i, int j) { return e_[2 * i + j]; }

    bool is_zero() const;
    int max_degree() const;
    double max_coeff_mag() const;

    Mat2 eval(Cx z) const;
    Mat2 coeff(int k) const;

    Mat2Poly operator+(const Mat2Poly& o) const;
    Mat2Poly operator-(const Mat2Poly& o) const;
    Mat2Poly operator*(const Mat2Poly& o) const;
    Mat2Poly operator*(Cx s) const;
    Mat2Poly operator*(const Poly& s) const;

    Mat2Poly shifted() const; // entrywise z -> z+1

    Poly det() const;
    Poly trace() const { return (*this)(0, 0) + (*this)(1, 1); }

private:
    Poly e_[4];
};

Poly mat_det(const Mat2Poly& m);

/* Truncated tail of a formal series sum_{i<=n} C_i z^i: the coefficients of
 * z^n .. z^(n-N) with N = truncation depth.  Depth >= 2 everywhere here,
 * since formal types live in the top two orders.
 */
struct LaurentTail {
    int order = 0;
    std::vector<Mat2> coeffs; // coeffs[k] multiplies z^(order-k)

    int depth() const { return static_cast<int>(coeffs.size()) - 1; }
    Mat2 at_power(int p) const; // zero outside stored range

    static LaurentTail expand(const Mat2Poly& m, int depth);
    static LaurentTail constant(const Mat2& m, int depth);

    LaurentTail mul(const LaurentTail& o) const;
    LaurentTail add(const LaurentTail& o) const;
    LaurentTail scale(Cx s) const;
    // argument substitution z -> z+1, re-expanded at infinity
    LaurentTail shifted_arg() const;
    // series inverse; requires invertible top coefficient
    LaurentTail inverse() const;
    // drop leading all-zero coefficients (order decreases)
    LaurentTail trimmed(double rel = 1e-300) const;

    double max_mag() const;
};

LaurentTail laurent_expand(const Mat2Poly& m, int order);

// generalized binomial coefficient e*(e-1)*...*(e-m+1)/m!
double binomial_coeff(int e, int m);

} // namespace dconn

#endif
