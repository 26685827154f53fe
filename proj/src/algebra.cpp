#include "dconn/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace dconn {

Precision& precision() {
    static Precision instance;
    return instance;
}

bool is_finite(Cx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

void ensure_finite(Cx v, const char* what) {
    if (!is_finite(v)) throw numeric_error(std::string("non-finite value in ") + what);
}

double integer_distance(Cx x) {
    return std::abs(x - Cx(std::round(x.real()), 0.0));
}

bool near_integer(Cx x) { return integer_distance(x) < precision().integer_detect(); }

bool ProjVal::is_zero_pair() const {
    return num == Cx(0.0) && den == Cx(0.0);
}

bool ProjVal::is_infinite(double rel) const {
    return std::abs(den) <= rel * std::abs(num);
}

double ProjVal::magnitude() const {
    if (den == Cx(0.0)) return std::numeric_limits<double>::infinity();
    return std::abs(num) / std::abs(den);
}

bool ProjVal::equals(const ProjVal& o, double tol) const {
    double scale = std::max(std::abs(num) * std::abs(o.den), std::abs(o.num) * std::abs(den));
    if (scale == 0.0) scale = 1.0;
    return std::abs(num * o.den - o.num * den) <= tol * scale;
}

ProjVal ProjVal::normalized() const {
    Cx pivot = std::abs(num) >= std::abs(den) ? num : den;
    if (pivot == Cx(0.0)) return *this;
    return {num / pivot, den / pivot};
}

// ---------------------------------------------------------------- Poly

void Poly::trim() {
    double top = max_coeff_mag();
    double cut = top * precision().trim_rel();
    while (!c_.empty() && std::abs(c_.back()) <= cut) c_.pop_back();
}

Poly Poly::from_coeffs(std::vector<Cx> coeffs) {
    Poly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

Poly Poly::monomial(int k, Cx coeff) {
    std::vector<Cx> c(k + 1, Cx(0.0));
    c[k] = coeff;
    return from_coeffs(std::move(c));
}

Poly Poly::from_roots(std::span<const Cx> roots, Cx lead) {
    Poly p(lead);
    for (Cx r : roots) p = p * Poly{-r, Cx(1.0)};
    return p;
}

double Poly::max_coeff_mag() const {
    double m = 0.0;
    for (const Cx& c : c_) m = std::max(m, std::abs(c));
    return m;
}

Cx Poly::operator()(Cx z) const {
    Cx acc(0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

DualCx Poly::operator()(const DualCx& z) const {
    DualCx acc(Cx(0.0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + DualCx(*it);
    return acc;
}

Cx Poly::eval_homogeneous(Cx num, Cx den, int deg_cap) const {
    Cx acc(0.0);
    Cx num_pow(1.0);
    std::vector<Cx> den_pows(deg_cap + 1);
    den_pows[0] = Cx(1.0);
    for (int k = 1; k <= deg_cap; ++k) den_pows[k] = den_pows[k - 1] * den;
    for (int k = 0; k < static_cast<int>(c_.size()); ++k) {
        acc += c_[k] * num_pow * den_pows[deg_cap - k];
        num_pow *= num;
    }
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Cx> r(std::max(c_.size(), o.c_.size()), Cx(0.0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return from_coeffs(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Cx> r(std::max(c_.size(), o.c_.size()), Cx(0.0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return from_coeffs(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Cx> r(c_.size() + o.c_.size() - 1, Cx(0.0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return from_coeffs(std::move(r));
}

Poly Poly::operator*(Cx s) const {
    std::vector<Cx> r(c_);
    for (Cx& c : r) c *= s;
    return from_coeffs(std::move(r));
}

Poly Poly::shifted() const {
    // c'_j = sum_{k>=j} c_k C(k,j)
    const int n = degree();
    if (n < 0) return Poly();
    std::vector<Cx> r(n + 1, Cx(0.0));
    for (int k = 0; k <= n; ++k) {
        double b = 1.0;
        for (int j = 0; j <= k; ++j) {
            r[k - j] += c_[k] * b; // b = C(k, k-j) walking down
            b = b * (k - j) / (j + 1);
        }
    }
    return from_coeffs(std::move(r));
}

Poly Poly::divide_by_linear(Cx root, Cx& remainder) const {
    const int n = degree();
    if (n < 0) {
        remainder = Cx(0.0);
        return Poly();
    }
    std::vector<Cx> q(std::max(n, 0), Cx(0.0));
    Cx carry = c_[n];
    for (int k = n - 1; k >= 0; --k) {
        q[k] = carry;
        carry = c_[k] + carry * root;
    }
    remainder = carry;
    return from_coeffs(std::move(q));
}

std::vector<Cx> Poly::roots() const {
    const int n = degree();
    if (n <= 0) return {};
    if (n == 1) return {-c_[0] / c_[1]};
    if (n == 2) {
        // sign-aware quadratic formula
        Cx a = c_[2], b = c_[1], c0 = c_[0];
        Cx disc = std::sqrt(b * b - 4.0 * a * c0);
        if (std::real(std::conj(b) * disc) < 0.0) disc = -disc;
        Cx q = -0.5 * (b + disc);
        Cx r1 = q / a;
        Cx r2 = (q != Cx(0.0)) ? c0 / q : -b / a - r1;
        return {r1, r2};
    }
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = Cx(1.0);
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -c_[i] / c_[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    std::vector<Cx> out(n);
    for (int i = 0; i < n; ++i) out[i] = es.eigenvalues()[i];
    return out;
}

// ------------------------------------------------------------ Mat2Poly

Mat2Poly Mat2Poly::from_constant(const Mat2& m) {
    return {Poly(m(0, 0)), Poly(m(0, 1)), Poly(m(1, 0)), Poly(m(1, 1))};
}

bool Mat2Poly::is_zero() const {
    for (const Poly& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

int Mat2Poly::max_degree() const {
    int d = -1;
    for (const Poly& p : e_) d = std::max(d, p.degree());
    return d;
}

double Mat2Poly::max_coeff_mag() const {
    double m = 0.0;
    for (const Poly& p : e_) m = std::max(m, p.max_coeff_mag());
    return m;
}

Mat2 Mat2Poly::eval(Cx z) const {
    Mat2 m;
    m << e_[0](z), e_[1](z), e_[2](z), e_[3](z);
    return m;
}

Mat2 Mat2Poly::coeff(int k) const {
    Mat2 m;
    m << e_[0].coeff(k), e_[1].coeff(k), e_[2].coeff(k), e_[3].coeff(k);
    return m;
}

Mat2Poly Mat2Poly::operator+(const Mat2Poly& o) const {
    Mat2Poly r;
    for (int i = 0; i < 4; ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

Mat2Poly Mat2Poly::operator-(const Mat2Poly& o) const {
    Mat2Poly r;
    for (int i = 0; i < 4; ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

Mat2Poly Mat2Poly::operator*(const Mat2Poly& o) const {
    Mat2Poly r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r(i, j) = (*this)(i, 0) * o(0, j) + (*this)(i, 1) * o(1, j);
    return r;
}

Mat2Poly Mat2Poly::operator*(Cx s) const {
    Mat2Poly r;
    for (int i = 0; i < 4; ++i) r.e_[i] = e_[i] * s;
    return r;
}

Mat2Poly Mat2Poly::operator*(const Poly& s) const {
    Mat2Poly r;
    for (int i = 0; i < 4; ++i) r.e_[i] = e_[i] * s;
    return r;
}

Mat2Poly Mat2Poly::shifted() const {
    Mat2Poly r;
    for (int i = 0; i < 4; ++i) r.e_[i] = e_[i].shifted();
    return r;
}

Poly Mat2Poly::det() const {
    return e_[0] * e_[3] - e_[1] * e_[2];
}

Poly mat_det(const Mat2Poly& m) { return m.det(); }

// ---------------------------------------------------------- LaurentTail

double binomial_coeff(int e, int m) {
    double r = 1.0;
    for (int i = 0; i < m; ++i) r *= double(e - i) / double(i + 1);
    return r;
}

Mat2 LaurentTail::at_power(int p) const {
    int k = order - p;
    if (k < 0 || k >= static_cast<int>(coeffs.size())) return Mat2::Zero();
    return coeffs[k];
}

LaurentTail LaurentTail::expand(const Mat2Poly& m, int depth) {
    if (m.is_zero()) throw numeric_error("no leading term");
    LaurentTail t;
    t.order = m.max_degree();
    t.coeffs.resize(depth + 1, Mat2::Zero());
    for (int k = 0; k <= depth; ++k) t.coeffs[k] = m.coeff(t.order - k);
    return t;
}

LaurentTail LaurentTail::constant(const Mat2& m, int depth) {
    LaurentTail t;
    t.order = 0;
    t.coeffs.resize(depth + 1, Mat2::Zero());
    t.coeffs[0] = m;
    return t;
}

LaurentTail laurent_expand(const Mat2Poly& m, int order) {
    if (order < 2) throw config_error("laurent truncation must be >= 2");
    return LaurentTail::expand(m, order);
}

LaurentTail LaurentTail::mul(const LaurentTail& o) const {
    LaurentTail r;
    r.order = order + o.order;
    int depth = std::min(this->depth(), o.depth());
    r.coeffs.assign(depth + 1, Mat2::Zero());
    for (int i = 0; i <= depth; ++i)
        for (int j = 0; i + j <= depth && j <= o.depth(); ++j)
            if (i <= this->depth()) r.coeffs[i + j] += coeffs[i] * o.coeffs[j];
    return r;
}

LaurentTail LaurentTail::add(const LaurentTail& o) const {
    int top = std::max(order, o.order);
    int bottom = std::max(order - depth(), o.order - o.depth());
    LaurentTail r;
    r.order = top;
    r.coeffs.assign(top - bottom + 1, Mat2::Zero());
    for (int p = top; p >= bottom; --p)
        r.coeffs[top - p] = at_power(p) + o.at_power(p);
    return r;
}

LaurentTail LaurentTail::scale(Cx s) const {
    LaurentTail r = *this;
    for (Mat2& c : r.coeffs) c *= s;
    return r;
}

LaurentTail LaurentTail::shifted_arg() const {
    // z^e -> sum_m C(e, m) z^(e-m)
    LaurentTail r;
    r.order = order;
    r.coeffs.assign(coeffs.size(), Mat2::Zero());
    const int d = depth();
    for (int k = 0; k <= d; ++k) {
        int e = order - k;
        for (int m = 0; k + m <= d; ++m) r.coeffs[k + m] += binomial_coeff(e, m) * coeffs[k];
    }
    return r;
}

LaurentTail LaurentTail::inverse() const {
    Mat2 lead = coeffs.at(0);
    if (std::abs(lead.determinant()) < 1e-300) throw numeric_error("tail inverse: singular leading coefficient");
    Mat2 lead_inv = lead.inverse();
    // (L z^n (I + E(z)))^{-1} = (I - E + E^2 - ...) L^{-1} z^{-n}
    const int d = depth();
    LaurentTail r;
    r.order = -order;
    r.coeffs.assign(d + 1, Mat2::Zero());
    r.coeffs[0] = lead_inv;
    for (int k = 1; k <= d; ++k) {
        Mat2 acc = Mat2::Zero();
        for (int j = 1; j <= k; ++j) acc += coeffs[j] * r.coeffs[k - j];
        r.coeffs[k] = -lead_inv * acc;
    }
    return r;
}

LaurentTail LaurentTail::trimmed(double rel) const {
    double top = max_mag();
    size_t lead = 0;
    while (lead + 1 < coeffs.size() && coeffs[lead].cwiseAbs().maxCoeff() <= rel * top) ++lead;
    LaurentTail r;
    r.order = order - static_cast<int>(lead);
    r.coeffs.assign(coeffs.begin() + lead, coeffs.end());
    return r;
}

double LaurentTail::max_mag() const {
    double m = 0.0;
    for (const Mat2& c : coeffs) m = std::max(m, c.cwiseAbs().maxCoeff());
    return m;
}

} // namespace dconn
