#include "dconn/connection.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dconn {

const char* chart_name(Chart c) {
    switch (c) {
        case Chart::interior: return "interior";
        case Chart::boundary: return "boundary";
        case Chart::exceptional: return "exceptional";
    }
    return "?";
}

// ------------------------------------------------------- chart flags

PQPoint classify_point(const Theta& theta, ProjVal q, ProjVal p) {
    PQPoint pt{q.normalized(), p.normalized(), Chart::interior};
    const double cut = precision().boundary_cutoff();

    const bool q_inf = pt.q.magnitude() > 1.0 / cut;
    const bool p_inf = pt.p.magnitude() > 1.0 / cut;
    const bool p_zero = pt.p.magnitude() < cut;

    auto near = [&](ProjVal v, Cx target) {
        return !v.is_infinite(cut) && std::abs(v.value() - target) < 1e-9 * std::max(1.0, std::abs(target));
    };

    // blow-up centers of the compactified surface
    if (theta.is_v()) {
        if ((near(pt.q, theta.a[0]) || near(pt.q, theta.a[1])) && p_zero)
            pt.chart = Chart::exceptional;
        else if ((near(pt.q, theta.a[2]) || near(pt.q, theta.a[3])) && p_inf)
            pt.chart = Chart::exceptional;
        else if (q_inf && (near(pt.p, theta.rho[0]) || near(pt.p, theta.rho[1])))
            pt.chart = Chart::exceptional;
    } else {
        if ((near(pt.q, theta.a[0]) || near(pt.q, theta.a[1]) || near(pt.q, theta.a[2])) && p_zero)
            pt.chart = Chart::exceptional;
        else if ((near(pt.q, theta.a[3]) || near(pt.q, theta.a[4]) || near(pt.q, theta.a[5])) && p_inf)
            pt.chart = Chart::exceptional;
        else if (q_inf && near(pt.p, theta.rho[0]))
            pt.chart = Chart::exceptional;
    }
    if (pt.chart == Chart::interior && (q_inf || p_inf || p_zero)) pt.chart = Chart::boundary;
    return pt;
}

// --------------------------------------------------- validate_matrix

namespace {

double coeff_scale(const Poly& a, const Poly& b) {
    return std::max({a.max_coeff_mag(), b.max_coeff_mag(), 1.0});
}

void check_poly_equal(ValidityReport& rep, const Poly& got, const Poly& want, const char* what) {
    double tol = precision().rank_rel() * coeff_scale(got, want);
    Poly diff = got - want;
    for (int k = 0; k <= std::max(got.degree(), want.degree()); ++k)
        if (std::abs(diff.coeff(k)) > tol) {
            std::ostringstream os;
            os << what << ": coefficient of z^" << k << " off by " << std::abs(diff.coeff(k));
            rep.fail(os.str());
            return;
        }
}

// polynomial part of p(z)/z (drops the z^-1 coefficient)
Poly down_shift(const Poly& p) {
    std::vector<Cx> c;
    for (int k = 1; k <= p.degree(); ++k) c.push_back(p.coeff(k));
    return Poly::from_coeffs(std::move(c));
}

} // namespace

ValidityReport validate_matrix(const Mat2Poly& mat, const Theta& theta, bool waive_theta) {
    ValidityReport rep;
    const Poly& a11 = mat(0, 0);
    const Poly& a12 = mat(0, 1);
    const Poly& a21 = mat(1, 0);
    const Poly& a22 = mat(1, 1);

    if (a21.is_zero()) rep.fail("reducible: a21 identically zero");

    Poly want_det = Poly::from_roots(theta.a, theta.rho[0] * theta.rho[1]);

    if (theta.is_v()) {
        if (a11.degree() > 2) rep.fail("degree profile: deg a11 > 2");
        if (a22.degree() > 2) rep.fail("degree profile: deg a22 > 2");
        if (a21.degree() > 1) rep.fail("degree profile: deg a21 > 1");
        if (a12.degree() > 3) rep.fail("degree profile: deg a12 > 3");

        check_poly_equal(rep, mat.det(), want_det, "determinant condition");

        Cx rho_sum = theta.rho[0] + theta.rho[1];
        Cx d_sum = theta.d[0] * theta.rho[0] + theta.d[1] * theta.rho[1];
        double tscale = std::max({std::abs(rho_sum), std::abs(d_sum), mat.max_coeff_mag(), 1.0});
        double tol = precision().rank_rel() * tscale;
        if (std::abs(a11.coeff(2) + a22.coeff(2) - rho_sum) > tol)
            rep.fail("trace condition: [z^2] a11 + [z^2] a22 != rho1 + rho2");
        if (std::abs(a11.coeff(1) + a22.coeff(1) + a22.coeff(2) - d_sum) > tol)
            rep.fail("trace condition: [z^1] a11 + [z^1] a22 + [z^2] a22 != d1 rho1 + d2 rho2");
    } else {
        const Cx rho = theta.rho[0];
        Poly rz3 = Poly::monomial(3, rho);
        if ((a11 - rz3).degree() > 2) rep.fail("degree profile: deg (a11 - rho z^3) > 2");
        if ((a22 - rz3).degree() > 2) rep.fail("degree profile: deg (a22 - rho z^3) > 2");
        if (a21.degree() > 1) rep.fail("degree profile: deg a21 > 1");
        if (a12.degree() > 3) rep.fail("degree profile: deg a12 > 3");

        check_poly_equal(rep, mat.det(), want_det, "determinant condition");

        // [z^4] of (a11 - rho z^3)(a22 (1 + 1/z) - rho z^3) - a12 a21;
        // the discarded z^-1 piece of a22/z cannot reach z^4
        Poly left = (a11 - rz3) * ((a22 - rz3) + down_shift(a22)) - a12 * a21;
        Cx got = left.coeff(4);
        Cx want = theta.d[0] * theta.d[1] * rho * rho;
        double tol = precision().rank_rel() *
                     std::max({std::abs(want), mat.max_coeff_mag(), 1.0});
        if (std::abs(got - want) > tol) rep.fail("quartic condition: [z^4] != d1 d2 rho^2");
    }

    if (!waive_theta) {
        ValidityReport trep = validate_theta(theta);
        for (const auto& f : trep.failures) rep.fail("theta: " + f);
    }
    return rep;
}

// ------------------------------------------------------- coordinates

namespace {

// factors (q - a_i) entering the p-denominator, as indices into theta.a
std::pair<int, int> denom_range(const Theta& theta) {
    return theta.is_v() ? std::pair{2, 4} : std::pair{3, 6};
}

} // namespace

PQPoint coordinates_of(const Mat2Poly& mat, const Theta& theta) {
    const Poly& a21 = mat(1, 0);
    if (a21.is_zero()) throw singular_error("reducible: a21 identically zero");
    if (a21.degree() > 1) throw config_error("coordinates: a21 degree exceeds 1");

    ProjVal q{-a21.coeff(0), a21.coeff(1)};
    q = q.normalized();

    const int cap = theta.is_v() ? 2 : 3;
    Cx ptilde_num = mat(0, 0).eval_homogeneous(q.num, q.den, cap);
    auto [lo, hi] = denom_range(theta);
    Cx den_num(1.0);
    for (int i = lo; i < hi; ++i) den_num *= q.num - theta.a[i] * q.den;
    // both ptilde and the denominator product carry den^cap; the ratio drops it
    ProjVal p{ptilde_num, den_num};

    return classify_point(theta, q, p);
}

PQPoint coordinates_of(const DConn& conn) { return coordinates_of(conn.mat, conn.theta); }

Cx ptilde_of(const Mat2Poly& mat, const Theta& theta) {
    const Poly& a21 = mat(1, 0);
    if (a21.is_zero()) throw singular_error("reducible: a21 identically zero");
    ProjVal q{-a21.coeff(0), a21.coeff(1)};
    const int cap = theta.is_v() ? 2 : 3;
    if (q.is_infinite()) return mat(0, 0).coeff(cap);
    return mat(0, 0)(q.value());
}

// -------------------------------------------------- from_coordinates

DConn from_coordinates(const Theta& theta, Cx q, Cx p) {
    ensure_finite(q, "from_coordinates q");
    ensure_finite(p, "from_coordinates p");

    auto [lo, hi] = denom_range(theta);
    Cx factor(1.0);
    for (int i = lo; i < hi; ++i) factor *= q - theta.a[i];
    Cx ptilde = p * factor;
    double pscale = std::max({1.0, std::abs(p), std::abs(factor)});
    if (std::abs(ptilde) <= precision().indeterminate_rel() * pscale)
        throw singular_error("degenerate chart point");

    Poly want_det = Poly::from_roots(theta.a, theta.rho[0] * theta.rho[1]);

    if (theta.is_v()) {
        const Cx r1 = theta.rho[0], r2 = theta.rho[1];
        Cx c2 = r1 + r2;
        Cx c1 = theta.d[0] * r1 + theta.d[1] * r2 - c2;
        Cx a22_at_q = want_det(q) / ptilde;
        Cx c0 = a22_at_q - c2 * q * q - c1 * q;
        Poly a22{c0, c1, c2};
        Poly a11(ptilde);
        Poly a21{-q, Cx(1.0)};

        Poly numerator = a11 * a22 - want_det;
        Cx rem;
        Poly a12 = numerator.divide_by_linear(q, rem);
        if (std::abs(rem) > precision().division_rel() * std::max(1.0, numerator.max_coeff_mag()))
            throw numeric_error("singular reconstruction: division residual");
        return {Mat2Poly(a11, a12, a21, a22), theta};
    }

    const Cx rho = theta.rho[0];
    Poly a11 = Poly::monomial(3, rho) + Poly(ptilde - rho * q * q * q);
    Poly a21{-q, Cx(1.0)};
    Cx quartic_target = theta.d[0] * theta.d[1] * rho * rho;

    // unknowns: a22 - rho z^3 (3 coefficients), a12 (4 coefficients)
    auto equations = [&](const Eigen::Matrix<Cx, 7, 1>& u) {
        Poly a22 = Poly::monomial(3, rho) + Poly{u[2], u[1], u[0]};
        Poly a12 = Poly::from_coeffs({u[6], u[5], u[4], u[3]});
        Poly det = a11 * a22 - a12 * a21;
        Poly quart = (a11 - Poly::monomial(3, rho)) * ((a22 - Poly::monomial(3, rho)) + down_shift(a22)) -
                     a12 * a21;
        Eigen::Matrix<Cx, 7, 1> r;
        for (int k = 0; k < 6; ++k) r[k] = det.coeff(k) - want_det.coeff(k);
        r[6] = quart.coeff(4) - quartic_target;
        return r;
    };

    Eigen::Matrix<Cx, 7, 1> zero = Eigen::Matrix<Cx, 7, 1>::Zero();
    Eigen::Matrix<Cx, 7, 1> base = equations(zero);
    Eigen::Matrix<Cx, 7, 7> m;
    for (int j = 0; j < 7; ++j) {
        Eigen::Matrix<Cx, 7, 1> probe = zero;
        probe[j] = Cx(1.0);
        m.col(j) = equations(probe) - base;
    }
    Eigen::FullPivLU<Eigen::Matrix<Cx, 7, 7>> lu(m);
    lu.setThreshold(precision().rank_rel());
    if (lu.rank() < 7) throw numeric_error("singular reconstruction: rank-deficient system");
    Eigen::Matrix<Cx, 7, 1> sol = lu.solve(-base);
    double resid = (m * sol + base).cwiseAbs().maxCoeff();
    if (resid > 1e-8 * std::max(1.0, base.cwiseAbs().maxCoeff()))
        throw numeric_error("singular reconstruction: solve residual");

    Poly a22 = Poly::monomial(3, rho) + Poly{sol[2], sol[1], sol[0]};
    Poly a12 = Poly::from_coeffs({sol[6], sol[5], sol[4], sol[3]});
    return {Mat2Poly(a11, a12, a21, a22), theta};
}

// ------------------------------------------------------ formal type

namespace {

bool arg_abs_less(Cx x, Cx y) {
    double ax = std::arg(x), ay = std::arg(y);
    if (std::abs(ax - ay) > 1e-12) return ax < ay;
    return std::abs(x) < std::abs(y);
}

LaurentTail gauge_to_tail(const Mat2& g, int depth) { return LaurentTail::constant(g, depth); }

struct ExtractState {
    LaurentTail a;            // conjugated input
    std::vector<Mat2> r;      // gauge series coefficients, r[0] = I
    Mat2 b_top, b_next;       // diagonal normal form coefficients
    int n = 0;

    LaurentTail r_tail(int depth) const {
        LaurentTail t;
        t.order = 0;
        t.coeffs.assign(depth + 1, Mat2::Zero());
        for (int k = 0; k <= depth && k < static_cast<int>(r.size()); ++k) t.coeffs[k] = r[k];
        return t;
    }

    LaurentTail b_tail(int depth) const {
        LaurentTail t;
        t.order = n;
        t.coeffs.assign(depth + 1, Mat2::Zero());
        t.coeffs[0] = b_top;
        if (depth >= 1) t.coeffs[1] = b_next;
        return t;
    }

    // coefficient of z^(n-k) in A R - R(z+1) B
    Mat2 defect(int k, int depth) const {
        LaurentTail rt = r_tail(depth);
        LaurentTail lhs = a.mul(rt);
        LaurentTail rhs = rt.shifted_arg().mul(b_tail(depth));
        return lhs.at_power(n - k) - rhs.at_power(n - k);
    }
};

struct UnknownRef {
    bool in_b; // else in r[level]
    int level;
    int i, j;
};

void solve_order(ExtractState& st, int k, const std::vector<UnknownRef>& unknowns, int depth) {
    auto entry = [&](const UnknownRef& u) -> Cx& {
        if (u.in_b) return st.b_next(u.i, u.j);
        return st.r[u.level](u.i, u.j);
    };

    Eigen::Vector4cd base;
    {
        Mat2 d0 = st.defect(k, depth);
        base << d0(0, 0), d0(0, 1), d0(1, 0), d0(1, 1);
    }
    const int m = static_cast<int>(unknowns.size());
    Eigen::MatrixXcd mat(4, m);
    for (int j = 0; j < m; ++j) {
        Cx saved = entry(unknowns[j]);
        entry(unknowns[j]) = saved + Cx(1.0);
        Mat2 d1 = st.defect(k, depth);
        entry(unknowns[j]) = saved;
        Eigen::Vector4cd col;
        col << d1(0, 0), d1(0, 1), d1(1, 0), d1(1, 1);
        mat.col(j) = col - base;
    }

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(mat, Eigen::ComputeThinU | Eigen::ComputeThinV);
    double smax = svd.singularValues()[0];
    double smin = svd.singularValues()[svd.singularValues().size() - 1];
    if (smax <= 0.0 || smin < precision().rank_rel() * smax)
        throw numeric_error("resonant at order " + std::to_string(k));
    Eigen::VectorXcd sol = svd.solve(-base);
    for (int j = 0; j < m; ++j) entry(unknowns[j]) += sol[j];

    Mat2 check = st.defect(k, depth);
    double scale = std::max(st.a.max_mag(), 1.0);
    if (check.cwiseAbs().maxCoeff() > 1e-7 * scale)
        throw numeric_error("resonant at order " + std::to_string(k));
}

FormalType extract(LaurentTail tail, int truncation, int shears_left);

FormalType extract_regular(const LaurentTail& tail, int truncation, const Mat2& lead,
                           const Eigen::ComplexEigenSolver<Mat2>& es) {
    // order the two branches by argument, then modulus, of rho
    int first = arg_abs_less(es.eigenvalues()[0], es.eigenvalues()[1]) ? 0 : 1;
    Mat2 v;
    v.col(0) = es.eigenvectors().col(first);
    v.col(1) = es.eigenvectors().col(1 - first);

    const int depth = tail.depth();
    Mat2 vinv = v.inverse();
    LaurentTail conj = gauge_to_tail(vinv, depth).mul(tail).mul(gauge_to_tail(v, depth));

    ExtractState st;
    st.a = conj;
    st.n = tail.order;
    st.r.assign(truncation + 1, Mat2::Zero());
    st.r[0] = Mat2::Identity();
    st.b_top = Mat2::Zero();
    st.b_top(0, 0) = es.eigenvalues()[first];
    st.b_top(1, 1) = es.eigenvalues()[1 - first];
    st.b_next = Mat2::Zero();

    for (int k = 1; k <= truncation; ++k) {
        std::vector<UnknownRef> unknowns;
        unknowns.push_back({false, k, 0, 1});
        unknowns.push_back({false, k, 1, 0});
        if (k == 1) {
            unknowns.push_back({true, 0, 0, 0});
            unknowns.push_back({true, 0, 1, 1});
        } else {
            unknowns.push_back({false, k - 1, 0, 0});
            unknowns.push_back({false, k - 1, 1, 1});
        }
        solve_order(st, k, unknowns, depth);
    }

    FormalType ft;
    ft.n = st.n;
    ft.rho = {st.b_top(0, 0), st.b_top(1, 1)};
    ft.d = {st.b_next(0, 0) / ft.rho[0], st.b_next(1, 1) / ft.rho[1]};
    ft.gauge = gauge_to_tail(v, truncation).mul(st.r_tail(truncation));
    return ft;
}

FormalType extract_scalar_lead(const LaurentTail& tail, int truncation, Cx rho) {
    const int depth = tail.depth();
    Mat2 next = tail.at_power(tail.order - 1);
    Eigen::ComplexEigenSolver<Mat2> es(next);
    Cx e0 = es.eigenvalues()[0], e1 = es.eigenvalues()[1];
    double escale = std::max({std::abs(e0), std::abs(e1), 1e-30});
    if (std::abs(e0 - e1) < 1e-7 * escale)
        throw numeric_error("no leading structure: subleading eigenvalues coincide");

    int first = arg_abs_less(e0 / rho, e1 / rho) ? 0 : 1;
    Mat2 v;
    v.col(0) = es.eigenvectors().col(first);
    v.col(1) = es.eigenvectors().col(1 - first);
    Mat2 vinv = v.inverse();
    LaurentTail conj = gauge_to_tail(vinv, depth).mul(tail).mul(gauge_to_tail(v, depth));

    ExtractState st;
    st.a = conj;
    st.n = tail.order;
    st.r.assign(truncation + 1, Mat2::Zero());
    st.r[0] = Mat2::Identity();
    st.b_top = rho * Mat2::Identity();
    st.b_next = Mat2::Zero();

    for (int k = 1; k <= truncation + 1; ++k) {
        std::vector<UnknownRef> unknowns;
        if (k == 1) {
            unknowns.push_back({true, 0, 0, 0});
            unknowns.push_back({true, 0, 1, 1});
        } else {
            unknowns.push_back({false, k - 1, 0, 0});
            unknowns.push_back({false, k - 1, 0, 1});
            unknowns.push_back({false, k - 1, 1, 0});
            unknowns.push_back({false, k - 1, 1, 1});
        }
        solve_order(st, k, unknowns, depth);
    }

    FormalType ft;
    ft.n = st.n;
    ft.rho = {rho, rho};
    ft.d = {st.b_next(0, 0) / rho, st.b_next(1, 1) / rho};
    ft.gauge = gauge_to_tail(v, truncation).mul(st.r_tail(truncation));
    return ft;
}

// diag(z,1) with its shift inverse diag(1/(z+1),1), as tails
LaurentTail shear_tail(int depth) {
    LaurentTail t;
    t.order = 1;
    t.coeffs.assign(depth + 1, Mat2::Zero());
    t.coeffs[0] << Cx(1.0), Cx(0.0), Cx(0.0), Cx(0.0);
    if (depth >= 1) t.coeffs[1] << Cx(0.0), Cx(0.0), Cx(0.0), Cx(1.0);
    return t;
}

LaurentTail shear_shift_inverse_tail(int depth) {
    // diag(1/(z+1), 1) = diag(z^-1 - z^-2 + z^-3 - ..., 1)
    LaurentTail t;
    t.order = 0;
    t.coeffs.assign(depth + 1, Mat2::Zero());
    t.coeffs[0] << Cx(0.0), Cx(0.0), Cx(0.0), Cx(1.0);
    double sign = 1.0;
    for (int k = 1; k <= depth; ++k) {
        t.coeffs[k] << Cx(sign), Cx(0.0), Cx(0.0), Cx(0.0);
        sign = -sign;
    }
    return t;
}

FormalType extract(LaurentTail tail, int truncation, int shears_left) {
    tail = tail.trimmed(1e-13);
    Mat2 lead = tail.coeffs.at(0);
    double lscale = lead.cwiseAbs().maxCoeff();
    if (lscale <= 0.0) throw numeric_error("no leading term");

    Eigen::ComplexEigenSolver<Mat2> es(lead);
    Cx l0 = es.eigenvalues()[0], l1 = es.eigenvalues()[1];
    bool distinct = std::abs(l0 - l1) > 1e-7 * lscale;
    bool nonzero = std::min(std::abs(l0), std::abs(l1)) > 1e-10 * lscale;

    if (distinct && nonzero) return extract_regular(tail, truncation, lead, es);

    Cx half_trace = 0.5 * lead.trace();
    Mat2 nil = lead - half_trace * Mat2::Identity();
    bool scalar = nil.cwiseAbs().maxCoeff() <= 1e-7 * lscale;
    if (scalar && std::abs(half_trace) > 1e-10 * lscale)
        return extract_scalar_lead(tail, truncation, half_trace);

    // defective leading coefficient: split off the nilpotent part and shear
    if (!distinct && !scalar && shears_left > 0) {
        Eigen::Vector2cd u = nil.col(0).norm() >= nil.col(1).norm() ? nil.col(0) : nil.col(1);
        u.normalize();
        Mat2 t;
        t.col(0) = u;
        t.col(1) << -std::conj(u(1)), std::conj(u(0));
        const int depth = tail.depth();
        LaurentTail conj = gauge_to_tail(t.inverse(), depth).mul(tail).mul(gauge_to_tail(t, depth));
        LaurentTail sheared = shear_shift_inverse_tail(depth).mul(conj).mul(shear_tail(depth));

        FormalType inner = extract(sheared, truncation, shears_left - 1);
        inner.gauge = gauge_to_tail(t, truncation).mul(shear_tail(truncation)).mul(inner.gauge);
        return inner;
    }

    throw numeric_error("no leading structure");
}

} // namespace

FormalType formal_type(const LaurentTail& tail, int truncation) {
    if (truncation < 2) throw config_error("formal type truncation must be >= 2");
    FormalType ft = extract(tail, truncation, 3);
    // fix the scaling freedom: unit diagonal in the gauge constant term
    if (ft.gauge.order == 0) {
        Mat2 g0 = ft.gauge.coeffs.at(0);
        double gs = g0.cwiseAbs().maxCoeff();
        if (std::min(std::abs(g0(0, 0)), std::abs(g0(1, 1))) > 1e-9 * gs) {
            Mat2 dscale = Mat2::Zero();
            dscale(0, 0) = Cx(1.0) / g0(0, 0);
            dscale(1, 1) = Cx(1.0) / g0(1, 1);
            ft.gauge = ft.gauge.mul(LaurentTail::constant(dscale, ft.gauge.depth()));
        }
    }
    return ft;
}

FormalType formal_type(const Mat2Poly& mat, int truncation) {
    if (mat.is_zero()) throw numeric_error("no leading term");
    return formal_type(LaurentTail::expand(mat, truncation + 4), truncation);
}

LaurentTail formal_normal_form(const std::array<Cx, 2>& rho, const std::array<Cx, 2>& d, int n,
                               int depth) {
    LaurentTail t;
    t.order = n;
    t.coeffs.assign(depth + 1, Mat2::Zero());
    t.coeffs[0] << rho[0], Cx(0.0), Cx(0.0), rho[1];
    if (depth >= 1) t.coeffs[1] << rho[0] * d[0], Cx(0.0), Cx(0.0), rho[1] * d[1];
    return t;
}

double formal_type_residual(const LaurentTail& a, const FormalType& ft) {
    const int depth = std::min(a.depth(), ft.gauge.depth());
    LaurentTail lhs = a.mul(ft.gauge);
    LaurentTail rhs = ft.gauge.shifted_arg().mul(formal_normal_form(ft.rho, ft.d, ft.n, depth));
    LaurentTail diff = lhs.add(rhs.scale(Cx(-1.0)));
    double scale = std::max(1.0, a.max_mag() * ft.gauge.max_mag());
    // compare only through the jointly valid depth
    double worst = 0.0;
    int top = std::max(lhs.order, rhs.order);
    for (int k = 0; k <= depth; ++k) worst = std::max(worst, diff.at_power(top - k).cwiseAbs().maxCoeff());
    return worst / scale;
}

// ---------------------------------------------------- irreducibility

bool irreducibility_check(const DConn& conn, std::string* reason) {
    if (conn.mat(1, 0).is_zero()) {
        if (reason) *reason = "reducible: a21 identically zero";
        return false;
    }
    const int k = conn.theta.zero_count();
    for (int j = 0; j < 2; ++j)
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            Cx s = -conn.theta.d[j];
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) s -= conn.theta.a[i];
            if (near_integer(s)) {
                if (reason) *reason = "theta resonant";
                return false;
            }
        }
    if (reason) reason->clear();
    return true;
}

Mat2Poly apply_triangular_gauge(const Mat2Poly& mat, Cx r11, Cx r22, const Poly& r12) {
    if (std::abs(r11) < 1e-14 || std::abs(r22) < 1e-14)
        throw config_error("triangular gauge: diagonal entries must be nonzero");
    if (r12.degree() > 1) throw config_error("triangular gauge: deg r12 > 1");
    Mat2Poly r(Poly(r11), r12, Poly(), Poly(r22));
    Cx inv_det = Cx(1.0) / (r11 * r22);
    Mat2Poly rinv_shift(Poly(Cx(1.0) / r11), r12.shifted() * (-inv_det), Poly(),
                        Poly(Cx(1.0) / r22));
    return rinv_shift * mat * r;
}

} // namespace dconn
