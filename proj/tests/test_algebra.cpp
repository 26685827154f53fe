#include <doctest.h>

#include "dconn/algebra.hpp"
#include "test_util.hpp"

using namespace dconn;
using namespace dconn::testutil;

namespace {

double poly_distance(const Poly& a, const Poly& b) {
    Poly d = a - b;
    return d.max_coeff_mag();
}

} // namespace

TEST_CASE("poly shift expands binomially") {
    Poly z2 = Poly::monomial(2);
    CHECK(poly_distance(z2.shifted(), Poly{Cx(1.0), Cx(2.0), Cx(1.0)}) < 1e-14);

    Poly c(Cx(3.5, -1.0));
    CHECK(poly_distance(c.shifted(), c) < 1e-14);

    Poly z3 = Poly::monomial(3);
    CHECK(poly_distance(z3.shifted(), Poly{Cx(1.0), Cx(3.0), Cx(3.0), Cx(1.0)}) < 1e-14);
}

TEST_CASE("poly shift is a ring homomorphism") {
    auto rng = make_rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Poly p = random_poly(rng, 1 + trial % 6);
        Poly q = random_poly(rng, 1 + (trial / 2) % 6);
        Poly lhs = (p * q).shifted();
        Poly rhs = p.shifted() * q.shifted();
        double scale = std::max(1.0, lhs.max_coeff_mag());
        CHECK(poly_distance(lhs, rhs) / scale < 1e-12);
    }
}

TEST_CASE("poly division by linear factor") {
    auto rng = make_rng(11);
    Poly p = random_poly(rng, 5);
    Cx root = random_cx(rng);
    Poly q = p * Poly{-root, Cx(1.0)};
    Cx rem;
    Poly back = q.divide_by_linear(root, rem);
    CHECK(std::abs(rem) < 1e-12 * std::max(1.0, q.max_coeff_mag()));
    CHECK(poly_distance(back, p) < 1e-12);
}

TEST_CASE("poly roots recover planted values") {
    std::vector<Cx> planted{Cx(0.3, 0.1), Cx(-1.2), Cx(0.9, -0.4), Cx(2.0)};
    Poly p = Poly::from_roots(planted, Cx(1.5));
    auto roots = p.roots();
    REQUIRE(roots.size() == 4);
    for (const Cx& want : planted) {
        double best = 1e9;
        for (const Cx& got : roots) best = std::min(best, std::abs(got - want));
        CHECK(best < 1e-9);
    }
}

TEST_CASE("mat_det on diagonal and antidiagonal shapes") {
    Poly zm1{Cx(-1.0), Cx(1.0)}, zp1{Cx(1.0), Cx(1.0)};
    Mat2Poly diag = Mat2Poly::diagonal(zm1, zp1);
    CHECK(poly_distance(mat_det(diag), Poly{Cx(-1.0), Cx(0.0), Cx(1.0)}) < 1e-14);

    auto rng = make_rng(3);
    Poly f = random_poly(rng, 2), g = random_poly(rng, 3);
    Mat2Poly anti(Poly(), f, g, Poly());
    CHECK(poly_distance(mat_det(anti), -(f * g)) < 1e-13);
}

TEST_CASE("mat_det agrees with evaluation-interpolation") {
    auto rng = make_rng(5);
    Mat2Poly m = random_mat2poly(rng, 2, 3, 1, 2);
    Poly det = mat_det(m);

    // sample the pointwise determinant at 7 nodes and interpolate
    const int nodes = 7;
    Eigen::MatrixXcd vand(nodes, nodes);
    Eigen::VectorXcd vals(nodes);
    for (int i = 0; i < nodes; ++i) {
        Cx z = std::polar(1.3, 2.0 * M_PI * i / nodes);
        Mat2 mz = m.eval(z);
        vals[i] = mz(0, 0) * mz(1, 1) - mz(0, 1) * mz(1, 0);
        Cx pw(1.0);
        for (int j = 0; j < nodes; ++j) {
            vand(i, j) = pw;
            pw *= z;
        }
    }
    Eigen::VectorXcd coeffs = vand.fullPivLu().solve(vals);
    double scale = std::max(1.0, det.max_coeff_mag());
    for (int k = 0; k < nodes; ++k) CHECK(std::abs(coeffs[k] - det.coeff(k)) / scale < 1e-12);
}

TEST_CASE("mat_det is multiplicative") {
    auto rng = make_rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        Mat2Poly a = random_mat2poly(rng, 3, 2, 1, 3);
        Mat2Poly b = random_mat2poly(rng, 2, 3, 2, 1);
        Poly lhs = mat_det(a * b);
        Poly rhs = mat_det(a) * mat_det(b);
        double scale = std::max(1.0, lhs.max_coeff_mag());
        CHECK(poly_distance(lhs, rhs) / scale < 1e-12);
    }
}

TEST_CASE("laurent expansion reads off top coefficients") {
    Mat2Poly m = Mat2Poly::identity() * Poly::monomial(2);
    LaurentTail t = laurent_expand(m, 3);
    CHECK(t.order == 2);
    CHECK((t.coeffs[0] - Mat2::Identity()).cwiseAbs().maxCoeff() < 1e-15);
    for (int k = 1; k <= 3; ++k) CHECK(t.coeffs[k].cwiseAbs().maxCoeff() < 1e-15);

    Mat2Poly d = Mat2Poly::diagonal(Poly::monomial(2), Poly{Cx(0.0), Cx(3.0), Cx(2.0)});
    LaurentTail td = laurent_expand(d, 2);
    CHECK(td.order == 2);
    Mat2 lead, next;
    lead << Cx(1.0), Cx(0.0), Cx(0.0), Cx(2.0);
    next << Cx(0.0), Cx(0.0), Cx(0.0), Cx(3.0);
    CHECK((td.coeffs[0] - lead).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((td.coeffs[1] - next).cwiseAbs().maxCoeff() < 1e-15);

    CHECK_THROWS_AS(laurent_expand(Mat2Poly(), 3), numeric_error);
}

TEST_CASE("laurent expansion commutes with the shift") {
    auto rng = make_rng(17);
    Mat2Poly m = random_mat2poly(rng, 3, 2, 2, 3);
    LaurentTail route1 = laurent_expand(m.shifted(), 3);
    LaurentTail route2 = laurent_expand(m, 3).shifted_arg();
    REQUIRE(route1.order == route2.order);
    for (int k = 0; k <= 3; ++k)
        CHECK((route1.coeffs[k] - route2.coeffs[k]).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("laurent product against polynomial product") {
    auto rng = make_rng(19);
    Mat2Poly a = random_mat2poly(rng, 2, 1, 1, 2);
    Mat2Poly b = random_mat2poly(rng, 1, 2, 2, 1);
    LaurentTail lt = laurent_expand(a, 4).mul(laurent_expand(b, 4));
    LaurentTail direct = laurent_expand(a * b, 4);
    REQUIRE(lt.order == direct.order);
    for (int k = 0; k <= 4; ++k)
        CHECK((lt.coeffs[k] - direct.coeffs[k]).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("laurent inverse") {
    auto rng = make_rng(23);
    Mat2Poly a = random_mat2poly(rng, 2, 2, 1, 2);
    LaurentTail t = laurent_expand(a, 5);
    LaurentTail prod = t.mul(t.inverse());
    CHECK(prod.order == 0);
    CHECK((prod.coeffs[0] - Mat2::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    for (int k = 1; k <= prod.depth(); ++k)
        CHECK(prod.coeffs[k].cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("dual numbers differentiate rational expressions") {
    auto f = [](auto x) {
        auto one = decltype(x)(Cx(1.0));
        return (x * x * x + one) / (x * x + decltype(x)(Cx(0.5))) + x * decltype(x)(Cx(2.0, 1.0));
    };
    auto rng = make_rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        Cx a = random_cx(rng);
        Cx b = random_cx(rng);
        DualCx r = f(DualCx(a, b));
        const double h = 1e-6;
        Cx fd = (f(a + h * b) - f(a - h * b)) / (2.0 * h);
        CHECK(std::abs(r.eps - fd) < 1e-8 * std::max(1.0, std::abs(fd)));
        CHECK(std::abs(r.value - f(a)) < 1e-12);
    }
}

TEST_CASE("projective values compare cross-multiplicatively") {
    auto rng = make_rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        ProjVal v{random_cx(rng), random_cx(rng)};
        Cx c = random_cx(rng);
        if (std::abs(c) < 0.1) c += Cx(1.0);
        ProjVal w{c * v.num, c * v.den};
        CHECK(v.equals(w));
        CHECK(w.equals(v));
        CHECK(v.equals(v));
    }
    CHECK(ProjVal::infinity().is_infinite());
    CHECK(!ProjVal::finite(Cx(2.0)).is_infinite());
    // transitivity on a random chain
    ProjVal a{Cx(0.3, 0.2), Cx(1.0)};
    ProjVal b{Cx(0.6, 0.4), Cx(2.0)};
    ProjVal c{Cx(-0.3, -0.2), Cx(-1.0)};
    CHECK(a.equals(b));
    CHECK(b.equals(c));
    CHECK(a.equals(c));
}
