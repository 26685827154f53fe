#include "dconn/theta.hpp"

#include <sstream>

namespace dconn {

Theta Theta::class_v(std::array<Cx, 4> a, std::array<Cx, 2> rho, std::array<Cx, 2> d) {
    Theta t;
    t.cls = ThetaClass::V;
    t.a.assign(a.begin(), a.end());
    t.rho = rho;
    t.d = d;
    t.n = 2;
    return t;
}

Theta Theta::class_vi(std::array<Cx, 6> a, Cx rho, std::array<Cx, 2> d) {
    Theta t;
    t.cls = ThetaClass::VI;
    t.a.assign(a.begin(), a.end());
    t.rho = {rho, rho};
    t.d = d;
    t.n = 3;
    return t;
}

Cx Theta::degree() const {
    Cx s = -d[0] - d[1];
    for (const Cx& ai : a) s -= ai;
    return s;
}

Theta Theta::shifted() const {
    Theta t = *this;
    t.a[0] -= 1.0;
    t.a[1] -= 1.0;
    t.d[0] += 1.0;
    t.d[1] += 1.0;
    return t;
}

Theta Theta::unshifted() const {
    Theta t = *this;
    t.a[0] += 1.0;
    t.a[1] += 1.0;
    t.d[0] -= 1.0;
    t.d[1] -= 1.0;
    return t;
}

std::string ValidityReport::summary() const {
    if (ok) return "valid";
    std::ostringstream os;
    os << "invalid:";
    for (const auto& f : failures) os << " [" << f << "]";
    return os.str();
}

namespace {

std::string subset_string(unsigned mask, int k) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int i = 0; i < k; ++i)
        if (mask & (1u << i)) {
            if (!first) os << ",";
            os << (i + 1);
            first = false;
        }
    os << "}";
    return os.str();
}

} // namespace

ValidityReport validate_theta(const Theta& theta) {
    ValidityReport rep;
    const int k = theta.zero_count();
    const double tol = precision().integer_detect();

    if (static_cast<int>(theta.a.size()) != k) {
        rep.fail("pole condition: expected " + std::to_string(k) + " zeros, got " +
                 std::to_string(theta.a.size()));
        return rep;
    }
    for (const Cx& v : theta.a)
        if (!is_finite(v)) rep.fail("non-finite zero location");
    if (!is_finite(theta.d[0]) || !is_finite(theta.d[1]) || !is_finite(theta.rho[0]) ||
        !is_finite(theta.rho[1]))
        rep.fail("non-finite exponent");
    if (!rep.ok) return rep;

    Cx deg = theta.degree();
    if (!near_integer(deg)) {
        std::ostringstream os;
        os << "degree condition: deg = " << deg.real();
        if (deg.imag() != 0.0) os << (deg.imag() < 0 ? "-" : "+") << std::abs(deg.imag()) << "i";
        os << " not an integer";
        rep.fail(os.str());
    } else if (std::abs(deg - Cx(-1.0)) > 0.5) {
        rep.fail("degree condition: deg != -1");
    }

    // -d_j - sum_{i in I} a_i must avoid the integers, for every subset I
    for (int j = 0; j < 2; ++j) {
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            Cx s = -theta.d[j];
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) s -= theta.a[i];
            if (near_integer(s)) {
                rep.fail("irreducibility condition: -d_" + std::to_string(j + 1) + " - sum over I=" +
                         subset_string(mask, k) + " is integral");
                break; // one witness per j keeps reports short
            }
        }
    }

    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (near_integer(theta.a[i] - theta.a[j]))
                rep.fail("zero-separation condition: a_" + std::to_string(i + 1) + " - a_" +
                         std::to_string(j + 1) + " is integral");

    if (theta.is_v()) {
        if (std::abs(theta.rho[0]) < tol) rep.fail("rho condition: rho_1 = 0");
        if (std::abs(theta.rho[1]) < tol) rep.fail("rho condition: rho_2 = 0");
        if (std::abs(theta.rho[0] - theta.rho[1]) < tol) rep.fail("rho condition: rho_1 = rho_2");
    } else {
        if (std::abs(theta.rho[0]) < tol) rep.fail("rho condition: rho = 0");
        if (std::abs(theta.rho[0] - theta.rho[1]) > tol * std::max(1.0, std::abs(theta.rho[0])))
            rep.fail("rho condition: stored rho values differ");
        if (std::abs(theta.d[0] - theta.d[1]) < tol) rep.fail("rho condition: d_1 = d_2");
    }

    return rep;
}

} // namespace dconn
