#ifndef DCONN_THETA_HPP
#define DCONN_THETA_HPP

#include <array>
#include <string>
#include <vector>

#include "dconn/algebra.hpp"

namespace dconn {

enum class ThetaClass { V, VI };

/* Singularity data of a d-connection: zero locations a_i, exponents
 * (rho_1, rho_2, d_1, d_2) at infinity, pole order n.  Class V carries
 * 4 zeros with n = 2 and distinct rho; class VI carries 6 zeros with
 * n = 3 and a single rho (stored twice) with distinct d.
 */
struct Theta {
    ThetaClass cls = ThetaClass::V;
    std::vector<Cx> a;
    std::array<Cx, 2> rho{Cx(1.0), Cx(1.0)};
    std::array<Cx, 2> d{};
    int n = 2;

    static Theta class_v(std::array<Cx, 4> a, std::array<Cx, 2> rho, std::array<Cx, 2> d);
    static Theta class_vi(std::array<Cx, 6> a, Cx rho, std::array<Cx, 2> d);

    int zero_count() const { return 2 * n; }
    Cx degree() const; // -d1 - d2 - sum a_i
    bool is_v() const { return cls == ThetaClass::V; }

    // a1-1, a2-1, d1+1, d2+1 (the step direction of both maps)
    Theta shifted() const;
    Theta unshifted() const;

    bool operator==(const Theta& o) const = default;
};

struct ValidityReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string msg) {
        ok = false;
        failures.push_back(std::move(msg));
    }
    std::string summary() const;
};

/* Checks pole-count and degree structure (deg(theta) integral and equal
 * to -1 here), the non-resonance conditions on subset sums -d_j - sum_I a_i
 * and on differences a_i - a_j, and the conditions on rho (class V:
 * nonzero and distinct; class VI: nonzero with d_1 != d_2).  Each failed
 * condition is reported with its witnessing subset or index pair.
 */
ValidityReport validate_theta(const Theta& theta);

} // namespace dconn

#endif
