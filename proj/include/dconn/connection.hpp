#ifndef DCONN_CONNECTION_HPP
#define DCONN_CONNECTION_HPP

#include <optional>
#include <string>

#include "dconn/algebra.hpp"
#include "dconn/theta.hpp"

namespace dconn {

enum class Chart { interior, boundary, exceptional };

const char* chart_name(Chart c);

/* A point of (P^1)^2 in homogeneous coordinates with a chart flag.
 * Interior points keep p away from 0 and infinity; the boundary and
 * exceptional tags are diagnostic (exceptional marks blow-up centers).
 */
struct PQPoint {
    ProjVal q;
    ProjVal p;
    Chart chart = Chart::interior;

    static PQPoint interior(Cx q, Cx p) {
        return {ProjVal::finite(q), ProjVal::finite(p), Chart::interior};
    }
};

// Chart classification against the blow-up centers of the given class.
PQPoint classify_point(const Theta& theta, ProjVal q, ProjVal p);

/* Exponent data (rho_1, rho_2, d_1, d_2; n) extracted at infinity together
 * with the truncated gauge series realizing it: plugging the gauge G into
 * G(z+1)^{-1} A(z) G(z) reproduces diag(rho_j (z^n + d_j z^{n-1})) through
 * the truncation order.
 */
struct FormalType {
    std::array<Cx, 2> rho{};
    std::array<Cx, 2> d{};
    int n = 0;
    LaurentTail gauge;
};

FormalType formal_type(const Mat2Poly& mat, int truncation = 8);
FormalType formal_type(const LaurentTail& tail, int truncation = 8);

// diag(rho_j (z^n + d_j z^{n-1})) as a tail of the given depth
LaurentTail formal_normal_form(const std::array<Cx, 2>& rho, const std::array<Cx, 2>& d, int n,
                               int depth);

// max coefficient magnitude of A(z) G(z) - G(z+1) B(z), relative to scale
double formal_type_residual(const LaurentTail& a, const FormalType& ft);

/* A d-connection matrix together with its type. */
struct DConn {
    Mat2Poly mat;
    Theta theta;
};

/* Matrix-level characterization of "mat is of type theta":
 * class V  — degree profile (a11, a22 <= 2; a21 <= 1; a12 <= 3),
 *            det = rho1 rho2 prod(z - a_i), and the two trace conditions
 *            [z^2]a11 + [z^2]a22 = rho1 + rho2,
 *            [z^1]a11 + [z^1]a22 + [z^2]a22 = d1 rho1 + d2 rho2;
 * class VI — deg a21 <= 1, deg a12 <= 3, deg(a11 - rho z^3) <= 2,
 *            deg(a22 - rho z^3) <= 2, det = rho^2 prod_6(z - a_i), and
 *            [z^4] of (a11 - rho z^3)(a22 (1 + 1/z) - rho z^3) - a12 a21
 *            equal to d1 d2 rho^2.
 * Reducible matrices (a21 identically zero) are flagged as such.
 * With waive_theta the parameter tuple is not re-validated (formula-level
 * tests at degenerate parameters).
 */
ValidityReport validate_matrix(const Mat2Poly& mat, const Theta& theta, bool waive_theta = false);

/* Coordinates (q, p): q is the zero of the linear entry a21 (infinity if
 * a21 is a nonzero constant), ptilde = a11(q), and p = ptilde divided by
 * (q-a3)(q-a4) for class V or (q-a4)(q-a5)(q-a6) for class VI, evaluated
 * homogeneously so q at infinity still gives finite p.
 */
PQPoint coordinates_of(const DConn& conn);
PQPoint coordinates_of(const Mat2Poly& mat, const Theta& theta);

// ptilde = a11(q) as a homogeneous value (numerator vs den^deg)
Cx ptilde_of(const Mat2Poly& mat, const Theta& theta);

/* Normal-form reconstruction from coordinates: a21 = z - q, a11 = ptilde
 * (class V) or rho z^3 + (ptilde - rho q^3) (class VI); remaining entries
 * are pinned by the determinant and trace/quartic conditions.  The class V
 * entry a12 comes from an exact division with a residual check; class VI
 * solves a 7x7 linear system with a residual check.
 */
DConn from_coordinates(const Theta& theta, Cx q, Cx p);

/* Sufficient irreducibility certificate: a21 not identically zero and
 * theta clear of the resonance conditions.  Not a full subbundle search.
 */
bool irreducibility_check(const DConn& conn, std::string* reason = nullptr);

/* R(z+1)^{-1} A(z) R(z) for the triangular bundle automorphisms
 * R = [[r11, r12], [0, r22]] with constant r11, r22 != 0 and deg r12 <= 1.
 * These leave (q, ptilde) fixed.
 */
Mat2Poly apply_triangular_gauge(const Mat2Poly& mat, Cx r11, Cx r22, const Poly& r12);

} // namespace dconn

#endif
