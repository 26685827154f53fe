#ifndef DCONN_TEST_UTIL_HPP
#define DCONN_TEST_UTIL_HPP

#include <random>

#include "dconn/algebra.hpp"
#include "dconn/theta.hpp"

namespace dconn::testutil {

inline std::mt19937_64 make_rng(uint64_t seed = 42) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Cx random_cx(std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
    return {uniform(rng, lo, hi), uniform(rng, lo, hi)};
}

inline Poly random_poly(std::mt19937_64& rng, int degree) {
    std::vector<Cx> c(degree + 1);
    for (Cx& v : c) v = random_cx(rng);
    if (std::abs(c.back()) < 0.1) c.back() += Cx(0.5, 0.5);
    return Poly::from_coeffs(std::move(c));
}

inline Mat2Poly random_mat2poly(std::mt19937_64& rng, int d11, int d12, int d21, int d22) {
    return {random_poly(rng, d11), random_poly(rng, d12), random_poly(rng, d21),
            random_poly(rng, d22)};
}

// reference tuple used across examples: valid class V parameters
inline Theta theta_star() {
    return Theta::class_v({Cx(0.10), Cx(0.37), Cx(0.52), Cx(0.81)}, {Cx(1.0), Cx(2.0)},
                          {Cx(0.35), Cx(-1.15)});
}

// reference class VI tuple
inline Theta theta_vi_star() {
    return Theta::class_vi({Cx(0.11), Cx(0.23), Cx(0.41), Cx(0.53), Cx(0.67), Cx(0.79)}, Cx(1.0),
                           {Cx(0.375), Cx(-2.115)});
}

/* Random valid class V tuple with deg -1; real entries kept a set margin
 * away from the resonance conditions.
 */
inline Theta random_theta_v(std::mt19937_64& rng, double margin = 1e-3) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::array<Cx, 4> a;
        for (auto& v : a) v = Cx(uniform(rng, 0.05, 0.95));
        Cx d1(uniform(rng, -2.0, 2.0));
        Cx d2 = Cx(1.0) - d1 - (a[0] + a[1] + a[2] + a[3]);
        Cx r1(uniform(rng, 0.4, 2.5)), r2(uniform(rng, 0.4, 2.5));
        Theta t = Theta::class_v(a, {r1, r2}, {d1, d2});

        if (std::abs(r1 - r2) < 10 * margin || std::abs(r1) < margin || std::abs(r2) < margin)
            continue;
        bool ok = true;
        for (int j = 0; j < 2 && ok; ++j)
            for (unsigned mask = 0; mask < 16u && ok; ++mask) {
                Cx s = -t.d[j];
                for (int i = 0; i < 4; ++i)
                    if (mask & (1u << i)) s -= t.a[i];
                if (integer_distance(s) < margin) ok = false;
            }
        for (int i = 0; i < 4 && ok; ++i)
            for (int j = i + 1; j < 4 && ok; ++j)
                if (integer_distance(t.a[i] - t.a[j]) < margin) ok = false;
        if (ok) return t;
    }
    throw std::runtime_error("random_theta_v: screening failed");
}

inline Theta random_theta_vi(std::mt19937_64& rng, double margin = 1e-3) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::array<Cx, 6> a;
        for (auto& v : a) v = Cx(uniform(rng, 0.05, 0.95));
        Cx d1(uniform(rng, -2.0, 2.0));
        Cx d2 = Cx(1.0) - d1;
        for (auto& v : a) d2 -= v;
        Theta t = Theta::class_vi(a, Cx(1.0), {d1, d2});

        if (std::abs(d1 - d2) < 10 * margin) continue;
        if (integer_distance(d1 - d2) < 10 * margin) continue; // gauge series resonance
        bool ok = true;
        for (int j = 0; j < 2 && ok; ++j)
            for (unsigned mask = 0; mask < 64u && ok; ++mask) {
                Cx s = -t.d[j];
                for (int i = 0; i < 6; ++i)
                    if (mask & (1u << i)) s -= t.a[i];
                if (integer_distance(s) < margin) ok = false;
            }
        for (int i = 0; i < 6 && ok; ++i)
            for (int j = i + 1; j < 6 && ok; ++j)
                if (integer_distance(t.a[i] - t.a[j]) < margin) ok = false;
        if (ok) return t;
    }
    throw std::runtime_error("random_theta_vi: screening failed");
}

// interior coordinates kept away from the exceptional loci of either map
inline std::pair<Cx, Cx> random_interior_point(std::mt19937_64& rng, const Theta& t,
                                               double margin = 1e-2) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Cx q(uniform(rng, -0.5, 1.5));
        Cx p(uniform(rng, 0.15, 2.5));
        bool ok = true;
        for (const Cx& ai : t.a)
            if (std::abs(q - ai) < margin) ok = false;
        if (t.is_v()) {
            if (std::abs(p - t.rho[0]) < margin || std::abs(p - t.rho[1]) < margin) ok = false;
        } else {
            if (std::abs(p - t.rho[0]) < margin || std::abs(p - Cx(1.0)) < margin) ok = false;
        }
        if (ok) return {q, p};
    }
    throw std::runtime_error("random_interior_point: screening failed");
}

} // namespace dconn::testutil

#endif
