#pragma once

// The Motzkin series M and M0 together with the checks that pin them down.

#include "svt/multipoly.hpp"
#include "svt/zseries.hpp"

#include <optional>
#include <string>

namespace svt {

/// Values substituted for x, y and alpha while building series. Keeping
/// them as polynomials lets one builder serve the symbolic case and every
/// specialization.
struct Weights {
    MultiPoly x = MultiPoly::x();
    MultiPoly y = MultiPoly::y();
    MultiPoly alpha = MultiPoly::alpha();

    static Weights symbolic() { return {}; }
    static Weights constant(long xv, long yv, long av) { return {MultiPoly(xv), MultiPoly(yv), MultiPoly(av)}; }
    static Weights alpha_only(long xv, long yv) { return {MultiPoly(xv), MultiPoly(yv), MultiPoly::alpha()}; }

    bool operator==(const Weights&) const = default;
};

/// M = 1 + (x+y) z M + alpha z^2 M^2, by fixed-point iteration from 1.
/// Iteration k fixes the coefficient of z^k, so it is carried out at
/// order k only.
inline ZSeries solve_M(int order, const Weights& w = {}) {
    const MultiPoly xy = w.x + w.y;
    ZSeries m(0, 1);
    for (int k = 1; k <= order; ++k) {
        const ZSeries sq = m * m;
        ZSeries next(k, 1);
        for (int i = 1; i <= k; ++i) {
            next[i] = xy * m[i - 1];
            if (i >= 2) {
                next[i].add_product(w.alpha, sq[i - 2]);
            }
        }
        m = std::move(next);
    }
    return m;
}

/// M0 = 1 / (1 - y z - alpha z^2 M).
inline ZSeries solve_M0(int order, const Weights& w = {}) {
    const ZSeries m = solve_M(order, w);
    const ZSeries denom = ZSeries(order, 1) - w.y * ZSeries::z(order) - w.alpha * m.shifted(2);
    return unit_inverse(denom);
}

// Residuals; each is the zero series exactly when the identity holds.

inline ZSeries residual_M_equation(const ZSeries& m, const Weights& w = {}) {
    const int n = m.order();
    const ZSeries z = ZSeries::z(n);
    return m - (ZSeries(n, 1) + (w.x + w.y) * (z * m) + w.alpha * (m * m).shifted(2));
}

inline ZSeries residual_M0_equation(const ZSeries& m0, const ZSeries& m, const Weights& w = {}) {
    const int n = std::min(m0.order(), m.order());
    const ZSeries z = ZSeries::z(n);
    return m0 - (ZSeries(n, 1) + w.y * (z * m0) + w.alpha * (m * m0).shifted(2));
}

/// M (1 - x z - alpha z^2 M) - (1 + y z M)
inline ZSeries residual_identity_x(const ZSeries& m, const Weights& w = {}) {
    const int n = m.order();
    const ZSeries one(n, 1);
    const ZSeries zm = m.shifted(1);
    return m * (one - w.x * ZSeries::z(n) - w.alpha * m.shifted(2)) - (one + w.y * zm);
}

/// M (1 - y z - alpha z^2 M) - (1 + x z M)
inline ZSeries residual_identity_y(const ZSeries& m, const Weights& w = {}) {
    const int n = m.order();
    const ZSeries one(n, 1);
    const ZSeries zm = m.shifted(1);
    return m * (one - w.y * ZSeries::z(n) - w.alpha * m.shifted(2)) - (one + w.x * zm);
}

/// 1 - (1 - x z) M + z M (y + alpha z M)
inline ZSeries residual_identity_diff(const ZSeries& m, const Weights& w = {}) {
    const int n = m.order();
    const ZSeries one(n, 1);
    const ZSeries zm = m.shifted(1);
    return one - (one - w.x * ZSeries::z(n)) * m + zm * (w.y * one + w.alpha * zm);
}

struct ReversionResult {
    bool ok = true;
    int first_bad_index = -1;
    std::string failed; // which of the two checks failed
};

/// Checks that F = zM is the compositional inverse of
/// f(z) = z / (1 + (x+y) z + alpha z^2), i.e. F / (1 + (x+y) F + alpha F^2) = z,
/// and that f'(z) (1 + (x+y) z + alpha z^2)^2 = 1 - alpha z^2.
inline ReversionResult check_reversion(const ZSeries& m, const Weights& w = {}) {
    const int n = m.order();
    const ZSeries one(n, 1);
    const ZSeries z = ZSeries::z(n);
    const MultiPoly xy = w.x + w.y;

    const ZSeries big_f = m.shifted(1);
    const ZSeries lhs = exact_divide(big_f, one + xy * big_f + w.alpha * (big_f * big_f), "reversion");
    for (int k = 0; k <= n; ++k) {
        if (lhs[k] != z[k]) {
            return {false, k, "inverse"};
        }
    }

    const ZSeries kernel = one + xy * z + w.alpha * z.shifted(1);
    const ZSeries small_f = exact_divide(z, kernel, "reversion kernel");
    const ZSeries deriv = small_f.derivative();
    const ZSeries product = deriv * kernel * kernel;
    const ZSeries target = ZSeries(n, 1) - w.alpha * z.shifted(1);
    for (int k = 0; k <= deriv.order() && n > 0; ++k) {
        if (product[k] != target[k]) {
            return {false, k, "derivative"};
        }
    }
    return {};
}

inline ReversionResult check_reversion(int order, const Weights& w = {}) {
    return check_reversion(solve_M(order, w), w);
}

} // namespace svt
