#pragma once

// Generating functions of admissible paths ending at height t, for start
// height 0 (straight shapes) and start height f > 0 (skew shapes).

#include "svt/polyseries.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace svt {

/// Shared building blocks for one choice of weights and truncation order.
class GfContext {
public:
    GfContext(int order, Weights w = {}) : order_(order), w_(std::move(w)) {
        if (order < 0) {
            throw std::invalid_argument("series order must be non-negative");
        }
        one_ = ZSeries(order, 1);
        z_ = ZSeries::z(order);
        m_ = solve_M(order, w_);
        zm_ = m_.shifted(1);
        zx_ = exact_divide(z_, one_ - w_.x * z_, "z/(1-xz)");
        zy_ = exact_divide(z_, one_ - w_.y * z_, "z/(1-yz)");
        q_ = w_.alpha * (zm_ * zm_);
        one_plus_xzm_ = one_ + w_.x * zm_;
        one_plus_yzm_ = one_ + w_.y * zm_;
        x_plus_azm_ = w_.x * one_ + w_.alpha * zm_;
        y_plus_azm_ = w_.y * one_ + w_.alpha * zm_;
    }

    int order() const noexcept { return order_; }
    const Weights& weights() const noexcept { return w_; }

    const ZSeries& one() const noexcept { return one_; }
    const ZSeries& z() const noexcept { return z_; }
    const ZSeries& M() const noexcept { return m_; }
    const ZSeries& zM() const noexcept { return zm_; }
    const ZSeries& z_over_1_minus_xz() const noexcept { return zx_; }
    const ZSeries& z_over_1_minus_yz() const noexcept { return zy_; }
    /// alpha z^2 M^2
    const ZSeries& q() const noexcept { return q_; }
    const ZSeries& one_plus_xzM() const noexcept { return one_plus_xzm_; }
    const ZSeries& one_plus_yzM() const noexcept { return one_plus_yzm_; }
    const ZSeries& x_plus_alpha_zM() const noexcept { return x_plus_azm_; }
    const ZSeries& y_plus_alpha_zM() const noexcept { return y_plus_azm_; }

    MultiPoly alpha_pow(int k) const { return pow(w_.alpha, k); }

    /// (1 - q^k) / (1 - q)
    ZSeries geometric_q(int k) const {
        return exact_divide(one_ - pow(q_, k), one_ - q_, "(1-(alpha z^2 M^2)^k)/(1-alpha z^2 M^2)");
    }

    // Straight shapes: the three summands, indexed 1..3.

    ZSeries straight_term(int which, int t) const {
        require_nonneg(t, "t");
        switch (which) {
        case 1: return pow(zx_, t);
        case 2:
            return exact_divide(alpha_pow(1) * pow(zm_, t + 2), one_plus_yzm_ * one_plus_xzm_,
                                "straight term 2");
        case 3:
            return exact_divide(alpha_pow(1) * zm_ * (pow(zm_, t) - pow(zx_, t)), y_plus_azm_ * one_plus_yzm_,
                                "straight term 3");
        default: throw std::invalid_argument("straight term index must be 1..3");
        }
    }

    // Skew shapes with t < f: seven summands, indexed 1..7. Term 5 carries
    // its leading minus sign.

    ZSeries skew_lt_term(int which, int f, int t) const {
        require_skew(f, t);
        if (t >= f) {
            throw std::invalid_argument("skew_lt_term needs t < f");
        }
        const int g = f - t;
        switch (which) {
        case 1: return alpha_pow(g) * pow(zy_, g);
        case 2: {
            const ZSeries inner = exact_divide(pow(zm_, f) - pow(zy_, f), x_plus_azm_, "skew term 2 (x+alpha zM)");
            return exact_divide(alpha_pow(f + 1) * pow(zm_, t + 1) * inner, one_plus_xzm_, "skew term 2 (1+xzM)");
        }
        case 3: {
            const ZSeries inner = exact_divide(pow(zm_, g) - pow(zy_, g), x_plus_azm_, "skew term 3 (x+alpha zM)");
            return alpha_pow(g + 1) * zm_ * inner * geometric_q(t);
        }
        case 4: {
            const ZSeries ratio = exact_divide(w_.alpha * z_.shifted(1) * m_, one_ - w_.y * z_, "skew term 4 (1-yz)");
            const ZSeries head = alpha_pow(g) * pow(zy_, g);
            const ZSeries mid = exact_divide(one_ - pow(ratio, t), one_plus_xzm_, "skew term 4 (1+xzM)");
            const ZSeries tail = exact_divide(alpha_pow(1) * pow(zm_, 2), one_ - q_, "skew term 4 (1-alpha z^2 M^2)");
            return head * mid * tail;
        }
        case 5: {
            const ZSeries inner = exact_divide(pow(zm_, t) - pow(zy_, t), x_plus_azm_, "skew term 5 (x+alpha zM)");
            const ZSeries tail = exact_divide(pow(zm_, t + 1), one_ - q_, "skew term 5 (1-alpha z^2 M^2)");
            return -(alpha_pow(f + 1) * pow(zy_, g) * inner * tail);
        }
        case 6: return skew_shared_term(f, t);
        case 7:
            return geometric_q(t) *
                   exact_divide(alpha_pow(g + 1) * pow(zm_, g + 2), one_plus_yzm_, "skew term 7 (1+yzM)");
        default: throw std::invalid_argument("skew (t<f) term index must be 1..7");
        }
    }

    // Skew shapes with t >= f: five summands, indexed 1..5.

    ZSeries skew_ge_term(int which, int f, int t) const {
        require_skew(f, t);
        if (t < f) {
            throw std::invalid_argument("skew_ge_term needs t >= f");
        }
        const int g = t - f;
        switch (which) {
        case 1: return pow(zx_, g);
        case 2:
            return exact_divide(alpha_pow(1) * pow(zm_, g + 2) - alpha_pow(f + 1) * pow(zm_, f + t + 2),
                                one_plus_xzm_ * (one_ - q_), "skew term 2 ((1+xzM)(1-alpha z^2 M^2))");
        case 3: return skew_shared_term(f, t);
        case 4:
            return exact_divide(alpha_pow(1) * zm_ * (pow(zm_, g) - pow(zx_, g)), y_plus_azm_ * one_plus_yzm_,
                                "skew term 4 ((y+alpha zM)(1+yzM))");
        case 5:
            return exact_divide(alpha_pow(1) * pow(zm_, g + 2), one_plus_yzm_, "skew term 5 (1+yzM)") *
                   geometric_q(f);
        default: throw std::invalid_argument("skew (t>=f) term index must be 1..5");
        }
    }

    ZSeries straight(int t) const {
        return straight_term(1, t) + straight_term(2, t) + straight_term(3, t);
    }

    ZSeries skew(int f, int t) const {
        require_skew(f, t);
        ZSeries sum(order_);
        const int terms = t < f ? 7 : 5;
        for (int k = 1; k <= terms; ++k) {
            sum = sum + (t < f ? skew_lt_term(k, f, t) : skew_ge_term(k, f, t));
        }
        return sum;
    }

private:
    // alpha^{f+1} (zM)^{f+t+2} / ((1+yzM)(1+xzM)), common to both skew cases.
    ZSeries skew_shared_term(int f, int t) const {
        return exact_divide(alpha_pow(f + 1) * pow(zm_, f + t + 2), one_plus_yzm_ * one_plus_xzm_,
                            "skew shared term ((1+yzM)(1+xzM))");
    }

    static void require_nonneg(int v, const char* name) {
        if (v < 0) {
            throw std::invalid_argument(std::string(name) + " must be non-negative");
        }
    }
    static void require_skew(int f, int t) {
        if (f < 1) {
            throw std::invalid_argument("f must be positive for a skew shape");
        }
        require_nonneg(t, "t");
    }

    int order_;
    Weights w_;
    ZSeries one_, z_, m_, zm_, zx_, zy_, q_;
    ZSeries one_plus_xzm_, one_plus_yzm_, x_plus_azm_, y_plus_azm_;
};

inline ZSeries gf_straight(int t, int order, const Weights& w = {}) { return GfContext(order, w).straight(t); }

inline ZSeries gf_skew(int f, int t, int order, const Weights& w = {}) { return GfContext(order, w).skew(f, t); }

/// Coefficient of z^n x^c y^d alpha^e.
inline BigInt refined_coefficient(const ZSeries& s, int n, int c, int d, int e) {
    if (n < 0 || n > s.order()) {
        throw std::out_of_range("z^" + std::to_string(n) + " is beyond the series order " + std::to_string(s.order()));
    }
    return s[n].coefficient({c, d, e});
}

/// Expected number of down-steps among paths of length n ending at height
/// t (start 0), for n = 0..order; nullopt where no such path exists.
inline std::vector<std::optional<Rational>> expected_downsteps_series(int t, int order) {
    const ZSeries gf = gf_straight(t, order, Weights::alpha_only(1, 1));
    const auto counts = gf.specialize(1, 1, 1);
    const auto weighted = gf.alpha_derivative().specialize(1, 1, 1);
    std::vector<std::optional<Rational>> out;
    for (std::size_t n = 0; n < counts.size(); ++n) {
        if (counts[n] == 0) {
            out.emplace_back(std::nullopt);
        } else {
            out.emplace_back(weighted[n] / counts[n]);
        }
    }
    return out;
}

} // namespace svt
