#pragma once

// Power series in z truncated after z^order, with MultiPoly coefficients.

#include "svt/multipoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace svt {

/// A division whose quotient would leave the polynomial ring. The label
/// names the sub-expression being built.
class NonExactDivision : public std::runtime_error {
public:
    NonExactDivision(const std::string& label, int index)
        : std::runtime_error("non-exact division in " + label + " at z^" + std::to_string(index)),
          label_(label), index_(index) {}
    const std::string& label() const noexcept { return label_; }
    int index() const noexcept { return index_; }

private:
    std::string label_;
    int index_;
};

class ZSeries {
public:
    explicit ZSeries(int order = 0) : coeffs_(static_cast<std::size_t>(check_order(order)) + 1) {}
    ZSeries(int order, const MultiPoly& constant) : ZSeries(order) { coeffs_[0] = constant; }

    /// c * z^k truncated to `order`.
    static ZSeries monomial(int order, int k, const MultiPoly& c = 1) {
        ZSeries s(order);
        if (k >= 0 && k <= order) {
            s.coeffs_[static_cast<std::size_t>(k)] = c;
        }
        return s;
    }
    static ZSeries z(int order) { return monomial(order, 1); }

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    const MultiPoly& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    MultiPoly& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
    const std::vector<MultiPoly>& coefficients() const noexcept { return coeffs_; }

    ZSeries truncated(int order) const {
        ZSeries s(std::min(order, this->order()));
        std::copy_n(coeffs_.begin(), s.coeffs_.size(), s.coeffs_.begin());
        return s;
    }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const MultiPoly& p) { return p.is_zero(); });
    }

    /// Index of the first nonzero coefficient, or order()+1 for zero.
    int valuation() const {
        for (int k = 0; k <= order(); ++k) {
            if (!(*this)[k].is_zero()) {
                return k;
            }
        }
        return order() + 1;
    }

    friend bool operator==(const ZSeries&, const ZSeries&) = default;

    friend ZSeries operator+(const ZSeries& a, const ZSeries& b) {
        ZSeries s(std::min(a.order(), b.order()));
        for (int k = 0; k <= s.order(); ++k) {
            s[k] = a[k] + b[k];
        }
        return s;
    }
    friend ZSeries operator-(const ZSeries& a, const ZSeries& b) {
        ZSeries s(std::min(a.order(), b.order()));
        for (int k = 0; k <= s.order(); ++k) {
            s[k] = a[k] - b[k];
        }
        return s;
    }
    friend ZSeries operator-(const ZSeries& a) {
        ZSeries s(a.order());
        for (int k = 0; k <= s.order(); ++k) {
            s[k] = -a[k];
        }
        return s;
    }
    friend ZSeries operator*(const ZSeries& a, const ZSeries& b) {
        ZSeries s(std::min(a.order(), b.order()));
        const int va = a.valuation();
        const int vb = b.valuation();
        for (int i = va; i <= s.order(); ++i) {
            if (a[i].is_zero()) {
                continue;
            }
            for (int j = vb; i + j <= s.order(); ++j) {
                s[i + j].add_product(a[i], b[j]);
            }
        }
        return s;
    }
    friend ZSeries operator*(const MultiPoly& c, const ZSeries& a) {
        ZSeries s(a.order());
        for (int k = 0; k <= s.order(); ++k) {
            s[k] = c * a[k];
        }
        return s;
    }
    friend ZSeries operator*(const ZSeries& a, const MultiPoly& c) { return c * a; }

    /// Multiply by z^k (k >= 0), keeping the order.
    ZSeries shifted(int k) const {
        ZSeries s(order());
        for (int i = 0; i + k <= order(); ++i) {
            s[i + k] = (*this)[i];
        }
        return s;
    }

    /// d/dz. The result has order one less (but at least 0).
    ZSeries derivative() const {
        ZSeries s(std::max(order() - 1, 0));
        for (int k = 1; k <= order(); ++k) {
            s[k - 1] = MultiPoly(BigInt(k)) * (*this)[k];
        }
        return s;
    }

    ZSeries alpha_derivative() const {
        ZSeries s(order());
        for (int k = 0; k <= order(); ++k) {
            s[k] = (*this)[k].alpha_derivative();
        }
        return s;
    }

    std::vector<Rational> specialize(const Rational& x, const Rational& y, const Rational& alpha) const {
        std::vector<Rational> out;
        out.reserve(coeffs_.size());
        for (const auto& p : coeffs_) {
            out.push_back(p.evaluate(x, y, alpha));
        }
        return out;
    }

    /// One "k: poly" line per coefficient.
    std::string dump() const {
        std::string out;
        for (int k = 0; k <= order(); ++k) {
            out += std::to_string(k) + ": " + (*this)[k].str() + "\n";
        }
        return out;
    }

private:
    static int check_order(int order) {
        if (order < 0) {
            throw std::invalid_argument("series order must be non-negative");
        }
        return order;
    }

    std::vector<MultiPoly> coeffs_;
};

inline ZSeries pow(const ZSeries& base, int power) {
    if (power < 0) {
        throw std::invalid_argument("negative series power");
    }
    ZSeries result(base.order(), 1);
    ZSeries b = base;
    while (power > 0) {
        if (power & 1) {
            result = result * b;
        }
        power >>= 1;
        if (power > 0) {
            b = b * b;
        }
    }
    return result;
}

/// Q with Q * b == a. When b has valuation v > 0 the first v coefficients
/// of a must vanish and the quotient is known only to order a.order() - v.
inline ZSeries exact_divide(const ZSeries& a, const ZSeries& b, const std::string& label = "series") {
    const int order = std::min(a.order(), b.order());
    const int v = b.valuation();
    if (v > order) {
        throw NonExactDivision(label + " (zero divisor)", 0);
    }
    for (int k = 0; k < v; ++k) {
        if (!a[k].is_zero()) {
            throw NonExactDivision(label, k);
        }
    }
    const MultiPoly& lead = b[v];
    ZSeries q(order - v);
    for (int k = 0; k <= q.order(); ++k) {
        MultiPoly rest = a[k + v];
        for (int j = 0; j < k; ++j) {
            if (!q[j].is_zero() && !b[k - j + v].is_zero()) {
                rest -= q[j] * b[k - j + v];
            }
        }
        auto quotient = rest.divide_exact(lead);
        if (!quotient) {
            throw NonExactDivision(label, k);
        }
        q[k] = std::move(*quotient);
    }
    return q;
}

/// 1 / b for b with constant term +1 or -1.
inline ZSeries unit_inverse(const ZSeries& b) {
    const auto c = b[0].as_constant();
    if (!c || (*c != 1 && *c != -1)) {
        throw std::invalid_argument("unit_inverse: constant term must be +1 or -1");
    }
    return exact_divide(ZSeries(b.order(), 1), b, "unit inverse");
}

} // namespace svt
