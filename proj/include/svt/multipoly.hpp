#pragma once

// Sparse polynomials in x, y, alpha with big-integer coefficients.

#include "svt/arith.hpp"

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace svt {

struct Monomial {
    int x = 0;
    int y = 0;
    int a = 0; // power of alpha
    auto operator<=>(const Monomial&) const = default;

    Monomial operator*(const Monomial& o) const noexcept { return {x + o.x, y + o.y, a + o.a}; }
    bool divides(const Monomial& o) const noexcept { return x <= o.x && y <= o.y && a <= o.a; }
};

class MultiPoly {
public:
    using Terms = std::map<Monomial, BigInt>;

    MultiPoly() = default;
    MultiPoly(long c) { add_term({}, BigInt(c)); } // NOLINT: implicit constants read naturally
    MultiPoly(const BigInt& c) { add_term({}, c); } // NOLINT
    MultiPoly(std::initializer_list<std::pair<Monomial, long>> terms) {
        for (const auto& [m, c] : terms) {
            add_term(m, BigInt(c));
        }
    }

    static MultiPoly x() { return MultiPoly({{{1, 0, 0}, 1}}); }
    static MultiPoly y() { return MultiPoly({{{0, 1, 0}, 1}}); }
    static MultiPoly alpha() { return MultiPoly({{{0, 0, 1}, 1}}); }
    static MultiPoly monomial(Monomial m, const BigInt& c = 1) {
        MultiPoly p;
        p.add_term(m, c);
        return p;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    BigInt coefficient(const Monomial& m) const {
        const auto it = terms_.find(m);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    /// Present only for a constant polynomial (including zero).
    std::optional<BigInt> as_constant() const {
        if (terms_.empty()) {
            return BigInt(0);
        }
        if (terms_.size() == 1 && terms_.begin()->first == Monomial{}) {
            return terms_.begin()->second;
        }
        return std::nullopt;
    }

    void add_term(const Monomial& m, const BigInt& c) {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) {
            add_term(m, c);
        }
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [m, c] : o.terms_) {
            add_term(m, -c);
        }
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(MultiPoly a) {
        for (auto& [m, c] : a.terms_) {
            c = -c;
        }
        return a;
    }

    /// this += a * b, avoiding a temporary product.
    void add_product(const MultiPoly& a, const MultiPoly& b) {
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                add_term(ma * mb, ca * cb);
            }
        }
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly out;
        out.add_product(a, b);
        return out;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    /// Exact quotient, or nullopt when `divisor` does not divide this
    /// polynomial. Division by zero also yields nullopt.
    std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const {
        if (divisor.is_zero()) {
            return std::nullopt;
        }
        if (auto c = divisor.as_constant()) {
            MultiPoly q;
            for (const auto& [m, v] : terms_) {
                if (v % *c != 0) {
                    return std::nullopt;
                }
                q.terms_.emplace(m, v / *c);
            }
            return q;
        }
        // Cancel the leading term under lex order until nothing remains.
        const auto& [lead_m, lead_c] = *divisor.terms_.rbegin();
        MultiPoly rest = *this;
        MultiPoly q;
        while (!rest.is_zero()) {
            const auto& [m, c] = *rest.terms_.rbegin();
            if (!lead_m.divides(m) || c % lead_c != 0) {
                return std::nullopt;
            }
            const Monomial qm{m.x - lead_m.x, m.y - lead_m.y, m.a - lead_m.a};
            const BigInt qc = c / lead_c;
            q.add_term(qm, qc);
            for (const auto& [dm, dc] : divisor.terms_) {
                rest.add_term(qm * dm, -qc * dc);
            }
        }
        return q;
    }

    MultiPoly alpha_derivative() const {
        MultiPoly out;
        for (const auto& [m, c] : terms_) {
            if (m.a > 0) {
                out.add_term({m.x, m.y, m.a - 1}, c * m.a);
            }
        }
        return out;
    }

    Rational evaluate(const Rational& xv, const Rational& yv, const Rational& av) const {
        Rational sum = 0;
        for (const auto& [m, c] : terms_) {
            Rational term = Rational(c);
            term *= pow_rational(xv, m.x);
            term *= pow_rational(yv, m.y);
            term *= pow_rational(av, m.a);
            sum += term;
        }
        return sum;
    }

    /// Canonical text: terms by descending (x, y, alpha) exponents,
    /// e.g. "x^2*y + 3*alpha", "-x + 1", "0".
    std::string str() const {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            const bool negative = c < 0;
            const BigInt mag = negative ? BigInt(-c) : c;
            if (first) {
                out += negative ? "-" : "";
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            std::string factors;
            const auto append = [&](const char* name, int power) {
                if (power == 0) {
                    return;
                }
                if (!factors.empty()) {
                    factors += "*";
                }
                factors += name;
                if (power > 1) {
                    factors += "^" + std::to_string(power);
                }
            };
            append("x", m.x);
            append("y", m.y);
            append("alpha", m.a);
            if (factors.empty()) {
                out += mag.str();
            } else if (mag == 1) {
                out += factors;
            } else {
                out += mag.str() + "*" + factors;
            }
        }
        return out;
    }

private:
    static Rational pow_rational(const Rational& base, int power) {
        Rational r = 1;
        for (int i = 0; i < power; ++i) {
            r *= base;
        }
        return r;
    }

    Terms terms_;
};

inline MultiPoly pow(const MultiPoly& base, int power) {
    MultiPoly r = 1;
    for (int i = 0; i < power; ++i) {
        r *= base;
    }
    return r;
}

} // namespace svt
