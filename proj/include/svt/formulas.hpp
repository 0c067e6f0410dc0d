#pragma once

// Closed-form counts for straight and skew two-rowed shapes, evaluated in
// exact arithmetic under two conventions:
//   * a summand with m! (m < 0) in its denominator is 0, decided before any
//     other factor of that summand is looked at;
//   * binom(a, b) = 0 whenever b < 0, b > a or a < 0.

#include "svt/arith.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace svt {

/// Records whether an evaluation relied on the zero convention for a
/// binomial with negative upper index where some other common extension
/// (the falling-factorial or the symmetric one) is nonzero.
struct Trace {
    bool convention_sensitive = false;
    std::vector<std::string> notes;

    void flag(long a, long b) {
        convention_sensitive = true;
        notes.push_back("binom(" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
};

inline BigInt binom(long a, long b, Trace* trace = nullptr) {
    if (a < 0) {
        if (trace != nullptr && (b >= 0 || b <= a)) {
            trace->flag(a, b);
        }
        return 0;
    }
    if (b < 0 || b > a) {
        return 0;
    }
    b = std::min(b, a - b);
    BigInt r = 1;
    for (long i = 1; i <= b; ++i) {
        r = r * (a - b + i) / i;
    }
    return r;
}

/// binom(a, b) for any integer a and b >= 0 as a(a-1)...(a-b+1)/b!; zero
/// for b < 0.
inline BigInt binom_falling(long a, long b) {
    if (b < 0) {
        return 0;
    }
    BigInt num = 1;
    for (long i = 0; i < b; ++i) {
        num *= (a - i);
    }
    return num / factorial(b);
}

constexpr int chi(bool s) noexcept { return s ? 1 : 0; }

constexpr int sign_pow(long k) noexcept { return (k % 2 == 0) ? 1 : -1; }

/// One displayed summand: sign * prod(num) * prod(num_fact!) /
/// (prod(den) * prod(den_fact!)).
struct FactorialTerm {
    long sign = 1;
    std::vector<long> num;
    std::vector<long> num_fact;
    std::vector<long> den;
    std::vector<long> den_fact;
};

inline Rational evaluate(const FactorialTerm& term) {
    for (long m : term.den_fact) {
        if (m < 0) {
            return 0;
        }
    }
    for (long m : term.num_fact) {
        if (m < 0) {
            throw DomainError("negative factorial " + std::to_string(m) + " in a numerator");
        }
    }
    for (long v : term.den) {
        if (v == 0) {
            throw DomainError("zero divisor in a closed-form term");
        }
    }
    BigInt num = term.sign;
    BigInt den = 1;
    for (long v : term.num) {
        num *= v;
    }
    for (long m : term.num_fact) {
        num *= factorial(m);
    }
    for (long v : term.den) {
        den *= v;
    }
    for (long m : term.den_fact) {
        den *= factorial(m);
    }
    return Rational(num, den);
}

namespace detail {

inline BigInt integral(const Rational& q, const char* what) {
    if (!is_integer(q)) {
        throw DomainError(std::string(what) + " evaluated to the non-integer " + to_string(q));
    }
    return boost::multiprecision::numerator(q);
}

inline void require(bool ok, const std::string& message) {
    if (!ok) {
        throw std::invalid_argument(message);
    }
}

inline void require_nonneg(std::initializer_list<long> values) {
    for (long v : values) {
        require(v >= 0, "parameters must be non-negative");
    }
}

/// The alternating b-sum shared by the straight and skew refined counts,
/// written with s = e - shift (shift = 0 straight, shift = f skew) and the
/// sign exponent offset chosen by the caller.
inline Rational b_sum(long n, long c, long d, long e, long shift, long sign_offset) {
    Rational sum = 0;
    for (long b = n - c - e + shift + 1; b <= n - e + shift + 1; ++b) {
        sum += evaluate({sign_pow(n - b - c - e + shift + sign_offset),
                         {n - b},
                         {n - 1},
                         {b},
                         {d, b - 1 - d, e - shift - 1, n - b - e + shift + 1}});
    }
    return sum;
}

} // namespace detail

/// Tableaux of shape (e+t, e) with c+e+t entries in row 1 and d+e in row 2.
inline BigInt count_thm1(long n, long t, long c, long d, long e, Trace* trace = nullptr) {
    detail::require_nonneg({t, c, d, e});
    detail::require(n >= 1, "n must be positive");
    detail::require(c + d + 2 * e + t == n, "parameters must satisfy c + d + 2e + t = n");
    Rational v = chi(e == 0) * binom(n - 1, t - 1, trace);
    v += evaluate({1, {}, {n - 1}, {d + e}, {c, d, e - 1, e + t - 1}});
    v -= detail::b_sum(n, c, d, e, 0, -1);
    return detail::integral(v, "count_thm1");
}

/// Tableaux of shape (e+t, e) with n entries.
inline BigInt count_cor2(long n, long t, long e, Trace* trace = nullptr) {
    detail::require_nonneg({t, e});
    detail::require(n >= 1, "n must be positive");
    Rational v = chi(e == 0) * binom(n - 1, t - 1, trace);
    for (long d = 0; d <= n - 2 * e - t; ++d) {
        const std::vector<long> den_fact{n - d - 2 * e - t, d, e - 1, e + t - 1};
        v += evaluate({1, {}, {n - 1}, {d + e}, den_fact});
        v -= evaluate({1, {n - d - e - t - 1}, {n - 1}, {d + e + t + 1, d + e + t}, den_fact});
    }
    return detail::integral(v, "count_cor2");
}

/// Tableaux of straight shape with first row longer by t, m entries in
/// row 1 and n in total. Undefined for n = 1.
inline BigInt count_cor3(long n, long t, long m, Trace* trace = nullptr) {
    detail::require_nonneg({t});
    detail::require(m >= 1 && n >= 1, "n and m must be positive");
    detail::require(m <= n, "m must not exceed n");
    if (n == 1) {
        throw DomainError("count_cor3 is undefined for n = 1 (factor 1/(n-1))");
    }
    Rational v = chi(m == n) * binom(n - 1, t - 1, trace);
    v += Rational(chi(m < n) * t, n - 1) * Rational(binom(n, m, trace) * binom(n - 1, m - t - 1, trace));
    v += Rational(1, n - 1) * Rational(binom(n - 1, m, trace) * binom(n - 1, m - t - 1, trace));
    return detail::integral(v, "count_cor3");
}

/// Tableaux of straight shape with first row longer by t and n entries.
inline BigInt count_cor4(long n, long t, Trace* trace = nullptr) {
    detail::require_nonneg({t});
    detail::require(n >= 1, "n must be positive");
    return binom(2 * n - 2, n - t - 1, trace) - binom(2 * n - 2, n - t - 2, trace) + binom(n - 2, t - 2, trace);
}

/// Expected second-row length over the tableaux counted by count_cor4;
/// nullopt when that count is zero.
inline std::optional<Rational> expected_thm5(long n, long t, Trace* trace = nullptr) {
    detail::require_nonneg({t});
    detail::require(n >= 2, "n must be at least 2");
    const BigInt num = binom(2 * n - 4, n - t - 1, trace) + (n - 2) * binom(2 * n - 4, n - t - 3, trace) -
                       (n + 1) * binom(2 * n - 4, n - t - 4, trace) - binom(n - 3, t - 2, trace);
    const BigInt den = count_cor4(n, t, trace);
    if (den == 0) {
        return std::nullopt;
    }
    return Rational(num, den);
}

namespace detail {

/// The skew refined count before the integrality check.
inline Rational thm6_value(long n, long f, long t, long c, long d, long e, Trace* trace) {
    require_nonneg({t, c, d, e});
    require(n >= 1, "n must be positive");
    require(f >= 1, "f must be positive");
    require(c + d + 2 * e - f + t == n, "parameters must satisfy c + d + 2e - f + t = n");
    Rational v = 0;
    if (t < f) {
        v += chi(t == 0 && e == f) * binom(n - 1, f - 1, trace);
        v -= evaluate({1, {c + e - f + t}, {n - 1}, {c + e - f, c + e + t}, {c, d, e - f - 1, e + t - 1}});
        v += evaluate({1, {}, {n}, {c + e - f + t, d + e}, {c, d, e - 1, e - f + t - 1}});
        v += evaluate({1,
                       {t},
                       {n - 1, n - d - f - 1},
                       {n - d - e, c + e - f},
                       {c, d, n - d - 1, e - f - 1, e - f + t - 1}});
    } else {
        v += chi(d == 0 && e == 0) * binom(n - 1, t - f - 1, trace);
        v += evaluate({1, {}, {n}, {c + e - f + t, d + e}, {c, d, e - 1, e - f + t - 1}});
        v -= evaluate({1, {}, {n - 1}, {c + e + t}, {c, d, e - f - 1, e + t - 1}});
    }
    v += b_sum(n, c, d, e, f, 0);
    return v;
}

} // namespace detail

/// Tableaux of shape (e+t, e)/(f, 0) with c+e+t-f entries in row 1 and
/// d+e in row 2.
inline BigInt count_thm6(long n, long f, long t, long c, long d, long e, Trace* trace = nullptr) {
    return detail::integral(detail::thm6_value(n, f, t, c, d, e, trace), "count_thm6");
}

/// Tableaux of shape (e+t, e)/(f, 0), any e, with n entries. The k-sums
/// stop at k = n, beyond which every term vanishes.
inline BigInt count_thm7(long n, long f, long t, Trace* trace = nullptr) {
    detail::require_nonneg({t});
    detail::require(n >= 1, "n must be positive");
    detail::require(f >= 1, "f must be positive");
    BigInt v = 0;
    if (t < f) {
        v += chi(t == 0) * binom(n - 1, f - 1, trace);
        v += binom(2 * n - 2, n - f + t - 1, trace) - binom(2 * n - 3, n - f - 1, trace) -
             binom(2 * n - 2, n - f - t - 2, trace) + binom(2 * n - 3, n - f - t - 1, trace);
        for (long k = f - t; k <= n; ++k) {
            const long a = 2 * n + k - f + t - 3;
            const BigInt inner = -binom(a, n - k - 1, trace) + binom(a, n - k - 2, trace) +
                                 binom(a, n - k - t - 1, trace) - binom(a, n - k - 2 * t - 1, trace);
            v += sign_pow(k - f + t) * binom(k - 1, f - t - 1, trace) * inner;
        }
    } else {
        v += binom(n - 1, t - f - 1, trace) + 2 * binom(2 * n - 3, n + f - t - 2, trace) -
             binom(2 * n - 2, n - f - t - 2, trace);
        for (long k = t - f + 1; k <= n; ++k) {
            const long a = 2 * n + k + f - t - 3;
            v += sign_pow(k - t - f - 1) * binom(k - 1, t - f - 1, trace) *
                 (binom(a, n - k - 1, trace) - binom(a, n - k - 2, trace));
        }
    }
    return v;
}

/// count_thm7 at t = f in its collapsed form.
inline BigInt remark_1_10(long n, long t, Trace* trace = nullptr) {
    detail::require(n >= 1, "n must be positive");
    detail::require(t >= 1, "t must be positive");
    return 2 * binom(2 * n - 3, n - 2, trace) - binom(2 * n - 2, n - 2 * t - 2, trace);
}

/// Left side of sum_{L=0}^{K} (-1)^{K-L} binom(M, L) = binom(M-1, K).
inline BigInt alternating_binomial_sum(long m, long k) {
    BigInt sum = 0;
    for (long l = 0; l <= k; ++l) {
        sum += sign_pow(k - l) * binom(m, l);
    }
    return sum;
}

inline BigInt catalan(long e) {
    std::vector<BigInt> c{1};
    for (long k = 1; k <= e; ++k) {
        BigInt next = 0;
        for (long i = 0; i < k; ++i) {
            next += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k - 1 - i)];
        }
        c.push_back(next);
    }
    return c.back();
}

} // namespace svt
