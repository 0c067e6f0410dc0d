#pragma once

// Coefficient-extraction identities: each entry pairs one summand of the
// generating functions (built by GfContext) with a closed expression for
// its coefficient of z^n.

#include "svt/formulas.hpp"
#include "svt/genfun.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace svt {

enum class LemmaKind {
    Symbolic,        // full polynomial in x, y, alpha
    AtOne,           // x = y = alpha = 1
    AlphaDerivative, // x = y = 1, d/d alpha, then alpha = 1
};

struct LemmaParams {
    int f = 0;
    int t = 0;
    auto operator<=>(const LemmaParams&) const = default;
};

struct Lemma {
    int id = 0;
    LemmaKind kind = LemmaKind::Symbolic;
    std::string summary;
    std::vector<LemmaParams> grid;
    std::function<ZSeries(const GfContext&, LemmaParams)> lhs;
    std::function<MultiPoly(long n, LemmaParams, Trace*)> rhs;

    Weights weights() const {
        switch (kind) {
        case LemmaKind::Symbolic: return Weights::symbolic();
        case LemmaKind::AtOne: return Weights::constant(1, 1, 1);
        case LemmaKind::AlphaDerivative: return Weights::alpha_only(1, 1);
        }
        return {};
    }

    /// [z^n] of the left side, reduced according to the kind.
    MultiPoly lhs_coefficient(const ZSeries& s, int n) const {
        if (kind == LemmaKind::AlphaDerivative) {
            return MultiPoly(to_integer(s[n].alpha_derivative().evaluate(1, 1, 1)));
        }
        return s[n];
    }
};

namespace detail {

/// Sum over c, d, e >= 0 with c + d + 2e + shift = n of x^c y^d alpha^e
/// times the value of `term`, which must be an integer for each triple.
template <typename Term>
MultiPoly cde_sum(long n, long shift, Term&& term) {
    MultiPoly out;
    for (long e = 0; 2 * e + shift <= n; ++e) {
        for (long d = 0; d + 2 * e + shift <= n; ++d) {
            const long c = n - d - 2 * e - shift;
            const Rational v = term(c, d, e);
            if (!is_integer(v)) {
                throw DomainError("non-integer coefficient " + to_string(v) + " at (c,d,e) = (" + std::to_string(c) +
                                  "," + std::to_string(d) + "," + std::to_string(e) + ")");
            }
            out.add_term({static_cast<int>(c), static_cast<int>(d), static_cast<int>(e)},
                         boost::multiprecision::numerator(v));
        }
    }
    return out;
}

inline std::vector<LemmaParams> straight_grid() { return {{0, 0}, {0, 1}, {0, 2}, {0, 3}}; }

inline std::vector<LemmaParams> skew_below_grid() {
    std::vector<LemmaParams> g;
    for (int f = 1; f <= 3; ++f) {
        for (int t = 0; t < f; ++t) {
            g.push_back({f, t});
        }
    }
    return g;
}

inline std::vector<LemmaParams> skew_above_grid() {
    std::vector<LemmaParams> g;
    for (int f = 1; f <= 3; ++f) {
        for (int t = f; t <= 3; ++t) {
            g.push_back({f, t});
        }
    }
    return g;
}

inline std::vector<LemmaParams> skew_full_grid() {
    std::vector<LemmaParams> g;
    for (int f = 1; f <= 3; ++f) {
        for (int t = 0; t <= 3; ++t) {
            g.push_back({f, t});
        }
    }
    return g;
}

// sum_{k >= lo}^{n} (-1)^{k + sign_shift} binom(k-1, r) * body(k)
template <typename Body>
BigInt k_sum(long n, long lo, long sign_shift, long r, Trace* tr, Body&& body) {
    BigInt sum = 0;
    for (long k = lo; k <= n; ++k) {
        sum += sign_pow(k + sign_shift) * binom(k - 1, r, tr) * body(k);
    }
    return sum;
}

// The b-sum of the straight and shifted refined expansions, including its
// leading minus sign.
inline Rational minus_b_sum(long n, long c, long d, long e, long f) {
    Rational sum = 0;
    for (long b = n - c - e + f + 1; b <= n - e + f + 1; ++b) {
        sum -= evaluate({sign_pow(n - b - c - e + f + 1),
                         {n - b},
                         {n - 1},
                         {b},
                         {d, b - 1 - d, e - f - 1, n - b - e + f + 1}});
    }
    return sum;
}

} // namespace detail

/// Entries 12 through 36, in order.
inline const std::vector<Lemma>& lemma_registry() {
    using detail::cde_sum;
    using detail::k_sum;
    using LP = LemmaParams;
    static const std::vector<Lemma> registry = [] {
        std::vector<Lemma> r;

        r.push_back({12, LemmaKind::Symbolic, "(z/(1-xz))^t", detail::straight_grid(),
                     [](const GfContext& g, LP p) { return g.straight_term(1, p.t); },
                     [](long n, LP p, Trace* tr) {
                         return MultiPoly::monomial({static_cast<int>(std::max(0L, n - p.t)), 0, 0},
                                                    n >= p.t ? binom(n - 1, p.t - 1, tr) : BigInt(0));
                     }});

        r.push_back({13, LemmaKind::Symbolic, "alpha (zM)^{t+2} / ((1+xzM)(1+yzM))", detail::straight_grid(),
                     [](const GfContext& g, LP p) { return g.straight_term(2, p.t); },
                     [](long n, LP p, Trace*) {
                         return cde_sum(n, p.t, [&](long c, long d, long e) {
                             return evaluate({1, {}, {n - 1}, {n - c - e}, {c, d, e - 1, n - c - d - e - 1}}) +
                                    detail::minus_b_sum(n, c, d, e, 0);
                         });
                     }});

        r.push_back({14, LemmaKind::Symbolic, "alpha zM ((zM)^t - (z/(1-xz))^t) / ((y+alpha zM)(1+yzM))",
                     detail::straight_grid(), [](const GfContext& g, LP p) { return g.straight_term(3, p.t); },
                     [](long n, LP p, Trace*) {
                         return cde_sum(n, p.t, [&](long c, long d, long e) {
                             return evaluate(
                                 {1, {p.t}, {n - 1}, {d + e, n - c - e}, {n - c - d - e - 1, c, d, e - 1}});
                         });
                     }});

        r.push_back({15, LemmaKind::AtOne, "(zM)^{t+2} / (1+zM)^2", detail::straight_grid(),
                     [](const GfContext& g, LP p) { return g.straight_term(2, p.t); },
                     [](long n, LP p, Trace* tr) {
                         const long t = p.t;
                         return MultiPoly(binom(2 * n - 3, n - t - 2, tr) - binom(2 * n - 3, n - t - 3, tr));
                     }});

        r.push_back({16, LemmaKind::AtOne, "zM ((zM)^t - (z/(1-z))^t) / (1+zM)^2", detail::straight_grid(),
                     [](const GfContext& g, LP p) { return g.straight_term(3, p.t); },
                     [](long n, LP p, Trace* tr) {
                         const long t = p.t;
                         return MultiPoly(binom(2 * n - 3, n - t - 1, tr) - binom(2 * n - 3, n - t - 2, tr) -
                                          binom(n - 2, t - 1, tr));
                     }});

        r.push_back({17, LemmaKind::AlphaDerivative, "d/dalpha alpha (zM)^{t+2} / (1+zM)^2 at alpha = 1",
                     detail::straight_grid(), [](const GfContext& g, LP p) { return g.straight_term(2, p.t); },
                     [](long n, LP p, Trace* tr) {
                         const long t = p.t;
                         return MultiPoly(binom(2 * n - 5, n - t - 2, tr) + binom(2 * n - 5, n - t - 3, tr) +
                                          (n - 3) * binom(2 * n - 5, n - t - 4, tr) -
                                          (n + 1) * binom(2 * n - 5, n - t - 5, tr));
                     }});

        r.push_back({18, LemmaKind::AlphaDerivative,
                     "d/dalpha alpha zM ((zM)^t - (z/(1-z))^t) / ((1+alpha zM)(1+zM)) at alpha = 1",
                     detail::straight_grid(), [](const GfContext& g, LP p) { return g.straight_term(3, p.t); },
                     [](long n, LP p, Trace* tr) {
                         const long t = p.t;
                         return MultiPoly(binom(2 * n - 5, n - t - 1, tr) + (n - 3) * binom(2 * n - 5, n - t - 3, tr) -
                                          n * binom(2 * n - 5, n - t - 4, tr) - binom(n - 3, n - t - 1, tr));
                     }});

        // Parameterised by f alone; stored with t = 0.
        r.push_back({19, LemmaKind::Symbolic, "(alpha z/(1-yz))^f", {{1, 0}, {2, 0}, {3, 0}},
                     [](const GfContext& g, LP p) { return g.skew_lt_term(1, p.f, 0); },
                     [](long n, LP p, Trace* tr) {
                         return MultiPoly::monomial({0, static_cast<int>(std::max(0L, n - p.f)), p.f},
                                                    n >= p.f ? binom(n - 1, p.f - 1, tr) : BigInt(0));
                     }});

        r.push_back({20, LemmaKind::Symbolic,
                     "alpha^{f+1} (zM)^{t+1} / (1+xzM) * ((zM)^f - (z/(1-yz))^f) / (x+alpha zM)",
                     detail::skew_below_grid(), [](const GfContext& g, LP p) { return g.skew_lt_term(2, p.f, p.t); },
                     [](long n, LP p, Trace*) {
                         const long f = p.f;
                         return cde_sum(n, p.t - f, [&](long c, long d, long e) {
                             return evaluate({1,
                                              {f},
                                              {n - 1},
                                              {c + e - f, n - d - e + f},
                                              {n - c - d - e + f - 1, c, d, e - f - 1}});
                         });
                     }});

        r.push_back({21, LemmaKind::Symbolic,
                     "alpha^{f-t+1} zM ((zM)^{f-t} - (z/(1-yz))^{f-t}) / (x+alpha zM) * (1-q^t)/(1-q)",
                     detail::skew_below_grid(), [](const GfContext& g, LP p) { return g.skew_lt_term(3, p.f, p.t); },
                     [](long n, LP p, Trace*) {
                         const long f = p.f;
                         const long t = p.t;
                         return cde_sum(n, t - f, [&](long c, long d, long e) {
                             return evaluate({1, {}, {n - 1}, {c + e - f + t}, {c, d, e - f + t - 1, e - 1}}) -
                                    evaluate({1,
                                              {},
                                              {n - 1, n - d - f + t - 1},
                                              {c + e - f + t},
                                              {c, d, n - d - 1, e - f + t - 1, e - f + t - 1}}) -
                                    evaluate({1, {}, {n - 1}, {c + e - f}, {c, d, e - f - 1, e + t - 1}}) +
                                    evaluate({1,
                                              {},
                                              {n - 1, n - d - f + t - 1},
                                              {c + e - f},
                                              {c, d, n - d - 1, e - f - 1, e - f + 2 * t - 1}});
                         });
                     }});

        r.push_back({22, LemmaKind::Symbolic,
                     "(alpha z/(1-yz))^{f-t} (1-(alpha z^2 M/(1-yz))^t)/(1+xzM) * alpha (zM)^2/(1-q)",
                     detail::skew_below_grid(), [](const GfContext& g, LP p) { return g.skew_lt_term(4, p.f, p.t); },
                     [](long n, LP p, Trace*) {
                         const long f = p.f;
                         const long t = p.t;
                         return cde_sum(n, t - f, [&](long c, long d, long e) {
                             return evaluate({1,
                                              {},
                                              {n - 1, n - d - f + t - 1},
                                              {n - d - e},
                                              {c, d, n - d - 1, e - f + t - 1, e - f + t - 1}}) -
                                    evaluate({1,
                                              {},
                                              {n - 1, n - d - f - 1},
                                              {n - d - e},
                                              {c, d, n - d - 1, e - f - 1, e - f + t - 1}});
                         });
                     }});

        r.push_back({23, LemmaKind::Symbolic,
                     "alpha^{f+1} (z/(1-yz))^{f-t} ((z/(1-yz))^t - (zM)^t)/(x+alpha zM) * (zM)^{t+1}/(1-q)",
                     detail::skew_below_grid(), [](const GfContext& g, LP p) { return g.skew_lt_term(5, p.f, p.t); },
                     [](long n, LP p, Trace*) {
                         const long f = p.f;
                         const long t = p.t;
                         return cde_sum(n, t - f, [&](long c, long d, long e) {
                             return evaluate({1,
                                              {},
                                              {n - 1, n - d - f - 1},
                                              {c + e - f},
                                              {c, d, n - d - 1, e - f + t - 1, e - f - 1}}) -
                                    evaluate({1,
                                              {},
                                              {n - 1, n - d - f + t - 1},
                                              {c + e - f},
                                              {c, d, n - d - 1, e - f + 2 * t - 1, e - f - 1}});
                         });
                     }});

        r.push_back({24, LemmaKind::Symbolic, "alpha^{f+1} (zM)^{f+t+2} / ((1+yzM)(1+xzM))",
                     detail::skew_full_grid(),
                     [](const GfContext& g, LP p) {
                         return p.t < p.f ? g.skew_lt_term(6, p.f, p.t) : g.skew_ge_term(3, p.f, p.t);
                     },
                     [](long n, LP p, Trace*) {
                         const long f = p.f;
                         return cde_sum(n, p.t - f, [&](long c, long d, long e) {
                             return evaluate({1, {}, {n - 1}, {n - c - e + f}, {c, d, e - f - 1, n - c - d - e + f - 1}}) +
                                    detail::minus_b_sum(n, c, d, e, f);
                         });
                     }});

        r.push_back({25, LemmaKind::Symbolic, "(1-q^t)/(1-q) * alpha^{f-t+1} (zM)^{f-t+2} / (1+yzM)",
                     detail::skew_below_grid(), [](const GfContext& g, LP p) { return g.skew_lt_term(7, p.f, p.t); },
                     [](long n, LP p, Trace*) {
                         const long f = p.f;
                         const long t = p.t;
                         return cde_sum(n, t - f, [&](long c, long d, long e) {
                             return evaluate({1, {}, {n - 1}, {n - c - e + f - t}, {c, d, e - f + t - 1, e - 1}}) -
                                    evaluate({1, {}, {n - 1}, {n - c - e + f}, {c, d, e - f - 1, e + t - 1}});
                         });
                     }});

        r.push_back({26, LemmaKind::Symbolic,
                     "(alpha (zM)^{t-f+2} - alpha^{f+1} (zM)^{f+t+2}) / ((1+xzM)(1-q))", detail::skew_above_grid(),
                     [](const GfContext& g, LP p) { return g.skew_ge_term(2, p.f, p.t); },
                     [](long n, LP p, Trace*) {
                         const long f = p.f;
                         const long t = p.t;
                         return cde_sum(n, t - f, [&](long c, long d, long e) {
                             return evaluate({1, {}, {n - 1}, {n - d - e}, {c, d, e - 1, e - f + t - 1}}) -
                                    evaluate({1, {}, {n - 1}, {n - d - e + f}, {c, d, e - f - 1, e + t - 1}});
                         });
                     }});

        r.push_back({27, LemmaKind::Symbolic,
                     "alpha zM ((zM)^{t-f} - (z/(1-xz))^{t-f}) / ((y+alpha zM)(1+yzM))", detail::skew_above_grid(),
                     [](const GfContext& g, LP p) { return g.skew_ge_term(4, p.f, p.t); },
                     [](long n, LP p, Trace*) {
                         const long g = p.t - p.f;
                         return cde_sum(n, g, [&](long c, long d, long e) {
                             return evaluate({1, {g}, {n - 1}, {d + e, n - c - e}, {n - c - d - e - 1, c, d, e - 1}});
                         });
                     }});

        r.push_back({28, LemmaKind::Symbolic, "alpha (zM)^{t-f+2} / (1+yzM) * (1-q^f)/(1-q)",
                     detail::skew_above_grid(), [](const GfContext& g, LP p) { return g.skew_ge_term(5, p.f, p.t); },
                     [](long n, LP p, Trace*) {
                         const long f = p.f;
                         const long t = p.t;
                         return cde_sum(n, t - f, [&](long c, long d, long e) {
                             return evaluate({1, {}, {n - 1}, {d + e - f + t}, {c, d, e - 1, e - f + t - 1}}) -
                                    evaluate({1, {}, {n - 1}, {d + e + t}, {c, d, e - f - 1, e + t - 1}});
                         });
                     }});

        r.push_back({29, LemmaKind::AtOne, "(zM)^{t+1} ((zM)^f - (z/(1-z))^f) / (1+zM)^2",
                     detail::skew_below_grid(), [](const GfContext& g, LP p) { return g.skew_lt_term(2, p.f, p.t); },
                     [](long n, LP p, Trace* tr) {
                         const long f = p.f;
                         const long t = p.t;
                         return MultiPoly(k_sum(n, f + 1, -f + 1, f - 1, tr, [&](long k) {
                             const long a = 2 * n - 3 + k - f;
                             return binom(a, n - k - t - 1, tr) - binom(a, n - k - t - 2, tr);
                         }));
                     }});

        r.push_back({30, LemmaKind::AtOne, "zM ((zM)^{f-t} - (z/(1-z))^{f-t}) / (1+zM) * (1-q^t)/(1-q)",
                     detail::skew_below_grid(), [](const GfContext& g, LP p) { return g.skew_lt_term(3, p.f, p.t); },
                     [](long n, LP p, Trace* tr) {
                         const long f = p.f;
                         const long t = p.t;
                         return MultiPoly(k_sum(n, f - t + 1, -f + t + 1, f - t - 1, tr, [&](long k) {
                             const long a = 2 * n + k - f + t - 3;
                             return binom(a, n - k - 1, tr) - binom(a, n - k - t - 1, tr);
                         }));
                     }});

        r.push_back({31, LemmaKind::AtOne, "(z/(1-z))^{f-t} (1-(z^2 M/(1-z))^t)/(1+zM) * (zM)^2/(1-q)",
                     detail::skew_below_grid(), [](const GfContext& g, LP p) { return g.skew_lt_term(4, p.f, p.t); },
                     [](long n, LP p, Trace* tr) {
                         const long f = p.f;
                         const long t = p.t;
                         return MultiPoly(
                             k_sum(n, f - t, -f + t, f - t - 1, tr,
                                   [&](long k) { return binom(2 * n + k - f + t - 3, n - k - 2, tr); }) -
                             k_sum(n, f, -f, f - 1, tr,
                                   [&](long k) { return binom(2 * n + k - f - 3, n - k - t - 2, tr); }));
                     }});

        r.push_back({32, LemmaKind::AtOne, "-(z/(1-z))^{f-t} ((zM)^t - (z/(1-z))^t)/(1+zM) * (zM)^{t+1}/(1-q)",
                     detail::skew_below_grid(), [](const GfContext& g, LP p) { return g.skew_lt_term(5, p.f, p.t); },
                     [](long n, LP p, Trace* tr) {
                         const long f = p.f;
                         const long t = p.t;
                         return MultiPoly(
                             k_sum(n, f, -f, f - 1, tr,
                                   [&](long k) { return binom(2 * n + k - f - 3, n - k - t - 1, tr); }) -
                             k_sum(n, f - t, -f + t, f - t - 1, tr,
                                   [&](long k) { return binom(2 * n + k - f + t - 3, n - k - 2 * t - 1, tr); }));
                     }});

        r.push_back({33, LemmaKind::AtOne, "(zM)^{f+t+2} / (1+zM)^2", detail::skew_full_grid(),
                     [](const GfContext& g, LP p) {
                         return p.t < p.f ? g.skew_lt_term(6, p.f, p.t) : g.skew_ge_term(3, p.f, p.t);
                     },
                     [](long n, LP p, Trace* tr) {
                         const long s = p.f + p.t;
                         return MultiPoly(binom(2 * n - 3, n - s - 2, tr) - binom(2 * n - 3, n - s - 3, tr));
                     }});

        r.push_back({34, LemmaKind::AtOne, "(1-q^t)/(1-q) * (zM)^{f-t+2} / (1+zM)", detail::skew_below_grid(),
                     [](const GfContext& g, LP p) { return g.skew_lt_term(7, p.f, p.t); },
                     [](long n, LP p, Trace* tr) {
                         const long f = p.f;
                         const long t = p.t;
                         return MultiPoly(binom(2 * n - 3, n - f + t - 2, tr) - binom(2 * n - 3, n - f - t - 2, tr));
                     }});

        r.push_back({35, LemmaKind::AtOne, "((zM)^{t-f+2} - (zM)^{f+t+2}) / ((1+zM)(1-q))",
                     detail::skew_above_grid(), [](const GfContext& g, LP p) { return g.skew_ge_term(2, p.f, p.t); },
                     [](long n, LP p, Trace* tr) {
                         const long f = p.f;
                         const long t = p.t;
                         return MultiPoly(binom(2 * n - 3, n + f - t - 2, tr) - binom(2 * n - 3, n - f - t - 2, tr));
                     }});

        r.push_back({36, LemmaKind::AtOne, "zM ((zM)^{t-f} - (z/(1-z))^{t-f}) / (1+zM)^2", detail::skew_above_grid(),
                     [](const GfContext& g, LP p) { return g.skew_ge_term(4, p.f, p.t); },
                     [](long n, LP p, Trace* tr) {
                         const long f = p.f;
                         const long t = p.t;
                         return MultiPoly(k_sum(n, t - f + 1, -t - f - 1, t - f - 1, tr, [&](long k) {
                             const long a = 2 * n + k + f - t - 3;
                             return binom(a, n - k - 1, tr) - binom(a, n - k - 2, tr);
                         }));
                     }});
        return r;
    }();
    return registry;
}

inline const Lemma& lemma(int id) {
    const auto& reg = lemma_registry();
    for (const auto& l : reg) {
        if (l.id == id) {
            return l;
        }
    }
    throw std::invalid_argument("no identity with id " + std::to_string(id) + " (valid: 12..36)");
}

} // namespace svt
