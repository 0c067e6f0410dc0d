#pragma once

// Cross-checks between the tableau enumerator, the path enumerator, the
// series coefficients and the closed forms.

#include "svt/bijection.hpp"
#include "svt/formulas.hpp"
#include "svt/genfun.hpp"
#include "svt/lemmas.hpp"
#include "svt/motzkin.hpp"
#include "svt/shapes.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace svt {

/// monostate marks an undefined value (e.g. an average over no tableaux).
using Value = std::variant<std::monostate, BigInt, Rational, MultiPoly>;

inline std::string value_text(const Value& v) {
    if (std::holds_alternative<BigInt>(v)) {
        return to_string(std::get<BigInt>(v));
    }
    if (std::holds_alternative<Rational>(v)) {
        return to_string(std::get<Rational>(v), true);
    }
    if (std::holds_alternative<MultiPoly>(v)) {
        return std::get<MultiPoly>(v).str();
    }
    return "undefined";
}

enum class Status { Agree, Disagree, FormulaDomainExcluded, BuilderError };

inline const char* status_name(Status s) {
    switch (s) {
    case Status::Agree: return "agree";
    case Status::Disagree: return "disagree";
    case Status::FormulaDomainExcluded: return "formula-domain-excluded";
    case Status::BuilderError: return "builder-error";
    }
    return "?";
}

struct CheckReport {
    std::string check;
    std::vector<std::pair<std::string, long>> params;
    std::vector<std::pair<std::string, Value>> layers;
    Status status = Status::Agree;
    std::vector<std::string> notes;
    double seconds = 0; // not serialized

    std::string param_text() const {
        std::string out;
        for (const auto& [k, v] : params) {
            out += (out.empty() ? "" : " ") + k + "=" + std::to_string(v);
        }
        return out;
    }

    const Value* layer(const std::string& name) const {
        for (const auto& [k, v] : layers) {
            if (k == name) {
                return &v;
            }
        }
        return nullptr;
    }
};

inline nlohmann::ordered_json to_json(const CheckReport& r) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) {
        p[k] = v;
    }
    j["params"] = std::move(p);
    for (const auto& [k, v] : r.layers) {
        if (std::holds_alternative<BigInt>(v) && boost::multiprecision::abs(std::get<BigInt>(v)) < BigInt(1) << 62) {
            j[k] = static_cast<long long>(std::get<BigInt>(v));
        } else {
            j[k] = value_text(v);
        }
    }
    j["status"] = status_name(r.status);
    if (!r.notes.empty()) {
        j["notes"] = r.notes;
    }
    return j;
}

namespace detail {

/// Sets the status from the layer values. The closed form is the layer
/// named `formula_layer`; a lone disagreement there is excluded rather than
/// failed when the evaluation leaned on the binomial zero convention.
inline void classify(CheckReport& r, const Trace& trace, const std::string& formula_layer = "formula") {
    bool all_equal = true;
    for (std::size_t i = 1; i < r.layers.size(); ++i) {
        all_equal = all_equal && r.layers[i].second == r.layers[0].second;
    }
    if (all_equal) {
        r.status = Status::Agree;
        return;
    }
    std::vector<const Value*> others;
    const Value* formula = nullptr;
    for (const auto& [k, v] : r.layers) {
        if (k == formula_layer) {
            formula = &v;
        } else {
            others.push_back(&v);
        }
    }
    const bool others_agree = std::all_of(others.begin(), others.end(), [&](const Value* v) { return *v == *others.front(); });
    if (formula != nullptr && !others.empty() && others_agree && trace.convention_sensitive) {
        r.status = Status::FormulaDomainExcluded;
        for (const auto& note : trace.notes) {
            r.notes.push_back("zero convention used for " + note);
        }
    } else {
        r.status = Status::Disagree;
    }
}

/// Evaluates a closed form, turning a DomainError into a note and an
/// undefined value.
template <typename F>
Value guarded(CheckReport& r, F&& f) {
    try {
        return Value(f());
    } catch (const DomainError& e) {
        r.notes.emplace_back(e.what());
        return Value{};
    }
}

template <typename F>
CheckReport timed(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    CheckReport r = f();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace detail

/// A (c, d, e) triple names a realisable row-entry split: the shape exists
/// and a row without cells holds no entries.
inline bool feasible(long n, long f, long t, long c, long d, long e) {
    if (n < 1 || c < 0 || d < 0 || e < 0 || t < 0 || f < 0) {
        return false;
    }
    if (c + d + 2 * e - f + t != n || f > e + t) {
        return false;
    }
    if (e + t - f == 0 && c != 0) {
        return false;
    }
    return e != 0 || d == 0;
}

struct Grid {
    int n_min = 1;
    int n_max = 8;
    int t_max = 3;
    int f_min = 0;
    int f_max = 3;
    int oracle_max_n = 8; // tableau and path layers only up to here
};

/// Enumerates the feasible (c, d, e) for given n, f, t in increasing e, d.
inline std::vector<PathWeight> feasible_weights(long n, long f, long t) {
    std::vector<PathWeight> out;
    for (long e = 0; 2 * e <= n + f; ++e) {
        for (long d = 0; d <= n; ++d) {
            const long c = n - d - 2 * e + f - t;
            if (feasible(n, f, t, c, d, e)) {
                out.push_back({static_cast<int>(c), static_cast<int>(d), static_cast<int>(e)});
            }
        }
    }
    return out;
}

namespace detail {

/// Tableaux of shape (e+t, e)/(f, 0) with n entries, over all e.
inline BigInt cumulative_tableaux(int n, int f, int t, std::vector<std::pair<int, std::uint64_t>>* by_e = nullptr) {
    BigInt total = 0;
    for (int e = std::max(0, f - t); 2 * e + t - f <= n; ++e) {
        const TwoRowShape shape(e, t, f);
        if (shape.cell_count() == 0) {
            continue;
        }
        const auto k = count_tableaux(shape, n);
        total += k;
        if (by_e != nullptr) {
            by_e->emplace_back(e, k);
        }
    }
    return total;
}

inline BigInt coefficient_sum(const MultiPoly& p, const std::function<bool(const Monomial&)>& keep) {
    BigInt s = 0;
    for (const auto& [m, c] : p.terms()) {
        if (keep(m)) {
            s += c;
        }
    }
    return s;
}

} // namespace detail

/// Identifiers accepted by check_theorem.
inline const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids{"thm1", "cor2", "cor3", "cor4", "thm5", "thm6", "thm7", "remark"};
    return ids;
}

/// Runs one closed form over the grid. Series are built once per call.
inline std::vector<CheckReport> check_theorem(const std::string& id, const Grid& grid) {
    std::vector<CheckReport> out;
    if (grid.n_max < grid.n_min || grid.n_max < 1) {
        return out;
    }
    const int order = grid.n_max;
    const bool skew = id == "thm6" || id == "thm7" || id == "remark";
    const int f_lo = skew ? std::max(1, grid.f_min) : 0;
    const int f_hi = skew ? grid.f_max : 0;
    const auto oracle = [&](int n) { return n <= grid.oracle_max_n; };

    if (id == "thm1" || id == "thm6" || id == "cor2" || id == "cor3") {
        const GfContext ctx(order);
        for (int f = f_lo; f <= f_hi; ++f) {
            for (int t = 0; t <= grid.t_max; ++t) {
                const ZSeries gf = f == 0 ? ctx.straight(t) : ctx.skew(f, t);
                for (int n = std::max(1, grid.n_min); n <= grid.n_max; ++n) {
                    if (id == "thm1" || id == "thm6") {
                        for (const PathWeight& w : feasible_weights(n, f, t)) {
                            out.push_back(detail::timed([&] {
                                CheckReport r{id, {{"n", n}}, {}};
                                if (f > 0) {
                                    r.params.emplace_back("f", f);
                                }
                                r.params.insert(r.params.end(), {{"t", t}, {"c", w.c}, {"d", w.d}, {"e", w.e}});
                                if (oracle(n)) {
                                    const TwoRowShape shape(w.e, t, f);
                                    r.layers.emplace_back("tableau",
                                                          BigInt(count_tableaux(shape, n, RowFilter{w.c + w.e + t - f, w.d + w.e})));
                                    r.layers.emplace_back("path", BigInt(count_paths(n, f, t, w)));
                                }
                                r.layers.emplace_back("series", refined_coefficient(gf, n, w.c, w.d, w.e));
                                Trace tr;
                                r.layers.emplace_back("formula", detail::guarded(r, [&] {
                                                          return f == 0 ? count_thm1(n, t, w.c, w.d, w.e, &tr)
                                                                        : count_thm6(n, f, t, w.c, w.d, w.e, &tr);
                                                      }));
                                detail::classify(r, tr);
                                return r;
                            }));
                        }
                    } else if (id == "cor2") {
                        for (int e = 0; 2 * e + t <= n; ++e) {
                            if (e + t == 0) {
                                continue;
                            }
                            out.push_back(detail::timed([&] {
                                CheckReport r{id, {{"n", n}, {"t", t}, {"e", e}}, {}};
                                if (oracle(n)) {
                                    r.layers.emplace_back("tableau", BigInt(count_tableaux(TwoRowShape(e, t, 0), n)));
                                    std::uint64_t k = 0;
                                    for_each_path(n, 0, t, std::nullopt, [&](const ColouredPath& p) { k += weight(p).e == e; });
                                    r.layers.emplace_back("path", BigInt(k));
                                }
                                r.layers.emplace_back("series", detail::coefficient_sum(gf[n], [&](const Monomial& m) {
                                                          return m.a == e;
                                                      }));
                                Trace tr;
                                r.layers.emplace_back("formula", detail::guarded(r, [&] { return count_cor2(n, t, e, &tr); }));
                                detail::classify(r, tr);
                                return r;
                            }));
                        }
                    } else if (n >= 2) { // cor3
                        for (int m = 1; m <= n; ++m) {
                            out.push_back(detail::timed([&] {
                                CheckReport r{id, {{"n", n}, {"t", t}, {"m", m}}, {}};
                                if (oracle(n)) {
                                    BigInt tab = 0;
                                    for (int e = 0; 2 * e + t <= n; ++e) {
                                        if (e + t > 0) {
                                            tab += count_tableaux(TwoRowShape(e, t, 0), n, RowFilter{m, n - m});
                                        }
                                    }
                                    r.layers.emplace_back("tableau", tab);
                                    std::uint64_t k = 0;
                                    for_each_path(n, 0, t, std::nullopt, [&](const ColouredPath& p) {
                                        const PathWeight w = weight(p);
                                        k += w.c + w.e + t == m;
                                    });
                                    r.layers.emplace_back("path", BigInt(k));
                                }
                                r.layers.emplace_back("series", detail::coefficient_sum(gf[n], [&](const Monomial& mm) {
                                                          return mm.x + mm.a + t == m;
                                                      }));
                                Trace tr;
                                r.layers.emplace_back("formula", detail::guarded(r, [&] { return count_cor3(n, t, m, &tr); }));
                                detail::classify(r, tr);
                                return r;
                            }));
                        }
                    }
                }
            }
        }
        return out;
    }

    if (id == "cor4" || id == "thm7" || id == "remark") {
        const GfContext ctx(order, Weights::constant(1, 1, 1));
        for (int f = f_lo; f <= f_hi; ++f) {
            for (int t = 0; t <= grid.t_max; ++t) {
                if (id == "remark" && t != f) {
                    continue;
                }
                const ZSeries gf = f == 0 ? ctx.straight(t) : ctx.skew(f, t);
                for (int n = std::max(1, grid.n_min); n <= grid.n_max; ++n) {
                    out.push_back(detail::timed([&] {
                        CheckReport r{id, {{"n", n}}, {}};
                        if (f > 0) {
                            r.params.emplace_back("f", f);
                        }
                        r.params.emplace_back("t", t);
                        if (oracle(n)) {
                            r.layers.emplace_back("tableau", detail::cumulative_tableaux(n, f, t));
                            r.layers.emplace_back("path", BigInt(count_paths(n, f, t)));
                        }
                        r.layers.emplace_back("series", *gf[n].as_constant());
                        Trace tr;
                        r.layers.emplace_back("formula", detail::guarded(r, [&] {
                                                  return id == "cor4"   ? count_cor4(n, t, &tr)
                                                         : id == "thm7" ? count_thm7(n, f, t, &tr)
                                                                        : remark_1_10(n, t, &tr);
                                              }));
                        detail::classify(r, tr);
                        return r;
                    }));
                }
            }
        }
        return out;
    }

    if (id == "thm5") {
        for (int t = 0; t <= grid.t_max; ++t) {
            const auto series = expected_downsteps_series(t, order);
            for (int n = std::max(2, grid.n_min); n <= grid.n_max; ++n) {
                out.push_back(detail::timed([&] {
                    CheckReport r{id, {{"n", n}, {"t", t}}, {}};
                    const auto as_value = [](const std::optional<Rational>& q) { return q ? Value(*q) : Value{}; };
                    if (oracle(n)) {
                        std::vector<std::pair<int, std::uint64_t>> by_e;
                        const BigInt total = detail::cumulative_tableaux(n, 0, t, &by_e);
                        BigInt weighted = 0;
                        for (const auto& [e, k] : by_e) {
                            weighted += BigInt(e) * k;
                        }
                        r.layers.emplace_back("tableau", as_value(total == 0 ? std::nullopt
                                                                             : std::optional<Rational>(Rational(weighted, total))));
                        std::uint64_t count = 0;
                        std::uint64_t downs = 0;
                        for_each_path(n, 0, t, std::nullopt, [&](const ColouredPath& p) {
                            ++count;
                            downs += static_cast<std::uint64_t>(weight(p).e);
                        });
                        r.layers.emplace_back("path", as_value(count == 0 ? std::nullopt
                                                                          : std::optional<Rational>(Rational(downs, count))));
                    }
                    r.layers.emplace_back("series", as_value(series[static_cast<std::size_t>(n)]));
                    Trace tr;
                    r.layers.emplace_back("formula", as_value(expected_thm5(n, t, &tr)));
                    detail::classify(r, tr);
                    return r;
                }));
            }
        }
        return out;
    }

    throw std::invalid_argument("unknown check id '" + id + "'");
}

/// One identity at one n: [z^n] of the left side against the right side.
inline CheckReport check_lemma(const Lemma& lem, LemmaParams p, int n, const GfContext& ctx) {
    return detail::timed([&] {
        CheckReport r{"lemma" + std::to_string(lem.id), {{"n", n}}, {}};
        if (lem.id == 19) {
            r.params.emplace_back("f", p.f);
        } else {
            if (p.f > 0) {
                r.params.emplace_back("f", p.f);
            }
            r.params.emplace_back("t", p.t);
        }
        Trace tr;
        try {
            r.layers.emplace_back("series", lem.lhs_coefficient(lem.lhs(ctx, p), n));
        } catch (const NonExactDivision& e) {
            r.status = Status::BuilderError;
            r.notes.emplace_back(e.what());
            return r;
        }
        r.layers.emplace_back("formula", detail::guarded(r, [&] { return lem.rhs(n, p, &tr); }));
        detail::classify(r, tr);
        return r;
    });
}

inline CheckReport check_lemma(int id, LemmaParams p, int n, int order = -1) {
    const Lemma& lem = lemma(id);
    const GfContext ctx(order < 0 ? n : order, lem.weights());
    return check_lemma(lem, p, n, ctx);
}

inline std::vector<CheckReport> check_lemmas(int n_max) {
    std::vector<CheckReport> out;
    if (n_max < 1) {
        return out;
    }
    std::map<int, GfContext> contexts;
    for (const Lemma& lem : lemma_registry()) {
        const int key = static_cast<int>(lem.kind);
        auto it = contexts.find(key);
        if (it == contexts.end()) {
            it = contexts.emplace(key, GfContext(n_max, lem.weights())).first;
        }
        for (const LemmaParams& p : lem.grid) {
            for (int n = 1; n <= n_max; ++n) {
                out.push_back(check_lemma(lem, p, n, it->second));
            }
        }
    }
    return out;
}

/// The summation chains linking the refined and cumulative formulas, over
/// feasible parameter triples.
inline std::vector<CheckReport> check_chains(int n_max, int t_max = 3, int f_max = 3) {
    std::vector<CheckReport> out;
    const auto push = [&](std::string id, std::vector<std::pair<std::string, long>> params, const std::function<BigInt(Trace*)>& sum,
                          const std::function<BigInt(Trace*)>& target) {
        out.push_back(detail::timed([&] {
            CheckReport r{std::move(id), std::move(params), {}};
            Trace tr;
            r.layers.emplace_back("sum", detail::guarded(r, [&] { return sum(&tr); }));
            r.layers.emplace_back("formula", detail::guarded(r, [&] { return target(&tr); }));
            detail::classify(r, tr);
            return r;
        }));
    };
    for (int n = 1; n <= n_max; ++n) {
        for (int t = 0; t <= t_max; ++t) {
            for (int e = 0; 2 * e + t <= n; ++e) {
                if (e + t == 0) {
                    continue;
                }
                push("chain-thm1-cor2", {{"n", n}, {"t", t}, {"e", e}},
                     [&](Trace* tr) {
                         BigInt s = 0;
                         for (const auto& w : feasible_weights(n, 0, t)) {
                             if (w.e == e) {
                                 s += count_thm1(n, t, w.c, w.d, w.e, tr);
                             }
                         }
                         return s;
                     },
                     [&](Trace* tr) { return count_cor2(n, t, e, tr); });
            }
            push("chain-cor2-cor4", {{"n", n}, {"t", t}},
                 [&](Trace* tr) {
                     BigInt s = 0;
                     for (int e = 0; 2 * e + t <= n; ++e) {
                         if (e + t > 0) {
                             s += count_cor2(n, t, e, tr);
                         }
                     }
                     return s;
                 },
                 [&](Trace* tr) { return count_cor4(n, t, tr); });
            if (n >= 2) {
                for (int m = 1; m <= n; ++m) {
                    push("chain-thm1-cor3", {{"n", n}, {"t", t}, {"m", m}},
                         [&](Trace* tr) {
                             BigInt s = 0;
                             for (const auto& w : feasible_weights(n, 0, t)) {
                                 if (w.c + w.e + t == m) {
                                     s += count_thm1(n, t, w.c, w.d, w.e, tr);
                                 }
                             }
                             return s;
                         },
                         [&](Trace* tr) { return count_cor3(n, t, m, tr); });
                }
            }
            for (int f = 1; f <= f_max; ++f) {
                push("chain-thm6-thm7", {{"n", n}, {"f", f}, {"t", t}},
                     [&](Trace* tr) {
                         BigInt s = 0;
                         for (const auto& w : feasible_weights(n, f, t)) {
                             s += count_thm6(n, f, t, w.c, w.d, w.e, tr);
                         }
                         return s;
                     },
                     [&](Trace* tr) { return count_thm7(n, f, t, tr); });
            }
        }
    }
    return out;
}

/// sum_{L=0}^{K} (-1)^{K-L} binom(M, L) against binom(M-1, K), and against
/// the falling-factorial binomial which stays valid at M = 0.
inline std::vector<CheckReport> check_alternating_sum(int m_max) {
    std::vector<CheckReport> out;
    for (int m = 0; m <= m_max; ++m) {
        for (int k = 0; k <= m; ++k) {
            CheckReport r{"alternating-sum", {{"M", m}, {"K", k}}, {}};
            Trace tr;
            r.layers.emplace_back("sum", alternating_binomial_sum(m, k));
            r.layers.emplace_back("generalized", binom_falling(m - 1, k));
            r.layers.emplace_back("formula", binom(m - 1, k, &tr));
            detail::classify(r, tr);
            out.push_back(std::move(r));
        }
    }
    return out;
}

/// count_thm1(2e, 0, 0, 0, e) against the Catalan numbers; brute force for
/// e <= 5, the convolution recurrence throughout.
inline std::vector<CheckReport> check_catalan(int e_max) {
    std::vector<CheckReport> out;
    for (int e = 1; e <= e_max; ++e) {
        CheckReport r{"catalan", {{"e", e}}, {}};
        if (e <= 5) {
            r.layers.emplace_back("tableau", BigInt(count_tableaux(TwoRowShape(e, 0, 0), 2 * e)));
        }
        r.layers.emplace_back("recurrence", catalan(e));
        Trace tr;
        r.layers.emplace_back("formula", count_thm1(2 * e, 0, 0, 0, e, &tr));
        detail::classify(r, tr);
        out.push_back(std::move(r));
    }
    return out;
}

struct Summary {
    std::vector<CheckReport> reports;
    std::map<Status, std::size_t> counts;

    std::size_t count(Status s) const {
        const auto it = counts.find(s);
        return it == counts.end() ? 0 : it->second;
    }
    bool ok() const { return count(Status::Disagree) == 0 && count(Status::BuilderError) == 0; }

    std::vector<const CheckReport*> with_status(Status s) const {
        std::vector<const CheckReport*> out;
        for (const auto& r : reports) {
            if (r.status == s) {
                out.push_back(&r);
            }
        }
        return out;
    }
};

inline nlohmann::ordered_json to_json(const Summary& s) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (Status st : {Status::Agree, Status::Disagree, Status::FormulaDomainExcluded, Status::BuilderError}) {
        counts[status_name(st)] = s.count(st);
    }
    j["summary"] = std::move(counts);
    auto excluded = nlohmann::ordered_json::array();
    for (const CheckReport* r : s.with_status(Status::FormulaDomainExcluded)) {
        excluded.push_back(r->check + " " + r->param_text());
    }
    j["exclusions"] = std::move(excluded);
    auto reports = nlohmann::ordered_json::array();
    for (const auto& r : s.reports) {
        reports.push_back(to_json(r));
    }
    j["reports"] = std::move(reports);
    return j;
}

/// The default verification run. Brute-force layers stop at n = 8, closed
/// forms and series go to max_n, identities to min(max_n, 10). Families
/// run concurrently when threads > 1; the report order does not depend on
/// scheduling.
inline Summary run_all(int max_n = 12, int threads = 1) {
    Summary summary;
    if (max_n < 1) {
        return summary;
    }
    Grid grid;
    grid.n_max = max_n;
    grid.oracle_max_n = std::min(max_n, 8);

    std::vector<std::function<std::vector<CheckReport>()>> jobs;
    for (const std::string& id : theorem_ids()) {
        jobs.emplace_back([id, grid] { return check_theorem(id, grid); });
    }
    jobs.emplace_back([max_n] { return check_lemmas(std::min(max_n, 10)); });
    jobs.emplace_back([max_n] { return check_chains(std::min(max_n, 10)); });
    jobs.emplace_back([max_n] { return check_alternating_sum(std::min(max_n, 12)); });
    jobs.emplace_back([max_n] { return check_catalan(std::min(max_n, 8)); });

    std::vector<std::vector<CheckReport>> results(jobs.size());
    if (threads > 1) {
        std::vector<std::future<std::vector<CheckReport>>> futures;
        for (auto& job : jobs) {
            futures.push_back(std::async(std::launch::async, job));
        }
        for (std::size_t i = 0; i < futures.size(); ++i) {
            results[i] = futures[i].get();
        }
    } else {
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            results[i] = jobs[i]();
        }
    }
    for (auto& part : results) {
        for (auto& r : part) {
            ++summary.counts[r.status];
            summary.reports.push_back(std::move(r));
        }
    }
    return summary;
}

} // namespace svt
