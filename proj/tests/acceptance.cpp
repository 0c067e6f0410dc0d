// Acceptance run: one PASS/FAIL line per criterion, then a summary.
//
// Exit status: 0 when every failure is confined to the refined and
// cumulative skew counts with 0 < t < f (where the stated closed forms do
// not match brute force); 1 for any other failure.

#include "svt/svt.hpp"

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace svt;

namespace {

struct Outcome {
    bool pass = true;
    bool known_only = true; // every failure is in the 0 < t < f skew family
    std::string detail;
};

bool in_known_family(const CheckReport& r) {
    static const std::set<std::string> ids{"thm6", "thm7", "lemma20", "lemma30", "chain-thm6-thm7"};
    long f = 0, t = 0;
    for (const auto& [k, v] : r.params) {
        f = k == "f" ? v : f;
        t = k == "t" ? v : t;
    }
    return ids.count(r.check) != 0 && t > 0 && t < f;
}

std::string describe(const CheckReport& r) {
    std::string out = r.check + " " + r.param_text();
    for (const auto& [k, v] : r.layers) {
        out += " " + k + "=" + value_text(v);
    }
    return out;
}

/// Folds a batch of reports into an outcome. Listed convention edges are
/// permitted and named in the detail text.
Outcome judge(const std::vector<CheckReport>& reports) {
    Outcome o;
    std::size_t agree = 0;
    std::vector<const CheckReport*> bad, excluded;
    for (const auto& r : reports) {
        if (r.status == Status::Agree) {
            ++agree;
        } else if (r.status == Status::FormulaDomainExcluded) {
            excluded.push_back(&r);
        } else {
            bad.push_back(&r);
            o.known_only = o.known_only && in_known_family(r);
        }
    }
    o.pass = bad.empty();
    std::ostringstream s;
    s << reports.size() << " checks, " << agree << " agree, " << excluded.size() << " excluded, " << bad.size()
      << " failed";
    if (!excluded.empty()) {
        s << "; excluded:";
        for (const auto* r : excluded) {
            s << " [" << r->check << " " << r->param_text() << "]";
        }
    }
    if (!bad.empty()) {
        std::map<std::string, std::size_t> by_check;
        for (const auto* r : bad) {
            ++by_check[r->check];
        }
        s << "; failures by check:";
        for (const auto& [k, v] : by_check) {
            s << " " << k << "=" << v;
        }
        s << "; first: " << describe(*bad.front());
        s << (o.known_only ? "; all failures have 0 < t < f" : "; failures outside 0 < t < f");
    }
    o.detail = s.str();
    return o;
}

void append(std::vector<CheckReport>& to, std::vector<CheckReport> from) {
    to.insert(to.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
}

Outcome criterion_four_way() {
    Grid g;
    g.n_max = 8;
    g.oracle_max_n = 8;
    const auto start = std::chrono::steady_clock::now();
    std::vector<CheckReport> reports = check_theorem("thm1", g);
    append(reports, check_theorem("thm6", g));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Outcome o = judge(reports);
    for (const auto& r : reports) {
        if (r.layers.size() != 4) {
            o.pass = false;
            o.known_only = false;
        }
    }
    if (secs > 300) {
        o.pass = false;
        o.known_only = false;
    }
    o.detail += "; " + std::to_string(secs) + " s";
    return o;
}

Outcome criterion_cumulative() {
    Grid g;
    g.n_max = 9;
    g.oracle_max_n = 9;
    std::vector<CheckReport> reports = check_theorem("cor4", g);
    append(reports, check_theorem("thm7", g));
    append(reports, check_theorem("remark", g));
    Outcome o = judge(reports);
    const bool anchors = count_cor4(3, 1) == 3 && count_cor4(4, 0) == 5 && count_thm7(3, 1, 1) == 6 &&
                         count_thm7(2, 1, 1) == 2 && count_paths(3, 0, 1) == 3 && count_paths(4, 0, 0) == 5 &&
                         count_paths(3, 1, 1) == 6 && count_paths(2, 1, 1) == 2;
    bool remark_equal = true;
    for (int t = 1; t <= 3; ++t) {
        for (int n = 1; n <= 9; ++n) {
            remark_equal = remark_equal && remark_1_10(n, t) == count_thm7(n, t, t);
        }
    }
    o.pass = o.pass && anchors && remark_equal;
    o.known_only = o.known_only && anchors && remark_equal;
    o.detail += std::string("; anchors ") + (anchors ? "ok" : "WRONG") + "; collapsed diagonal form " +
                (remark_equal ? "equal" : "DIFFERENT");
    return o;
}

Outcome criterion_expectation() {
    Grid g;
    g.n_max = 9;
    g.oracle_max_n = 9;
    Outcome o = judge(check_theorem("thm5", g));
    const auto v = expected_thm5(4, 0);
    const bool anchor = v && *v == Rational(7, 5);
    o.pass = o.pass && anchor;
    o.known_only = o.known_only && anchor;
    o.detail += std::string("; anchor 7/5 ") + (anchor ? "ok" : "WRONG");
    return o;
}

Outcome criterion_series() {
    Outcome o;
    const ZSeries m = solve_M(20);
    const bool residuals = residual_M_equation(m).is_zero() && residual_identity_x(m).is_zero() &&
                           residual_identity_y(m).is_zero() && residual_identity_diff(m).is_zero() &&
                           residual_M0_equation(solve_M0(20), m).is_zero();
    const bool reversion = check_reversion(m).ok;
    bool excursions = true;
    for (int n = 0; n <= 8; ++n) {
        MultiPoly sum;
        for_each_free_excursion(n, false, [&](const ColouredPath& p) {
            const PathWeight w = weight(p);
            sum.add_term({w.c, w.d, w.e}, 1);
        });
        excursions = excursions && sum == m[n];
    }
    o.pass = residuals && reversion && excursions;
    o.known_only = o.pass;
    o.detail = std::string("residuals to order 20 ") + (residuals ? "zero" : "NONZERO") + "; reversion " +
               (reversion ? "ok" : "FAILED") + "; excursion sums n <= 8 " + (excursions ? "equal" : "DIFFERENT");
    return o;
}

Outcome criterion_lemmas() {
    const auto reports = check_lemmas(10);
    Outcome o = judge(reports);
    std::set<std::string> failing;
    std::size_t builder_errors = 0;
    for (const auto& r : reports) {
        if (r.status == Status::Disagree) {
            failing.insert(r.check);
        }
        builder_errors += r.status == Status::BuilderError;
    }
    o.detail += "; entries with a failure: " + std::to_string(failing.size()) + " of " +
                std::to_string(lemma_registry().size()) + "; non-exact divisions: " + std::to_string(builder_errors);
    return o;
}

Outcome criterion_bijection() {
    Outcome o;
    std::size_t objects = 0;
    bool ok = true;
    for (int n = 1; n <= 8; ++n) {
        for (int f = 0; f <= 3; ++f) {
            for (int t = 0; t <= n + f; ++t) {
                for (int e = std::max(0, f - t); 2 * e + t - f <= n; ++e) {
                    const TwoRowShape shape(e, t, f);
                    if (shape.cell_count() == 0) {
                        continue;
                    }
                    for_each_tableau(shape, n, std::nullopt, [&](const SetValuedTableau& tab) {
                        ok = ok && path_to_tableau(tableau_to_path(tab)) == tab;
                        ++objects;
                    });
                }
                for_each_path(n, f, t, std::nullopt, [&](const ColouredPath& p) {
                    ok = ok && tableau_to_path(path_to_tableau(p)) == p;
                    ++objects;
                });
            }
        }
    }
    const SetValuedTableau worked{TwoRowShape(3, 1, 2), {{3, 4}, {8}, {1}, {2, 5, 6, 7}, {9}}, 9};
    const bool example = encode(tableau_to_path(worked)) == "2:DDUudddUD" &&
                         path_to_tableau(decode_path("2:DDUudddUD")) == worked;
    o.pass = ok && example;
    o.known_only = o.pass;
    o.detail = std::to_string(objects) + " round trips " + (ok ? "ok" : "FAILED") + "; worked example " +
               (example ? "2:DDUudddUD" : "WRONG");
    return o;
}

Outcome criterion_chains() {
    std::vector<CheckReport> reports = check_chains(8, 3, 3);
    append(reports, check_alternating_sum(12));
    Outcome o = judge(reports);
    bool generalized = true;
    for (const auto& r : reports) {
        if (r.check == "alternating-sum") {
            generalized = generalized && *r.layer("sum") == *r.layer("generalized");
        }
    }
    o.pass = o.pass && generalized;
    o.known_only = o.known_only && generalized;
    o.detail += std::string("; alternating sum equals the falling-factorial binomial for all 0 <= K <= M <= 12: ") +
                (generalized ? "yes" : "NO");
    return o;
}

Outcome criterion_catalan() { return judge(check_catalan(8)); }

} // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"1 four-way refined grid (n<=8, t<=3, f<=3)", criterion_four_way},
        {"2 cumulative counts vs path totals (n<=9)", criterion_cumulative},
        {"3 expected second-row length (2<=n<=9)", criterion_expectation},
        {"4 series engine (order 20)", criterion_series},
        {"5 identity registry (n<=10)", criterion_lemmas},
        {"6 bijection round trips (n<=8)", criterion_bijection},
        {"7 summation chains and alternating sum", criterion_chains},
        {"8 Catalan numbers (e<=8)", criterion_catalan},
    };
    int passed = 0;
    bool unexpected = false;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.known_only = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.name << ": " << o.detail << "\n";
        passed += o.pass;
        unexpected = unexpected || (!o.pass && !o.known_only);
    }
    std::cout << "\n" << passed << "/8 criteria pass";
    if (passed < 8) {
        std::cout << (unexpected ? "; some failures are outside the known 0 < t < f skew family"
                                 : "; every failure is in the 0 < t < f skew family");
    }
    std::cout << "\n";
    return unexpected ? 1 : 0;
}
