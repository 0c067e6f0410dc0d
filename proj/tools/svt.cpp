// svt: counts, series dumps and cross-checks for set-valued tableaux of
// two-rowed shapes.

#include "svt/svt.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum Exit { kOk = 0, kContract = 1, kDisagree = 2, kIo = 3 };

struct ContractError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw ContractError(message);
    }
}

int max_order_cap(std::optional<int> flag) {
    if (flag) {
        return *flag;
    }
    if (const char* env = std::getenv("SVT_MAX_ORDER")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw ContractError(std::string("SVT_MAX_ORDER is not an integer: ") + env);
        }
    }
    return 24;
}

struct Range {
    long lo = 0;
    long hi = -1;
};

Range parse_range(const std::string& text, const std::string& name) {
    static const std::regex single(R"(\s*(-?\d+)\s*)");
    static const std::regex span(R"(\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
    std::smatch m;
    if (std::regex_match(text, m, single)) {
        const long v = std::stol(m[1]);
        return {v, v};
    }
    if (std::regex_match(text, m, span)) {
        return {std::stol(m[1]), std::stol(m[2])};
    }
    throw ContractError("--" + name + " must be an integer or a range a..b, got '" + text + "'");
}

nlohmann::ordered_json json_integer(const svt::BigInt& v) {
    if (boost::multiprecision::abs(v) < svt::BigInt(1) << 62) {
        return static_cast<long long>(v);
    }
    return v.str();
}

// ---------------------------------------------------------------- count

struct CountOptions {
    std::string family = "straight";
    long n = 0;
    long t = 0;
    std::optional<long> f, c, d, e, m;
    std::string format = "plain";
    bool oracle = false;
};

int run_count(const CountOptions& o) {
    const bool skew = o.family == "skew";
    const long f = o.f.value_or(0);
    require(o.n >= 1, "n must be positive");
    require(o.t >= 0, "t must be non-negative");
    require(!skew || (o.f && f >= 1), "skew family needs --f >= 1");
    require(skew || f == 0, "--f is only meaningful for the skew family");
    const bool refined = o.c || o.d;
    require(!refined || (o.c && o.d && o.e), "--c and --d need all of --c, --d, --e");
    require(!o.m || (!refined && !o.e), "--m cannot be combined with --c, --d or --e");
    require(!o.m || !skew, "--m is only available for the straight family");
    require(!(o.e && !refined && skew), "skew counts take either all of --c, --d, --e or none");

    svt::BigInt value;
    std::string kind;
    if (refined) {
        kind = "refined";
        value = skew ? svt::count_thm6(o.n, f, o.t, *o.c, *o.d, *o.e) : svt::count_thm1(o.n, o.t, *o.c, *o.d, *o.e);
    } else if (o.e) {
        kind = "second-row";
        value = svt::count_cor2(o.n, o.t, *o.e);
    } else if (o.m) {
        kind = "first-row";
        value = svt::count_cor3(o.n, o.t, *o.m);
    } else {
        kind = "cumulative";
        value = skew ? svt::count_thm7(o.n, f, o.t) : svt::count_cor4(o.n, o.t);
    }

    std::optional<svt::BigInt> brute;
    if (o.oracle) {
        require(o.n <= 12, "--oracle enumerates tableaux and is limited to n <= 12");
        const int n = static_cast<int>(o.n);
        const int t = static_cast<int>(o.t);
        brute = 0;
        for (int e = 0; 2 * e + t - static_cast<int>(f) <= n; ++e) {
            if (e + t < f || (o.e && e != *o.e)) {
                continue;
            }
            const svt::TwoRowShape shape(e, t, static_cast<int>(f));
            if (shape.cell_count() == 0) {
                continue;
            }
            std::optional<svt::RowFilter> filter;
            if (refined) {
                if (*o.c + *o.d + 2 * e - f + t != n) {
                    continue;
                }
                filter = svt::RowFilter{static_cast<int>(*o.c + e + t - f), static_cast<int>(*o.d + e)};
            } else if (o.m) {
                filter = svt::RowFilter{static_cast<int>(*o.m), static_cast<int>(n - *o.m)};
            }
            *brute += svt::count_tableaux(shape, n, filter);
        }
    }
    const bool match = !brute || *brute == value;

    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["family"] = o.family;
        j["kind"] = kind;
        j["n"] = o.n;
        if (skew) {
            j["f"] = f;
        }
        j["t"] = o.t;
        for (const auto& [name, v] : {std::pair{"c", o.c}, {"d", o.d}, {"e", o.e}, {"m", o.m}}) {
            if (v) {
                j[name] = *v;
            }
        }
        j["count"] = json_integer(value);
        if (brute) {
            j["oracle"] = json_integer(*brute);
            j["match"] = match;
        }
        std::cout << j.dump() << "\n";
    } else if (o.format == "csv") {
        std::cout << "family,kind,n,f,t,c,d,e,m,count" << (brute ? ",oracle,match" : "") << "\n";
        const auto opt = [](const std::optional<long>& v) { return v ? std::to_string(*v) : std::string(); };
        std::cout << o.family << "," << kind << "," << o.n << "," << (skew ? std::to_string(f) : "") << "," << o.t << ","
                  << opt(o.c) << "," << opt(o.d) << "," << opt(o.e) << "," << opt(o.m) << "," << value;
        if (brute) {
            std::cout << "," << *brute << "," << (match ? "MATCH" : "MISMATCH");
        }
        std::cout << "\n";
    } else if (brute) {
        std::cout << "formula: " << value << "\noracle: " << *brute << "\n" << (match ? "MATCH" : "MISMATCH") << "\n";
    } else {
        std::cout << value << "\n";
    }
    return match ? kOk : kDisagree;
}

// ---------------------------------------------------------------- expected

int run_expected(long n, long t) {
    require(n >= 2, "n must be at least 2");
    require(t >= 0, "t must be non-negative");
    const auto v = svt::expected_thm5(n, t);
    if (!v) {
        std::cerr << "error: no tableaux for these parameters\n";
        return kContract;
    }
    std::cout << svt::to_string(*v, true) << "\n";
    return kOk;
}

// ---------------------------------------------------------------- series

struct SeriesOptions {
    std::string family = "straight";
    int t = 0;
    std::optional<int> f;
    int order = 0;
    std::optional<std::string> x, y, alpha;
    std::optional<int> max_order;
};

int run_series(const SeriesOptions& o) {
    const bool skew = o.family == "skew";
    require(o.order >= 0, "order must be non-negative");
    const int cap = max_order_cap(o.max_order);
    require(o.order <= cap, "order " + std::to_string(o.order) + " exceeds the maximum " + std::to_string(cap));
    require(o.t >= 0, "t must be non-negative");
    require(!skew || (o.f && *o.f >= 1), "skew family needs --f >= 1");
    require(skew || !o.f || *o.f == 0, "--f is only meaningful for the skew family");
    const int given = (o.x ? 1 : 0) + (o.y ? 1 : 0) + (o.alpha ? 1 : 0);
    require(given == 0 || given == 3, "specialize with all of --x, --y, --alpha or none");

    std::optional<std::vector<svt::Rational>> point;
    if (given == 3) {
        try {
            point = {svt::parse_rational(*o.x), svt::parse_rational(*o.y), svt::parse_rational(*o.alpha)};
        } catch (const std::invalid_argument& e) {
            throw ContractError(e.what());
        }
    }

    svt::ZSeries s(0);
    try {
        s = skew ? svt::gf_skew(*o.f, o.t, o.order) : svt::gf_straight(o.t, o.order);
    } catch (const svt::NonExactDivision& e) {
        std::cerr << "error: series build failed: " << e.what() << "\n";
        return kDisagree;
    }
    if (!point) {
        std::cout << s.dump();
        return kOk;
    }
    const auto values = s.specialize((*point)[0], (*point)[1], (*point)[2]);
    for (std::size_t k = 0; k < values.size(); ++k) {
        std::cout << k << ": " << svt::to_string(values[k]) << "\n";
    }
    return kOk;
}

// ---------------------------------------------------------------- verify

int run_verify(int max_n, const std::string& report, int threads) {
    require(max_n <= 16, "--max-n is limited to 16");
    const svt::Summary summary = svt::run_all(max_n, threads);
    if (!report.empty()) {
        std::ofstream out(report);
        if (!out) {
            std::cerr << "error: cannot open report file " << report << "\n";
            return kIo;
        }
        out << svt::to_json(summary).dump(2) << "\n";
        if (!out) {
            std::cerr << "error: failed writing report file " << report << "\n";
            return kIo;
        }
    }

    std::cout << "status                   count\n";
    for (svt::Status s : {svt::Status::Agree, svt::Status::Disagree, svt::Status::FormulaDomainExcluded,
                          svt::Status::BuilderError}) {
        std::string name = svt::status_name(s);
        name.resize(25, ' ');
        std::cout << name << summary.count(s) << "\n";
    }
    const auto list = [&](svt::Status s, const char* title) {
        const auto rows = summary.with_status(s);
        if (rows.empty()) {
            return;
        }
        std::cout << "\n" << title << ":\n";
        for (const svt::CheckReport* r : rows) {
            std::cout << "  " << r->check << " " << r->param_text();
            for (const auto& [k, v] : r->layers) {
                std::cout << " " << k << "=" << svt::value_text(v);
            }
            std::cout << "\n";
        }
    };
    list(svt::Status::FormulaDomainExcluded, "excluded (zero convention for binomials with negative upper index)");
    list(svt::Status::Disagree, "disagreements");
    list(svt::Status::BuilderError, "builder errors");
    return summary.ok() ? kOk : kDisagree;
}

// ---------------------------------------------------------------- table

struct TableOptions {
    std::string which;
    std::string n = "1..10";
    std::string t = "0";
    std::string f = "1";
    std::string format = "csv";
};

int run_table(const TableOptions& o) {
    require(o.format == "csv", "table only supports --format csv");
    const Range n = parse_range(o.n, "n");
    const Range t = parse_range(o.t, "t");
    const Range f = parse_range(o.f, "f");
    std::ostringstream out;
    if (o.which == "cor4") {
        out << "n,t,count\n";
        for (long tv = t.lo; tv <= t.hi; ++tv) {
            for (long nv = n.lo; nv <= n.hi; ++nv) {
                out << nv << "," << tv << "," << svt::count_cor4(nv, tv) << "\n";
            }
        }
    } else if (o.which == "thm7") {
        out << "n,f,t,count\n";
        for (long fv = f.lo; fv <= f.hi; ++fv) {
            for (long tv = t.lo; tv <= t.hi; ++tv) {
                for (long nv = n.lo; nv <= n.hi; ++nv) {
                    out << nv << "," << fv << "," << tv << "," << svt::count_thm7(nv, fv, tv) << "\n";
                }
            }
        }
    } else {
        out << "n,t,expected\n";
        for (long tv = t.lo; tv <= t.hi; ++tv) {
            for (long nv = n.lo; nv <= n.hi; ++nv) {
                const auto v = svt::expected_thm5(nv, tv);
                out << nv << "," << tv << "," << (v ? svt::to_string(*v, true) : "undefined") << "\n";
            }
        }
    }
    std::cout << out.str();
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Counts and generating functions for set-valued tableaux of two-rowed shapes"};
    app.require_subcommand(1);

    CountOptions count;
    auto* cmd_count = app.add_subcommand("count", "closed-form count (refined, row-refined or cumulative)");
    cmd_count->add_option("--family", count.family)->check(CLI::IsMember({"straight", "skew"}));
    cmd_count->add_option("--n", count.n, "number of entries")->required();
    cmd_count->add_option("--t", count.t, "row length difference")->required();
    cmd_count->add_option("--f", count.f, "cells removed from the first row");
    cmd_count->add_option("--c", count.c, "extra entries in the first row");
    cmd_count->add_option("--d", count.d, "extra entries in the second row");
    cmd_count->add_option("--e", count.e, "length of the second row");
    cmd_count->add_option("--m", count.m, "entries in the first row");
    cmd_count->add_option("--format", count.format)->check(CLI::IsMember({"plain", "csv", "json"}));
    cmd_count->add_flag("--oracle", count.oracle, "recount by enumerating tableaux");

    long exp_n = 0;
    long exp_t = 0;
    auto* cmd_expected = app.add_subcommand("expected", "expected length of the second row");
    cmd_expected->add_option("--n", exp_n)->required();
    cmd_expected->add_option("--t", exp_t)->required();

    SeriesOptions series;
    auto* cmd_series = app.add_subcommand("series", "coefficients of the path generating function");
    cmd_series->add_option("--family", series.family)->check(CLI::IsMember({"straight", "skew"}));
    cmd_series->add_option("--t", series.t)->required();
    cmd_series->add_option("--f", series.f);
    cmd_series->add_option("--order", series.order)->required();
    cmd_series->add_option("--x", series.x);
    cmd_series->add_option("--y", series.y);
    cmd_series->add_option("--alpha", series.alpha);
    cmd_series->add_option("--max-order", series.max_order, "truncation cap (default 24, or SVT_MAX_ORDER)");

    int max_n = 12;
    int threads = 1;
    std::string report;
    auto* cmd_verify = app.add_subcommand("verify", "run the cross-verification grid");
    cmd_verify->add_option("--max-n", max_n);
    cmd_verify->add_option("--report", report, "write the JSON report here");
    cmd_verify->add_option("--threads", threads)->check(CLI::Range(1, 64));

    TableOptions table;
    auto* cmd_table = app.add_subcommand("table", "CSV export of cumulative counts or expectations");
    cmd_table->add_option("--which", table.which)->required()->check(CLI::IsMember({"cor4", "thm7", "expected"}));
    cmd_table->add_option("--n", table.n, "integer or range a..b");
    cmd_table->add_option("--t", table.t, "integer or range a..b");
    cmd_table->add_option("--f", table.f, "integer or range a..b");
    cmd_table->add_option("--format", table.format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kContract;
    }

    try {
        if (*cmd_count) {
            return run_count(count);
        }
        if (*cmd_expected) {
            return run_expected(exp_n, exp_t);
        }
        if (*cmd_series) {
            return run_series(series);
        }
        if (*cmd_verify) {
            return run_verify(max_n, report, threads);
        }
        if (*cmd_table) {
            return run_table(table);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kContract;
    } catch (const svt::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kContract;
    }
    return kContract;
}
