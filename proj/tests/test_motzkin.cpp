#include "svt/motzkin.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace svt;

namespace {

ColouredPath path(int start, std::vector<Step> steps) { return {start, std::move(steps)}; }

constexpr Step U = Step::Up;
constexpr Step D = Step::Down;
constexpr Step Hu = Step::HorUmber;
constexpr Step Hd = Step::HorDenim;

} // namespace

TEST(Admissibility, Examples) {
    EXPECT_TRUE(is_admissible(path(0, {U, D})));
    EXPECT_FALSE(is_admissible(path(0, {Hd, U, D})));
    EXPECT_FALSE(is_admissible(path(1, {D, Hu, U})));
    EXPECT_TRUE(is_admissible(path(1, {D, U, Hu})));
}

TEST(Admissibility, ColourRules) {
    EXPECT_FALSE(is_admissible(path(0, {D})));         // below the axis
    EXPECT_FALSE(is_admissible(path(2, {Hu})));        // umber before any up-step
    EXPECT_FALSE(is_admissible(path(0, {U, D, Hu})));  // umber on the axis
    EXPECT_TRUE(is_admissible(path(0, {U, D, Hd})));   // denim on the axis is fine
    EXPECT_FALSE(is_admissible(path(1, {U, Hd})));     // denim before any down-step
    EXPECT_TRUE(is_admissible(path(3, {})));
}

TEST(Weight, CountsStepsRegardlessOfAdmissibility) {
    EXPECT_EQ(weight(path(0, {U, D})), (PathWeight{0, 0, 1}));
    EXPECT_EQ(weight(path(2, {D, D, U, Hu, Hd, Hd, Hd, U, D})), (PathWeight{1, 3, 3}));
    EXPECT_EQ(weight(path(1, {Hu})), (PathWeight{1, 0, 0}));
    EXPECT_FALSE(is_admissible(path(1, {Hu})));
}

TEST(Enumeration, Counts) {
    EXPECT_EQ(count_paths(2, 0, 0), 1u);
    EXPECT_EQ(enumerate_paths(2, 0, 0).front(), path(0, {U, D}));
    EXPECT_EQ(count_paths(3, 1, 1), 6u);
    EXPECT_EQ(count_paths(1, 0, 1), 1u);
    EXPECT_EQ(count_paths(0, 2, 2), 1u);
    EXPECT_EQ(count_paths(0, 2, 1), 0u);
    EXPECT_EQ(count_paths(3, 1, 1, PathWeight{1, 0, 1}), 3u);
}

// Frozen from an independent exhaustive filter over all 4^n step words.
TEST(Enumeration, FrozenOracleValues) {
    const std::vector<std::uint64_t> straight0{1, 2, 5, 14, 42, 132, 429};
    for (int n = 2; n <= 8; ++n) {
        EXPECT_EQ(count_paths(n, 0, 0), straight0[static_cast<std::size_t>(n - 2)]) << "n=" << n;
    }
    EXPECT_EQ(count_paths(9, 2, 1, PathWeight{1, 3, 3}), 1421u);
}

// The enumerator must agree with filtering every step word by the checker.
TEST(Enumeration, MatchesFilteredWords) {
    for (int n = 0; n <= 6; ++n) {
        for (int f = 0; f <= 2; ++f) {
            for (int t = 0; t <= 3; ++t) {
                std::set<std::string> expected;
                std::vector<Step> steps(static_cast<std::size_t>(n));
                std::uint64_t words = 1;
                for (int i = 0; i < n; ++i) {
                    words *= 4;
                }
                for (std::uint64_t code = 0; code < words; ++code) {
                    std::uint64_t c = code;
                    for (int i = n - 1; i >= 0; --i) {
                        steps[static_cast<std::size_t>(i)] = kAllSteps[c % 4];
                        c /= 4;
                    }
                    const ColouredPath p{f, steps};
                    if (is_admissible(p) && p.end_height() == t) {
                        expected.insert(encode(p));
                    }
                }
                std::vector<std::string> got;
                for_each_path(n, f, t, std::nullopt, [&](const ColouredPath& p) { got.push_back(encode(p)); });
                EXPECT_EQ(std::set<std::string>(got.begin(), got.end()), expected) << n << " " << f << " " << t;
                EXPECT_EQ(got.size(), expected.size());
            }
        }
    }
}

TEST(Enumeration, LexicographicStepOrder) {
    const auto all = enumerate_paths(5, 1, 1);
    for (std::size_t i = 1; i < all.size(); ++i) {
        EXPECT_TRUE(std::lexicographical_compare(all[i - 1].steps.begin(), all[i - 1].steps.end(), all[i].steps.begin(),
                                                 all[i].steps.end()));
    }
}

TEST(Enumeration, WeightFilterPartitionsTheSet) {
    const auto all = enumerate_paths(7, 2, 1);
    std::map<PathWeight, std::uint64_t> by_weight;
    for (const auto& p : all) {
        ++by_weight[weight(p)];
    }
    for (const auto& [w, k] : by_weight) {
        EXPECT_EQ(count_paths(7, 2, 1, w), k);
    }
}

TEST(FreeExcursions, SmallCounts) {
    // Two-coloured Motzkin numbers, and the variant with no umber on the axis.
    std::vector<std::uint64_t> all, no_axis_umber;
    for (int n = 0; n <= 6; ++n) {
        std::uint64_t a = 0, b = 0;
        for_each_free_excursion(n, false, [&](const ColouredPath&) { ++a; });
        for_each_free_excursion(n, true, [&](const ColouredPath&) { ++b; });
        all.push_back(a);
        no_axis_umber.push_back(b);
    }
    EXPECT_EQ(all, (std::vector<std::uint64_t>{1, 2, 5, 14, 42, 132, 429}));
    EXPECT_EQ(no_axis_umber, (std::vector<std::uint64_t>{1, 1, 2, 5, 14, 42, 132}));
}

TEST(TextForm, RoundTrip) {
    const ColouredPath p = path(2, {D, D, U, Hu, Hd, Hd, Hd, U, D});
    EXPECT_EQ(encode(p), "2:DDUudddUD");
    EXPECT_EQ(decode_path("2:DDUudddUD"), p);
    EXPECT_EQ(decode_path("0:"), path(0, {}));
    EXPECT_THROW(decode_path("DDU"), std::invalid_argument);
    EXPECT_THROW(decode_path("x:U"), std::invalid_argument);
    EXPECT_THROW(decode_path("1:UX"), std::invalid_argument);
    EXPECT_THROW(decode_path("-1:U"), std::invalid_argument);
}
