#pragma once

// Two-coloured Motzkin paths with arbitrary start and end heights.

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace svt {

// Declaration order is the enumeration order.
enum class Step : std::uint8_t { Up, Down, HorUmber, HorDenim };

inline constexpr Step kAllSteps[] = {Step::Up, Step::Down, Step::HorUmber, Step::HorDenim};

constexpr int height_change(Step s) noexcept {
    return s == Step::Up ? 1 : s == Step::Down ? -1 : 0;
}

constexpr char step_char(Step s) noexcept {
    switch (s) {
    case Step::Up: return 'U';
    case Step::Down: return 'D';
    case Step::HorUmber: return 'u';
    case Step::HorDenim: return 'd';
    }
    return '?';
}

struct ColouredPath {
    int start_height = 0;
    std::vector<Step> steps;

    int length() const noexcept { return static_cast<int>(steps.size()); }
    int end_height() const noexcept {
        int h = start_height;
        for (Step s : steps) {
            h += height_change(s);
        }
        return h;
    }
    bool operator==(const ColouredPath&) const = default;
};

/// Exponents of x^c y^d alpha^e.
struct PathWeight {
    int c = 0; // umber horizontals
    int d = 0; // denim horizontals
    int e = 0; // down-steps
    auto operator<=>(const PathWeight&) const = default;
};

inline PathWeight weight(const ColouredPath& path) {
    PathWeight w;
    for (Step s : path.steps) {
        w.c += s == Step::HorUmber;
        w.d += s == Step::HorDenim;
        w.e += s == Step::Down;
    }
    return w;
}

namespace detail {

// Incremental admissibility state shared by the checker and the enumerator.
struct PathState {
    int height = 0;
    bool seen_up = false;
    bool seen_down = false;

    bool allows(Step s) const noexcept {
        switch (s) {
        case Step::Up: return true;
        case Step::Down: return height > 0;
        case Step::HorUmber: return seen_up && height > 0;
        case Step::HorDenim: return seen_down;
        }
        return false;
    }
    void apply(Step s) noexcept {
        height += height_change(s);
        seen_up = seen_up || s == Step::Up;
        seen_down = seen_down || s == Step::Down;
    }
};

} // namespace detail

inline bool is_admissible(const ColouredPath& path) {
    if (path.start_height < 0) {
        return false;
    }
    detail::PathState state{path.start_height};
    for (Step s : path.steps) {
        if (!state.allows(s)) {
            return false;
        }
        state.apply(s);
    }
    return true;
}

/// Visits every admissible path of length n from height f to height t in
/// lexicographic order of step tags. With a weight filter only paths of
/// that exact weight are visited.
template <typename Visitor>
void for_each_path(int n, int f, int t, std::optional<PathWeight> filter, Visitor&& visit) {
    if (n < 0) {
        throw std::invalid_argument("path length must be non-negative, got " + std::to_string(n));
    }
    if (f < 0 || t < 0) {
        return;
    }
    ColouredPath path{f, {}};
    path.steps.reserve(static_cast<std::size_t>(n));
    PathWeight w;

    auto recurse = [&](auto&& self, const detail::PathState& state) -> void {
        const int remaining = n - path.length();
        if (remaining == 0) {
            if (state.height == t && (!filter || w == *filter)) {
                visit(static_cast<const ColouredPath&>(path));
            }
            return;
        }
        for (Step s : kAllSteps) {
            if (!state.allows(s)) {
                continue;
            }
            detail::PathState next = state;
            next.apply(s);
            if (std::abs(next.height - t) > remaining - 1) {
                continue;
            }
            int PathWeight::*field = s == Step::HorUmber ? &PathWeight::c
                                     : s == Step::HorDenim ? &PathWeight::d
                                     : s == Step::Down     ? &PathWeight::e
                                                           : nullptr;
            if (field != nullptr) {
                ++(w.*field);
            }
            if (!filter || (w.c <= filter->c && w.d <= filter->d && w.e <= filter->e)) {
                path.steps.push_back(s);
                self(self, next);
                path.steps.pop_back();
            }
            if (field != nullptr) {
                --(w.*field);
            }
        }
    };
    recurse(recurse, detail::PathState{f});
}

inline std::uint64_t count_paths(int n, int f, int t, std::optional<PathWeight> filter = std::nullopt) {
    std::uint64_t count = 0;
    for_each_path(n, f, t, filter, [&](const ColouredPath&) { ++count; });
    return count;
}

inline std::vector<ColouredPath> enumerate_paths(int n, int f, int t, std::optional<PathWeight> filter = std::nullopt) {
    std::vector<ColouredPath> out;
    for_each_path(n, f, t, filter, [&](const ColouredPath& p) { out.push_back(p); });
    return out;
}

/// Paths of length n from height 0 back to height 0 that stay weakly above
/// the axis, with no colour rules. When `no_umber_on_axis` is set, umber
/// horizontals at height 0 are excluded.
template <typename Visitor>
void for_each_free_excursion(int n, bool no_umber_on_axis, Visitor&& visit) {
    if (n < 0) {
        throw std::invalid_argument("path length must be non-negative, got " + std::to_string(n));
    }
    ColouredPath path{0, {}};
    auto recurse = [&](auto&& self, int height) -> void {
        const int remaining = n - path.length();
        if (remaining == 0) {
            if (height == 0) {
                visit(static_cast<const ColouredPath&>(path));
            }
            return;
        }
        for (Step s : kAllSteps) {
            if (s == Step::Down && height == 0) {
                continue;
            }
            if (s == Step::HorUmber && no_umber_on_axis && height == 0) {
                continue;
            }
            const int next = height + height_change(s);
            if (next > remaining - 1) {
                continue;
            }
            path.steps.push_back(s);
            self(self, next);
            path.steps.pop_back();
        }
    };
    recurse(recurse, 0);
}

/// Text form "<start>:<steps>" over the alphabet U, D, u, d.
inline std::string encode(const ColouredPath& path) {
    std::string out = std::to_string(path.start_height) + ":";
    for (Step s : path.steps) {
        out += step_char(s);
    }
    return out;
}

inline ColouredPath decode_path(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0) {
        throw std::invalid_argument("path text must look like '<start>:<steps>', got '" + text + "'");
    }
    ColouredPath path;
    try {
        std::size_t used = 0;
        path.start_height = std::stoi(text.substr(0, colon), &used);
        if (used != colon || path.start_height < 0) {
            throw std::invalid_argument("");
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad start height in '" + text + "'");
    }
    for (char ch : text.substr(colon + 1)) {
        switch (ch) {
        case 'U': path.steps.push_back(Step::Up); break;
        case 'D': path.steps.push_back(Step::Down); break;
        case 'u': path.steps.push_back(Step::HorUmber); break;
        case 'd': path.steps.push_back(Step::HorDenim); break;
        default: throw std::invalid_argument(std::string("unknown step '") + ch + "' in '" + text + "'");
        }
    }
    return path;
}

} // namespace svt
