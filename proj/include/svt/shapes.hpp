#pragma once

// Two-rowed (possibly skew) shapes (e+t, e)/(f, 0) and their set-valued
// standard fillings.

#include "svt/arith.hpp"

#include <json.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace svt {

struct Cell {
    int row = 1;
    int col = 1;
    auto operator<=>(const Cell&) const = default;
};

/// Shape (e+t, e)/(f, 0): the second row has e cells, the first row is t
/// cells longer, and the leftmost f cells of the first row are removed.
class TwoRowShape {
public:
    TwoRowShape() = default;
    TwoRowShape(int e, int t, int f) : e_(e), t_(t), f_(f) {
        if (e < 0 || t < 0 || f < 0) {
            throw std::invalid_argument("shape parameters must be non-negative");
        }
        if (f > e + t) {
            throw std::invalid_argument("f = " + std::to_string(f) + " exceeds first-row length " +
                                        std::to_string(e + t));
        }
    }

    int e() const noexcept { return e_; }
    int t() const noexcept { return t_; }
    int f() const noexcept { return f_; }

    int row1_cells() const noexcept { return e_ + t_ - f_; }
    int row2_cells() const noexcept { return e_; }
    int cell_count() const noexcept { return row1_cells() + row2_cells(); }

    auto operator<=>(const TwoRowShape&) const = default;

private:
    int e_ = 0;
    int t_ = 0;
    int f_ = 0;
};

/// Reading order: row 1 left to right (columns f+1..e+t), then row 2
/// (columns 1..e).
inline std::vector<Cell> cells(const TwoRowShape& shape) {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(shape.cell_count()));
    for (int col = shape.f() + 1; col <= shape.e() + shape.t(); ++col) {
        out.push_back({1, col});
    }
    for (int col = 1; col <= shape.e(); ++col) {
        out.push_back({2, col});
    }
    return out;
}

/// True when `later` lies weakly right and weakly below `earlier`
/// (and is a different cell), i.e. every entry of `earlier` must be smaller
/// than every entry of `later`.
constexpr bool weakly_southeast(const Cell& earlier, const Cell& later) noexcept {
    return earlier != later && later.row >= earlier.row && later.col >= earlier.col;
}

using EntrySet = std::vector<int>; // sorted ascending

struct SetValuedTableau {
    TwoRowShape shape;
    std::vector<EntrySet> content; // one set per cell, reading order
    int n = 0;

    int row1_entries() const {
        int total = 0;
        for (int i = 0; i < shape.row1_cells() && i < static_cast<int>(content.size()); ++i) {
            total += static_cast<int>(content[static_cast<std::size_t>(i)].size());
        }
        return total;
    }
    int row2_entries() const { return n - row1_entries(); }

    bool operator==(const SetValuedTableau&) const = default;
};

namespace detail {

inline void require_structure(const SetValuedTableau& tab) {
    if (static_cast<int>(tab.content.size()) != tab.shape.cell_count()) {
        throw std::invalid_argument("tableau has " + std::to_string(tab.content.size()) +
                                    " cell sets but its shape has " +
                                    std::to_string(tab.shape.cell_count()) + " cells");
    }
}

// Nonempty sets partitioning {1..n}.
inline bool is_partition(const SetValuedTableau& tab) {
    if (tab.n < 1) {
        return false;
    }
    std::vector<char> seen(static_cast<std::size_t>(tab.n) + 1, 0);
    int total = 0;
    for (const auto& set : tab.content) {
        if (set.empty()) {
            return false;
        }
        for (int v : set) {
            if (v < 1 || v > tab.n || seen[static_cast<std::size_t>(v)]) {
                return false;
            }
            seen[static_cast<std::size_t>(v)] = 1;
            ++total;
        }
    }
    return total == tab.n;
}

inline int set_min(const EntrySet& s) { return *std::min_element(s.begin(), s.end()); }
inline int set_max(const EntrySet& s) { return *std::max_element(s.begin(), s.end()); }

} // namespace detail

/// Ordering condition checked over every comparable pair of cells.
/// Throws std::invalid_argument on a content/shape length mismatch.
inline bool is_valid_quantified(const SetValuedTableau& tab) {
    detail::require_structure(tab);
    if (!detail::is_partition(tab)) {
        return false;
    }
    const auto cs = cells(tab.shape);
    for (std::size_t p = 0; p < cs.size(); ++p) {
        for (std::size_t q = 0; q < cs.size(); ++q) {
            if (weakly_southeast(cs[p], cs[q]) &&
                detail::set_max(tab.content[p]) >= detail::set_min(tab.content[q])) {
                return false;
            }
        }
    }
    return true;
}

/// Same predicate as is_valid_quantified, restricted to horizontally
/// adjacent pairs and to vertically stacked pairs; the full relation is the
/// transitive closure of these.
inline bool is_valid(const SetValuedTableau& tab) {
    detail::require_structure(tab);
    if (!detail::is_partition(tab)) {
        return false;
    }
    const TwoRowShape& s = tab.shape;
    const int r1 = s.row1_cells();
    const auto at = [&](int index) -> const EntrySet& { return tab.content[static_cast<std::size_t>(index)]; };
    for (int i = 0; i + 1 < r1; ++i) {
        if (detail::set_max(at(i)) >= detail::set_min(at(i + 1))) {
            return false;
        }
    }
    for (int i = 0; i + 1 < s.row2_cells(); ++i) {
        if (detail::set_max(at(r1 + i)) >= detail::set_min(at(r1 + i + 1))) {
            return false;
        }
    }
    // Column col holds row-1 index col-f-1 and row-2 index r1+col-1.
    for (int col = s.f() + 1; col <= s.e(); ++col) {
        if (detail::set_max(at(col - s.f() - 1)) >= detail::set_min(at(r1 + col - 1))) {
            return false;
        }
    }
    return true;
}

struct RowFilter {
    int row1 = 0;
    int row2 = 0;
};

/// Visits every set-valued standard tableau of `shape` with entries
/// {1..n}, in lexicographic order of the cell-assignment vector
/// (cell index of entry 1, of entry 2, ...). The visitor receives a const
/// reference to a tableau that is only valid during the call.
///
/// The search assigns entries in increasing order and abandons a prefix as
/// soon as it already violates the ordering relation or leaves more empty
/// cells than remaining entries; every survivor is re-checked with
/// is_valid_quantified before it is reported.
template <typename Visitor>
void for_each_tableau(const TwoRowShape& shape, int n, std::optional<RowFilter> filter, Visitor&& visit) {
    if (n < 1) {
        throw std::invalid_argument("n must be positive, got " + std::to_string(n));
    }
    const auto cs = cells(shape);
    const int k = static_cast<int>(cs.size());
    if (k == 0 || n < k) {
        return;
    }
    if (filter && (filter->row1 + filter->row2 != n || filter->row1 < shape.row1_cells() ||
                   filter->row2 < shape.row2_cells())) {
        return;
    }

    // before[q] lists cells that must be finished before q opens;
    // after[p] lists cells that must still be empty while p receives entries.
    std::vector<std::vector<int>> before(static_cast<std::size_t>(k)), after(static_cast<std::size_t>(k));
    for (int p = 0; p < k; ++p) {
        for (int q = 0; q < k; ++q) {
            if (weakly_southeast(cs[static_cast<std::size_t>(p)], cs[static_cast<std::size_t>(q)])) {
                before[static_cast<std::size_t>(q)].push_back(p);
                after[static_cast<std::size_t>(p)].push_back(q);
            }
        }
    }

    const int r1 = shape.row1_cells();
    SetValuedTableau tab{shape, std::vector<EntrySet>(static_cast<std::size_t>(k)), n};
    int empty_cells = k;
    int row1_count = 0;

    auto recurse = [&](auto&& self, int entry) -> void {
        if (entry > n) {
            if (empty_cells != 0) {
                return;
            }
            if (filter && row1_count != filter->row1) {
                return;
            }
            if (is_valid_quantified(tab)) {
                visit(static_cast<const SetValuedTableau&>(tab));
            }
            return;
        }
        for (int c = 0; c < k; ++c) {
            auto& set = tab.content[static_cast<std::size_t>(c)];
            const bool opening = set.empty();
            if (opening) {
                bool ready = true;
                for (int p : before[static_cast<std::size_t>(c)]) {
                    if (tab.content[static_cast<std::size_t>(p)].empty()) {
                        ready = false;
                        break;
                    }
                }
                if (!ready) {
                    continue;
                }
            }
            bool blocked = false;
            for (int q : after[static_cast<std::size_t>(c)]) {
                if (!tab.content[static_cast<std::size_t>(q)].empty()) {
                    blocked = true;
                    break;
                }
            }
            if (blocked) {
                continue;
            }
            const int still_empty = empty_cells - (opening ? 1 : 0);
            if (n - entry < still_empty) {
                continue;
            }
            const bool in_row1 = c < r1;
            if (filter && in_row1 && row1_count + 1 > filter->row1) {
                continue;
            }
            set.push_back(entry);
            empty_cells = still_empty;
            row1_count += in_row1 ? 1 : 0;
            self(self, entry + 1);
            row1_count -= in_row1 ? 1 : 0;
            empty_cells += opening ? 1 : 0;
            set.pop_back();
        }
    };
    recurse(recurse, 1);
}

inline std::uint64_t count_tableaux(const TwoRowShape& shape, int n, std::optional<RowFilter> filter = std::nullopt) {
    std::uint64_t count = 0;
    for_each_tableau(shape, n, filter, [&](const SetValuedTableau&) { ++count; });
    return count;
}

inline std::vector<SetValuedTableau> enumerate_tableaux(const TwoRowShape& shape, int n,
                                                        std::optional<RowFilter> filter = std::nullopt) {
    std::vector<SetValuedTableau> out;
    for_each_tableau(shape, n, filter, [&](const SetValuedTableau& tab) { out.push_back(tab); });
    return out;
}

inline nlohmann::ordered_json to_json(const SetValuedTableau& tab) {
    detail::require_structure(tab);
    nlohmann::ordered_json j;
    j["e"] = tab.shape.e();
    j["t"] = tab.shape.t();
    j["f"] = tab.shape.f();
    j["n"] = tab.n;
    auto list = nlohmann::ordered_json::array();
    const auto cs = cells(tab.shape);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        EntrySet entries = tab.content[i];
        std::sort(entries.begin(), entries.end());
        nlohmann::ordered_json cell;
        cell["row"] = cs[i].row;
        cell["col"] = cs[i].col;
        cell["entries"] = entries;
        list.push_back(std::move(cell));
    }
    j["cells"] = std::move(list);
    return j;
}

/// Inverse of to_json. Cells may appear in any order; they are placed by
/// their (row, col) coordinates.
inline SetValuedTableau tableau_from_json(const nlohmann::json& j) {
    SetValuedTableau tab{TwoRowShape(j.at("e").get<int>(), j.at("t").get<int>(), j.at("f").get<int>()), {},
                         j.at("n").get<int>()};
    const auto cs = cells(tab.shape);
    tab.content.assign(cs.size(), {});
    const auto& list = j.at("cells");
    if (list.size() != cs.size()) {
        throw std::invalid_argument("cell list does not match the shape");
    }
    for (const auto& cell : list) {
        const Cell at{cell.at("row").get<int>(), cell.at("col").get<int>()};
        const auto it = std::find(cs.begin(), cs.end(), at);
        if (it == cs.end()) {
            throw std::invalid_argument("cell (" + std::to_string(at.row) + "," + std::to_string(at.col) +
                                        ") is not part of the shape");
        }
        auto entries = cell.at("entries").get<EntrySet>();
        std::sort(entries.begin(), entries.end());
        tab.content[static_cast<std::size_t>(it - cs.begin())] = std::move(entries);
    }
    return tab;
}

} // namespace svt
