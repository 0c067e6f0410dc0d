#pragma once

#include "svt/motzkin.hpp"
#include "svt/shapes.hpp"

#include <stdexcept>
#include <vector>

namespace svt {

/// Reads 1..n in order: a cell minimum in row 1 (row 2) gives an up-step
/// (down-step), any other entry of row 1 (row 2) an umber (denim)
/// horizontal step. The path starts at height f.
inline ColouredPath tableau_to_path(const SetValuedTableau& tab) {
    if (!is_valid(tab)) {
        throw std::invalid_argument("tableau_to_path: tableau is not valid");
    }
    const int r1 = tab.shape.row1_cells();
    std::vector<Step> steps(static_cast<std::size_t>(tab.n));
    for (std::size_t cell = 0; cell < tab.content.size(); ++cell) {
        const auto& set = tab.content[cell];
        const int lo = detail::set_min(set);
        const bool row1 = static_cast<int>(cell) < r1;
        for (int v : set) {
            const bool is_min = v == lo;
            steps[static_cast<std::size_t>(v - 1)] = row1 ? (is_min ? Step::Up : Step::HorUmber)
                                                          : (is_min ? Step::Down : Step::HorDenim);
        }
    }
    return ColouredPath{tab.shape.f(), std::move(steps)};
}

/// Inverse of tableau_to_path. Up and Down open the next cell of row 1 and
/// row 2; horizontal steps extend the cell most recently opened in their row.
inline SetValuedTableau path_to_tableau(const ColouredPath& path) {
    if (path.steps.empty()) {
        throw std::invalid_argument("path_to_tableau: path must have at least one step");
    }
    if (!is_admissible(path)) {
        throw std::invalid_argument("path_to_tableau: path is not admissible");
    }
    const PathWeight w = weight(path);
    const int f = path.start_height;
    const int t = path.end_height();
    std::vector<EntrySet> row1, row2;
    for (int i = 1; i <= path.length(); ++i) {
        switch (path.steps[static_cast<std::size_t>(i - 1)]) {
        case Step::Up: row1.push_back({i}); break;
        case Step::Down: row2.push_back({i}); break;
        case Step::HorUmber: row1.back().push_back(i); break;
        case Step::HorDenim: row2.back().push_back(i); break;
        }
    }
    SetValuedTableau tab{TwoRowShape(w.e, t, f), {}, path.length()};
    tab.content = std::move(row1);
    tab.content.insert(tab.content.end(), row2.begin(), row2.end());
    return tab;
}

} // namespace svt
