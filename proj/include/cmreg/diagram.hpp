#pragma once

#include <compare>
#include <initializer_list>
#include <vector>

namespace cmreg {

// 1-indexed grid cell, matrix convention (row 1 at top).
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

// Finite set of cells kept sorted row-major with no duplicates.
class Diagram {
public:
    Diagram() = default;
    explicit Diagram(std::vector<Cell> cells);
    Diagram(std::initializer_list<Cell> cells);

    const std::vector<Cell>& cells() const& { return cells_; }
    std::vector<Cell> cells() && { return std::move(cells_); }
    int size() const { return static_cast<int>(cells_.size()); }
    bool empty() const { return cells_.empty(); }
    bool contains(Cell c) const;
    bool contains_all(const Diagram& other) const;

    Diagram with(Cell c) const;
    Diagram without(Cell c) const;

    // Number of cells in each row 1..max_row (trailing rows with cells included).
    std::vector<int> row_counts() const;

    bool operator==(const Diagram&) const = default;
    auto operator<=>(const Diagram&) const = default;

private:
    std::vector<Cell> cells_;
};

} // namespace cmreg
