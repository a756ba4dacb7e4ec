#include "cmreg/diagram.hpp"

#include <algorithm>

#include "cmreg/errors.hpp"

namespace cmreg {

Diagram::Diagram(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    for (const Cell& c : cells_) {
        if (c.row < 1 || c.col < 1) throw index_out_of_range("diagram cell must be 1-indexed");
    }
}

Diagram::Diagram(std::initializer_list<Cell> cells) : Diagram(std::vector<Cell>(cells)) {}

bool Diagram::contains(Cell c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

bool Diagram::contains_all(const Diagram& other) const {
    return std::includes(cells_.begin(), cells_.end(), other.cells_.begin(), other.cells_.end());
}

Diagram Diagram::with(Cell c) const {
    std::vector<Cell> out = cells_;
    out.push_back(c);
    return Diagram(std::move(out));
}

Diagram Diagram::without(Cell c) const {
    std::vector<Cell> out;
    out.reserve(cells_.size());
    for (const Cell& x : cells_)
        if (x != c) out.push_back(x);
    return Diagram(std::move(out));
}

std::vector<int> Diagram::row_counts() const {
    int max_row = 0;
    for (const Cell& c : cells_) max_row = std::max(max_row, c.row);
    std::vector<int> counts(static_cast<std::size_t>(max_row), 0);
    for (const Cell& c : cells_) ++counts[static_cast<std::size_t>(c.row - 1)];
    return counts;
}

} // namespace cmreg
