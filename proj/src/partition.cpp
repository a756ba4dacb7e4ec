#include "cmreg/partition.hpp"

#include <algorithm>
#include <sstream>

#include "cmreg/errors.hpp"

namespace cmreg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw parse_error("partition parts must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw parse_error("partition parts must weakly decrease");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::staircase(int k) {
    std::vector<int> parts;
    for (int i = k; i >= 1; --i) parts.push_back(i);
    return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text) {
    std::string cleaned;
    for (char ch : text)
        cleaned += (ch == '(' || ch == ')' || ch == ',') ? ' ' : ch;
    std::istringstream in(cleaned);
    std::vector<int> parts;
    int x = 0;
    while (in >> x) parts.push_back(x);
    if (!in.eof()) throw parse_error("cannot parse partition: " + text);
    return Partition(std::move(parts));
}

std::string Partition::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

int Partition::part(int i) const {
    if (i < 1) throw index_out_of_range("partition row index must be positive");
    return i <= rows() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

int Partition::sum() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

bool Partition::contains(const Partition& other) const {
    for (int i = 1; i <= other.rows(); ++i)
        if (other.part(i) > part(i)) return false;
    return true;
}

bool Partition::contains_cell(Cell c) const {
    return c.row >= 1 && c.col >= 1 && c.col <= part(c.row);
}

Diagram Partition::young_diagram() const {
    std::vector<Cell> cells;
    for (int i = 1; i <= rows(); ++i)
        for (int j = 1; j <= part(i); ++j) cells.push_back({i, j});
    return Diagram(std::move(cells));
}

Partition Partition::conjugate() const {
    std::vector<int> conj(static_cast<std::size_t>(part(1)), 0);
    for (int i = 1; i <= rows(); ++i)
        for (int j = 0; j < part(i); ++j) ++conj[static_cast<std::size_t>(j)];
    return Partition(std::move(conj));
}

Partition partition_from_row_counts(const std::vector<int>& counts, bool sort_decreasing) {
    std::vector<int> parts = counts;
    if (sort_decreasing) std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

} // namespace cmreg
