#pragma once

#include <compare>
#include <string>
#include <vector>

#include "cmreg/diagram.hpp"

namespace cmreg {

// Weakly decreasing sequence of nonnegative integers; trailing zeros are
// normalized away, so equality is plain sequence equality.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts); // validates weak decrease

    static Partition staircase(int k); // (k, k-1, ..., 1)

    // Parses "(6,4,2,1)" or "6 4 2 1"; round-trips with str().
    static Partition parse(const std::string& text);
    std::string str() const; // "(6,4,2,1)", "()" for empty

    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const; // 1-indexed, 0 beyond the last row
    int sum() const;
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const& { return parts_; }
    std::vector<int> parts() && { return std::move(parts_); }

    bool contains(const Partition& other) const; // Young-diagram containment
    bool contains_cell(Cell c) const;
    Diagram young_diagram() const;
    Partition conjugate() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

Partition partition_from_row_counts(const std::vector<int>& counts, bool sort_decreasing);

} // namespace cmreg
