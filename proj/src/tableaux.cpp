#include "cmreg/tableaux.hpp"

#include <algorithm>
#include <map>

#include "cmreg/errors.hpp"

namespace cmreg {

int SetValuedFilling::total_entries() const {
    int n = 0;
    for (const auto& e : entries) n += static_cast<int>(e.size());
    return n;
}

const std::vector<int>& SetValuedFilling::at(Cell c) const {
    const auto& cells = support.cells();
    auto it = std::lower_bound(cells.begin(), cells.end(), c);
    if (it == cells.end() || *it != c) throw index_out_of_range("cell not in filling support");
    return entries[static_cast<std::size_t>(it - cells.begin())];
}

std::string SetValuedFilling::str() const {
    if (support.empty()) return "(empty filling)\n";
    int max_row = 0, max_col = 0;
    for (const Cell& c : support.cells()) {
        max_row = std::max(max_row, c.row);
        max_col = std::max(max_col, c.col);
    }
    std::vector<std::vector<std::string>> grid(static_cast<std::size_t>(max_row),
                                               std::vector<std::string>(static_cast<std::size_t>(max_col), "."));
    bool wide = false;
    for (const auto& e : entries)
        for (int v : e) wide |= v > 9;
    for (std::size_t idx = 0; idx < entries.size(); ++idx) {
        std::string s;
        for (int v : entries[idx]) {
            if (!s.empty() && wide) s += ' ';
            s += std::to_string(v);
        }
        const Cell c = support.cells()[idx];
        grid[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)] = s;
    }
    std::size_t width = 1;
    for (const auto& row : grid)
        for (const auto& s : row) width = std::max(width, s.size());
    std::string out;
    for (const auto& row : grid) {
        std::size_t last = row.size();
        while (last > 0 && row[last - 1] == ".") --last;
        for (std::size_t j = 0; j < last; ++j) {
            if (j) out += ' ';
            out += row[j];
            out.append(width - row[j].size(), ' ');
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out += '\n';
    }
    return out;
}

namespace {

struct Neighbors {
    int west = -1;  // index into support cells, -1 if none
    int north = -1;
};

std::vector<Neighbors> neighbor_table(const Diagram& support) {
    const auto& cells = support.cells();
    std::vector<Neighbors> out(cells.size());
    for (std::size_t a = 0; a < cells.size(); ++a) {
        for (std::size_t b = 0; b < a; ++b) {
            if (cells[b].row == cells[a].row && cells[b].col < cells[a].col) {
                if (out[a].west < 0 || cells[static_cast<std::size_t>(out[a].west)].col < cells[b].col)
                    out[a].west = static_cast<int>(b);
            }
            if (cells[b].col == cells[a].col && cells[b].row < cells[a].row) {
                if (out[a].north < 0 || cells[static_cast<std::size_t>(out[a].north)].row < cells[b].row)
                    out[a].north = static_cast<int>(b);
            }
        }
    }
    return out;
}

bool chain_ok_fsvd(const std::vector<int>& west, const std::vector<int>& cell) {
    return west.front() >= cell.back(); // min(west) >= max(cell)
}

bool chain_ok_fsvt(const std::vector<int>& west, const std::vector<int>& cell) {
    return west.back() <= cell.front(); // max(west) <= min(cell)
}

} // namespace

bool fsvd_valid(const SetValuedFilling& f) {
    if (f.flavor != FillingFlavor::RotheShape) return false;
    const auto& cells = f.support.cells();
    if (cells.size() != f.entries.size()) return false;
    for (std::size_t a = 0; a < cells.size(); ++a) {
        const auto& e = f.entries[a];
        if (e.empty() || !std::is_sorted(e.begin(), e.end()) ||
            std::adjacent_find(e.begin(), e.end()) != e.end())
            return false;
        if (e.front() < 1 || e.back() > cells[a].row) return false;
        for (std::size_t b = 0; b < cells.size(); ++b) {
            if (b == a) continue;
            if (cells[b].row == cells[a].row && cells[b].col < cells[a].col &&
                !chain_ok_fsvd(f.entries[b], e))
                return false;
            if (cells[b].col == cells[a].col && cells[b].row < cells[a].row &&
                f.entries[b].back() >= e.front())
                return false;
        }
    }
    return true;
}

bool fsvt_valid(const SetValuedFilling& f, const std::vector<int>& flag) {
    if (f.flavor != FillingFlavor::YoungShape) return false;
    const auto& cells = f.support.cells();
    if (cells.size() != f.entries.size()) return false;
    for (std::size_t a = 0; a < cells.size(); ++a) {
        const auto& e = f.entries[a];
        if (e.empty() || !std::is_sorted(e.begin(), e.end()) ||
            std::adjacent_find(e.begin(), e.end()) != e.end())
            return false;
        if (cells[a].row > static_cast<int>(flag.size())) return false;
        if (e.front() < 1 || e.back() > flag[static_cast<std::size_t>(cells[a].row - 1)]) return false;
        for (std::size_t b = 0; b < cells.size(); ++b) {
            if (b == a) continue;
            if (cells[b].row == cells[a].row && cells[b].col < cells[a].col &&
                !chain_ok_fsvt(f.entries[b], e))
                return false;
            if (cells[b].col == cells[a].col && cells[b].row < cells[a].row &&
                f.entries[b].back() >= e.front())
                return false;
        }
    }
    return true;
}

namespace {

// Shared DFS: at each cell the admissible entry sets are the nonempty subsets
// of an interval determined by the nearest west and north neighbors.
template <typename Bounds, typename Emit>
void enumerate_fillings(const Diagram& support, Bounds bounds, Emit emit, long budget) {
    const auto nbrs = neighbor_table(support);
    std::vector<std::vector<int>> entries(support.cells().size());
    long produced = 0;

    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == entries.size()) {
            if (++produced > budget)
                throw enumeration_budget_exceeded("filling enumeration exceeded budget");
            emit(entries);
            return;
        }
        const auto [lo, hi] = bounds(idx, nbrs[idx], entries);
        if (lo > hi) return;
        const int width = hi - lo + 1;
        for (unsigned mask = 1; mask < (1u << width); ++mask) {
            auto& e = entries[idx];
            e.clear();
            for (int b = 0; b < width; ++b)
                if (mask & (1u << b)) e.push_back(lo + b);
            self(self, idx + 1);
        }
        entries[idx].clear();
    };
    rec(rec, 0);
}

} // namespace

std::vector<SetValuedFilling> enumerate_fsvd(const Permutation& w, long budget) {
    if (!avoids_1432(w)) throw not_1432_avoiding("enumeration needs a 1432-avoiding permutation");
    const Diagram support = rothe_diagram(w);
    const auto& cells = support.cells();
    std::vector<SetValuedFilling> out;
    auto bounds = [&](std::size_t idx, const Neighbors& nb,
                      const std::vector<std::vector<int>>& entries) -> std::pair<int, int> {
        int lo = 1, hi = cells[idx].row;
        if (nb.north >= 0) lo = std::max(lo, entries[static_cast<std::size_t>(nb.north)].back() + 1);
        if (nb.west >= 0) hi = std::min(hi, entries[static_cast<std::size_t>(nb.west)].front());
        return {lo, hi};
    };
    enumerate_fillings(support, bounds,
                       [&](const std::vector<std::vector<int>>& entries) {
                           out.push_back({support, entries, FillingFlavor::RotheShape});
                       },
                       budget);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SetValuedFilling> enumerate_fsvt(const Permutation& v, long budget) {
    const VexillaryData data = vexillary_data(v);
    const Diagram support = data.shape.young_diagram();
    const auto& cells = support.cells();
    std::vector<SetValuedFilling> out;
    auto bounds = [&](std::size_t idx, const Neighbors& nb,
                      const std::vector<std::vector<int>>& entries) -> std::pair<int, int> {
        int lo = 1;
        int hi = data.flag[static_cast<std::size_t>(cells[idx].row - 1)];
        if (nb.north >= 0) lo = std::max(lo, entries[static_cast<std::size_t>(nb.north)].back() + 1);
        if (nb.west >= 0) lo = std::max(lo, entries[static_cast<std::size_t>(nb.west)].back());
        return {lo, hi};
    };
    enumerate_fillings(support, bounds,
                       [&](const std::vector<std::vector<int>>& entries) {
                           out.push_back({support, entries, FillingFlavor::YoungShape});
                       },
                       budget);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

int parity_sign(int k) { return k % 2 == 0 ? 1 : -1; }

} // namespace

SparsePoly fsvd_expansion(const Permutation& w, long budget) {
    const Diagram d = rothe_diagram(w);
    std::map<int, int> east_col; // eastmost column of each row of D(w)
    for (const Cell& c : d.cells()) east_col[c.row] = std::max(east_col[c.row], c.col);
    SparsePoly out;
    for (const SetValuedFilling& f : enumerate_fsvd(w, budget)) {
        SparsePoly weight = SparsePoly::constant(parity_sign(f.total_entries() - d.size()));
        for (std::size_t idx = 0; idx < f.entries.size(); ++idx) {
            const Cell c = f.support.cells()[idx];
            for (int val : f.entries[idx]) {
                const int y_index = east_col[c.row] + c.row - c.col - val + 1;
                weight = weight * oplus(SparsePoly::variable(VarId::x(val)),
                                        SparsePoly::variable(VarId::y(y_index)));
            }
        }
        out = out + weight;
    }
    return out;
}

SparsePoly fsvt_expansion(const Permutation& v, long budget) {
    const int shape_size = shape_of(v).sum();
    SparsePoly out;
    for (const SetValuedFilling& f : enumerate_fsvt(v, budget)) {
        SparsePoly weight = SparsePoly::constant(parity_sign(f.total_entries() - shape_size));
        for (std::size_t idx = 0; idx < f.entries.size(); ++idx) {
            const Cell c = f.support.cells()[idx];
            for (int val : f.entries[idx])
                weight = weight * oplus(SparsePoly::variable(VarId::x(val)),
                                        SparsePoly::variable(VarId::y(val + c.col - c.row)));
        }
        out = out + weight;
    }
    return out;
}

namespace {

bool weakly_northeast_of_path(Cell x, const Diagram& path) {
    for (const Cell& a : path.cells())
        if (x.row <= a.row && x.col >= a.col) return true;
    return false;
}

bool weakly_southeast_of_path(Cell x, const Diagram& path) {
    for (const Cell& a : path.cells())
        if (x.row >= a.row && x.col >= a.col) return true;
    return false;
}

} // namespace

SetValuedFilling construct_T_w(const Permutation& w) {
    if (!avoids_1432(w)) throw not_1432_avoiding("maximal Rothe filling needs 1432-avoidance");
    const Diagram support = rothe_diagram(w);
    SetValuedFilling t{support, {}, FillingFlavor::RotheShape};
    for (const Cell& c : support.cells()) t.entries.push_back({c.row});
    for (int k = 1; k <= w.size(); ++k) {
        const Diagram sigma = sigma_k(w, k);
        if (sigma.empty()) continue;
        const Diagram path = max_diagonal_path(sigma);
        // The decrement region lives inside sigma_k itself; the worked trace
        // leaves cells outside it alone even when they sit north of the path.
        for (std::size_t idx = 0; idx < t.entries.size(); ++idx) {
            const Cell c = support.cells()[idx];
            auto& e = t.entries[idx];
            if (path.contains(c)) {
                if (e.front() - 1 < 1) throw internal_error("entry decremented below 1");
                e.insert(e.begin(), e.front() - 1);
            } else if (sigma.contains(c) && weakly_northeast_of_path(c, path)) {
                for (int& v : e)
                    if (--v < 1) throw internal_error("entry decremented below 1");
            }
        }
    }
    return t;
}

SetValuedFilling construct_U_v(const Permutation& v) {
    const VexillaryData data = vexillary_data(v);
    const Diagram support = data.shape.young_diagram();
    SetValuedFilling u{support, {}, FillingFlavor::YoungShape};
    for (const Cell& c : support.cells()) u.entries.push_back({c.row});
    int max_value = 0;
    for (const auto& [cell, value] : data.filling) max_value = std::max(max_value, value);
    for (int k = 1; k <= max_value; ++k) {
        const Diagram tau = tau_k(data, k);
        if (tau.empty()) continue;
        const Diagram path = max_antidiagonal_path(tau);
        for (std::size_t idx = 0; idx < u.entries.size(); ++idx) {
            const Cell c = support.cells()[idx];
            auto& e = u.entries[idx];
            if (path.contains(c)) e.push_back(e.back() + 1);
            else if (tau.contains(c) && weakly_southeast_of_path(c, path))
                for (int& val : e) ++val;
        }
    }
    return u;
}

} // namespace cmreg
