#include "cmreg/diagram_stats.hpp"

#include <algorithm>
#include <set>

#include "cmreg/errors.hpp"

namespace cmreg {

int rho_d(const Diagram& cells) {
    const auto& cs = cells.cells();
    const int m = cells.size();
    std::vector<int> dp(static_cast<std::size_t>(m), 1);
    int best = 0;
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < a; ++b)
            if (cs[static_cast<std::size_t>(b)].row < cs[static_cast<std::size_t>(a)].row &&
                cs[static_cast<std::size_t>(b)].col < cs[static_cast<std::size_t>(a)].col)
                dp[static_cast<std::size_t>(a)] = std::max(dp[static_cast<std::size_t>(a)],
                                                           dp[static_cast<std::size_t>(b)] + 1);
        best = std::max(best, dp[static_cast<std::size_t>(a)]);
    }
    return best;
}

int rho_a(const Diagram& cells) {
    const auto& cs = cells.cells();
    const int m = cells.size();
    std::vector<int> dp(static_cast<std::size_t>(m), 1);
    int best = 0;
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < a; ++b)
            if (cs[static_cast<std::size_t>(b)].row < cs[static_cast<std::size_t>(a)].row &&
                cs[static_cast<std::size_t>(b)].col > cs[static_cast<std::size_t>(a)].col)
                dp[static_cast<std::size_t>(a)] = std::max(dp[static_cast<std::size_t>(a)],
                                                           dp[static_cast<std::size_t>(b)] + 1);
        best = std::max(best, dp[static_cast<std::size_t>(a)]);
    }
    return best;
}

Diagram sigma_k(const Permutation& w, int k) {
    if (k < 1 || k > w.size()) throw index_out_of_range("sigma_k index out of range");
    std::vector<Cell> out;
    for (const Cell& c : rothe_diagram(w).cells())
        if (c.row > k && c.col > w(k)) out.push_back(c);
    return Diagram(std::move(out));
}

VexillaryData vexillary_data(const Permutation& v) {
    if (!is_vexillary(v)) throw not_vexillary("permutation contains a 2143 pattern");
    VexillaryData data;
    const Diagram d = rothe_diagram(v);
    data.shape = partition_from_row_counts(lehmer_code(v), /*sort_decreasing=*/true);

    // mu_i = widest column reached by any cell weakly south of row i.
    int max_row = 0;
    for (const Cell& c : d.cells()) max_row = std::max(max_row, c.row);
    std::vector<int> mu(static_cast<std::size_t>(max_row), 0);
    for (const Cell& c : d.cells())
        for (int i = 1; i <= c.row; ++i)
            mu[static_cast<std::size_t>(i - 1)] = std::max(mu[static_cast<std::size_t>(i - 1)], c.col);
    data.envelope = Partition(std::move(mu));

    for (int i = 1; i <= data.shape.rows(); ++i) {
        const int diag = data.shape.part(i) - i;
        int phi = 0;
        for (int j = 1; j <= data.envelope.rows(); ++j)
            if (j + diag >= 1 && data.envelope.part(j) >= j + diag) phi = j;
        data.flag.push_back(phi);
    }
    for (std::size_t i = 1; i < data.flag.size(); ++i)
        if (data.flag[i] < data.flag[i - 1]) throw internal_error("flag not weakly increasing");

    // Transport ranks onto lambda diagonal by diagonal, weakly increasing downward.
    std::map<int, std::vector<int>> ranks_by_diag;
    for (const Cell& c : d.cells()) ranks_by_diag[c.col - c.row].push_back(rank_function(v, c.row, c.col));
    std::map<int, std::vector<Cell>> shape_diag;
    for (const Cell& c : data.shape.young_diagram().cells()) shape_diag[c.col - c.row].push_back(c);
    for (auto& [diag, cells] : shape_diag) {
        auto it = ranks_by_diag.find(diag);
        if (it == ranks_by_diag.end() || it->second.size() != cells.size())
            throw internal_error("diagonal multiset mismatch between D(v) and lambda(v)");
        std::vector<int>& ranks = it->second;
        std::sort(ranks.begin(), ranks.end());
        std::sort(cells.begin(), cells.end()); // top-to-bottom along the diagonal
        for (std::size_t t = 0; t < cells.size(); ++t) data.filling[cells[t]] = ranks[t];
    }
    return data;
}

Diagram tau_k(const VexillaryData& data, int k) {
    std::vector<Cell> out;
    for (const auto& [cell, value] : data.filling)
        if (value >= k) out.push_back(cell);
    return Diagram(std::move(out));
}

Diagram tau_k(const Permutation& v, int k) { return tau_k(vexillary_data(v), k); }

int staircase_sv(const Partition& lambda) {
    int k = 0;
    while (lambda.contains(Partition::staircase(k + 1))) ++k;
    return k;
}

Partition trunc(const Partition& lambda, int i) {
    if (i < 0) throw index_out_of_range("cannot truncate a negative number of columns");
    std::vector<int> parts;
    for (int p : lambda.parts()) parts.push_back(std::max(p - i, 0));
    return Partition(std::move(parts));
}

Diagram d_top(const Partition& mu, const Partition& lambda) {
    if (!mu.contains(lambda)) throw shape_not_contained("lambda must be contained in mu");
    return lambda.young_diagram();
}

namespace {

// Window for a move at (i,j): the full 2x2 square lies inside mu and the
// other three cells are free.
bool move_window_open(const Partition& mu, const Diagram& d, Cell c) {
    return mu.contains_cell({c.row + 1, c.col + 1}) && !d.contains({c.row, c.col + 1}) &&
           !d.contains({c.row + 1, c.col}) && !d.contains({c.row + 1, c.col + 1});
}

} // namespace

std::vector<Diagram> enumerate_kexcited(const Partition& mu, const Partition& lambda, bool plain_only) {
    std::set<Diagram> seen;
    std::vector<Diagram> frontier{d_top(mu, lambda)};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
        Diagram d = std::move(frontier.back());
        frontier.pop_back();
        for (const Cell& c : d.cells()) {
            if (!move_window_open(mu, d, c)) continue;
            const Cell target{c.row + 1, c.col + 1};
            Diagram plain = d.without(c).with(target);
            if (seen.insert(plain).second) frontier.push_back(plain);
            if (!plain_only) {
                Diagram ktheoretic = d.with(target);
                if (seen.insert(ktheoretic).second) frontier.push_back(ktheoretic);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

Diagram d_bot(const Partition& mu, const Partition& lambda) {
    Diagram d = d_top(mu, lambda);
    bool moved = true;
    while (moved) {
        moved = false;
        for (const Cell& c : d.cells()) {
            if (move_window_open(mu, d, c)) {
                d = d.without(c).with({c.row + 1, c.col + 1});
                moved = true;
                break;
            }
        }
    }
    return d;
}

Permutation vexillary_from_shapes(const Partition& mu, const Partition& lambda) {
    const Diagram bottom = d_bot(mu, lambda);
    const Permutation candidate = permutation_from_code(bottom.row_counts());
    if (rothe_diagram(candidate) != bottom)
        throw internal_error("diagram reconstruction failure: row code does not invert");
    const Permutation trimmed = candidate.trimmed();
    if (!is_vexillary(trimmed)) throw internal_error("reconstructed permutation is not vexillary");
    return trimmed;
}

Permutation grassmannian_permutation(const Partition& shape, int descent) {
    if (descent < 1) throw index_out_of_range("descent position must be positive");
    if (shape.rows() > descent) throw too_many_parts("shape has more parts than the descent position");
    if (shape.empty()) return Permutation::identity(descent);
    const int n = descent + shape.part(1);
    std::vector<int> oneline;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int i = 1; i <= descent; ++i) {
        const int value = i + shape.part(descent + 1 - i);
        oneline.push_back(value);
        used[static_cast<std::size_t>(value - 1)] = true;
    }
    for (int value = 1; value <= n; ++value)
        if (!used[static_cast<std::size_t>(value - 1)]) oneline.push_back(value);
    return Permutation::from_one_line(oneline);
}

Partition shape_of(const Permutation& w) {
    return partition_from_row_counts(lehmer_code(w), /*sort_decreasing=*/true);
}

namespace {

struct PathScore {
    int len = 0;
    int conn = 0;
    auto operator<=>(const PathScore&) const = default;
};

bool diagonal_step(Cell from, Cell to) { return to.row > from.row && to.col > from.col; }
bool antidiagonal_step(Cell from, Cell to) { return to.row > from.row && to.col < from.col; }
bool unit_antidiagonal_step(Cell from, Cell to) {
    return to.row == from.row + 1 && to.col == from.col - 1;
}

} // namespace

Diagram max_diagonal_path(const Diagram& cells) {
    const auto& cs = cells.cells();
    const int m = cells.size();
    if (m == 0) return {};
    // len[a] = longest diagonal path starting at cell a, going southeast.
    std::vector<int> len(static_cast<std::size_t>(m), 1);
    for (int a = m - 1; a >= 0; --a)
        for (int b = a + 1; b < m; ++b)
            if (diagonal_step(cs[static_cast<std::size_t>(a)], cs[static_cast<std::size_t>(b)]))
                len[static_cast<std::size_t>(a)] =
                    std::max(len[static_cast<std::size_t>(a)], len[static_cast<std::size_t>(b)] + 1);
    const int total = *std::max_element(len.begin(), len.end());

    std::vector<Cell> path;
    int prev = -1;
    for (int need = total; need >= 1; --need) {
        for (int a = (prev < 0 ? 0 : prev + 1); a < m; ++a) {
            if (len[static_cast<std::size_t>(a)] != need) continue;
            if (prev >= 0 &&
                !diagonal_step(cs[static_cast<std::size_t>(prev)], cs[static_cast<std::size_t>(a)]))
                continue;
            path.push_back(cs[static_cast<std::size_t>(a)]);
            prev = a;
            break;
        }
    }
    if (static_cast<int>(path.size()) != total) throw internal_error("diagonal path reconstruction failed");
    return Diagram(std::move(path));
}

Diagram max_antidiagonal_path(const Diagram& cells) {
    const auto& cs = cells.cells();
    const int m = cells.size();
    if (m == 0) return {};
    // score[a]: best (length, connected steps) over antidiagonal paths starting
    // at cell a and running southwest.
    std::vector<PathScore> score(static_cast<std::size_t>(m), PathScore{1, 0});
    for (int a = m - 1; a >= 0; --a) {
        for (int b = a + 1; b < m; ++b) {
            if (!antidiagonal_step(cs[static_cast<std::size_t>(a)], cs[static_cast<std::size_t>(b)]))
                continue;
            const int adj =
                unit_antidiagonal_step(cs[static_cast<std::size_t>(a)], cs[static_cast<std::size_t>(b)]) ? 1 : 0;
            PathScore cand{score[static_cast<std::size_t>(b)].len + 1,
                           score[static_cast<std::size_t>(b)].conn + adj};
            score[static_cast<std::size_t>(a)] = std::max(score[static_cast<std::size_t>(a)], cand);
        }
    }
    const PathScore best = *std::max_element(score.begin(), score.end());

    // Start: northmost row, then eastmost column among optimal starts.
    int current = -1;
    for (int a = 0; a < m; ++a) {
        if (score[static_cast<std::size_t>(a)] != best) continue;
        if (current < 0 || cs[static_cast<std::size_t>(a)].row < cs[static_cast<std::size_t>(current)].row ||
            (cs[static_cast<std::size_t>(a)].row == cs[static_cast<std::size_t>(current)].row &&
             cs[static_cast<std::size_t>(a)].col > cs[static_cast<std::size_t>(current)].col))
            current = a;
    }

    std::vector<Cell> path{cs[static_cast<std::size_t>(current)]};
    PathScore remaining = best;
    while (remaining.len > 1) {
        int next = -1;
        for (int b = 0; b < m; ++b) {
            if (!antidiagonal_step(cs[static_cast<std::size_t>(current)], cs[static_cast<std::size_t>(b)]))
                continue;
            const int adj = unit_antidiagonal_step(cs[static_cast<std::size_t>(current)],
                                                   cs[static_cast<std::size_t>(b)]) ? 1 : 0;
            if (score[static_cast<std::size_t>(b)].len != remaining.len - 1 ||
                score[static_cast<std::size_t>(b)].conn + adj != remaining.conn)
                continue;
            if (next < 0 || cs[static_cast<std::size_t>(b)].row < cs[static_cast<std::size_t>(next)].row ||
                (cs[static_cast<std::size_t>(b)].row == cs[static_cast<std::size_t>(next)].row &&
                 cs[static_cast<std::size_t>(b)].col > cs[static_cast<std::size_t>(next)].col))
                next = b;
        }
        if (next < 0) throw internal_error("antidiagonal path reconstruction failed");
        remaining = {remaining.len - 1,
                     remaining.conn - (unit_antidiagonal_step(cs[static_cast<std::size_t>(current)],
                                                              cs[static_cast<std::size_t>(next)]) ? 1 : 0)};
        current = next;
        path.push_back(cs[static_cast<std::size_t>(current)]);
    }
    return Diagram(std::move(path));
}

} // namespace cmreg
