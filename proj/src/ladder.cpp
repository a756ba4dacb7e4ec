#include "cmreg/ladder.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "cmreg/diagram_stats.hpp"
#include "cmreg/errors.hpp"

namespace cmreg {

namespace {

std::vector<std::pair<int, int>> corners_of_row_lengths(const std::vector<int>& rows) {
    std::vector<std::pair<int, int>> corners;
    for (int i = 1; i <= static_cast<int>(rows.size()); ++i) {
        const int len = rows[static_cast<std::size_t>(i - 1)];
        const bool last = i == static_cast<int>(rows.size());
        if (last || rows[static_cast<std::size_t>(i)] < len) corners.emplace_back(i, len);
    }
    return corners;
}

} // namespace

Ladder Ladder::from_corners(std::vector<std::pair<int, int>> se_corners,
                            std::vector<MarkedPoint> points) {
    Ladder ladder;
    std::sort(se_corners.begin(), se_corners.end());
    ladder.se_corners_ = std::move(se_corners);
    ladder.points_ = std::move(points);
    ladder.validate();
    return ladder;
}

Ladder Ladder::from_row_lengths(std::vector<int> row_lengths, std::vector<MarkedPoint> points) {
    return from_corners(corners_of_row_lengths(row_lengths), std::move(points));
}

void Ladder::validate() {
    if (se_corners_.empty()) throw invalid_corners("ladder needs at least one southeast corner");
    for (std::size_t i = 0; i < se_corners_.size(); ++i) {
        const auto [row, col] = se_corners_[i];
        if (row < 1 || col < 1) throw invalid_corners("corner coordinates must be positive");
        if (i > 0) {
            if (se_corners_[i].first <= se_corners_[i - 1].first ||
                se_corners_[i].second >= se_corners_[i - 1].second)
                throw invalid_corners("corners must step strictly south and strictly west");
        }
    }
    row_lengths_.clear();
    for (int i = 1; i <= se_corners_.back().first; ++i) {
        int len = 0;
        for (const auto& [row, col] : se_corners_)
            if (row >= i) {
                len = col;
                break;
            }
        row_lengths_.push_back(len);
    }

    if (points_.empty()) throw uncovered_variable("ladder needs at least one marked point");
    // SW to NE along the boundary path.
    std::sort(points_.begin(), points_.end(), [](const MarkedPoint& a, const MarkedPoint& b) {
        return a.row != b.row ? a.row > b.row : a.col < b.col;
    });
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const MarkedPoint& p = points_[i];
        if (!contains({p.row, p.col}) || contains({p.row + 1, p.col + 1}))
            throw point_off_boundary("marked point must sit on the southeast boundary path");
        if (i > 0 && points_[i - 1].row == p.row && points_[i - 1].col == p.col)
            throw point_off_boundary("duplicate marked point");
        if (p.rank < 1) throw rank_chain_violation("ranks must be positive");
        if (p.col - p.rank < 0 || p.row - p.rank < 0)
            throw rank_chain_violation("rank exceeds the corner it bounds");
        if (i > 0) {
            if (points_[i].col - points_[i].rank <= points_[i - 1].col - points_[i - 1].rank)
                throw rank_chain_violation("column rank chain must strictly increase northeastward");
            if (points_[i].row - points_[i].rank >= points_[i - 1].row - points_[i - 1].rank)
                throw rank_chain_violation("row rank chain must strictly decrease northeastward");
        }
    }

    for (int i = 1; i <= rows(); ++i)
        for (int j = 1; j <= row_lengths_[static_cast<std::size_t>(i - 1)]; ++j) {
            bool covered = false;
            for (const MarkedPoint& p : points_)
                if (p.row >= i && p.col >= j) covered = true;
            if (!covered)
                throw uncovered_variable("cell (" + std::to_string(i) + "," + std::to_string(j) +
                                         ") appears in no minor family");
        }
}

bool Ladder::contains(Cell c) const {
    return c.row >= 1 && c.row <= rows() && c.col >= 1 &&
           c.col <= row_lengths_[static_cast<std::size_t>(c.row - 1)];
}

Diagram Ladder::region() const {
    std::vector<Cell> cells;
    for (int i = 1; i <= rows(); ++i)
        for (int j = 1; j <= row_lengths_[static_cast<std::size_t>(i - 1)]; ++j)
            cells.push_back({i, j});
    return Diagram(std::move(cells));
}

Ladder Ladder::from_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad ladder JSON: ") + e.what());
    }
    try {
        std::vector<MarkedPoint> points;
        for (const auto& p : doc.at("points"))
            points.push_back({p.at("c").get<int>(), p.at("d").get<int>(), p.at("r").get<int>()});
        if (doc.contains("se_corners")) {
            std::vector<std::pair<int, int>> corners;
            for (const auto& c : doc.at("se_corners"))
                corners.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
            return from_corners(std::move(corners), std::move(points));
        }
        return from_row_lengths(doc.at("rows").get<std::vector<int>>(), std::move(points));
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad ladder JSON: ") + e.what());
    }
}

std::string Ladder::to_json_text() const {
    nlohmann::json doc;
    doc["se_corners"] = nlohmann::json::array();
    for (const auto& [row, col] : se_corners_) doc["se_corners"].push_back({row, col});
    doc["points"] = nlohmann::json::array();
    for (const MarkedPoint& p : points_)
        doc["points"].push_back({{"c", p.row}, {"d", p.col}, {"r", p.rank}});
    return doc.dump();
}

std::pair<Permutation, Permutation> ladder_to_grassmannian_pair(const Ladder& ladder) {
    const int x = ladder.rows();
    const int y = ladder.cols();
    const int n = x + y;

    const Permutation u =
        grassmannian_permutation(Partition(std::vector<int>(ladder.row_lengths())), x).embedded(n);

    // Block boundaries k_j and row shifts h_j, anchored to the worked example:
    // rows (k_{j-1}, k_j] of g are shifted by h_{j-1}.
    const auto& pts = ladder.points();
    std::vector<int> block_end{0}, shift{0};
    for (const MarkedPoint& p : pts) {
        block_end.push_back(x - p.row + p.rank - 1);
        shift.push_back(p.col - p.rank + 1);
    }
    block_end.push_back(x);

    std::vector<int> oneline;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (std::size_t block = 0; block + 1 < block_end.size(); ++block) {
        if (block_end[block + 1] < block_end[block])
            throw internal_error("ladder block boundaries out of order");
        for (int i = block_end[block] + 1; i <= block_end[block + 1]; ++i) {
            const int value = i + shift[block];
            if (value < 1 || value > n || used[static_cast<std::size_t>(value - 1)])
                throw internal_error("ladder rank data does not assemble into a permutation");
            oneline.push_back(value);
            used[static_cast<std::size_t>(value - 1)] = true;
        }
    }
    for (int value = 1; value <= n; ++value)
        if (!used[static_cast<std::size_t>(value - 1)]) oneline.push_back(value);
    const Permutation g = Permutation::from_one_line(oneline);

    const DescentData dd = descent_data(g);
    if (!(dd.is_grassmannian && *dd.descents.begin() == x) && !dd.is_identity)
        throw internal_error("ladder companion permutation is not Grassmannian at the row count");
    if (!shape_of(u).contains(shape_of(g)))
        throw internal_error("ladder shapes fail containment");
    if (last_nonzero_index(lehmer_code(u)) != last_nonzero_index(lehmer_code(g)))
        throw internal_error("ladder pair disagrees on the last nonzero code index");
    return {u, g};
}

Permutation ladder_to_vexillary(const Ladder& ladder) {
    const auto& pts = ladder.points();
    int max_row = 0, max_col = 0;
    for (const MarkedPoint& p : pts) {
        max_row = std::max(max_row, p.row);
        max_col = std::max(max_col, p.col);
    }
    const int m = max_row + max_col;

    // Generic rank matrix under the essential constraints r(c_j, d_j) = r_j - 1.
    auto bound = [&](int i, int j) {
        int r = std::min(i, j);
        for (const MarkedPoint& p : pts)
            r = std::min(r, (p.rank - 1) + std::max(i - p.row, 0) + std::max(j - p.col, 0));
        return r;
    };
    std::vector<std::vector<int>> rank(static_cast<std::size_t>(m + 1),
                                       std::vector<int>(static_cast<std::size_t>(m + 1), 0));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) rank[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = bound(i, j);

    std::vector<int> oneline(static_cast<std::size_t>(m), 0);
    std::vector<bool> used(static_cast<std::size_t>(m), false);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            const int delta = rank[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                              rank[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] -
                              rank[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] +
                              rank[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
            if (delta == 0) continue;
            if (delta != 1 || oneline[static_cast<std::size_t>(i - 1)] != 0 ||
                used[static_cast<std::size_t>(j - 1)])
                throw no_such_permutation("rank data is not the rank matrix of a permutation");
            oneline[static_cast<std::size_t>(i - 1)] = j;
            used[static_cast<std::size_t>(j - 1)] = true;
        }
    for (int v : oneline)
        if (v == 0) throw no_such_permutation("rank data leaves a row without a pivot");

    const Permutation v = Permutation::from_one_line(oneline).trimmed();
    if (!is_vexillary(v)) throw no_such_permutation("essential data does not define a vexillary permutation");

    std::vector<Cell> expected;
    for (const MarkedPoint& p : pts) {
        expected.push_back({p.row, p.col});
        if (rank_function(v.embedded(m), p.row, p.col) != p.rank - 1)
            throw no_such_permutation("reconstructed permutation misses an essential rank");
    }
    if (essential_set(v) != Diagram(expected))
        throw no_such_permutation("reconstructed essential set differs from the marked points");
    return v;
}

RegularityReport reg_ladder(const Ladder& ladder, bool verify) {
    const Permutation v = ladder_to_vexillary(ladder);
    RegularityReport report;
    report.method = RegularityReport::Method::FormulaVexillary;
    report.path_sizes = f_a_path_sizes(v);
    report.value = std::accumulate(report.path_sizes.begin(), report.path_sizes.end(), 0);
    if (verify) {
        const auto [u, g] = ladder_to_grassmannian_pair(ladder);
        if (reg_grassmannian_patch(u, g).value != report.value)
            throw internal_error("ladder and patch regularity routes disagree");
    }
    return report;
}

IdealPresentation present_schubert(const Permutation& w) {
    IdealPresentation p;
    p.kind = IdealPresentation::GridKind::GenericMatrix;
    p.grid_rows = p.grid_cols = w.size();
    p.var_prefix = "x";
    std::vector<Cell> cells;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = 1; j <= w.size(); ++j) cells.push_back({i, j});
    p.variable_cells = Diagram(std::move(cells));
    for (const Cell& e : essential_set(w).cells())
        p.specs.push_back({rank_function(w, e.row, e.col) + 1, e.row, e.col});
    return p;
}

IdealPresentation present_kl(const Permutation& v, const Permutation& w) {
    const int n = std::max(v.size(), w.size());
    IdealPresentation p;
    p.kind = IdealPresentation::GridKind::KlPattern;
    p.grid_rows = p.grid_cols = n;
    p.var_prefix = "z";
    p.frame = v.embedded(n);
    p.variable_cells = rothe_diagram(*p.frame);
    const Permutation we = w.embedded(n);
    for (const Cell& e : essential_set(we).cells())
        p.specs.push_back({rank_function(we, e.row, e.col) + 1, e.row, e.col});
    return p;
}

IdealPresentation present_ladder(const Ladder& ladder) {
    IdealPresentation p;
    p.kind = IdealPresentation::GridKind::LadderRegion;
    p.grid_rows = ladder.rows();
    p.grid_cols = ladder.cols();
    p.var_prefix = "z";
    p.variable_cells = ladder.region();
    for (const MarkedPoint& pt : ladder.points()) p.specs.push_back({pt.rank, pt.row, pt.col});
    std::sort(p.specs.begin(), p.specs.end());
    return p;
}

std::map<Cell, std::string> IdealPresentation::variable_grid() const {
    std::map<Cell, std::string> grid;
    for (const Cell& c : variable_cells.cells())
        grid[c] = var_prefix + "_(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
    return grid;
}

std::string export_macaulay2(const IdealPresentation& presentation) {
    const auto grid = presentation.variable_grid();
    std::ostringstream out;
    out << "-- determinantal presentation, generated for cross-validation\n";
    out << "R = QQ[";
    bool first = true;
    for (const auto& [cell, name] : grid) {
        if (!first) out << ", ";
        out << name;
        first = false;
    }
    out << "];\n";
    out << "M = matrix {\n";
    for (int i = 1; i <= presentation.grid_rows; ++i) {
        out << "  {";
        for (int j = 1; j <= presentation.grid_cols; ++j) {
            if (j > 1) out << ", ";
            auto it = grid.find({i, j});
            if (it != grid.end()) out << it->second;
            else if (presentation.frame && (*presentation.frame)(i) == j) out << "1";
            else out << "0";
        }
        out << "}" << (i < presentation.grid_rows ? "," : "") << "\n";
    }
    out << "};\n";
    if (presentation.specs.empty()) {
        out << "I = ideal(0_R);\n";
    } else {
        out << "I = ";
        for (std::size_t k = 0; k < presentation.specs.size(); ++k) {
            const GeneratorSpec& s = presentation.specs[k];
            if (k) out << " +\n    ";
            out << "minors(" << s.minor_size << ", submatrix(M, {0.." << s.row_bound - 1
                << "}, {0.." << s.col_bound - 1 << "}))";
        }
        out << ";\n";
    }
    out << "<< \"regularity = \" << regularity comodule I << endl;\n";
    return out.str();
}

std::vector<GeneratorSpec> kl_specs_in_ladder_coords(const Permutation& u, const Permutation& g,
                                                     const Ladder& ladder) {
    const int n = std::max(u.size(), g.size());
    const Permutation ue = u.embedded(n);
    const Permutation ge = g.embedded(n);
    const Diagram du = rothe_diagram(ue);
    const int x = ladder.rows();

    // Left-justified column index of each D(u) cell within its row.
    std::map<int, std::vector<int>> row_cols;
    for (const Cell& c : du.cells()) row_cols[c.row].push_back(c.col);

    std::vector<GeneratorSpec> out;
    for (const Cell& e : essential_set(ge).cells()) {
        const int ones = rank_function(ue, e.row, e.col);
        const int reduced_size = rank_function(ge, e.row, e.col) + 1 - ones;
        std::vector<Cell> mapped;
        for (const Cell& c : du.cells()) {
            if (c.row > e.row || c.col > e.col) continue;
            if (ue(c.row) <= e.col) continue; // row pinned by a unit entry in the corner
            const auto& cols = row_cols[c.row];
            const int justified =
                static_cast<int>(std::lower_bound(cols.begin(), cols.end(), c.col) - cols.begin()) + 1;
            mapped.push_back({x + 1 - c.row, justified});
        }
        int row_bound = 0, col_bound = 0;
        for (const Cell& c : mapped) {
            row_bound = std::max(row_bound, c.row);
            col_bound = std::max(col_bound, c.col);
        }
        std::vector<Cell> full;
        for (int i = 1; i <= row_bound; ++i)
            for (int j = 1; j <= col_bound; ++j) full.push_back({i, j});
        if (Diagram(mapped) != Diagram(full))
            throw internal_error("reduced minor region is not a ladder corner");
        out.push_back({reduced_size, row_bound, col_bound});
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace cmreg
