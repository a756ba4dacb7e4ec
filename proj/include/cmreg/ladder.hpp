#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmreg/diagram.hpp"
#include "cmreg/permutation.hpp"
#include "cmreg/regularity.hpp"

namespace cmreg {

struct MarkedPoint {
    int row = 0;  // c_j
    int col = 0;  // d_j
    int rank = 0; // r_j, size of the minors on the [row] x [col] corner
    auto operator<=>(const MarkedPoint&) const = default;
};

// One-sided ladder: a Young-diagram region of variables with marked points on
// its southeast boundary path, each carrying a minor size. Construction
// validates everything; an instance is immutable and always valid.
//
// Point ordering is fixed southwest-to-northeast. The rank chains must clear
// both boundary ends: col - rank stays nonnegative and strictly increases,
// row - rank stays nonnegative and strictly decreases. This keeps the minor
// families incomparable and pins the conventions to the worked 5x5 two-corner
// example this module is tested against.
class Ladder {
public:
    static Ladder from_corners(std::vector<std::pair<int, int>> se_corners,
                               std::vector<MarkedPoint> points);
    static Ladder from_row_lengths(std::vector<int> row_lengths, std::vector<MarkedPoint> points);

    // JSON schema: {"se_corners": [[3,5],[5,3]], "points": [{"c":3,"d":5,"r":3}, ...]};
    // "rows": [5,5,5,3,3] may replace "se_corners".
    static Ladder from_json_text(const std::string& text);
    std::string to_json_text() const;

    const std::vector<std::pair<int, int>>& se_corners() const { return se_corners_; } // NE to SW
    const std::vector<MarkedPoint>& points() const { return points_; }                 // SW to NE
    const std::vector<int>& row_lengths() const { return row_lengths_; }
    int rows() const { return static_cast<int>(row_lengths_.size()); }
    int cols() const { return row_lengths_.empty() ? 0 : row_lengths_.front(); }
    bool contains(Cell c) const;
    Diagram region() const;

private:
    Ladder() = default;
    void validate();

    std::vector<std::pair<int, int>> se_corners_;
    std::vector<MarkedPoint> points_;
    std::vector<int> row_lengths_;
};

// The Grassmannian pair (u, g) whose Kazhdan-Lusztig ideal shares its
// generators with the ladder ideal: u has shape equal to the ladder row
// lengths with descent at the row count; g encodes the marked ranks.
std::pair<Permutation, Permutation> ladder_to_grassmannian_pair(const Ladder& ladder);

// The unique vexillary permutation whose essential set is the marked points
// with essential ranks r_j - 1, reconstructed by completing the rank matrix.
Permutation ladder_to_vexillary(const Ladder& ladder);

// Regularity of the ladder determinantal quotient via the antidiagonal path
// statistic of the essential-set permutation. verify re-derives the value
// through the Grassmannian pair and insists on agreement.
RegularityReport reg_ladder(const Ladder& ladder, bool verify = false);

// Minor family: minors of size minor_size in the top-left row_bound x
// col_bound corner of the relevant matrix.
struct GeneratorSpec {
    int minor_size = 0;
    int row_bound = 0;
    int col_bound = 0;
    auto operator<=>(const GeneratorSpec&) const = default;
};

// Determinantal presentation over one of three variable grids.
struct IdealPresentation {
    enum class GridKind { GenericMatrix, KlPattern, LadderRegion };

    GridKind kind = GridKind::GenericMatrix;
    int grid_rows = 0;
    int grid_cols = 0;
    Diagram variable_cells;               // cells carrying an indeterminate
    std::optional<Permutation> frame;     // KL pattern: 1's at (i, frame(i))
    std::string var_prefix = "z";
    std::vector<GeneratorSpec> specs;

    std::map<Cell, std::string> variable_grid() const;
};

IdealPresentation present_schubert(const Permutation& w);
IdealPresentation present_kl(const Permutation& v, const Permutation& w);
IdealPresentation present_ladder(const Ladder& ladder);

// Macaulay2 script defining the ring, the matrix, the ideal, and a
// regularity query; deterministic row-major variable order.
std::string export_macaulay2(const IdealPresentation& presentation);

// Minor families of the Kazhdan-Lusztig presentation of (u, g) reduced by
// their pinned unit entries and rewritten in ladder coordinates (flip rows,
// left-justify columns). Agreement with the ladder's own generator specs is
// the structural form of the shared-generators statement.
std::vector<GeneratorSpec> kl_specs_in_ladder_coords(const Permutation& u, const Permutation& g,
                                                     const Ladder& ladder);

} // namespace cmreg
