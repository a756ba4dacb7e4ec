#pragma once

#include <optional>
#include <vector>

#include "cmreg/diagram.hpp"
#include "cmreg/permutation.hpp"
#include "cmreg/polynomial.hpp"

namespace cmreg {

// Grothendieck polynomial of w in x variables, computed by the isobaric
// divided-difference recursion descending from the longest permutation.
// Results are cached by (trimmed) one-line notation; the cache is safe for
// concurrent use and all writers compute identical values.
SparsePoly single_grothendieck(const Permutation& w);

// Double Grothendieck polynomial in x and y, same recursion from the doubled
// staircase product.
SparsePoly double_grothendieck(const Permutation& w);

// Uncached recursion with a selectable descent path; exists so tests can
// check path independence against the cached route.
SparsePoly single_grothendieck_by_path(const Permutation& w, bool largest_ascent_first);

// Subset of D(v) together with the Demazure product of its reading word.
struct PipeSubset {
    Diagram cells;
    Permutation demazure_value;
    bool operator==(const PipeSubset&) const = default;
    auto operator<=>(const PipeSubset&) const = default;
};

// Subsets of D(v) whose reading word (rows top to bottom, right to left
// within rows) is a reduced word for w (closed=false), or has Demazure
// product w (closed=true). Canonically ordered. The default search prunes
// prefixes whose Demazure value is no longer below w in Bruhat order;
// exhaustive=true scans all subsets instead and is kept as the oracle.
std::vector<PipeSubset> enumerate_pipes(const Permutation& v, const Permutation& w, bool closed,
                                        bool exhaustive = false);

// Signed t_{ij}-weight sum over the closed pipe subsets of D(v); the zero
// polynomial when w is not below v.
SparsePoly unspecialized_grothendieck(const Permutation& v, const Permutation& w);

// K-polynomial of the Schubert determinantal quotient: x_i -> 1-t in the
// single Grothendieck polynomial.
SparsePoly kpolynomial_schubert(const Permutation& w);

// K-polynomial of the Kazhdan-Lusztig quotient for 321-avoiding v and w <= v:
// sum of (-1)^(#P - l(w)) (1-t)^(#P) over closed pipe subsets.
SparsePoly kpolynomial_kl(const Permutation& v, const Permutation& w);

// One step of the vexillary transition recursion at the maximal corner.
struct TransitionStep {
    Permutation source;
    Cell maximal_corner;                  // rightmost cell of the last row of D(source)
    Permutation pivot;                    // D(pivot) = D(source) - {corner}
    std::optional<Permutation> companion; // present exactly when the corner is accessible
    bool accessible = false;              // corner outside the dominant component
};

TransitionStep transition_step(const Permutation& v);

// Degree of the single Grothendieck polynomial computed by the corner
// recursion alone: +1 through the pivot in the dominant case, +1 through the
// better of pivot and companion otherwise. Memoized; usable far beyond the
// sizes where the polynomial itself is tractable.
int vexillary_degree_by_transition(const Permutation& v);

} // namespace cmreg
