#pragma once

#include <string>
#include <vector>

#include "cmreg/diagram.hpp"
#include "cmreg/diagram_stats.hpp"
#include "cmreg/permutation.hpp"
#include "cmreg/polynomial.hpp"

namespace cmreg {

enum class FillingFlavor {
    RotheShape, // columns strictly increase, rows weakly decrease, row i flagged by i
    YoungShape, // columns strictly increase, rows weakly increase, row i flagged by phi_i
};

// Assignment of a nonempty sorted set of positive integers to every support
// cell. Entry vectors are aligned with the support's canonical cell order.
struct SetValuedFilling {
    Diagram support;
    std::vector<std::vector<int>> entries;
    FillingFlavor flavor = FillingFlavor::RotheShape;

    int total_entries() const;
    const std::vector<int>& at(Cell c) const;
    std::string str() const; // grid rendering, digit sets per cell

    bool operator==(const SetValuedFilling&) const = default;
    auto operator<=>(const SetValuedFilling&) const = default;
};

// Independent validity checkers; deliberately separate per flavor since the
// row conditions run in opposite directions.
bool fsvd_valid(const SetValuedFilling& filling);
bool fsvt_valid(const SetValuedFilling& filling, const std::vector<int>& flag);

inline constexpr long kDefaultFillingBudget = 10'000'000;

// Exhaustive enumeration of the flagged set-valued fillings of D(w) (Rothe
// flavor, flag (1,...,n)); requires w 1432-avoiding. Throws
// enumeration_budget_exceeded rather than truncating.
std::vector<SetValuedFilling> enumerate_fsvd(const Permutation& w,
                                             long budget = kDefaultFillingBudget);

// Exhaustive enumeration of the flagged set-valued tableaux of lambda(v)
// (Young flavor, flag phi(v)); requires v vexillary.
std::vector<SetValuedFilling> enumerate_fsvt(const Permutation& v,
                                             long budget = kDefaultFillingBudget);

// Signed weight expansions over the enumerations. Both specialize to the
// corresponding Grothendieck polynomials (fsvd under y -> 0).
SparsePoly fsvd_expansion(const Permutation& w, long budget = kDefaultFillingBudget);
SparsePoly fsvt_expansion(const Permutation& v, long budget = kDefaultFillingBudget);

// Explicit maximal fillings built by repeated extremal-path insertion: the
// Rothe-shape filling grows along diagonal paths of sigma_k(w) with entries
// decremented northeast of the path; the Young-shape filling grows along
// antidiagonal paths of tau_k(v) with entries incremented southeast of it.
SetValuedFilling construct_T_w(const Permutation& w);
SetValuedFilling construct_U_v(const Permutation& v);

} // namespace cmreg
