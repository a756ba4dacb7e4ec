#pragma once

#include <random>
#include <string>
#include <vector>

#include "cmreg/ladder.hpp"
#include "cmreg/permutation.hpp"

namespace cmreg {

// Outcome of one exhaustive or randomized sweep over a permutation class.
struct SweepResult {
    std::string name;
    long checked = 0;
    long mismatches = 0;
    std::string first_counterexample;

    bool ok() const { return mismatches == 0; }
};

std::vector<Permutation> all_permutations(int n);

// Degree statistic equals polynomial degree over the 1432-avoiding class.
SweepResult sweep_fd_degree(int n, int jobs = 1);
// Same over the vexillary class via the antidiagonal statistic.
SweepResult sweep_fa_degree(int n, int jobs = 1);
// Corner-recursion degree equals polynomial degree over the vexillary class.
SweepResult sweep_transition_degree(int n, int jobs = 1);
// Unspecialized degree of a shape-nested Grassmannian pair equals the degree
// of the bottom-diagram vexillary permutation.
SweepResult sweep_grassmannian_pairs(int n, int jobs = 1);
// Pipe-subset regularity equals K-polynomial degree minus length for
// 321-avoiding frames and everything below them.
SweepResult sweep_kl321(int n, int jobs = 1);
// Constructed maximal fillings are members of their enumerations and realize
// the maximum entry count (which equals the degree statistic).
SweepResult sweep_tableaux(int n, long budget);
// Exact expansion equalities: Rothe flavor specialized at y -> 0 against the
// single polynomial, Young flavor against the double polynomial.
SweepResult sweep_expansions(int n, long budget);
// Signed excited-diagram weight sum equals the double polynomial.
SweepResult sweep_excited(int n);
// Operator algebra on a seeded random polynomial suite.
SweepResult sweep_operators(unsigned seed, int samples = 200);
// Three-way regularity agreement on a generated ladder corpus, plus
// classical rectangles against the Grassmannian staircase formula.
SweepResult sweep_ladders(int count, int grid, unsigned seed);

Ladder random_ladder(std::mt19937& rng, int grid);

} // namespace cmreg
