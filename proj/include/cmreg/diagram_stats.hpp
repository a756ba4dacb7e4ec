#pragma once

#include <map>
#include <vector>

#include "cmreg/diagram.hpp"
#include "cmreg/partition.hpp"
#include "cmreg/permutation.hpp"

namespace cmreg {

// Size of the largest diagonal path (rows and columns strictly increasing)
// contained in the cell set.
int rho_d(const Diagram& cells);

// Size of the largest antidiagonal path (rows strictly increasing, columns
// strictly decreasing).
int rho_a(const Diagram& cells);

// Cells of D(w) strictly southeast of (k, w_k).
Diagram sigma_k(const Permutation& w, int k);

// Shape, envelope, flag and diagonal rank filling of a vexillary permutation.
//
// The filling transports rank values diagonal-by-diagonal: for each diagonal
// j - i = d, the ranks r_v(i,j) of the cells of D(v) on that diagonal are
// sorted weakly increasing and written top-to-bottom onto the same diagonal
// of the Young diagram of shape.
struct VexillaryData {
    Partition shape;              // lambda(v): code sorted decreasingly
    Partition envelope;           // mu(v): smallest partition containing D(v)
    std::vector<int> flag;        // phi(v), one entry per row of shape
    std::map<Cell, int> filling;  // F_v on the cells of shape
};

VexillaryData vexillary_data(const Permutation& v); // throws not_vexillary

// Up-set of the filling at threshold k, as cells of lambda(v).
Diagram tau_k(const Permutation& v, int k);
Diagram tau_k(const VexillaryData& data, int k);

// Largest k with the staircase (k,k-1,...,1) contained in lambda.
int staircase_sv(const Partition& lambda);

// Partition obtained by removing the first i columns.
Partition trunc(const Partition& lambda, int i);

// Excited Young diagrams of lambda inside mu.
Diagram d_top(const Partition& mu, const Partition& lambda);
Diagram d_bot(const Partition& mu, const Partition& lambda);
// Closure of {d_top} under plain and K-theoretic excited moves, canonically
// ordered. plain_only restricts to plain moves (all results have size |lambda|).
std::vector<Diagram> enumerate_kexcited(const Partition& mu, const Partition& lambda,
                                        bool plain_only = false);

// The unique vexillary permutation whose Rothe diagram is d_bot(mu, lambda),
// in the smallest symmetric group realizing it.
Permutation vexillary_from_shapes(const Partition& mu, const Partition& lambda);

// The Grassmannian permutation with the given shape and descent position.
Permutation grassmannian_permutation(const Partition& shape, int descent);

// Shape of a Grassmannian (or any vexillary) permutation: code sorted decreasingly.
Partition shape_of(const Permutation& w);

// Extremal path selection used by the maximal-tableau constructions.
//
// Diagonal flavor: among maximum-size diagonal paths, the lexicographically
// smallest cell sequence under (row, col) order.
Diagram max_diagonal_path(const Diagram& cells);
// Antidiagonal flavor: among maximum-size antidiagonal paths, first maximize
// the number of unit-diagonal steps, then prefer the northmost start and the
// eastmost columns. This reproduces the worked trace the constructions are
// pinned to; any maximum path yields the same entry counts.
Diagram max_antidiagonal_path(const Diagram& cells);

} // namespace cmreg
