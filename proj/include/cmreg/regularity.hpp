#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmreg/diagram.hpp"
#include "cmreg/partition.hpp"
#include "cmreg/permutation.hpp"

namespace cmreg {

// Castelnuovo-Mumford regularity value with the route that produced it.
// Heights are the standard identities (Coxeter length for the Schubert
// determinantal quotient, |lambda(g)| for the Grassmannian patch), never
// computed from ideals.
struct RegularityReport {
    enum class Method {
        Formula1432,
        FormulaVexillary,
        FormulaGrassmannian,
        OracleDegree,
        KlPipes,
        GrassmannianPatch,
    };

    int value = 0;
    Method method = Method::Formula1432;
    std::vector<int> path_sizes;     // per-k witness for the formula methods
    std::optional<Diagram> max_pipe; // witness for the pipe method

    std::string method_name() const;
};

// Degree statistic for 1432-avoiding w: #D(w) + sum_k rho_d(sigma_k(w)).
int f_d(const Permutation& w);
std::vector<int> f_d_path_sizes(const Permutation& w);

// Degree statistic for vexillary v: #D(v) + sum_k rho_a(tau_k(v)).
int f_a(const Permutation& v);
std::vector<int> f_a_path_sizes(const Permutation& v);

// Regularity of the Schubert determinantal quotient. Closed-form statistic
// when the permutation is 1432-avoiding or vexillary (both routes asserted
// equal when both apply); otherwise the polynomial-degree route.
RegularityReport reg_schubert(const Permutation& w);

// Grassmannian degree formula: |lambda| + sum_i sv(trunc^(lambda_i)(lambda)).
int deg_grassmannian(const Partition& lambda, int descent);

// Regularity of the Kazhdan-Lusztig quotient for 321-avoiding v and w <= v:
// largest closed pipe subset minus #D(w).
RegularityReport reg_kl_321(const Permutation& v, const Permutation& w);

// Regularity of a Grassmannian Schubert-variety patch: build the vexillary
// permutation with bottom diagram of (lambda(u), lambda(g)) and sum its
// antidiagonal path statistic.
RegularityReport reg_grassmannian_patch(const Permutation& u, const Permutation& g);

} // namespace cmreg
