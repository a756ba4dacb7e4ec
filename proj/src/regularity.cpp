#include "cmreg/regularity.hpp"

#include <algorithm>
#include <numeric>

#include "cmreg/diagram_stats.hpp"
#include "cmreg/errors.hpp"
#include "cmreg/grothendieck.hpp"

namespace cmreg {

std::string RegularityReport::method_name() const {
    switch (method) {
        case Method::Formula1432: return "formula_1432";
        case Method::FormulaVexillary: return "formula_vexillary";
        case Method::FormulaGrassmannian: return "formula_grassmannian";
        case Method::OracleDegree: return "oracle_degree";
        case Method::KlPipes: return "kl_pipes";
        case Method::GrassmannianPatch: return "grassmannian_patch";
    }
    return "?";
}

std::vector<int> f_d_path_sizes(const Permutation& w) {
    if (!avoids_1432(w)) throw not_1432_avoiding("diagonal statistic needs 1432-avoidance");
    std::vector<int> sizes;
    for (int k = 1; k <= w.size(); ++k) sizes.push_back(rho_d(sigma_k(w, k)));
    return sizes;
}

int f_d(const Permutation& w) {
    const auto sizes = f_d_path_sizes(w);
    return w.coxeter_length() + std::accumulate(sizes.begin(), sizes.end(), 0);
}

std::vector<int> f_a_path_sizes(const Permutation& v) {
    const VexillaryData data = vexillary_data(v);
    int max_value = 0;
    for (const auto& [cell, value] : data.filling) max_value = std::max(max_value, value);
    std::vector<int> sizes;
    for (int k = 1; k <= std::max(max_value, 1); ++k) sizes.push_back(rho_a(tau_k(data, k)));
    return sizes;
}

int f_a(const Permutation& v) {
    const auto sizes = f_a_path_sizes(v);
    return v.coxeter_length() + std::accumulate(sizes.begin(), sizes.end(), 0);
}

RegularityReport reg_schubert(const Permutation& w) {
    RegularityReport report;
    const bool diag = avoids_1432(w);
    const bool vex = is_vexillary(w);
    const int length = w.coxeter_length();
    if (diag) {
        report.method = RegularityReport::Method::Formula1432;
        report.path_sizes = f_d_path_sizes(w);
        report.value = f_d(w) - length;
        if (vex && f_a(w) - length != report.value)
            throw internal_error("diagonal and antidiagonal statistics disagree");
        return report;
    }
    if (vex) {
        report.method = RegularityReport::Method::FormulaVexillary;
        report.path_sizes = f_a_path_sizes(w);
        report.value = f_a(w) - length;
        return report;
    }
    report.method = RegularityReport::Method::OracleDegree;
    const auto deg = single_grothendieck(w).degree();
    report.value = (deg ? *deg : 0) - length;
    return report;
}

int deg_grassmannian(const Partition& lambda, int descent) {
    if (lambda.rows() > descent) throw too_many_parts("shape has more parts than the descent");
    int total = lambda.sum();
    for (int i = 1; i <= descent; ++i) total += staircase_sv(trunc(lambda, lambda.part(i)));
    return total;
}

RegularityReport reg_kl_321(const Permutation& v, const Permutation& w) {
    if (!is_321_avoiding(v)) throw not_321_avoiding("pipe formula needs a 321-avoiding frame");
    if (!bruhat_leq(w, v)) throw not_bruhat_comparable("w must lie below v in Bruhat order");
    RegularityReport report;
    report.method = RegularityReport::Method::KlPipes;
    Diagram best;
    int best_size = -1;
    for (const PipeSubset& p : enumerate_pipes(v, w, /*closed=*/true)) {
        if (p.cells.size() > best_size) {
            best_size = p.cells.size();
            best = p.cells;
        }
    }
    if (best_size < 0) throw internal_error("no closed pipe subset despite Bruhat comparability");
    report.max_pipe = best;
    report.value = best_size - w.coxeter_length();
    return report;
}

RegularityReport reg_grassmannian_patch(const Permutation& u, const Permutation& g) {
    const DescentData du = descent_data(u);
    const DescentData dg = descent_data(g);
    if (!du.is_grassmannian && !du.is_identity) throw not_grassmannian("u must be Grassmannian");
    if (!dg.is_grassmannian && !dg.is_identity) throw not_grassmannian("g must be Grassmannian");
    if (du.is_grassmannian && dg.is_grassmannian && *du.descents.begin() != *dg.descents.begin())
        throw descent_mismatch("u and g must share their descent position");
    const Partition shape_u = shape_of(u);
    const Partition shape_g = shape_of(g);
    if (!shape_u.contains(shape_g)) throw shape_not_contained("lambda(g) must fit inside lambda(u)");

    RegularityReport report;
    report.method = RegularityReport::Method::GrassmannianPatch;
    if (shape_g.empty()) { // zero ideal: the patch is the whole cell
        report.value = 0;
        return report;
    }
    const Permutation v = vexillary_from_shapes(shape_u, shape_g);
    report.path_sizes = f_a_path_sizes(v);
    report.value = std::accumulate(report.path_sizes.begin(), report.path_sizes.end(), 0);
    return report;
}

} // namespace cmreg
