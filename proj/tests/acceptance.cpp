// Acceptance suite: every criterion prints exactly one PASS/FAIL line.
// Default mode runs the fast gate (five-letter sweeps); --full extends the
// degree sweeps to six letters.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include "cmreg/diagram_stats.hpp"
#include "cmreg/grothendieck.hpp"
#include "cmreg/ladder.hpp"
#include "cmreg/regularity.hpp"
#include "cmreg/tableaux.hpp"
#include "cmreg/verify.hpp"

using namespace cmreg;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool()>& check) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = check();
    } catch (const std::exception& e) {
        note = std::string(" [threw: ") + e.what() + "]";
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label << " (" << ms
              << " ms)" << note << "\n";
    if (!ok) ++failures;
}

Permutation perm(const std::string& s) { return Permutation::parse(s); }

int deg(const SparsePoly& p) {
    const auto d = p.degree();
    return d ? *d : 0;
}

bool entries_match(const SetValuedFilling& f, Cell c, std::vector<int> expected) {
    return f.at(c) == expected;
}

Ladder worked_ladder() {
    return Ladder::from_corners({{3, 5}, {5, 3}}, {{3, 5, 3}, {3, 3, 2}, {5, 3, 3}});
}

} // namespace

int main(int argc, char** argv) {
    const bool full = argc > 1 && std::string(argv[1]) == "--full";
    const int degree_n = full ? 6 : 5;

    criterion(1, "reg 6 and degree 12 for 1 4 6 2 3 7 5", [] {
        const Permutation w = perm("1 4 6 2 3 7 5");
        return reg_schubert(w).value == 6 && deg(single_grothendieck(w)) == 12;
    });

    criterion(2, "reg 8, degree 21, and the shape data of 1 6 9 2 4 7 3 5 8", [] {
        const Permutation v = perm("1 6 9 2 4 7 3 5 8");
        const VexillaryData data = vexillary_data(v);
        const std::vector<std::vector<int>> filling_rows = {
            {1, 1, 1, 1, 2, 2}, {1, 1, 1, 1}, {2, 3}, {2}};
        bool filling_ok = true;
        for (int i = 1; i <= data.shape.rows(); ++i)
            for (int j = 1; j <= data.shape.part(i); ++j)
                filling_ok &= data.filling.at({i, j}) ==
                              filling_rows[static_cast<std::size_t>(i - 1)]
                                          [static_cast<std::size_t>(j - 1)];
        return reg_schubert(v).value == 8 && deg(single_grothendieck(v)) == 21 &&
               data.shape == Partition({6, 4, 2, 1}) &&
               data.envelope == Partition({8, 8, 8, 5, 5, 5}) &&
               data.flag == std::vector<int>{3, 3, 6, 6} && filling_ok;
    });

    criterion(3, "code, essential set, dominant component of 7 2 4 1 6 8 3 5", [] {
        const Permutation w = perm("7 2 4 1 6 8 3 5");
        Diagram dom{{2, 1}, {3, 1}};
        for (int j = 1; j <= 6; ++j) dom = dom.with({1, j});
        return lehmer_code(w) == std::vector<int>{6, 1, 2, 0, 2, 2, 0, 0} &&
               essential_set(w) == Diagram{{1, 6}, {3, 1}, {3, 3}, {6, 3}, {6, 5}} &&
               dominant_component(w) == dom;
    });

    criterion(4, "bottom diagram of ((6,6,4,4,4),(5,4,2,1,0)) is 5 7 1 3 6 2 4", [] {
        return vexillary_from_shapes(Partition({6, 6, 4, 4, 4}), Partition({5, 4, 2, 1, 0})) ==
               perm("5 7 1 3 6 2 4");
    });

    criterion(5, "staircase formula, diagonal and antidiagonal statistics all give 12", [] {
        const Permutation g = perm("1 4 5 7 2 3 6");
        return deg_grassmannian(Partition({3, 2, 2, 0}), 4) == 12 && f_d(g) == 12 && f_a(g) == 12;
    });

    criterion(6, "worked Kazhdan-Lusztig pair: weights, K-polynomial, and reg 1", [] {
        const Permutation v = perm("3 4 5 1 2");
        const Permutation w = perm("2 1 4 3 5");
        SparsePoly expected;
        auto t2 = [](int i, int j) { return SparsePoly::variable(VarId::t2(i, j)); };
        expected = t2(1, 1) * t2(3, 1) + t2(1, 1) * t2(2, 2) - t2(1, 1) * t2(2, 2) * t2(3, 1);
        return unspecialized_grothendieck(v, w) == expected &&
               str_in_one_minus_t(kpolynomial_kl(v, w)) == "2*(1-t)^2 - (1-t)^3" &&
               reg_kl_321(v, w).value == 1;
    });

    criterion(7, "constructed maximal fillings match the worked traces cell for cell", [] {
        const SetValuedFilling t = construct_T_w(perm("1 4 6 2 3 7 5"));
        const SetValuedFilling u = construct_U_v(perm("1 6 9 2 4 7 3 5 8"));
        return t.total_entries() == 12 && u.total_entries() == 21 &&
               entries_match(t, {2, 2}, {1, 2}) && entries_match(t, {2, 3}, {1}) &&
               entries_match(t, {3, 2}, {3}) && entries_match(t, {3, 3}, {2, 3}) &&
               entries_match(t, {3, 5}, {1, 2}) && entries_match(t, {6, 5}, {3, 4, 5, 6}) &&
               entries_match(u, {1, 1}, {1}) && entries_match(u, {1, 2}, {1}) &&
               entries_match(u, {1, 3}, {1}) && entries_match(u, {1, 4}, {1, 2}) &&
               entries_match(u, {1, 5}, {2}) && entries_match(u, {1, 6}, {2, 3}) &&
               entries_match(u, {2, 1}, {2}) && entries_match(u, {2, 2}, {2}) &&
               entries_match(u, {2, 3}, {2, 3}) && entries_match(u, {2, 4}, {3}) &&
               entries_match(u, {3, 1}, {3}) && entries_match(u, {3, 2}, {3, 4, 5, 6}) &&
               entries_match(u, {4, 1}, {4, 5, 6});
    });

    criterion(8, "worked ladder: generators, essential-set permutation, Grassmannian pair", [] {
        const Ladder l = worked_ladder();
        const auto [u, g] = ladder_to_grassmannian_pair(l);
        return present_ladder(l).specs ==
                   std::vector<GeneratorSpec>{{2, 3, 3}, {3, 3, 5}, {3, 5, 3}} &&
               ladder_to_vexillary(l) == perm("1 4 6 2 5 3") &&
               u == perm("4 5 8 9 10 1 2 3 6 7") && g == perm("1 2 4 6 8 3 5 7 9 10") &&
               kl_specs_in_ladder_coords(u, g, l) == present_ladder(l).specs;
    });

    criterion(9, "diagonal statistic equals polynomial degree, 1432-avoiding S_" +
                     std::to_string(degree_n),
              [&] {
                  const SweepResult r = sweep_fd_degree(degree_n, 2);
                  std::cout << "  " << r.name << ": checked " << r.checked << "\n";
                  return r.ok();
              });

    criterion(10, "antidiagonal statistic equals polynomial degree, vexillary S_" +
                      std::to_string(degree_n),
              [&] {
                  const SweepResult r = sweep_fa_degree(degree_n, 2);
                  std::cout << "  " << r.name << ": checked " << r.checked << "\n";
                  return r.ok();
              });

    criterion(11, "Grassmannian pair degree equality, exhaustive S_5", [] {
        return sweep_grassmannian_pairs(5, 2).ok();
    });

    criterion(12, "tableau expansions equal the recursion on S_4, spot-checked on S_5", [] {
        if (!sweep_expansions(4, kDefaultFillingBudget).ok()) return false;
        // 25 fixed five-letter permutations per flavor, strided through the
        // one-line order so all lengths are represented
        std::map<VarId, SparsePoly> kill_y;
        for (int j = 1; j <= 25; ++j) kill_y[VarId::y(j)] = SparsePoly();
        std::vector<Permutation> rothe, young;
        for (const Permutation& w : all_permutations(5)) {
            if (avoids_1432(w)) rothe.push_back(w);
            if (is_vexillary(w)) young.push_back(w);
        }
        auto stride_pick = [](const std::vector<Permutation>& pool) {
            std::vector<Permutation> out;
            for (int k = 0; k < 25; ++k)
                out.push_back(pool[k * pool.size() / 25]);
            return out;
        };
        for (const Permutation& w : stride_pick(rothe))
            if (fsvd_expansion(w).substitute(kill_y) != single_grothendieck(w)) return false;
        for (const Permutation& v : stride_pick(young))
            if (fsvt_expansion(v) != double_grothendieck(v)) return false;
        return true;
    });

    criterion(13, "signed excited-diagram sums equal double polynomials, vexillary S_5",
              [] { return sweep_excited(5).ok(); });

    criterion(14, "pipe regularity equals K-polynomial degree minus length, 321-avoiding S_5",
              [] { return sweep_kl321(5, 2).ok(); });

    criterion(15, "corner-recursion degree equals polynomial degree, vexillary S_" +
                      std::to_string(degree_n),
              [&] { return sweep_transition_degree(degree_n, 2).ok(); });

    criterion(16, "three-way ladder agreement on a fifty-ladder corpus plus rectangles", [] {
        const SweepResult r = sweep_ladders(50, 8, /*seed=*/2023);
        std::cout << "  " << r.name << ": checked " << r.checked << "\n";
        return r.ok();
    });

    criterion(17, "operator algebra on the seeded random polynomial suite", [] {
        const SweepResult r = sweep_operators(/*seed=*/2023, /*samples=*/200);
        return r.ok() && r.checked == 200;
    });

    std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " (" << (17 - failures)
              << "/17)\n";
    return failures == 0 ? 0 : 1;
}
