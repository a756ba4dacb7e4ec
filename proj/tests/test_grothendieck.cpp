#include <doctest.h>

#include <algorithm>

#include "cmreg/diagram_stats.hpp"
#include "cmreg/errors.hpp"
#include "cmreg/grothendieck.hpp"
#include "cmreg/verify.hpp"

using namespace cmreg;

namespace {

Permutation perm(const std::string& s) { return Permutation::parse(s); }

SparsePoly x(int i) { return SparsePoly::variable(VarId::x(i)); }
SparsePoly t2(int i, int j) { return SparsePoly::variable(VarId::t2(i, j)); }
SparsePoly one() { return SparsePoly::constant(1); }

int deg(const SparsePoly& p) {
    auto d = p.degree();
    REQUIRE(d.has_value());
    return *d;
}

} // namespace

TEST_SUITE_BEGIN("grothendieck");

TEST_CASE("base cases of the recursion") {
    CHECK(single_grothendieck(Permutation::longest(3)) == x(1) * x(1) * x(2));
    CHECK(single_grothendieck(Permutation::identity(4)) == one());
    CHECK(double_grothendieck(Permutation::identity(3)) == one());
    CHECK(double_grothendieck(Permutation::longest(2)) ==
          oplus(x(1), SparsePoly::variable(VarId::y(1))));
    CHECK(kpolynomial_schubert(Permutation::identity(3)) == one());
    const SparsePoly u = one() - SparsePoly::variable(VarId::t());
    CHECK(kpolynomial_schubert(Permutation::longest(3)) == u * u * u);
}

TEST_CASE("degrees of the two worked permutations") {
    CHECK(deg(single_grothendieck(perm("1 4 6 2 3 7 5"))) == 12);
    CHECK(deg(kpolynomial_schubert(perm("1 4 6 2 3 7 5"))) == 12);
    CHECK(deg(single_grothendieck(perm("1 6 9 2 4 7 3 5 8"))) == 21);
}

TEST_CASE("path independence of the descent recursion") {
    for (const Permutation& w : all_permutations(5)) {
        CHECK(single_grothendieck_by_path(w, false) == single_grothendieck_by_path(w, true));
        CHECK(single_grothendieck(w) == single_grothendieck_by_path(w, true));
    }
}

TEST_CASE("y to zero specializes the double polynomial to the single one") {
    std::map<VarId, SparsePoly> kill_y;
    for (int j = 1; j <= 8; ++j) kill_y[VarId::y(j)] = SparsePoly();
    for (const Permutation& w : all_permutations(4))
        CHECK(double_grothendieck(w).substitute(kill_y) == single_grothendieck(w));
}

TEST_CASE("sign alternation by degree") {
    for (const Permutation& w : all_permutations(5)) {
        const SparsePoly g = single_grothendieck(w);
        const int len = w.coxeter_length();
        for (const auto& [m, c] : g.terms()) {
            const int d = total_degree(m);
            CHECK(((d - len) % 2 == 0 ? c > 0 : c < 0));
        }
    }
}

TEST_CASE("pipe subsets of the two-by-three block frame") {
    const Permutation v = perm("3 4 5 1 2");
    const Permutation w = perm("2 1 4 3 5");
    const auto open = enumerate_pipes(v, w, /*closed=*/false);
    REQUIRE(open.size() == 2);
    CHECK(open[0].cells == Diagram{{1, 1}, {2, 2}});
    CHECK(open[1].cells == Diagram{{1, 1}, {3, 1}});
    const auto closed = enumerate_pipes(v, w, /*closed=*/true);
    CHECK(closed.size() == 3);
    for (const PipeSubset& p : closed) CHECK(p.demazure_value == w);
}

TEST_CASE("pipe enumeration edge cases") {
    const Permutation v = perm("1 4 5 7 2 3 6");
    CHECK(enumerate_pipes(v, Permutation::identity(7), false).size() == 1);
    CHECK(enumerate_pipes(v, Permutation::identity(7), false)[0].cells.empty());
    // the pictured five-cell element
    const auto closed = enumerate_pipes(v, perm("1 2 4 7 3 5 6"), true);
    const Diagram pictured{{2, 3}, {3, 2}, {4, 2}, {4, 3}, {4, 6}};
    CHECK(std::any_of(closed.begin(), closed.end(),
                      [&](const PipeSubset& p) { return p.cells == pictured; }));
    // singleton subsets with label 1 inside the longest permutation of S_3
    const auto singles = enumerate_pipes(Permutation::longest(3), perm("2 1 3"), false);
    REQUIRE(singles.size() == 1);
    CHECK(singles[0].cells == Diagram{{1, 1}});
}

TEST_CASE("pruned and exhaustive pipe searches agree") {
    for (const Permutation& v : all_permutations(4)) {
        for (const Permutation& w : all_permutations(4)) {
            CHECK(enumerate_pipes(v, w, true) == enumerate_pipes(v, w, true, /*exhaustive=*/true));
            CHECK(enumerate_pipes(v, w, false) == enumerate_pipes(v, w, false, /*exhaustive=*/true));
        }
    }
}

TEST_CASE("unspecialized polynomial of the worked pair") {
    const SparsePoly g = unspecialized_grothendieck(perm("3 4 5 1 2"), perm("2 1 4 3 5"));
    CHECK(g == t2(1, 1) * t2(3, 1) + t2(1, 1) * t2(2, 2) - t2(1, 1) * t2(2, 2) * t2(3, 1));
}

TEST_CASE("unspecialized polynomial degenerate cases") {
    const Permutation v = perm("3 4 1 2");
    const auto self = enumerate_pipes(v, v, false);
    CHECK(self.size() == 1); // the full-diagram reduced word is unique
    CHECK(self[0].cells == rothe_diagram(v));
    const SparsePoly gvv = unspecialized_grothendieck(v, v);
    CHECK(gvv.coefficient([&] {
              Monomial m;
              for (const Cell& c : rothe_diagram(v).cells()) m.push_back({VarId::t2(c.row, c.col), 1});
              return m;
          }()) == 1);
    CHECK(unspecialized_grothendieck(perm("1 3 2"), perm("2 1 3")).is_zero());
}

TEST_CASE("specializing the full-frame unspecialized polynomial to the double one") {
    const Permutation w0 = Permutation::longest(4);
    std::map<VarId, SparsePoly> to_xy;
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            to_xy[VarId::t2(i, j)] =
                oplus(SparsePoly::variable(VarId::x(i)), SparsePoly::variable(VarId::y(j)));
    for (const Permutation& w : all_permutations(4))
        CHECK(unspecialized_grothendieck(w0, w).substitute(to_xy) == double_grothendieck(w));
}

TEST_CASE("KL K-polynomial of the worked pair") {
    const SparsePoly k = kpolynomial_kl(perm("3 4 5 1 2"), perm("2 1 4 3 5"));
    CHECK(str_in_one_minus_t(k) == "2*(1-t)^2 - (1-t)^3");
    CHECK(kpolynomial_kl(perm("3 4 5 1 2"), Permutation::identity(5)) == one());
    CHECK_THROWS_AS(kpolynomial_kl(perm("3 2 1"), perm("1 2 3")), not_321_avoiding);
    CHECK_THROWS_AS(kpolynomial_kl(perm("1 3 2"), perm("2 1 3")), not_bruhat_comparable);
}

TEST_CASE("KL K-polynomial equals the substituted unspecialized polynomial") {
    for (const Permutation& v : all_permutations(4)) {
        if (!is_321_avoiding(v)) continue;
        std::map<VarId, SparsePoly> to_t;
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j)
                to_t[VarId::t2(i, j)] = one() - SparsePoly::variable(VarId::t());
        for (const Permutation& w : all_permutations(4)) {
            if (!bruhat_leq(w, v)) continue;
            CHECK(kpolynomial_kl(v, w) == unspecialized_grothendieck(v, w).substitute(to_t));
        }
    }
}

TEST_CASE("transition step of the ladder permutation") {
    const TransitionStep step = transition_step(perm("1 4 6 2 5 3"));
    CHECK(step.maximal_corner == Cell{5, 3});
    CHECK(rothe_diagram(step.pivot) == rothe_diagram(perm("1 4 6 2 5 3")).without({5, 3}));
    CHECK(step.accessible);
    REQUIRE(step.companion.has_value());
    CHECK(step.companion->coxeter_length() == step.pivot.coxeter_length() + 1);
}

TEST_CASE("transition on dominant corners") {
    const TransitionStep step = transition_step(Permutation::longest(3));
    CHECK(step.maximal_corner == Cell{2, 1});
    CHECK(!step.accessible);
    CHECK(!step.companion.has_value());
    CHECK(vexillary_degree_by_transition(Permutation::longest(3)) == 3);
    CHECK_THROWS_AS(transition_step(Permutation::identity(3)), error);
    CHECK_THROWS_AS(transition_step(perm("2 1 4 3")), not_vexillary);
}

TEST_CASE("transition degree matches the polynomial degree") {
    CHECK(vexillary_degree_by_transition(perm("1 6 9 2 4 7 3 5 8")) == 21);
    const SweepResult r = sweep_transition_degree(5);
    CHECK(r.mismatches == 0);
    if (!r.ok()) MESSAGE(r.first_counterexample);
}

TEST_CASE("Grassmannian pair degrees match the bottom-diagram permutation") {
    const SweepResult r = sweep_grassmannian_pairs(6);
    CHECK(r.checked > 0);
    CHECK(r.mismatches == 0);
    if (!r.ok()) MESSAGE(r.first_counterexample);
}

TEST_SUITE_END();
