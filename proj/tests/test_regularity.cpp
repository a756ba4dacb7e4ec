#include <doctest.h>

#include <numeric>

#include "cmreg/diagram_stats.hpp"
#include "cmreg/errors.hpp"
#include "cmreg/grothendieck.hpp"
#include "cmreg/regularity.hpp"
#include "cmreg/verify.hpp"

using namespace cmreg;

namespace {

Permutation perm(const std::string& s) { return Permutation::parse(s); }

} // namespace

TEST_SUITE_BEGIN("regularity");

TEST_CASE("degree statistics on the worked permutations") {
    CHECK(f_d(Permutation::identity(3)) == 0);
    CHECK(f_d(perm("1 4 6 2 3 7 5")) == 12);
    CHECK(f_d(Permutation::longest(4)) == Permutation::longest(4).coxeter_length());
    CHECK(f_a(Permutation::identity(3)) == 0);
    CHECK(f_a(perm("1 6 9 2 4 7 3 5 8")) == 21);
    CHECK(f_a(perm("1 4 5 7 2 3 6")) == 12);
    CHECK_THROWS_AS(f_d(perm("1 4 3 2")), not_1432_avoiding);
    CHECK_THROWS_AS(f_a(perm("2 1 4 3")), not_vexillary);
}

TEST_CASE("regularity dispatch") {
    const RegularityReport r1 = reg_schubert(perm("1 4 6 2 3 7 5"));
    CHECK(r1.value == 6);
    CHECK(r1.method == RegularityReport::Method::Formula1432);
    CHECK(std::accumulate(r1.path_sizes.begin(), r1.path_sizes.end(), 0) == r1.value);

    const RegularityReport r2 = reg_schubert(perm("1 6 9 2 4 7 3 5 8"));
    CHECK(r2.value == 8);

    CHECK(reg_schubert(Permutation::identity(3)).value == 0);

    // a permutation that is neither 1432-avoiding nor vexillary
    const Permutation hard = perm("2 1 5 4 3");
    CHECK(!avoids_1432(hard));
    CHECK(!is_vexillary(hard));
    const RegularityReport r3 = reg_schubert(hard);
    CHECK(r3.method == RegularityReport::Method::OracleDegree);
    const auto d = single_grothendieck(hard).degree();
    REQUIRE(d.has_value());
    CHECK(r3.value == *d - hard.coxeter_length());
}

TEST_CASE("both closed forms agree where both apply") {
    for (const Permutation& w : all_permutations(5)) {
        if (!avoids_1432(w) || !is_vexillary(w)) continue;
        CHECK(f_d(w) == f_a(w));
        CHECK(reg_schubert(w).method == RegularityReport::Method::Formula1432);
    }
}

TEST_CASE("Grassmannian staircase formula") {
    CHECK(deg_grassmannian(Partition{}, 3) == 0);
    CHECK(deg_grassmannian(Partition({3, 2, 2, 0}), 4) == 12);
    CHECK(deg_grassmannian(Partition({1}), 1) == 1);
    CHECK_THROWS_AS(deg_grassmannian(Partition({1, 1}), 1), too_many_parts);
}

TEST_CASE("the three degree formulas agree on Grassmannian permutations") {
    for (const Permutation& g : all_permutations(6)) {
        const DescentData d = descent_data(g);
        if (!d.is_grassmannian) continue;
        const int k = *d.descents.begin();
        const int expected = deg_grassmannian(shape_of(g), k);
        CHECK(f_d(g) == expected);
        CHECK(f_a(g) == expected);
    }
}

TEST_CASE("KL regularity of the worked pair") {
    const RegularityReport r = reg_kl_321(perm("3 4 5 1 2"), perm("2 1 4 3 5"));
    CHECK(r.value == 1);
    CHECK(r.method == RegularityReport::Method::KlPipes);
    REQUIRE(r.max_pipe.has_value());
    CHECK(r.max_pipe->size() == 3);
    CHECK(reg_kl_321(perm("3 4 5 1 2"), Permutation::identity(5)).value == 0);
    CHECK_THROWS_AS(reg_kl_321(perm("3 2 1"), perm("1 2 3")), not_321_avoiding);
    CHECK_THROWS_AS(reg_kl_321(perm("1 3 2"), perm("2 1 3")), not_bruhat_comparable);
}

TEST_CASE("pipe regularity equals K-polynomial degree minus length on S_5") {
    const SweepResult r = sweep_kl321(5);
    CHECK(r.checked > 0);
    CHECK(r.mismatches == 0);
    if (!r.ok()) MESSAGE(r.first_counterexample);
}

TEST_CASE("Grassmannian patch regularity") {
    const Permutation u = perm("1 4 5 7 2 3 6");
    const Permutation g = perm("1 2 4 7 3 5 6");
    const RegularityReport patch = reg_grassmannian_patch(u, g);
    CHECK(patch.method == RegularityReport::Method::GrassmannianPatch);
    CHECK(patch.value == reg_kl_321(u, g).value);
    CHECK(reg_grassmannian_patch(u, u).value == 0);
    CHECK_THROWS_AS(reg_grassmannian_patch(perm("2 1 3"), perm("1 3 2")), descent_mismatch);
    CHECK_THROWS_AS(reg_grassmannian_patch(perm("3 2 1"), perm("1 3 2")), not_grassmannian);
    CHECK_THROWS_AS(reg_grassmannian_patch(perm("1 3 2 4"), perm("1 2 4 3")), descent_mismatch);
    // contained the other way around
    CHECK_THROWS_AS(reg_grassmannian_patch(perm("1 3 2"), perm("2 3 1")), shape_not_contained);
}

TEST_CASE("patch and pipe routes agree on S_6 Grassmannian pairs") {
    for (const Permutation& u : all_permutations(6)) {
        const DescentData du = descent_data(u);
        if (!du.is_grassmannian) continue;
        for (const Permutation& g : all_permutations(6)) {
            const DescentData dg = descent_data(g);
            if (!dg.is_grassmannian || *du.descents.begin() != *dg.descents.begin()) continue;
            if (!shape_of(u).contains(shape_of(g))) continue;
            CHECK(reg_grassmannian_patch(u, g).value == reg_kl_321(u, g).value);
        }
    }
}

TEST_SUITE_END();
