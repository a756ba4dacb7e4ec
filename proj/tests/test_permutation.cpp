#include <doctest.h>

#include <algorithm>

#include "cmreg/diagram_stats.hpp"
#include "cmreg/errors.hpp"
#include "cmreg/permutation.hpp"
#include "cmreg/verify.hpp"

using namespace cmreg;

namespace {

Permutation perm(const std::string& s) { return Permutation::parse(s); }

} // namespace

TEST_SUITE_BEGIN("permcore");

TEST_CASE("one-line constructor accepts bijections only") {
    CHECK(perm("1 2 3").is_identity());
    CHECK(perm("7 2 4 1 6 8 3 5").size() == 8);
    CHECK_THROWS_AS(Permutation::from_one_line({1, 1, 2}), not_a_permutation);
    CHECK_THROWS_AS(Permutation::from_one_line({0, 1}), not_a_permutation);
    CHECK_THROWS_AS(Permutation::from_one_line({}), not_a_permutation);
}

TEST_CASE("parse and print round-trip") {
    for (const std::string s : {"7 2 4 1 6 8 3 5", "1 2 3", "2 1"}) {
        CHECK(perm(s).str() == s);
    }
    CHECK(perm("7,2,4,1,6,8,3,5") == perm("7 2 4 1 6 8 3 5"));
    CHECK_THROWS_AS(perm("1 2 x"), parse_error);
}

TEST_CASE("inverse is an involution") {
    const Permutation w = perm("7 2 4 1 6 8 3 5");
    CHECK(w.inverse().inverse() == w);
    CHECK(w.inverse()(7) == 1);
}

TEST_CASE("rank function counts dots weakly northwest") {
    CHECK(rank_function(Permutation::identity(3), 2, 2) == 2);
    const Permutation w = perm("1 4 6 2 5 3");
    CHECK(rank_function(w, 3, 5) == 2);
    CHECK(rank_function(w, 5, 3) == 2);
    CHECK_THROWS_AS(rank_function(w, 0, 1), index_out_of_range);
    CHECK_THROWS_AS(rank_function(w, 1, 7), index_out_of_range);
}

TEST_CASE("Rothe diagram of the running example") {
    CHECK(rothe_diagram(Permutation::identity(4)).empty());
    const Permutation w = perm("7 2 4 1 6 8 3 5");
    CHECK(rothe_diagram(w).row_counts() == std::vector<int>{6, 1, 2, 0, 2, 2});
    CHECK(lehmer_code(w) == std::vector<int>{6, 1, 2, 0, 2, 2, 0, 0});
    CHECK(rothe_diagram(perm("1 4 6 2 3 7 5")).size() == 6);
}

TEST_CASE("code sorted decreasingly gives the shape") {
    CHECK(lehmer_code(Permutation::identity(5)) == std::vector<int>(5, 0));
    CHECK(shape_of(perm("1 6 9 2 4 7 3 5 8")) == Partition({6, 4, 2, 1}));
}

TEST_CASE("essential set picks the SE-maximal cells") {
    CHECK(essential_set(Permutation::identity(3)).empty());
    CHECK(essential_set(perm("7 2 4 1 6 8 3 5")) ==
          Diagram{{1, 6}, {3, 1}, {3, 3}, {6, 3}, {6, 5}});
    CHECK(essential_set(perm("1 4 6 2 5 3")) == Diagram{{3, 3}, {3, 5}, {5, 3}});
    for (const Permutation& w : all_permutations(5)) {
        const Diagram d = rothe_diagram(w);
        for (const Cell& c : essential_set(w).cells()) {
            CHECK(d.contains(c));
            CHECK(!d.contains({c.row + 1, c.col}));
            CHECK(!d.contains({c.row, c.col + 1}));
        }
    }
}

TEST_CASE("dominant component hangs off (1,1)") {
    CHECK(dominant_component(Permutation::identity(3)).empty());
    Diagram expected{{2, 1}, {3, 1}};
    for (int j = 1; j <= 6; ++j) expected = expected.with({1, j});
    CHECK(dominant_component(perm("7 2 4 1 6 8 3 5")) == expected);
    CHECK(dominant_component(perm("1 4 6 2 3 7 5")).empty());
}

TEST_CASE("pattern containment matches the worked examples") {
    CHECK(contains_pattern(perm("2 3 7 1 5 8 4 6"), perm("1 4 3 2")));
    CHECK(contains_pattern(perm("7 2 5 8 1 3 6 4"), perm("2 1 4 3")));
    CHECK(!is_vexillary(perm("7 2 5 8 1 3 6 4")));
    CHECK(!contains_pattern(Permutation::identity(6), perm("2 1")));
    CHECK(!contains_pattern(perm("2 1"), perm("1 2 3")));
}

TEST_CASE("pattern containment agrees with brute-force subsequence scan") {
    const auto patterns = all_permutations(4);
    for (const Permutation& w : all_permutations(6)) {
        for (const Permutation& p : patterns) {
            // brute force over all 4-subsets of positions
            bool expected = false;
            const int n = w.size();
            for (int a = 1; a <= n && !expected; ++a)
                for (int b = a + 1; b <= n && !expected; ++b)
                    for (int c = b + 1; c <= n && !expected; ++c)
                        for (int d = c + 1; d <= n && !expected; ++d) {
                            const int vals[4] = {w(a), w(b), w(c), w(d)};
                            bool iso = true;
                            for (int s = 0; s < 4 && iso; ++s)
                                for (int t = s + 1; t < 4 && iso; ++t)
                                    iso = (vals[s] < vals[t]) == (p(s + 1) < p(t + 1));
                            expected |= iso;
                        }
            REQUIRE(contains_pattern(w, p) == expected);
        }
    }
}

TEST_CASE("descent data and the Grassmannian flag") {
    CHECK(descent_data(Permutation::identity(4)).descents.empty());
    CHECK(!descent_data(Permutation::identity(4)).is_grassmannian);
    CHECK(descent_data(Permutation::identity(4)).is_identity);
    const DescentData g = descent_data(perm("1 4 5 7 2 3 6"));
    CHECK(g.descents == std::set<int>{4});
    CHECK(g.is_grassmannian);
    // direct scan: descents of 7 2 4 1 6 8 3 5 sit at 1 (7>2), 3 (4>1), 6 (8>3)
    CHECK(descent_data(perm("7 2 4 1 6 8 3 5")).descents == std::set<int>{1, 3, 6});
}

TEST_CASE("Demazure product absorbs repeats and respects braid moves") {
    CHECK(demazure_product({1, 1}, 2) == perm("2 1"));
    CHECK(demazure_product({1, 2, 1}, 3) == perm("3 2 1"));
    CHECK(demazure_product({2, 1, 2}, 3) == perm("3 2 1"));
    CHECK(demazure_product({}, 3).is_identity());
    CHECK_THROWS_AS(demazure_product({3}, 3), index_out_of_range);
}

TEST_CASE("Demazure product of reduced words recovers the permutation") {
    // every reduced word, generated by peeling descents
    for (const Permutation& w : all_permutations(4)) {
        std::vector<std::vector<int>> words;
        std::vector<int> current;
        auto rec = [&](auto&& self, const Permutation& u) -> void {
            if (u.is_identity()) {
                std::vector<int> word(current.rbegin(), current.rend());
                words.push_back(word);
                return;
            }
            for (int i = 1; i < u.size(); ++i) {
                if (u(i) > u(i + 1)) {
                    current.push_back(i);
                    self(self, u.after_swap_positions(i, i + 1));
                    current.pop_back();
                }
            }
        };
        rec(rec, w);
        for (const auto& word : words) {
            CHECK(is_reduced_word(word, w));
            CHECK(demazure_product(word, 4) == w);
        }
    }
}

TEST_CASE("appending a letter never shortens the Demazure product") {
    for (const Permutation& w : all_permutations(4)) {
        std::vector<int> word;
        for (int i = 1; i < w.size(); ++i) word.push_back(i);
        Permutation d = demazure_product(word, w.size());
        for (int letter = 1; letter < w.size(); ++letter) {
            std::vector<int> longer = word;
            longer.push_back(letter);
            CHECK(demazure_product(longer, w.size()).coxeter_length() >= d.coxeter_length());
        }
    }
}

TEST_CASE("Bruhat order basics") {
    const Permutation id3 = Permutation::identity(3);
    for (const Permutation& w : all_permutations(3)) CHECK(bruhat_leq(id3, w));
    CHECK(bruhat_leq(perm("2 1 4 3 5"), perm("3 4 5 1 2")));
    CHECK(!bruhat_leq(Permutation::longest(3), Permutation::identity(3)));
}

TEST_CASE("Bruhat order is a partial order on S_5") {
    const auto perms = all_permutations(5);
    for (const Permutation& w : perms) {
        CHECK(bruhat_leq(w, w));
        for (const Permutation& v : perms) {
            if (bruhat_leq(w, v)) {
                CHECK(w.coxeter_length() <= v.coxeter_length());
                if (bruhat_leq(v, w)) CHECK(w == v);
            }
        }
    }
    // transitivity on a sample: length-graded triples
    for (const Permutation& a : perms)
        for (const Permutation& b : perms) {
            if (!bruhat_leq(a, b)) continue;
            for (const Permutation& c : perms)
                if (bruhat_leq(b, c)) CHECK(bruhat_leq(a, c));
        }
}

TEST_CASE("embedding preserves the diagram and code prefix") {
    const Permutation w = perm("3 1 4 2");
    const Permutation e = w.embedded(7);
    CHECK(rothe_diagram(w) == rothe_diagram(e));
    const auto code = lehmer_code(w);
    const auto code_e = lehmer_code(e);
    for (std::size_t i = 0; i < code.size(); ++i) CHECK(code[i] == code_e[i]);
    CHECK(e.trimmed() == w);
}

TEST_CASE("diagram size equals code sum equals inversion count") {
    for (const Permutation& w : all_permutations(6)) {
        const auto code = lehmer_code(w);
        int total = 0;
        for (int c : code) total += c;
        CHECK(rothe_diagram(w).size() == total);
        CHECK(w.coxeter_length() == total);
    }
}

TEST_SUITE_END();
