#include "cmreg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <thread>

#include "cmreg/diagram_stats.hpp"
#include "cmreg/errors.hpp"
#include "cmreg/grothendieck.hpp"
#include "cmreg/regularity.hpp"
#include "cmreg/tableaux.hpp"

namespace cmreg {

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> oneline(static_cast<std::size_t>(n));
    std::iota(oneline.begin(), oneline.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_one_line(oneline));
    } while (std::next_permutation(oneline.begin(), oneline.end()));
    return out;
}

namespace {

// Runs check(i) for i in [0, count) across jobs threads; failures are
// collected per index so aggregation is deterministic for any job count.
SweepResult run_indexed(const std::string& name, long count, int jobs,
                        const std::function<bool(long)>& eligible,
                        const std::function<bool(long)>& check,
                        const std::function<std::string(long)>& describe) {
    std::vector<signed char> status(static_cast<std::size_t>(count), 1); // 1 skip, 0 ok, -1 bad
    jobs = std::max(jobs, 1);
    std::atomic<long> next{0};
    auto worker = [&] {
        for (long i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            if (!eligible(i)) continue;
            status[static_cast<std::size_t>(i)] = check(i) ? 0 : -1;
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    SweepResult result{name, 0, 0, ""};
    for (long i = 0; i < count; ++i) {
        if (status[static_cast<std::size_t>(i)] == 1) continue;
        ++result.checked;
        if (status[static_cast<std::size_t>(i)] == -1) {
            ++result.mismatches;
            if (result.first_counterexample.empty()) result.first_counterexample = describe(i);
        }
    }
    return result;
}

int poly_degree(const SparsePoly& p) {
    const auto d = p.degree();
    return d ? *d : 0;
}

} // namespace

SweepResult sweep_fd_degree(int n, int jobs) {
    const auto perms = all_permutations(n);
    return run_indexed(
        "degree statistic (diagonal paths) vs polynomial degree, 1432-avoiding S_" + std::to_string(n),
        static_cast<long>(perms.size()), jobs,
        [&](long i) { return avoids_1432(perms[static_cast<std::size_t>(i)]); },
        [&](long i) {
            const Permutation& w = perms[static_cast<std::size_t>(i)];
            return f_d(w) == poly_degree(single_grothendieck(w));
        },
        [&](long i) { return perms[static_cast<std::size_t>(i)].str(); });
}

SweepResult sweep_fa_degree(int n, int jobs) {
    const auto perms = all_permutations(n);
    return run_indexed(
        "degree statistic (antidiagonal paths) vs polynomial degree, vexillary S_" + std::to_string(n),
        static_cast<long>(perms.size()), jobs,
        [&](long i) { return is_vexillary(perms[static_cast<std::size_t>(i)]); },
        [&](long i) {
            const Permutation& v = perms[static_cast<std::size_t>(i)];
            return f_a(v) == poly_degree(single_grothendieck(v));
        },
        [&](long i) { return perms[static_cast<std::size_t>(i)].str(); });
}

SweepResult sweep_transition_degree(int n, int jobs) {
    const auto perms = all_permutations(n);
    return run_indexed(
        "corner-recursion degree vs polynomial degree, vexillary S_" + std::to_string(n),
        static_cast<long>(perms.size()), jobs,
        [&](long i) { return is_vexillary(perms[static_cast<std::size_t>(i)]); },
        [&](long i) {
            const Permutation& v = perms[static_cast<std::size_t>(i)];
            return vexillary_degree_by_transition(v) == poly_degree(single_grothendieck(v));
        },
        [&](long i) { return perms[static_cast<std::size_t>(i)].str(); });
}

SweepResult sweep_grassmannian_pairs(int n, int jobs) {
    const auto perms = all_permutations(n);
    std::vector<std::pair<Permutation, Permutation>> pairs;
    for (const Permutation& u : perms) {
        const DescentData du = descent_data(u);
        if (!du.is_grassmannian) continue;
        for (const Permutation& g : perms) {
            const DescentData dg = descent_data(g);
            if (!dg.is_grassmannian || *du.descents.begin() != *dg.descents.begin()) continue;
            if (!shape_of(u).contains(shape_of(g))) continue;
            pairs.emplace_back(u, g);
        }
    }
    return run_indexed(
        "unspecialized degree vs bottom-diagram vexillary degree, Grassmannian pairs S_" +
            std::to_string(n),
        static_cast<long>(pairs.size()), jobs, [](long) { return true; },
        [&](long i) {
            const auto& [u, g] = pairs[static_cast<std::size_t>(i)];
            const Permutation v = vexillary_from_shapes(shape_of(u), shape_of(g));
            return poly_degree(unspecialized_grothendieck(u, g)) ==
                   poly_degree(single_grothendieck(v));
        },
        [&](long i) {
            const auto& [u, g] = pairs[static_cast<std::size_t>(i)];
            return u.str() + " / " + g.str();
        });
}

SweepResult sweep_kl321(int n, int jobs) {
    const auto perms = all_permutations(n);
    std::vector<std::pair<Permutation, Permutation>> pairs;
    for (const Permutation& v : perms) {
        if (!is_321_avoiding(v)) continue;
        for (const Permutation& w : perms)
            if (bruhat_leq(w, v)) pairs.emplace_back(v, w);
    }
    return run_indexed(
        "pipe-subset regularity vs K-polynomial degree, 321-avoiding S_" + std::to_string(n),
        static_cast<long>(pairs.size()), jobs, [](long) { return true; },
        [&](long i) {
            const auto& [v, w] = pairs[static_cast<std::size_t>(i)];
            return reg_kl_321(v, w).value ==
                   poly_degree(kpolynomial_kl(v, w)) - w.coxeter_length();
        },
        [&](long i) {
            const auto& [v, w] = pairs[static_cast<std::size_t>(i)];
            return v.str() + " / " + w.str();
        });
}

SweepResult sweep_tableaux(int n, long budget) {
    const auto perms = all_permutations(n);
    SweepResult result{"constructed fillings are members and maximal, S_" + std::to_string(n), 0, 0, ""};
    auto fail = [&](const Permutation& w) {
        ++result.mismatches;
        if (result.first_counterexample.empty()) result.first_counterexample = w.str();
    };
    for (const Permutation& w : perms) {
        if (avoids_1432(w)) {
            ++result.checked;
            const SetValuedFilling t = construct_T_w(w);
            const auto all = enumerate_fsvd(w, budget);
            int max_size = 0;
            for (const auto& f : all) max_size = std::max(max_size, f.total_entries());
            const bool member = std::binary_search(all.begin(), all.end(), t);
            if (!fsvd_valid(t) || !member || t.total_entries() != max_size ||
                t.total_entries() != f_d(w))
                fail(w);
        }
        if (is_vexillary(w)) {
            ++result.checked;
            const SetValuedFilling u = construct_U_v(w);
            const auto all = enumerate_fsvt(w, budget);
            int max_size = 0;
            for (const auto& f : all) max_size = std::max(max_size, f.total_entries());
            const bool member = std::binary_search(all.begin(), all.end(), u);
            if (!fsvt_valid(u, vexillary_data(w).flag) || !member ||
                u.total_entries() != max_size || u.total_entries() != f_a(w))
                fail(w);
        }
    }
    return result;
}

SweepResult sweep_expansions(int n, long budget) {
    const auto perms = all_permutations(n);
    SweepResult result{"tableau expansions vs divided-difference recursion, S_" + std::to_string(n),
                       0, 0, ""};
    std::map<VarId, SparsePoly> kill_y;
    for (int j = 0; j <= n * n; ++j) kill_y[VarId::y(j)] = SparsePoly();
    for (const Permutation& w : perms) {
        if (avoids_1432(w)) {
            ++result.checked;
            if (fsvd_expansion(w, budget).substitute(kill_y) != single_grothendieck(w)) {
                ++result.mismatches;
                if (result.first_counterexample.empty())
                    result.first_counterexample = w.str() + " (rothe flavor)";
            }
        }
        if (is_vexillary(w)) {
            ++result.checked;
            if (fsvt_expansion(w, budget) != double_grothendieck(w)) {
                ++result.mismatches;
                if (result.first_counterexample.empty())
                    result.first_counterexample = w.str() + " (young flavor)";
            }
        }
    }
    return result;
}

SweepResult sweep_excited(int n) {
    const auto perms = all_permutations(n);
    SweepResult result{"signed excited-diagram sum vs double polynomial, vexillary S_" +
                           std::to_string(n),
                       0, 0, ""};
    for (const Permutation& v : perms) {
        if (!is_vexillary(v)) continue;
        ++result.checked;
        const VexillaryData data = vexillary_data(v);
        SparsePoly sum;
        for (const Diagram& d : enumerate_kexcited(data.envelope, data.shape)) {
            SparsePoly weight =
                SparsePoly::constant((d.size() - data.shape.sum()) % 2 == 0 ? 1 : -1);
            for (const Cell& c : d.cells())
                weight = weight * oplus(SparsePoly::variable(VarId::x(c.row)),
                                        SparsePoly::variable(VarId::y(c.col)));
            sum = sum + weight;
        }
        if (sum != double_grothendieck(v)) {
            ++result.mismatches;
            if (result.first_counterexample.empty()) result.first_counterexample = v.str();
        }
    }
    return result;
}

namespace {

SparsePoly random_poly(std::mt19937& rng, int max_vars, int max_terms, int max_exp) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    SparsePoly p;
    const int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (int v = 1; v <= max_vars; ++v) {
            const int e = exp(rng);
            if (e > 0) m.push_back({VarId::x(v), e});
        }
        p.add_term(m, coeff(rng));
    }
    return p;
}

SparsePoly swap_x(const SparsePoly& p, int i) {
    return p.substitute({{VarId::x(i), SparsePoly::variable(VarId::x(i + 1))},
                         {VarId::x(i + 1), SparsePoly::variable(VarId::x(i))}});
}

} // namespace

SweepResult sweep_operators(unsigned seed, int samples) {
    std::mt19937 rng(seed);
    SweepResult result{"divided-difference operator algebra, random polynomials", 0, 0, ""};
    auto check = [&](bool ok, const std::string& what, const SparsePoly& p) {
        if (ok) return;
        ++result.mismatches;
        if (result.first_counterexample.empty())
            result.first_counterexample = what + " on " + p.str();
    };
    std::uniform_int_distribution<int> pick_i(1, 3);
    for (int s = 0; s < samples; ++s) {
        const SparsePoly p = random_poly(rng, 5, 6, 2);
        const int i = pick_i(rng);
        ++result.checked;

        check(divided_difference(divided_difference(p, i), i).is_zero(), "dd twice", p);
        const SparsePoly pi_p = isobaric_divided_difference(p, i);
        check(isobaric_divided_difference(pi_p, i) == pi_p, "isobaric idempotence", p);

        const SparsePoly xi = SparsePoly::variable(VarId::x(i));
        const SparsePoly xi1 = SparsePoly::variable(VarId::x(i + 1));
        check(divided_difference(p, i) * (xi - xi1) == p - swap_x(p, i), "exact quotient", p);

        auto pi = [&](const SparsePoly& q, int k) { return isobaric_divided_difference(q, k); };
        check(pi(pi(pi(p, i), i + 1), i) == pi(pi(pi(p, i + 1), i), i + 1), "braid", p);
        check(pi(pi(p, i), i + 2) == pi(pi(p, i + 2), i), "commutation", p);

        const SparsePoly q = random_poly(rng, 5, 6, 2);
        const SparsePoly r = random_poly(rng, 5, 4, 2);
        check((p + q) - q == p, "additive inverse", p);
        check(p * q == q * p, "commutative product", p);
        check((p * q) * r == p * (q * r), "associative product", p);
    }
    return result;
}

Ladder random_ladder(std::mt19937& rng, int grid) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::uniform_int_distribution<int> size(1, grid);
        const int nrows = size(rng);
        std::vector<int> rows(static_cast<std::size_t>(nrows));
        int width = size(rng);
        for (int i = 0; i < nrows; ++i) {
            std::uniform_int_distribution<int> len(1, width);
            width = len(rng);
            rows[static_cast<std::size_t>(i)] = width;
        }

        std::vector<Cell> boundary, corners;
        for (int i = 1; i <= nrows; ++i) {
            const int len = rows[static_cast<std::size_t>(i - 1)];
            for (int j = 1; j <= len; ++j) {
                const bool on_path = i == nrows || rows[static_cast<std::size_t>(i)] < j + 1;
                if (on_path) boundary.push_back({i, j});
            }
            if (i == nrows || rows[static_cast<std::size_t>(i)] < len) corners.push_back({i, len});
        }
        // Every southeast corner must carry a minor family (its cell is in no
        // other top-left region); extra points are optional.
        std::vector<Cell> chosen = corners;
        std::shuffle(boundary.begin(), boundary.end(), rng);
        std::uniform_int_distribution<int> extras(0, 2);
        for (int e = extras(rng); e > 0 && !boundary.empty(); --e) {
            chosen.push_back(boundary.back());
            boundary.pop_back();
        }
        std::sort(chosen.begin(), chosen.end());
        chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
        // Rank chains, sampled southwest to northeast against both bounds.
        std::sort(chosen.begin(), chosen.end(), [](Cell a, Cell b) {
            return a.row != b.row ? a.row > b.row : a.col < b.col;
        });
        std::vector<MarkedPoint> points;
        int prev_col_slack = -1;
        int prev_row_slack = grid + 1;
        bool feasible = true;
        for (const Cell& c : chosen) {
            const int lo = std::max(1, c.row - prev_row_slack + 1);
            const int hi = std::min({c.row, c.col, c.col - prev_col_slack - 1});
            if (lo > hi) {
                feasible = false;
                break;
            }
            std::uniform_int_distribution<int> rank(lo, hi);
            const int r = rank(rng);
            points.push_back({c.row, c.col, r});
            prev_col_slack = c.col - r;
            prev_row_slack = c.row - r;
        }
        if (!feasible) continue;
        try {
            return Ladder::from_row_lengths(rows, points);
        } catch (const error&) {
            continue;
        }
    }
    throw internal_error("could not sample a valid ladder");
}

SweepResult sweep_ladders(int count, int grid, unsigned seed) {
    std::mt19937 rng(seed);
    SweepResult result{"three-way regularity agreement on generated ladders", 0, 0, ""};
    auto fail = [&](const std::string& what) {
        ++result.mismatches;
        if (result.first_counterexample.empty()) result.first_counterexample = what;
    };
    for (int k = 0; k < count; ++k) {
        const Ladder ladder = random_ladder(rng, grid);
        ++result.checked;
        try {
            const Permutation v = ladder_to_vexillary(ladder);
            const int by_ladder = reg_ladder(ladder).value;
            const auto [u, g] = ladder_to_grassmannian_pair(ladder);
            const int by_patch = reg_grassmannian_patch(u, g).value;
            const int by_degree = vexillary_degree_by_transition(v) - v.coxeter_length();
            if (by_ladder != by_patch || by_ladder != by_degree) fail(ladder.to_json_text());
            if (kl_specs_in_ladder_coords(u, g, ladder) != present_ladder(ladder).specs)
                fail("generator mismatch: " + ladder.to_json_text());
        } catch (const std::exception& e) {
            fail(ladder.to_json_text() + " threw: " + e.what());
        }
    }
    // Classical rectangles against the Grassmannian staircase formula.
    for (int p = 1; p <= 5; ++p)
        for (int q = 1; q <= 5; ++q)
            for (int r = 1; r <= std::min(p, q); ++r) {
                ++result.checked;
                try {
                    const Ladder rect = Ladder::from_row_lengths(
                        std::vector<int>(static_cast<std::size_t>(p), q), {{p, q, r}});
                    const auto [u, g] = ladder_to_grassmannian_pair(rect);
                    const Partition shape_g = shape_of(g);
                    const int expect = deg_grassmannian(shape_g, p) - shape_g.sum();
                    if (reg_ladder(rect, /*verify=*/true).value != expect)
                        fail("rectangle " + std::to_string(p) + "x" + std::to_string(q) + " rank " +
                             std::to_string(r));
                } catch (const std::exception& e) {
                    fail(std::string("rectangle threw: ") + e.what());
                }
            }
    return result;
}

} // namespace cmreg
