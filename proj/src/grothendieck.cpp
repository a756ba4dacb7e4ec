#include "cmreg/grothendieck.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "cmreg/diagram_stats.hpp"
#include "cmreg/errors.hpp"

namespace cmreg {

namespace {

SparsePoly staircase_base_single(int n) {
    SparsePoly p = SparsePoly::constant(1);
    for (int i = 1; i < n; ++i) p = p * SparsePoly::variable(VarId::x(i), n - i);
    return p;
}

SparsePoly staircase_base_double(int n) {
    SparsePoly p = SparsePoly::constant(1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; i + j <= n; ++j)
            p = p * oplus(SparsePoly::variable(VarId::x(i)), SparsePoly::variable(VarId::y(j)));
    return p;
}

int first_ascent(const Permutation& w) {
    for (int i = 1; i < w.size(); ++i)
        if (w(i) < w(i + 1)) return i;
    return 0;
}

int last_ascent(const Permutation& w) {
    for (int i = w.size() - 1; i >= 1; --i)
        if (w(i) < w(i + 1)) return i;
    return 0;
}

SparsePoly grothendieck_recursive(const Permutation& w, bool doubled,
                                  std::map<std::vector<int>, SparsePoly>* cache, std::mutex* lock,
                                  bool largest_ascent_first) {
    if (cache != nullptr) {
        std::lock_guard guard(*lock);
        auto it = cache->find(w.one_line());
        if (it != cache->end()) return it->second;
    }
    SparsePoly result;
    const int i = largest_ascent_first ? last_ascent(w) : first_ascent(w);
    if (i == 0) {
        result = doubled ? staircase_base_double(w.size()) : staircase_base_single(w.size());
    } else {
        const SparsePoly longer = grothendieck_recursive(w.after_swap_positions(i, i + 1), doubled,
                                                         cache, lock, largest_ascent_first);
        result = isobaric_divided_difference(longer, i);
    }
    if (cache != nullptr) {
        std::lock_guard guard(*lock);
        cache->emplace(w.one_line(), result);
    }
    return result;
}

} // namespace

SparsePoly single_grothendieck(const Permutation& w) {
    static std::map<std::vector<int>, SparsePoly> cache;
    static std::mutex lock;
    return grothendieck_recursive(w.trimmed(), /*doubled=*/false, &cache, &lock, false);
}

SparsePoly double_grothendieck(const Permutation& w) {
    static std::map<std::vector<int>, SparsePoly> cache;
    static std::mutex lock;
    return grothendieck_recursive(w.trimmed(), /*doubled=*/true, &cache, &lock, false);
}

SparsePoly single_grothendieck_by_path(const Permutation& w, bool largest_ascent_first) {
    return grothendieck_recursive(w.trimmed(), /*doubled=*/false, nullptr, nullptr, largest_ascent_first);
}

namespace {

struct ReadingCell {
    Cell cell;
    int label;
};

// Cells of D(v) in reading order: rows top to bottom, right to left within a
// row. Labels run i, i+1, ... across the cells of row i from the left.
std::vector<ReadingCell> reading_order(const Permutation& v) {
    const Diagram d = rothe_diagram(v);
    std::map<int, std::vector<Cell>> rows;
    for (const Cell& c : d.cells()) rows[c.row].push_back(c);
    std::vector<ReadingCell> out;
    for (auto& [row, cells] : rows) {
        std::sort(cells.begin(), cells.end());
        for (int pos = static_cast<int>(cells.size()) - 1; pos >= 0; --pos)
            out.push_back({cells[static_cast<std::size_t>(pos)], row + pos});
    }
    return out;
}

struct PipeSearch {
    const std::vector<ReadingCell>& cells;
    const Permutation& target;
    const std::vector<std::vector<int>>& target_ranks;
    bool closed;
    bool exhaustive;
    int target_length;
    std::vector<Cell> chosen;
    std::vector<PipeSubset> found;

    bool below_target(const Permutation& w) const {
        const auto rw = rank_matrix(w);
        for (std::size_t i = 0; i < rw.size(); ++i)
            for (std::size_t j = 0; j < rw.size(); ++j)
                if (rw[i][j] < target_ranks[i][j]) return false;
        return true;
    }

    void run(std::size_t index, const Permutation& delta, int length) {
        if (index == cells.size()) {
            if (delta == target) found.push_back({Diagram(chosen), delta});
            return;
        }
        run(index + 1, delta, length);

        const int letter = cells[index].label;
        const bool ascent = delta(letter) < delta(letter + 1);
        if (!closed && !ascent && !exhaustive) return; // a stall can never be reduced
        Permutation next = ascent ? delta.after_swap_positions(letter, letter + 1) : delta;
        if (!closed && length + 1 > target_length && !exhaustive) return;
        if (!exhaustive && !below_target(next)) return;
        chosen.push_back(cells[index].cell);
        run(index + 1, next, length + 1);
        chosen.pop_back();
    }
};

} // namespace

std::vector<PipeSubset> enumerate_pipes(const Permutation& v, const Permutation& w, bool closed,
                                        bool exhaustive) {
    const int n = std::max(v.size(), w.size());
    const Permutation target = w.embedded(n);
    const auto cells = reading_order(v.embedded(n));
    const auto target_ranks = rank_matrix(target);
    PipeSearch search{cells, target, target_ranks, closed, exhaustive, target.coxeter_length(), {}, {}};
    search.run(0, Permutation::identity(n), 0);
    std::vector<PipeSubset> out;
    for (PipeSubset& p : search.found) {
        if (!closed && p.cells.size() != target.coxeter_length()) continue;
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

SparsePoly unspecialized_grothendieck(const Permutation& v, const Permutation& w) {
    SparsePoly out;
    const int lw = w.coxeter_length();
    for (const PipeSubset& p : enumerate_pipes(v, w, /*closed=*/true)) {
        Monomial m;
        for (const Cell& c : p.cells.cells()) m.push_back({VarId::t2(c.row, c.col), 1});
        std::sort(m.begin(), m.end());
        out.add_term(m, (p.cells.size() - lw) % 2 == 0 ? 1 : -1);
    }
    return out;
}

SparsePoly kpolynomial_schubert(const Permutation& w) {
    const SparsePoly g = single_grothendieck(w);
    const SparsePoly one_minus_t = SparsePoly::constant(1) - SparsePoly::variable(VarId::t());
    std::map<VarId, SparsePoly> assignment;
    for (int i = 1; i <= w.size(); ++i) assignment[VarId::x(i)] = one_minus_t;
    return g.substitute(assignment);
}

SparsePoly kpolynomial_kl(const Permutation& v, const Permutation& w) {
    if (!is_321_avoiding(v)) throw not_321_avoiding("K-polynomial needs a 321-avoiding frame");
    if (!bruhat_leq(w, v)) throw not_bruhat_comparable("w must lie below v in Bruhat order");
    const SparsePoly one_minus_t = SparsePoly::constant(1) - SparsePoly::variable(VarId::t());
    const int lw = w.coxeter_length();
    SparsePoly out;
    std::map<int, SparsePoly> powers;
    for (const PipeSubset& p : enumerate_pipes(v, w, /*closed=*/true)) {
        const int k = p.cells.size();
        auto it = powers.find(k);
        if (it == powers.end()) {
            SparsePoly pow = SparsePoly::constant(1);
            for (int e = 0; e < k; ++e) pow = pow * one_minus_t;
            it = powers.emplace(k, std::move(pow)).first;
        }
        out = out + ((k - lw) % 2 == 0 ? it->second : -it->second);
    }
    return out;
}

TransitionStep transition_step(const Permutation& v) {
    if (!is_vexillary(v)) throw not_vexillary("transition step needs a vexillary permutation");
    if (v.is_identity()) throw error("identity has no maximal corner");
    const Diagram d = rothe_diagram(v);
    Cell corner{0, 0};
    for (const Cell& c : d.cells())
        if (c.row > corner.row || (c.row == corner.row && c.col > corner.col)) corner = c;

    TransitionStep step;
    step.source = v;
    step.maximal_corner = corner;
    step.pivot = v.after_swap_positions(corner.row, v.inverse()(corner.col));
    if (rothe_diagram(step.pivot) != d.without(corner))
        throw internal_error("pivot diagram is not the source diagram minus the corner");
    step.accessible = !dominant_component(v).contains(corner);

    const int pivot_length = step.pivot.coxeter_length();
    std::vector<Permutation> companions;
    for (int i = 1; i < corner.row; ++i) {
        Permutation cand = step.pivot.after_swap_positions(i, corner.row);
        if (cand.coxeter_length() == pivot_length + 1) companions.push_back(cand);
    }
    if (step.accessible) {
        if (companions.size() != 1) throw internal_error("accessible corner must have a unique companion");
        step.companion = companions.front();
    } else if (!companions.empty()) {
        throw internal_error("dominant corner admits no companion");
    }
    return step;
}

int vexillary_degree_by_transition(const Permutation& v) {
    static std::map<std::vector<int>, int> cache;
    static std::mutex lock;
    const Permutation w = v.trimmed();
    if (w.coxeter_length() == 0) return 0;
    {
        std::lock_guard guard(lock);
        auto it = cache.find(w.one_line());
        if (it != cache.end()) return it->second;
    }
    const TransitionStep step = transition_step(w);
    int deg = vexillary_degree_by_transition(step.pivot);
    if (step.accessible) deg = std::max(deg, vexillary_degree_by_transition(*step.companion));
    ++deg;
    {
        std::lock_guard guard(lock);
        cache.emplace(w.one_line(), deg);
    }
    return deg;
}

} // namespace cmreg
