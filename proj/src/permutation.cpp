#include "cmreg/permutation.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "cmreg/errors.hpp"

namespace cmreg {

Permutation Permutation::from_one_line(const std::vector<int>& values) {
    if (values.empty()) throw not_a_permutation("one-line notation must be nonempty");
    const int n = static_cast<int>(values.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : values) {
        if (v < 1 || v > n) throw not_a_permutation("value out of range [n]");
        if (seen[static_cast<std::size_t>(v - 1)]) throw not_a_permutation("repeated value");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    return Permutation(values);
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw not_a_permutation("ambient size must be positive");
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
    if (n < 1) throw not_a_permutation("ambient size must be positive");
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
    return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
    std::string cleaned = text;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream in(cleaned);
    std::vector<int> values;
    int x = 0;
    while (in >> x) values.push_back(x);
    if (!in.eof()) throw parse_error("cannot parse permutation: " + text);
    return from_one_line(values);
}

std::string Permutation::str() const {
    std::string out;
    for (std::size_t i = 0; i < oneline_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(oneline_[i]);
    }
    return out;
}

int Permutation::operator()(int i) const {
    if (i < 1 || i > size()) throw index_out_of_range("permutation index out of range");
    return oneline_[static_cast<std::size_t>(i - 1)];
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(oneline_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i)-1)] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::embedded(int m) const {
    if (m < size()) throw index_out_of_range("cannot embed into smaller symmetric group");
    std::vector<int> v = oneline_;
    for (int i = size() + 1; i <= m; ++i) v.push_back(i);
    return Permutation(std::move(v));
}

Permutation Permutation::trimmed() const {
    std::vector<int> v = oneline_;
    while (v.size() > 1 && v.back() == static_cast<int>(v.size())) v.pop_back();
    return Permutation(std::move(v));
}

Permutation Permutation::after_swap_positions(int i, int j) const {
    if (i < 1 || j < 1 || i > size() || j > size()) throw index_out_of_range("swap position out of range");
    std::vector<int> v = oneline_;
    std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(j - 1)]);
    return Permutation(std::move(v));
}

Permutation Permutation::after_swap_values(int a, int b) const {
    if (a < 1 || b < 1 || a > size() || b > size()) throw index_out_of_range("swap value out of range");
    std::vector<int> v = oneline_;
    for (int& x : v) {
        if (x == a) x = b;
        else if (x == b) x = a;
    }
    return Permutation(std::move(v));
}

int Permutation::coxeter_length() const {
    int inv = 0;
    for (int i = 1; i <= size(); ++i)
        for (int j = i + 1; j <= size(); ++j)
            if ((*this)(i) > (*this)(j)) ++inv;
    return inv;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

int rank_function(const Permutation& w, int i, int j) {
    if (i < 1 || j < 1 || i > w.size() || j > w.size()) throw index_out_of_range("rank index out of range");
    int count = 0;
    for (int k = 1; k <= i; ++k)
        if (w(k) <= j) ++count;
    return count;
}

std::vector<std::vector<int>> rank_matrix(const Permutation& w) {
    const int n = w.size();
    std::vector<std::vector<int>> r(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int above = (i > 1) ? r[static_cast<std::size_t>(i - 2)][static_cast<std::size_t>(j - 1)] : 0;
            r[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = above + (w(i) <= j ? 1 : 0);
        }
    }
    return r;
}

Diagram rothe_diagram(const Permutation& w) {
    const Permutation inv = w.inverse();
    std::vector<Cell> cells;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = 1; j < w(i); ++j)
            if (inv(j) > i) cells.push_back({i, j});
    return Diagram(std::move(cells));
}

std::vector<int> lehmer_code(const Permutation& w) {
    std::vector<int> code(static_cast<std::size_t>(w.size()), 0);
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w(i) > w(j)) ++code[static_cast<std::size_t>(i - 1)];
    return code;
}

int last_nonzero_index(const std::vector<int>& code) {
    for (int i = static_cast<int>(code.size()); i >= 1; --i)
        if (code[static_cast<std::size_t>(i - 1)] > 0) return i;
    return 0;
}

Permutation permutation_from_code(const std::vector<int>& code) {
    int n = static_cast<int>(code.size());
    for (std::size_t i = 0; i < code.size(); ++i)
        n = std::max(n, static_cast<int>(i) + 1 + code[i]);
    std::vector<int> unused(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) unused[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> oneline;
    oneline.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int c = (i < static_cast<int>(code.size())) ? code[static_cast<std::size_t>(i)] : 0;
        if (c >= static_cast<int>(unused.size())) throw internal_error("invalid Lehmer code");
        oneline.push_back(unused[static_cast<std::size_t>(c)]);
        unused.erase(unused.begin() + c);
    }
    return Permutation::from_one_line(oneline);
}

Diagram essential_set(const Permutation& w) {
    const Diagram d = rothe_diagram(w);
    std::vector<Cell> out;
    for (const Cell& c : d.cells())
        if (!d.contains({c.row + 1, c.col}) && !d.contains({c.row, c.col + 1})) out.push_back(c);
    return Diagram(std::move(out));
}

Diagram dominant_component(const Permutation& w) {
    const Diagram d = rothe_diagram(w);
    if (!d.contains({1, 1})) return {};
    std::vector<Cell> out;
    std::set<Cell> seen;
    std::queue<Cell> frontier;
    frontier.push({1, 1});
    seen.insert({1, 1});
    while (!frontier.empty()) {
        Cell c = frontier.front();
        frontier.pop();
        out.push_back(c);
        const Cell nbrs[4] = {{c.row - 1, c.col}, {c.row + 1, c.col}, {c.row, c.col - 1}, {c.row, c.col + 1}};
        for (const Cell& nb : nbrs)
            if (nb.row >= 1 && nb.col >= 1 && d.contains(nb) && seen.insert(nb).second) frontier.push(nb);
    }
    return Diagram(std::move(out));
}

namespace {

bool pattern_dfs(const Permutation& w, const Permutation& p, int start, std::vector<int>& chosen) {
    const int k = p.size();
    const int picked = static_cast<int>(chosen.size());
    if (picked == k) return true;
    for (int pos = start; pos <= w.size() - (k - picked - 1); ++pos) {
        const int val = w(pos);
        bool ok = true;
        for (int a = 1; a <= picked && ok; ++a)
            ok = (p(a) < p(picked + 1)) == (chosen[static_cast<std::size_t>(a - 1)] < val);
        if (!ok) continue;
        chosen.push_back(val);
        if (pattern_dfs(w, p, pos + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

bool contains_pattern(const Permutation& w, const Permutation& pattern) {
    if (pattern.size() > w.size()) return false;
    std::vector<int> chosen;
    return pattern_dfs(w, pattern, 1, chosen);
}

bool is_vexillary(const Permutation& w) {
    static const Permutation p2143 = Permutation::from_one_line({2, 1, 4, 3});
    return !contains_pattern(w, p2143);
}

bool avoids_1432(const Permutation& w) {
    static const Permutation p1432 = Permutation::from_one_line({1, 4, 3, 2});
    return !contains_pattern(w, p1432);
}

bool is_321_avoiding(const Permutation& w) {
    static const Permutation p321 = Permutation::from_one_line({3, 2, 1});
    return !contains_pattern(w, p321);
}

DescentData descent_data(const Permutation& w) {
    DescentData out;
    for (int i = 1; i < w.size(); ++i)
        if (w(i) > w(i + 1)) out.descents.insert(i);
    out.is_identity = out.descents.empty();
    out.is_grassmannian = out.descents.size() == 1;
    return out;
}

Permutation demazure_product(const std::vector<int>& word, int n) {
    Permutation w = Permutation::identity(n);
    for (int letter : word) {
        if (letter < 1 || letter >= n) throw index_out_of_range("word letter outside [n-1]");
        if (w(letter) < w(letter + 1)) w = w.after_swap_positions(letter, letter + 1);
    }
    return w;
}

bool is_reduced_word(const std::vector<int>& word, const Permutation& w) {
    return static_cast<int>(word.size()) == w.coxeter_length() && demazure_product(word, w.size()) == w;
}

bool bruhat_leq(const Permutation& w, const Permutation& v) {
    const int n = std::max(w.size(), v.size());
    const auto rw = rank_matrix(w.embedded(n));
    const auto rv = rank_matrix(v.embedded(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (rw[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] <
                rv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                return false;
    return true;
}

} // namespace cmreg
