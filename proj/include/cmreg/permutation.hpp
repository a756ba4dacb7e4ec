#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "cmreg/diagram.hpp"

namespace cmreg {

// Permutation of [n] in one-line notation. Values are immutable after
// construction; all operations are pure functions.
class Permutation {
public:
    Permutation() = default;

    // Throws not_a_permutation unless values is a bijection of [n].
    static Permutation from_one_line(const std::vector<int>& values);
    static Permutation identity(int n);
    static Permutation longest(int n); // w0 = n n-1 ... 1

    // Parses comma- or whitespace-separated one-line notation.
    static Permutation parse(const std::string& text);
    std::string str() const; // round-trips with parse

    int size() const { return static_cast<int>(oneline_.size()); }
    int operator()(int i) const; // w(i), 1-indexed; throws index_out_of_range
    const std::vector<int>& one_line() const& { return oneline_; }
    std::vector<int> one_line() && { return std::move(oneline_); }

    Permutation inverse() const;
    Permutation embedded(int m) const; // into S_m by appending fixed points
    Permutation trimmed() const;       // drop trailing fixed points (identity -> S_1)

    Permutation after_swap_positions(int i, int j) const; // w * t_{i,j}
    Permutation after_swap_values(int a, int b) const;    // t_{a,b} * w

    int coxeter_length() const; // = #D(w)
    bool is_identity() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    explicit Permutation(std::vector<int> oneline) : oneline_(std::move(oneline)) {}
    std::vector<int> oneline_;
};

// Count of permutation-matrix 1-entries weakly northwest of (i,j).
int rank_function(const Permutation& w, int i, int j);

// Full n x n rank matrix, rank[i-1][j-1] = r_w(i,j).
std::vector<std::vector<int>> rank_matrix(const Permutation& w);

Diagram rothe_diagram(const Permutation& w);
std::vector<int> lehmer_code(const Permutation& w);
int last_nonzero_index(const std::vector<int>& code); // L(code), 0 if all zero
Permutation permutation_from_code(const std::vector<int>& code);

// SE-maximal cells of the Rothe diagram.
Diagram essential_set(const Permutation& w);

// Cells of D(w) 4-connected to (1,1); empty when (1,1) is not in D(w).
Diagram dominant_component(const Permutation& w);

bool contains_pattern(const Permutation& w, const Permutation& pattern);
bool is_vexillary(const Permutation& w);     // avoids 2143
bool avoids_1432(const Permutation& w);
bool is_321_avoiding(const Permutation& w);

struct DescentData {
    std::set<int> descents;
    bool is_grassmannian = false; // exactly one descent; identity is the degenerate case
    bool is_identity = false;
};
DescentData descent_data(const Permutation& w);

// Demazure (0-Hecke) product of a word over the alphabet [n-1].
Permutation demazure_product(const std::vector<int>& word, int n);
bool is_reduced_word(const std::vector<int>& word, const Permutation& w);

// Bruhat order via the rank-matrix criterion; sizes auto-embed.
bool bruhat_leq(const Permutation& w, const Permutation& v);

} // namespace cmreg
