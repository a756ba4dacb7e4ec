#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cmreg {

// Variable identifier. Families: x_i, y_j, t (optionally indexed t_i), and the
// doubly-indexed t_{ij} used by unspecialized Grothendieck polynomials. The
// total order (family, indices) fixes canonical monomial printing.
struct VarId {
    enum class Family : int { X = 0, Y = 1, T = 2, Tij = 3 };

    Family family = Family::T;
    int i = 0;
    int j = 0;

    static VarId x(int i);
    static VarId y(int j);
    static VarId t();
    static VarId t(int i);
    static VarId t2(int i, int j);

    std::string str() const; // "x1", "y2", "t", "t3", "t(1,2)"
    auto operator<=>(const VarId&) const = default;
};

// Exponent vector: sorted (VarId, exponent>0) pairs.
using Monomial = std::vector<std::pair<VarId, int>>;

int total_degree(const Monomial& m);

// Exact-integer sparse multivariate polynomial. Immutable value semantics;
// no zero coefficients or zero exponents are ever stored, so equality is
// term-map equality.
class SparsePoly {
public:
    SparsePoly() = default; // zero
    static SparsePoly constant(long value);
    static SparsePoly constant(const mpz_class& value);
    static SparsePoly variable(VarId v, int exponent = 1);

    bool is_zero() const { return terms_.empty(); }
    // Max total degree; the zero polynomial has no degree (nullopt, never -1).
    std::optional<int> degree() const;
    int term_count() const { return static_cast<int>(terms_.size()); }
    const std::map<Monomial, mpz_class>& terms() const& { return terms_; }
    std::map<Monomial, mpz_class> terms() && { return std::move(terms_); }
    mpz_class coefficient(const Monomial& m) const;

    SparsePoly operator+(const SparsePoly& other) const;
    SparsePoly operator-(const SparsePoly& other) const;
    SparsePoly operator-() const;
    SparsePoly operator*(const SparsePoly& other) const;
    SparsePoly scaled(const mpz_class& c) const;

    bool operator==(const SparsePoly&) const = default;

    // Simultaneous substitution; variables without an assignment pass through.
    SparsePoly substitute(const std::map<VarId, SparsePoly>& assignment) const;

    void add_term(const Monomial& m, const mpz_class& coeff); // normalizing accumulate

    // Expanded canonical form: graded order, explicit signs, e.g. "1 - t - t^2 + t^3".
    std::string str() const;

private:
    std::map<Monomial, mpz_class> terms_;
};

SparsePoly operator*(long c, const SparsePoly& p);

// x (+) y := x + y - xy.
SparsePoly oplus(const SparsePoly& a, const SparsePoly& b);

// Newton divided difference (f - s_i f)/(x_i - x_{i+1}); s_i swaps x_i and
// x_{i+1} and leaves every other family fixed. The quotient is computed by
// pairing each term with its swap, so it is exact by construction.
SparsePoly divided_difference(const SparsePoly& p, int i);

// Isobaric variant pi_i f = d_i((1 - x_{i+1}) f).
SparsePoly isobaric_divided_difference(const SparsePoly& p, int i);

// Displays a polynomial in t as integer combination of powers of (1-t),
// e.g. "2*(1-t)^2 - (1-t)^3". Requires a univariate polynomial in plain t.
std::string str_in_one_minus_t(const SparsePoly& p);

} // namespace cmreg
