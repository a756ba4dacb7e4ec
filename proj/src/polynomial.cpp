#include "cmreg/polynomial.hpp"

#include <algorithm>

#include "cmreg/errors.hpp"

namespace cmreg {

VarId VarId::x(int i) { return {Family::X, i, 0}; }
VarId VarId::y(int j) { return {Family::Y, j, 0}; }
VarId VarId::t() { return {Family::T, 0, 0}; }
VarId VarId::t(int i) { return {Family::T, i, 0}; }
VarId VarId::t2(int i, int j) { return {Family::Tij, i, j}; }

std::string VarId::str() const {
    switch (family) {
        case Family::X: return "x" + std::to_string(i);
        case Family::Y: return "y" + std::to_string(i);
        case Family::T: return i == 0 ? "t" : "t" + std::to_string(i);
        case Family::Tij: return "t(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    return "?";
}

int total_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [var, exp] : m) d += exp;
    return d;
}

SparsePoly SparsePoly::constant(long value) { return constant(mpz_class(value)); }

SparsePoly SparsePoly::constant(const mpz_class& value) {
    SparsePoly p;
    if (value != 0) p.terms_[{}] = value;
    return p;
}

SparsePoly SparsePoly::variable(VarId v, int exponent) {
    if (exponent < 0) throw internal_error("negative exponent");
    if (exponent == 0) return constant(1);
    SparsePoly p;
    p.terms_[{{v, exponent}}] = 1;
    return p;
}

std::optional<int> SparsePoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
}

mpz_class SparsePoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void SparsePoly::add_term(const Monomial& m, const mpz_class& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly SparsePoly::operator+(const SparsePoly& other) const {
    SparsePoly out = *this;
    for (const auto& [m, c] : other.terms_) out.add_term(m, c);
    return out;
}

SparsePoly SparsePoly::operator-(const SparsePoly& other) const {
    SparsePoly out = *this;
    for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
    return out;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly out;
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

namespace {

Monomial merge_monomials(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) out.push_back(a[i++]);
        else if (b[j].first < a[i].first) out.push_back(b[j++]);
        else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return out;
}

} // namespace

SparsePoly SparsePoly::operator*(const SparsePoly& other) const {
    SparsePoly out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) out.add_term(merge_monomials(ma, mb), ca * cb);
    return out;
}

SparsePoly SparsePoly::scaled(const mpz_class& c) const {
    SparsePoly out;
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.terms_[m] = coeff * c;
    return out;
}

SparsePoly operator*(long c, const SparsePoly& p) { return p.scaled(mpz_class(c)); }

SparsePoly SparsePoly::substitute(const std::map<VarId, SparsePoly>& assignment) const {
    SparsePoly out;
    std::map<std::pair<VarId, int>, SparsePoly> power_cache;
    for (const auto& [m, c] : terms_) {
        SparsePoly factor = constant(c);
        for (const auto& [var, exp] : m) {
            auto it = assignment.find(var);
            if (it == assignment.end()) {
                factor = factor * variable(var, exp);
                continue;
            }
            auto key = std::make_pair(var, exp);
            auto cached = power_cache.find(key);
            if (cached == power_cache.end()) {
                SparsePoly pow = constant(1);
                for (int e = 0; e < exp; ++e) pow = pow * it->second;
                cached = power_cache.emplace(key, std::move(pow)).first;
            }
            factor = factor * cached->second;
        }
        out = out + factor;
    }
    return out;
}

SparsePoly oplus(const SparsePoly& a, const SparsePoly& b) { return a + b - a * b; }

namespace {

// Splits a monomial into (x_i exponent, x_{i+1} exponent, remainder).
std::tuple<int, int, Monomial> split_pair(const Monomial& m, int i) {
    int a = 0, b = 0;
    Monomial rest;
    const VarId xi = VarId::x(i);
    const VarId xi1 = VarId::x(i + 1);
    for (const auto& [var, exp] : m) {
        if (var == xi) a = exp;
        else if (var == xi1) b = exp;
        else rest.push_back({var, exp});
    }
    return {a, b, rest};
}

Monomial with_pair(const Monomial& rest, int i, int a, int b) {
    Monomial m = rest;
    if (a > 0) m.push_back({VarId::x(i), a});
    if (b > 0) m.push_back({VarId::x(i + 1), b});
    std::sort(m.begin(), m.end());
    return m;
}

} // namespace

SparsePoly divided_difference(const SparsePoly& p, int i) {
    if (i < 1) throw index_out_of_range("divided difference index must be positive");
    // (x^a y^b - x^b y^a)/(x - y) expands termwise as a geometric sum; a == b
    // contributes nothing, so the quotient is exact with no division loop.
    SparsePoly out;
    for (const auto& [m, c] : p.terms()) {
        auto [a, b, rest] = split_pair(m, i);
        if (a == b) continue;
        if (a > b)
            for (int k = b; k < a; ++k) out.add_term(with_pair(rest, i, k, a + b - 1 - k), c);
        else
            for (int k = a; k < b; ++k) out.add_term(with_pair(rest, i, k, a + b - 1 - k), -c);
    }
    return out;
}

SparsePoly isobaric_divided_difference(const SparsePoly& p, int i) {
    return divided_difference(p - SparsePoly::variable(VarId::x(i + 1)) * p, i);
}

namespace {

std::string coeff_str(const mpz_class& c, bool leading, const std::string& monomial) {
    mpz_class abs = c >= 0 ? c : mpz_class(-c);
    std::string sign = leading ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    if (monomial.empty()) return sign + abs.get_str();
    if (abs == 1) return sign + monomial;
    return sign + abs.get_str() + "*" + monomial;
}

std::string monomial_str(const Monomial& m) {
    std::string out;
    for (const auto& [var, exp] : m) {
        if (!out.empty()) out += "*";
        out += var.str();
        if (exp > 1) out += "^" + std::to_string(exp);
    }
    return out;
}

} // namespace

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, mpz_class>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        const int da = total_degree(a.first), db = total_degree(b.first);
        return da != db ? da < db : a.first < b.first;
    });
    std::string out;
    for (std::size_t k = 0; k < ordered.size(); ++k)
        out += coeff_str(ordered[k].second, k == 0, monomial_str(ordered[k].first));
    return out;
}

std::string str_in_one_minus_t(const SparsePoly& p) {
    for (const auto& [m, c] : p.terms())
        for (const auto& [var, exp] : m)
            if (var != VarId::t()) throw internal_error("factored display needs a polynomial in t");
    // Substitute t = 1 - u; the u-coefficients are the (1-t)-power coefficients.
    const VarId u = VarId::y(0); // scratch variable, never printed
    SparsePoly in_u = p.substitute({{VarId::t(), SparsePoly::constant(1) - SparsePoly::variable(u)}});
    std::map<int, mpz_class> coeffs;
    for (const auto& [m, c] : in_u.terms()) coeffs[total_degree(m)] = c;
    if (coeffs.empty()) return "0";
    std::string out;
    bool leading = true;
    for (const auto& [k, c] : coeffs) {
        std::string base = k == 0 ? "" : (k == 1 ? "(1-t)" : "(1-t)^" + std::to_string(k));
        out += coeff_str(c, leading, base);
        leading = false;
    }
    return out;
}

} // namespace cmreg
