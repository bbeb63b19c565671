#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jue/rational.hpp"

namespace jue {

// The variable sets the library works over. Order within a set is the
// canonical order used by the graded-lex monomial order and by printing.
enum class VarSet : uint8_t {
    NAB,  // N, alpha, beta
    NCC,  // N, c_alpha, c_beta
    CC,   // c_alpha, c_beta
    EPS,  // eps
};

inline int var_count(VarSet vs) {
    switch (vs) {
        case VarSet::NAB:
        case VarSet::NCC: return 3;
        case VarSet::CC: return 2;
        case VarSet::EPS: return 1;
    }
    return 0;
}

inline const char* var_name(VarSet vs, int i) {
    static const char* nab[] = {"N", "alpha", "beta"};
    static const char* ncc[] = {"N", "c_alpha", "c_beta"};
    static const char* cc[] = {"c_alpha", "c_beta"};
    static const char* eps[] = {"eps"};
    switch (vs) {
        case VarSet::NAB: return nab[i];
        case VarSet::NCC: return ncc[i];
        case VarSet::CC: return cc[i];
        case VarSet::EPS: return eps[i];
    }
    return "?";
}

// Exponent vector, padded with zeros up to 3 entries.
using Expo = std::array<uint32_t, 3>;

inline unsigned expo_degree(const Expo& e) { return e[0] + e[1] + e[2]; }

// Graded-lexicographic, greater-first when used through SparsePoly iteration.
struct GradedLexGreater {
    bool operator()(const Expo& a, const Expo& b) const {
        unsigned da = expo_degree(a), db = expo_degree(b);
        if (da != db) return da > db;
        return a > b;  // lexicographic, first variable dominant
    }
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: no stored zero coefficients; terms ordered graded-lex descending.
class SparsePoly {
public:
    using TermMap = std::map<Expo, Rational, GradedLexGreater>;

    explicit SparsePoly(VarSet vs = VarSet::NAB) : vs_(vs) {}

    static SparsePoly zero(VarSet vs) { return SparsePoly(vs); }
    static SparsePoly constant(VarSet vs, const Rational& c);
    static SparsePoly variable(VarSet vs, int idx, unsigned power = 1);
    static SparsePoly monomial(VarSet vs, const Expo& e, const Rational& c);

    VarSet var_set() const { return vs_; }
    int nvars() const { return var_count(vs_); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (zero if absent).
    Rational constant_term() const;
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    unsigned total_degree() const;  // 0 for the zero polynomial
    unsigned degree_in(int v) const;

    // Greatest monomial in graded-lex order; throws on zero.
    const Expo& leading_monomial() const;
    const Rational& leading_coeff() const;

    void add_term(const Expo& e, const Rational& c);

    SparsePoly operator-() const;
    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }
    SparsePoly& operator*=(const Rational& c);
    friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
    friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }
    bool operator==(const SparsePoly& o) const { return vs_ == o.vs_ && terms_ == o.terms_; }
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

    SparsePoly pow(unsigned k) const;

    // Exact division: returns the quotient iff *this == q * d exactly.
    std::optional<SparsePoly> exact_divide(const SparsePoly& d) const;

    // Divisibility of every term by the monomial e; removes it.
    bool divisible_by_monomial(const Expo& e) const;
    SparsePoly divide_by_monomial(const Expo& e) const;
    // Componentwise min of all exponent vectors (monomial content). Zero poly -> all-zero.
    Expo monomial_content() const;

    // gcd of numerators and of denominators across all coefficients, as a
    // positive rational scale such that (*this)/scale has integer coefficients
    // with content 1. Zero poly -> 1.
    Rational rational_content() const;

    // Substitute variable v -> value, collapsing within the same variable set.
    SparsePoly substitute(int v, const Rational& value) const;
    // Full composition: each variable i is replaced by images[i] (all over `target`).
    SparsePoly compose(VarSet target, const std::vector<SparsePoly>& images) const;
    // Exchange two variables.
    SparsePoly swap_vars(int i, int j) const;

    // Coefficients of powers of variable v, as polynomials with v cleared.
    std::map<unsigned, SparsePoly> coefficients_in(int v) const;

    // Evaluate with all variables specialized.
    Rational evaluate(const std::vector<Rational>& values) const;

    std::string to_string() const;

private:
    VarSet vs_;
    TermMap terms_;
};

}  // namespace jue
