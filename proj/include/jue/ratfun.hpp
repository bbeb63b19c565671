#pragma once

#include <string>
#include <vector>

#include "jue/poly.hpp"

namespace jue {

// Exact rational function num/den over a fixed variable set.
//
// Canonical form: den != 0; num and den have integer coefficients with no
// shared integer content > 1; the coefficient of den's greatest monomial
// (graded-lex) is positive; shared monomial factors are cancelled, and shared
// factors from a fixed family of structured linear forms (the parameter
// shifts that occur as denominators throughout) are cancelled as well.
// Equality is decided by cross-multiplication; no general polynomial gcd.
class RationalFunction {
public:
    explicit RationalFunction(VarSet vs = VarSet::NAB)
        : num_(SparsePoly::zero(vs)), den_(SparsePoly::constant(vs, 1)) {}

    RationalFunction(SparsePoly num, SparsePoly den);

    static RationalFunction from_poly(SparsePoly p);
    static RationalFunction constant(VarSet vs, const Rational& c);
    static RationalFunction variable(VarSet vs, int idx);

    VarSet var_set() const { return num_.var_set(); }
    const SparsePoly& num() const { return num_; }
    const SparsePoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    // Value of a constant rational function; throws if not constant.
    Rational constant_value() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction pow(int k) const;  // negative k inverts

    // Structural identity of the canonical representation.
    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    // Substitute one variable by a rational value. Throws PoleError if the
    // denominator collapses to zero.
    RationalFunction substitute(int v, const Rational& value) const;
    // Evaluate at a full point.
    Rational evaluate(const std::vector<Rational>& values) const;
    // Replace each variable by a polynomial image over `target`.
    RationalFunction compose(VarSet target, const std::vector<SparsePoly>& images) const;
    RationalFunction swap_vars(int i, int j) const;

    std::string to_string() const;

private:
    void normalize();

    SparsePoly num_, den_;
};

// Mathematical equality via cross-multiplication:
// num(f)*den(g) - num(g)*den(f) == 0.
bool ratfun_eq(const RationalFunction& f, const RationalFunction& g);

// The structured linear forms used for best-effort cancellation over `vs`.
const std::vector<SparsePoly>& structured_linear_forms(VarSet vs);

// Rising factorial (s)_k = s(s+1)...(s+k-1); (s)_0 = 1.
RationalFunction pochhammer(const RationalFunction& s, int k);

}  // namespace jue
