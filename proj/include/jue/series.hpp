#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "jue/ratfun.hpp"

namespace jue {

constexpr int kMaxSeriesVars = 6;
using SExpo = std::array<uint16_t, kMaxSeriesVars>;

inline unsigned sexpo_degree(const SExpo& e) {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
}

// Multivariate power series in local coordinates w_0..w_{m-1}, truncated.
//
// Storage keeps coefficients with exponent <= budget per variable and total
// degree <= cap. `trust` is the total degree up to which coefficients are
// guaranteed exact; arithmetic shrinks budgets and trust per the truncation
// rules (a division by a difference costs one degree in the two variables
// involved and one degree of trust).
class TruncatedSeries {
public:
    TruncatedSeries(int nvars, VarSet coeff_vs, std::vector<int> budgets, int cap, int trust);

    static TruncatedSeries zero(int nvars, VarSet vs, std::vector<int> budgets, int cap,
                                int trust);
    static TruncatedSeries constant(int nvars, VarSet vs, std::vector<int> budgets, int cap,
                                    int trust, RationalFunction c);
    // An exact polynomial viewed as a series (full trust).
    static TruncatedSeries from_exact_monomial(int nvars, VarSet vs, std::vector<int> budgets,
                                               int cap, const SExpo& e, RationalFunction c);

    int nvars() const { return nvars_; }
    VarSet coeff_var_set() const { return vs_; }
    const std::vector<int>& budgets() const { return budgets_; }
    int cap() const { return cap_; }
    int trust() const { return trust_; }
    bool is_zero() const { return coeffs_.empty(); }

    const std::map<SExpo, RationalFunction>& coefficients() const { return coeffs_; }

    void add_term(const SExpo& e, const RationalFunction& c);

    // Coefficient lookup; throws std::logic_error outside the trusted region.
    RationalFunction coeff(const SExpo& e) const;
    bool is_trusted(const SExpo& e) const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    TruncatedSeries scaled(const RationalFunction& c) const;
    // Multiplication by the exact monomial w_v^k.
    TruncatedSeries shifted(int v, int k) const;
    // Multiplication by the exact binomial (w_a - w_b).
    TruncatedSeries times_difference(int a, int b) const;

    // Apply a map to every coefficient (e.g. an alpha<->beta swap).
    TruncatedSeries map_coeffs(const std::function<RationalFunction(const RationalFunction&)>&
                                   f) const;

    // Exact division by (w_a - w_b). Pre: the series vanishes at w_a = w_b
    // within the trusted window. Budgets in a and b drop by 1, trust drops
    // by 1. Throws std::domain_error on a nonzero remainder inside the
    // trusted window.
    TruncatedSeries divide_by_difference(int a, int b) const;

private:
    bool storable(const SExpo& e) const;
    void check_compatible(const TruncatedSeries& o) const;

    int nvars_;
    VarSet vs_;
    std::vector<int> budgets_;
    int cap_;
    int trust_;
    std::map<SExpo, RationalFunction> coeffs_;
};

}  // namespace jue
