#pragma once

#include <map>

#include "jue/permutation.hpp"
#include "jue/poly.hpp"

namespace jue {

// Element of the group algebra of S_n with polynomial-in-eps coefficients.
// Test-scale only (n <= 5).
struct GroupAlgebraElement {
    int n = 0;
    std::map<Permutation, SparsePoly> coeffs;  // over VarSet::EPS, no zero entries

    void add(const Permutation& p, const SparsePoly& c);
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a,
                                         const GroupAlgebraElement& b);
    bool operator==(const GroupAlgebraElement& o) const {
        return n == o.n && coeffs == o.coeffs;
    }
};

// prod_{a=1}^n (1 + eps J_a) with J_a the Young-Jucys-Murphy elements.
// Equals sum_{lambda |- n} eps^{n - l(lambda)} C_lambda.
GroupAlgebraElement yjm_product_expansion(int n);

// The class-sum expansion sum_{lambda |- n} eps^{n-l(lambda)} C_lambda,
// assembled directly from conjugacy classes.
GroupAlgebraElement class_sum_expansion(int n);

}  // namespace jue
