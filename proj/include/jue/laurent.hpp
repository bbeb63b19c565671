#pragma once

#include <map>

#include "jue/ratfun.hpp"

namespace jue {

// Finite Laurent expansion in descending powers of N with coefficients
// rational in (c_alpha, c_beta). Truncation is data: e_min records how far
// down the coefficients were computed.
struct LaurentInN {
    int e_max = 0;
    int e_min = 0;
    bool zero = true;
    std::map<int, RationalFunction, std::greater<int>> coeffs;  // over VarSet::CC

    // Coefficient at exponent e; exact for e_min <= e <= e_max.
    RationalFunction coeff(int e) const {
        if (zero) return RationalFunction(VarSet::CC);
        if (e > e_max) return RationalFunction(VarSet::CC);
        if (e < e_min) throw std::logic_error("Laurent coefficient below computed depth");
        auto it = coeffs.find(e);
        return it == coeffs.end() ? RationalFunction(VarSet::CC) : it->second;
    }
};

// Expand f(N, alpha, beta) after the substitution alpha = (c_alpha - 1) N,
// beta = (c_beta - 1) N as a Laurent series in descending powers of N,
// computing `depth` coefficients below the leading exponent.
LaurentInN laurent_expand(const RationalFunction& f, int depth);

}  // namespace jue
