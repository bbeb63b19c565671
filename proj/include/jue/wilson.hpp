#pragma once

#include <array>

#include "jue/ratfun.hpp"

namespace jue {

// Terminating 4F3 at unit argument. At least one numerator parameter must be
// a nonpositive integer constant; the sum runs to the earliest termination.
// Throws PoleError if a denominator Pochhammer vanishes before termination.
RationalFunction hyp4f3_terminating(const std::array<RationalFunction, 4>& num,
                                    const std::array<RationalFunction, 3>& den);

// Wilson polynomial W_n(k^2; a,b,c,d) evaluated at k = i*kappa (so k^2 =
// -kappa^2), keeping all arithmetic real-rational: a +- ik |-> a -+ kappa.
RationalFunction wilson_eval(int n, const Rational& kappa, const RationalFunction& a,
                             const RationalFunction& b, const RationalFunction& c,
                             const RationalFunction& d);

enum class CoeffKind { A, B, A_tilde, B_tilde };

// Recurrence coefficients of the matrix series at infinity and zero, as exact
// rational functions of (N, alpha, beta). Computed by the three-term
// recurrences seeded with the 0th and 1st values and verified against the
// terminating-4F3 closed forms on first use; memoized.
const RationalFunction& coeff_A(int ell);
const RationalFunction& coeff_B(int ell);
RationalFunction coeff_A_tilde(int ell);
RationalFunction coeff_B_tilde(int ell);
RationalFunction coeff(CoeffKind kind, int ell);

// The closed forms on their own (used to cross-check the recurrence route).
RationalFunction coeff_A_hyp(int ell);
RationalFunction coeff_B_hyp(int ell);

// Substitute N -> N + 1.
RationalFunction shift_N(const RationalFunction& f);

// Convenient atoms over {N, alpha, beta}.
RationalFunction rf_N();
RationalFunction rf_alpha();
RationalFunction rf_beta();
RationalFunction rf_const(const Rational& c);
// alpha + beta + 2N
RationalFunction rf_sigma();

}  // namespace jue
