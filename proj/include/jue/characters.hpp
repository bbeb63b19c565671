#pragma once

#include "jue/partition.hpp"

namespace jue {

// dim(lambda), the dimension of the irreducible representation of S_|lambda|.
// Computed from the ratio formula valid for N >= l(lambda) and cross-checked
// against the hook-length formula at construction.
Int dim_lambda(const Partition& lambda);

// dim(lambda)/|lambda|! as an exact rational
Rational dim_over_factorial(const Partition& lambda);

// Irreducible character chi_lambda^mu of S_n (|lambda| = |mu| = n), by the
// Murnaghan-Nakayama recursion, memoized.
Int character(const Partition& lambda, const Partition& mu);

}  // namespace jue
