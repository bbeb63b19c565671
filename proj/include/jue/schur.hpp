#pragma once

#include "jue/correlators.hpp"
#include "jue/partition.hpp"

namespace jue {

// Schur-expansion coefficient c_{lambda,N}^{+-}: dim(lambda)/|lambda|! times
// the box product over the Young diagram. Verified at construction against
// the content-product form (prefactor^{|lambda|} times per-box ratios).
struct SchurCoefficient {
    Partition lambda;
    Sign sign;
    RationalFunction value;  // over {N, alpha, beta}
};

SchurCoefficient c_lambda(const Partition& lambda, Sign sign);

// Disconnected correlator as sum_{lambda |- |mu|} c_lambda chi_lambda^mu.
RationalFunction correlator_via_schur(const Partition& mu, Sign sign);

// Moebius inversion over set partitions of the trace factors.
RationalFunction connected_via_schur(const Partition& mu, Sign sign);

}  // namespace jue
