#pragma once

#include <vector>

#include "jue/correlators.hpp"
#include "jue/hurwitz.hpp"
#include "jue/laurent.hpp"

namespace jue {

// Scaled correlator side of the topological expansion: multiply the exact
// correlator by (-1)^{|lambda|} N^{l(lambda)} |lambda|!/z_lambda, substitute
// alpha = (c_alpha - 1) N, beta = (c_beta - 1) N, and expand down to
// N^{2 - 2 g_max}.
LaurentInN correlator_side(const Partition& lambda, Sign sign, int g_max, bool connected);

// Hurwitz side at genus g: the weighted double sum over (mu, nu) of the
// enumerated triple counts, as a rational function of (c_alpha, c_beta).
RationalFunction hurwitz_side(const Partition& lambda, Sign sign, int g, bool connected,
                              const EnumGuards& guards = {});

struct GenusRecord {
    int g;
    RationalFunction correlator_coeff;  // over {c_alpha, c_beta}
    RationalFunction hurwitz_coeff;
    bool equal;
};

struct ExpansionReport {
    Partition lambda;
    Sign sign;
    bool connected;
    int g_max;
    std::vector<GenusRecord> records;
    bool odd_powers_vanish;
    bool passed;  // every record equal and odd powers vanish
};

ExpansionReport verify_theorem(const Partition& lambda, Sign sign, int g_max, bool connected,
                               const EnumGuards& guards = {});

// Laguerre scaling limit lim_{beta->inf} beta^{|lambda|} <prod tr X^{lambda_j}>,
// as the ratio of leading-in-beta coefficients. The result depends on N and
// alpha only.
RationalFunction laguerre_limit(const Partition& lambda);

}  // namespace jue
