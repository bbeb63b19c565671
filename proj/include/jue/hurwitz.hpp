#pragma once

#include <map>

#include "jue/partition.hpp"
#include "jue/permutation.hpp"
#include "jue/poly.hpp"

namespace jue {

// Desk-scale enumeration guards (configurable through the CLI).
struct EnumGuards {
    int max_weight = 6;
    int max_r = 10;
    int threads = 1;
};

struct HurwitzQuery {
    Partition lambda, mu, nu;
    int genus = 0;
    bool connected = false;
    // weak monotonicity b_1 <= ... <= b_r as in the defining count; the
    // strict variant is exposed but not used by the verification suites
    bool strict_monotone = false;
};

// Number of transpositions fixed by the genus; counts with r < 0 are zero.
inline int hurwitz_r(const Partition& lambda, const Partition& mu, const Partition& nu,
                     int genus) {
    return 2 * genus - 2 - lambda.weight() + mu.length() + nu.length() + lambda.length();
}

// Count tuples (pi1, pi2, tau_1..tau_r) with pi1 in cyc(mu), pi2 in cyc(nu),
// monotone transpositions, and pi1 pi2 tau_1 ... tau_r in cyc(lambda);
// restricted to transitive tuples when connected.
Int count_hurwitz(const HurwitzQuery& q, const EnumGuards& guards = {});

// Full table over all (mu, nu) of weight |lambda| at fixed genus.
std::map<std::pair<Partition, Partition>, Int> hurwitz_table(const Partition& lambda, int genus,
                                                             bool connected,
                                                             const EnumGuards& guards = {});

// Weight generating function G(z) = (1+z)(1+gamma z)/(1-delta z).
struct WeightSpec {
    Rational gamma;
    Rational delta;
};

// eps-series of prod_{(i,j) in lambda} G(eps (j-i)) truncated at degree d_max.
SparsePoly content_product_series(const WeightSpec& w, const Partition& lambda, int d_max);

// H_G^d(mu) via the character sum over lambda |- |mu|.
Rational weighted_hurwitz_char(const WeightSpec& w, const Partition& mu, int d);

// H_G^{2g-2+n+l(lambda)}(lambda) via the enumerated triple counts.
Rational weighted_hurwitz_sum(const WeightSpec& w, const Partition& lambda, int genus,
                              const EnumGuards& guards = {});

}  // namespace jue
