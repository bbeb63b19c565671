#pragma once

#include "jue/partition.hpp"
#include "jue/rseries.hpp"

namespace jue {

enum class Sign { Positive, Negative };

struct CorrelatorQuery {
    Partition lambda;
    Sign sign = Sign::Positive;
    bool connected = true;
};

// One-point moments <tr X^{+-k}> by telescoping from <tr X^0> = N:
//   <tr X^{k+1}> = <tr X^k> - A_k,     <tr X^{-k-1}> = <tr X^{-k}> + At_k.
const RationalFunction& moment(int k, Sign sign);

// Connected correlator <prod_j tr X^{+-k_j}>^c. One-point queries delegate to
// moment; multi-point queries go through the cyclic trace formula on the
// matrix series at the appropriate spectral point.
RationalFunction connected_correlator(const CorrelatorQuery& q);

// Disconnected correlator: sum over set partitions of products of connected
// blocks.
RationalFunction correlator(const CorrelatorQuery& q);

// Connected correlator mixing tr X^k (q_pos), tr X^{-i} (q_neg) and
// tr (1-X)^j (q_one) factors. The (1-X) powers are reduced by the binomial
// expansion and multilinearity of cumulants; the remaining factors live at
// the points infinity and zero of the same cyclic trace formula.
RationalFunction mixed_connected(const Partition& q_pos, const Partition& q_neg,
                                 const Partition& q_one);

// A single trace factor at a spectral point (power >= 1; at Point::Zero the
// factor means tr X^{-power}).
struct TraceFactor {
    Point p;
    int power;
};

// Multi-point connected correlator over arbitrary per-factor points
// (Infinity/Zero); the engine behind connected_correlator and mixed_connected.
RationalFunction connected_by_series(const std::vector<TraceFactor>& factors);

}  // namespace jue
