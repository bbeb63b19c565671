#include "jue/schur.hpp"

#include <algorithm>

#include "jue/characters.hpp"
#include "jue/wilson.hpp"

namespace jue {

namespace {

RationalFunction box_product_form(const Partition& lambda, Sign sign) {
    RationalFunction N = rf_N(), al = rf_alpha(), be = rf_beta();
    RationalFunction acc = rf_const(dim_over_factorial(lambda));
    for (auto [i, j] : lambda.boxes()) {
        Rational c(j - i);
        if (sign == Sign::Positive) {
            acc *= (N + rf_const(c)) * (al + N + rf_const(c)) / (al + be + rf_const(2) * N + rf_const(c));
        } else {
            acc *= (N + rf_const(c)) * (al + be + N - rf_const(c)) / (al - rf_const(c));
        }
    }
    return acc;
}

// The rewriting used to identify the partition function with a content-product
// tau function: prefactor^{|lambda|} times per-box ratios in the contents.
RationalFunction content_product_form(const Partition& lambda, Sign sign) {
    RationalFunction N = rf_N(), al = rf_alpha(), be = rf_beta();
    RationalFunction caN = al + N;                              // c_alpha N
    RationalFunction sN = al + be + rf_const(2) * N;            // (c_alpha + c_beta) N
    RationalFunction tN = al + be + N;                          // (c_alpha + c_beta - 1) N
    RationalFunction uN = al;                                   // (c_alpha - 1) N
    RationalFunction acc = rf_const(dim_over_factorial(lambda));
    RationalFunction pre = sign == Sign::Positive ? N * caN / sN : tN * N / uN;
    acc *= pre.pow(lambda.weight());
    for (auto [i, j] : lambda.boxes()) {
        RationalFunction c = rf_const(Rational(j - i));
        RationalFunction one = rf_const(1);
        if (sign == Sign::Positive) {
            acc *= (one + c / N) * (one + c / caN) / (one + c / sN);
        } else {
            acc *= (one + c / N) * (one - c / tN) / (one - c / uN);
        }
    }
    return acc;
}

}  // namespace

SchurCoefficient c_lambda(const Partition& lambda, Sign sign) {
    RationalFunction v = box_product_form(lambda, sign);
    if (!ratfun_eq(v, content_product_form(lambda, sign)))
        throw std::logic_error("c_lambda: box and content product forms disagree");
    return SchurCoefficient{lambda, sign, std::move(v)};
}

RationalFunction correlator_via_schur(const Partition& mu, Sign sign) {
    if (mu.weight() < 1) throw std::invalid_argument("correlator_via_schur: |mu| >= 1");
    RationalFunction total(VarSet::NAB);
    for (const auto& lambda : partitions_of(mu.weight())) {
        Int chi = character(lambda, mu);
        if (chi == 0) continue;
        total += c_lambda(lambda, sign).value * rf_const(Rational(chi));
    }
    return total;
}

RationalFunction connected_via_schur(const Partition& mu, Sign sign) {
    if (mu.weight() < 1) throw std::invalid_argument("connected_via_schur: |mu| >= 1");
    int l = mu.length();
    RationalFunction total(VarSet::NAB);
    for (const auto& sp : set_partitions(l)) {
        RationalFunction prod = rf_const(1);
        for (const auto& block : sp.blocks) {
            std::vector<int> parts;
            for (int idx : block) parts.push_back(mu.part(idx));
            std::sort(parts.rbegin(), parts.rend());
            prod *= correlator_via_schur(Partition(parts), sign);
        }
        int m = sp.block_count();
        Rational w(factorial(static_cast<unsigned>(m - 1)));
        if ((m - 1) % 2) w = -w;
        total += rf_const(w) * prod;
    }
    return total;
}

}  // namespace jue
