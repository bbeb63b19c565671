#include "jue/topexp.hpp"

#include "jue/wilson.hpp"

namespace jue {

namespace {

RationalFunction scaled_correlator(const Partition& lambda, Sign sign, bool connected) {
    CorrelatorQuery q{lambda, sign, connected};
    RationalFunction corr = connected ? connected_correlator(q) : correlator(q);
    Rational pref = make_rational(factorial(static_cast<unsigned>(lambda.weight())), lambda.z());
    if (lambda.weight() % 2) pref = -pref;
    return rf_const(pref) * rf_N().pow(lambda.length()) * corr;
}

}  // namespace

LaurentInN correlator_side(const Partition& lambda, Sign sign, int g_max, bool connected) {
    RationalFunction f = scaled_correlator(lambda, sign, connected);
    LaurentInN head = laurent_expand(f, 0);
    if (head.zero) return head;
    int depth = head.e_max - (2 - 2 * g_max);
    if (depth < 0) depth = 0;
    return laurent_expand(f, depth);
}

RationalFunction hurwitz_side(const Partition& lambda, Sign sign, int g, bool connected,
                              const EnumGuards& guards) {
    RationalFunction ca = RationalFunction::variable(VarSet::CC, 0);
    RationalFunction cb = RationalFunction::variable(VarSet::CC, 1);
    RationalFunction one = RationalFunction::constant(VarSet::CC, 1);
    RationalFunction total(VarSet::CC);
    auto parts = partitions_of(lambda.weight());
    for (const auto& mu : parts) {
        for (const auto& nu : parts) {
            HurwitzQuery q{lambda, mu, nu, g, connected};
            Int h = count_hurwitz(q, guards);
            if (h == 0) continue;
            int expo = mu.length() + nu.length() + lambda.length() + 2 * g - 2;
            RationalFunction w =
                sign == Sign::Positive
                    ? ca.pow(nu.length()) / (-(ca + cb)).pow(expo)
                    : (one - ca - cb).pow(nu.length()) / (ca - one).pow(expo);
            total += w * RationalFunction::constant(VarSet::CC, Rational(h));
        }
    }
    return total;
}

ExpansionReport verify_theorem(const Partition& lambda, Sign sign, int g_max, bool connected,
                               const EnumGuards& guards) {
    ExpansionReport rep;
    rep.lambda = lambda;
    rep.sign = sign;
    rep.connected = connected;
    rep.g_max = g_max;
    LaurentInN lhs = correlator_side(lambda, sign, g_max, connected);
    rep.odd_powers_vanish = true;
    if (!lhs.zero) {
        for (int e = lhs.e_max; e >= lhs.e_min; --e) {
            if (((e % 2) + 2) % 2 == 1 && !lhs.coeff(e).is_zero()) {
                rep.odd_powers_vanish = false;
                break;
            }
        }
    }
    rep.passed = rep.odd_powers_vanish;
    for (int g = 0; g <= g_max; ++g) {
        GenusRecord rec;
        rec.g = g;
        rec.correlator_coeff = lhs.coeff(2 - 2 * g);
        rec.hurwitz_coeff = hurwitz_side(lambda, sign, g, connected, guards);
        rec.equal = ratfun_eq(rec.correlator_coeff, rec.hurwitz_coeff);
        if (!rec.equal) rep.passed = false;
        rep.records.push_back(std::move(rec));
    }
    return rep;
}

RationalFunction laguerre_limit(const Partition& lambda) {
    for (int p : lambda.parts())
        if (p < 1) throw std::invalid_argument("laguerre_limit: positive powers only");
    CorrelatorQuery q{lambda, Sign::Positive, false};
    RationalFunction f = correlator(q) * rf_beta().pow(lambda.weight());
    auto num_slices = f.num().coefficients_in(2);
    auto den_slices = f.den().coefficients_in(2);
    unsigned dn = num_slices.empty() ? 0 : num_slices.rbegin()->first;
    unsigned dd = den_slices.empty() ? 0 : den_slices.rbegin()->first;
    if (dn != dd)
        throw std::domain_error("laguerre_limit: beta-degree mismatch (num " +
                                std::to_string(dn) + ", den " + std::to_string(dd) + ")");
    return RationalFunction(num_slices.rbegin()->second, den_slices.rbegin()->second);
}

}  // namespace jue
