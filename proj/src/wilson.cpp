#include "jue/wilson.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "jue/errors.hpp"

namespace jue {

RationalFunction rf_N() { return RationalFunction::variable(VarSet::NAB, 0); }
RationalFunction rf_alpha() { return RationalFunction::variable(VarSet::NAB, 1); }
RationalFunction rf_beta() { return RationalFunction::variable(VarSet::NAB, 2); }
RationalFunction rf_const(const Rational& c) { return RationalFunction::constant(VarSet::NAB, c); }
RationalFunction rf_sigma() { return rf_alpha() + rf_beta() + rf_const(2) * rf_N(); }

RationalFunction shift_N(const RationalFunction& f) {
    std::vector<SparsePoly> images = {
        SparsePoly::variable(VarSet::NAB, 0) + SparsePoly::constant(VarSet::NAB, 1),
        SparsePoly::variable(VarSet::NAB, 1), SparsePoly::variable(VarSet::NAB, 2)};
    return f.compose(VarSet::NAB, images);
}

RationalFunction hyp4f3_terminating(const std::array<RationalFunction, 4>& num,
                                    const std::array<RationalFunction, 3>& den) {
    VarSet vs = num[0].var_set();
    // earliest termination among constant nonpositive-integer numerator params
    std::optional<long> kmax;
    for (const auto& a : num) {
        if (!a.is_constant()) continue;
        Rational v = a.constant_value();
        if (!is_integer(v) || v > 0) continue;
        long m = -v.get_num().get_si();
        if (!kmax || m < *kmax) kmax = m;
    }
    if (!kmax) throw std::invalid_argument("hyp4f3_terminating: no terminating parameter");

    RationalFunction sum = RationalFunction::constant(vs, 1);
    RationalFunction term = RationalFunction::constant(vs, 1);
    for (long k = 1; k <= *kmax; ++k) {
        RationalFunction shift = RationalFunction::constant(vs, Rational(k - 1));
        for (const auto& a : num) term *= a + shift;
        for (const auto& b : den) {
            RationalFunction f = b + shift;
            if (f.is_zero())
                throw PoleError("hyp4f3_terminating: denominator parameter pole before termination");
            term /= f;
        }
        term /= RationalFunction::constant(vs, Rational(k));
        sum += term;
    }
    return sum;
}

RationalFunction wilson_eval(int n, const Rational& kappa, const RationalFunction& a,
                             const RationalFunction& b, const RationalFunction& c,
                             const RationalFunction& d) {
    if (n < 0) throw std::invalid_argument("wilson_eval: n >= 0 required");
    VarSet vs = a.var_set();
    RationalFunction pre = pochhammer(a + b, n) * pochhammer(a + c, n) * pochhammer(a + d, n);
    RationalFunction kap = RationalFunction::constant(vs, kappa);
    std::array<RationalFunction, 4> num = {
        RationalFunction::constant(vs, Rational(-n)),
        a + b + c + d + RationalFunction::constant(vs, Rational(n - 1)), a + kap, a - kap};
    std::array<RationalFunction, 3> den = {a + b, a + c, a + d};
    return pre * hyp4f3_terminating(num, den);
}

RationalFunction coeff_A_hyp(int ell) {
    if (ell == 0) return rf_N() * (rf_beta() + rf_N()) / rf_sigma();
    RationalFunction N = rf_N(), al = rf_alpha(), be = rf_beta(), S = rf_sigma();
    RationalFunction pre = N * (al + N) * (be + N) * (al + be + N) *
                           pochhammer(al + rf_const(2), ell - 1) /
                           pochhammer(S - rf_const(1), ell + 2);
    std::array<RationalFunction, 4> num = {rf_const(1 - ell), rf_const(ell + 2),
                                           rf_const(1) - be - N, rf_const(1) - N};
    std::array<RationalFunction, 3> den = {rf_const(2), al + rf_const(2), rf_const(2) - S};
    return pre * hyp4f3_terminating(num, den);
}

RationalFunction coeff_B_hyp(int ell) {
    RationalFunction N = rf_N(), al = rf_alpha(), be = rf_beta(), S = rf_sigma();
    RationalFunction pre =
        pochhammer(al + rf_const(1), ell) / pochhammer(S - rf_const(1), ell + 1);
    std::array<RationalFunction, 4> num = {rf_const(-ell), rf_const(ell + 1),
                                           rf_const(1) - be - N, rf_const(1) - N};
    std::array<RationalFunction, 3> den = {rf_const(1), al + rf_const(1), rf_const(2) - S};
    return pre * hyp4f3_terminating(num, den);
}

namespace {

// Three-term recurrences, seeded at ell = 0, 1. The coefficient multiplying
// the (ell+1)-st value involves the square of (alpha+beta+2N) resp.
// (alpha+beta+2N-1); each freshly computed value is checked against the
// closed form.
std::vector<RationalFunction>& table_A() {
    static std::vector<RationalFunction> t;
    return t;
}
std::vector<RationalFunction>& table_B() {
    static std::vector<RationalFunction> t;
    return t;
}
std::mutex& coeff_mutex() {
    static std::mutex m;
    return m;
}

void extend_A(int ell) {
    auto& t = table_A();
    RationalFunction N = rf_N(), al = rf_alpha(), be = rf_beta(), S = rf_sigma();
    if (t.empty()) {
        t.push_back(N * (be + N) / S);
        t.push_back(N * (al + N) * (be + N) * (al + be + N) /
                    ((S - rf_const(1)) * S * (S + rf_const(1))));
        if (!ratfun_eq(t[1], coeff_A_hyp(1)))
            throw std::logic_error("A_1: recurrence and 4F3 routes disagree");
    }
    while (static_cast<int>(t.size()) <= ell) {
        int l = static_cast<int>(t.size()) - 1;  // recurrence at this index
        RationalFunction c0 = rf_const(2 * l + 1) *
                              (al * (al + be) - rf_const(l * (l + 1)) +
                               rf_const(2) * N * (al + be + N));
        RationalFunction cm = rf_const((l - 1)) * (rf_const(l * l) - al * al);
        RationalFunction cp = rf_const(l + 2) * (rf_const((l + 1) * (l + 1)) - S * S);
        RationalFunction next = -(c0 * t[l] + cm * t[l - 1]) / cp;
        if (!ratfun_eq(next, coeff_A_hyp(l + 1)))
            throw std::logic_error("A_" + std::to_string(l + 1) +
                                   ": recurrence and 4F3 routes disagree");
        t.push_back(std::move(next));
    }
}

void extend_B(int ell) {
    auto& t = table_B();
    RationalFunction N = rf_N(), al = rf_alpha(), be = rf_beta(), S = rf_sigma();
    if (t.empty()) {
        t.push_back(rf_const(1) / (S - rf_const(1)));
        t.push_back(((al - rf_const(1)) * (al + be) +
                     rf_const(2) * N * (al + be + N - rf_const(1))) /
                    ((S - rf_const(2)) * (S - rf_const(1)) * S));
        if (!ratfun_eq(t[0], coeff_B_hyp(0)) || !ratfun_eq(t[1], coeff_B_hyp(1)))
            throw std::logic_error("B seeds: recurrence and 4F3 routes disagree");
    }
    while (static_cast<int>(t.size()) <= ell) {
        int l = static_cast<int>(t.size()) - 1;
        RationalFunction c0 = rf_const(2 * l + 1) *
                              ((al - rf_const(1)) * (al + be) - rf_const(l * (l + 1)) +
                               rf_const(2) * N * (al + be + N - rf_const(1)));
        RationalFunction cm = rf_const(l) * (rf_const(l * l) - al * al);
        RationalFunction Sm = S - rf_const(1);
        RationalFunction cp = rf_const(l + 1) * (rf_const((l + 1) * (l + 1)) - Sm * Sm);
        RationalFunction next = -(c0 * t[l] + cm * t[l - 1]) / cp;
        if (!ratfun_eq(next, coeff_B_hyp(l + 1)))
            throw std::logic_error("B_" + std::to_string(l + 1) +
                                   ": recurrence and 4F3 routes disagree");
        t.push_back(std::move(next));
    }
}

}  // namespace

const RationalFunction& coeff_A(int ell) {
    if (ell < 0) throw std::invalid_argument("coeff_A: ell >= 0");
    std::lock_guard<std::mutex> lock(coeff_mutex());
    extend_A(ell);
    return table_A()[ell];
}

const RationalFunction& coeff_B(int ell) {
    if (ell < 0) throw std::invalid_argument("coeff_B: ell >= 0");
    std::lock_guard<std::mutex> lock(coeff_mutex());
    extend_B(ell);
    return table_B()[ell];
}

RationalFunction coeff_A_tilde(int ell) {
    RationalFunction S = rf_sigma(), al = rf_alpha();
    return pochhammer(S - rf_const(ell), 2 * ell + 1) /
           pochhammer(al - rf_const(ell), 2 * ell + 1) * coeff_A(ell);
}

RationalFunction coeff_B_tilde(int ell) {
    RationalFunction S = rf_sigma(), al = rf_alpha();
    return pochhammer(S - rf_const(ell + 1), 2 * ell + 1) /
           pochhammer(al - rf_const(ell), 2 * ell + 1) * coeff_B(ell);
}

RationalFunction coeff(CoeffKind kind, int ell) {
    switch (kind) {
        case CoeffKind::A: return coeff_A(ell);
        case CoeffKind::B: return coeff_B(ell);
        case CoeffKind::A_tilde: return coeff_A_tilde(ell);
        case CoeffKind::B_tilde: return coeff_B_tilde(ell);
    }
    throw std::invalid_argument("coeff: bad kind");
}

}  // namespace jue
