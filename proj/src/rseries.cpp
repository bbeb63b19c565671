#include "jue/rseries.hpp"

#include <stdexcept>

#include "jue/wilson.hpp"

namespace jue {

namespace {

TruncatedSeries zero1(int K) {
    return TruncatedSeries::zero(1, VarSet::NAB, {K}, K, K);
}

void add_coeff(TruncatedSeries& s, int power, const RationalFunction& c) {
    s.add_term(SExpo{static_cast<uint16_t>(power)}, c);
}

RationalFunction swap_ab(const RationalFunction& f) { return f.swap_vars(1, 2); }

}  // namespace

MatrixSeries2x2 r_series(Point p, int K) {
    if (K < 0) throw std::invalid_argument("r_series: K >= 0");
    if (p == Point::One) {
        MatrixSeries2x2 R = r_series(Point::Zero, K);
        R.p = Point::One;
        for (auto& s : R.m) s = s.map_coeffs(swap_ab);
        return R;
    }
    MatrixSeries2x2 R;
    R.p = p;
    R.order = K;
    for (auto& s : R.m) s = zero1(K);
    add_coeff(R.at(0, 0), 0, rf_const(1));
    RationalFunction S = rf_sigma();
    RationalFunction P = rf_N() * (rf_alpha() + rf_N()) * (rf_beta() + rf_N()) *
                         (rf_alpha() + rf_beta() + rf_N());
    if (p == Point::Infinity) {
        // coefficient of w^{l+1}: [[ l A_l, P B_l(N+1) ], [ -B_l(N), -l A_l ]] / S
        for (int l = 0; l + 1 <= K; ++l) {
            RationalFunction a = rf_const(l) * coeff_A(l) / S;
            RationalFunction b = P * shift_N(coeff_B(l)) / S;
            RationalFunction c = -coeff_B(l) / S;
            add_coeff(R.at(0, 0), l + 1, a);
            add_coeff(R.at(0, 1), l + 1, b);
            add_coeff(R.at(1, 0), l + 1, c);
            add_coeff(R.at(1, 1), l + 1, -a);
        }
    } else {
        // coefficient of w^l: [[ (l+1) At_l, -P Bt_l(N+1) ], [ Bt_l(N), -(l+1) At_l ]] / S
        for (int l = 0; l <= K; ++l) {
            RationalFunction a = rf_const(l + 1) * coeff_A_tilde(l) / S;
            RationalFunction b = -P * shift_N(coeff_B_tilde(l)) / S;
            RationalFunction c = coeff_B_tilde(l) / S;
            add_coeff(R.at(0, 0), l, a);
            add_coeff(R.at(0, 1), l, b);
            add_coeff(R.at(1, 0), l, c);
            add_coeff(R.at(1, 1), l, -a);
        }
    }
    return R;
}

Matrix2x2RF lax_U0() {
    RationalFunction S = rf_sigma();
    RationalFunction q = (rf_const(2) * rf_N() * (rf_alpha() + rf_beta() + rf_N()) +
                          rf_alpha() * (rf_alpha() + rf_beta())) /
                         rf_const(2);
    RationalFunction P = rf_N() * (rf_alpha() + rf_N()) * (rf_beta() + rf_N()) *
                         (rf_alpha() + rf_beta() + rf_N());
    return {q / S, -P / S, rf_const(1) / S, -q / S};
}

Matrix2x2RF lax_U1() {
    RationalFunction S = rf_sigma();
    RationalFunction q = (rf_const(2) * rf_N() * (rf_alpha() + rf_beta() + rf_N()) +
                          rf_beta() * (rf_alpha() + rf_beta())) /
                         rf_const(2);
    RationalFunction P = rf_N() * (rf_alpha() + rf_N()) * (rf_beta() + rf_N()) *
                         (rf_alpha() + rf_beta() + rf_N());
    return {-q / S, -P / S, rf_const(1) / S, q / S};
}

namespace {

// d/dw of a 1-variable series; trust drops by one.
TruncatedSeries ddw(const TruncatedSeries& s) {
    TruncatedSeries r =
        TruncatedSeries::zero(1, s.coeff_var_set(), s.budgets(), s.cap(), s.trust() - 1);
    for (const auto& [e, c] : s.coefficients()) {
        if (e[0] == 0) continue;
        SExpo f = e;
        f[0] = static_cast<uint16_t>(f[0] - 1);
        r.add_term(f, c * RationalFunction::constant(s.coeff_var_set(), Rational(e[0])));
    }
    return r;
}

std::array<TruncatedSeries, 4> mat_comm(const std::array<TruncatedSeries, 4>& X,
                                        const std::array<TruncatedSeries, 4>& Y) {
    auto mul = [&](const std::array<TruncatedSeries, 4>& A,
                   const std::array<TruncatedSeries, 4>& B) {
        return std::array<TruncatedSeries, 4>{
            A[0] * B[0] + A[1] * B[2], A[0] * B[1] + A[1] * B[3],
            A[2] * B[0] + A[3] * B[2], A[2] * B[1] + A[3] * B[3]};
    };
    auto P = mul(X, Y), Q = mul(Y, X);
    return {P[0] - Q[0], P[1] - Q[1], P[2] - Q[2], P[3] - Q[3]};
}

}  // namespace

bool lax_check_matrix(const MatrixSeries2x2& R, int* first_failing_order) {
    int K = R.order;
    auto U0 = lax_U0();
    auto U1 = lax_U1();
    // series forms of the connection combination and the polynomial multiplier:
    //   p = zero:     z(1-z) dR/dz - [(1-z)U0 + zU1, R] = 0   (z = w)
    //   p = infinity: w(1-w) dR/dw + [(1-w)U0 - U1, R] = 0    (w = 1/z)
    auto poly1 = [&](const Rational& c0, const Rational& c1) {
        TruncatedSeries s = TruncatedSeries::zero(1, VarSet::NAB, {K + 1}, K + 1, K + 1);
        s.add_term(SExpo{0}, rf_const(c0));
        s.add_term(SExpo{1}, rf_const(c1));
        return s;
    };
    auto lift = [&](const Matrix2x2RF& M, const TruncatedSeries& scale) {
        std::array<TruncatedSeries, 4> out{scale, scale, scale, scale};
        for (int i = 0; i < 4; ++i) out[i] = scale.scaled(M[i]);
        return out;
    };
    auto add4 = [](std::array<TruncatedSeries, 4> a, const std::array<TruncatedSeries, 4>& b) {
        for (int i = 0; i < 4; ++i) a[i] = a[i] + b[i];
        return a;
    };

    TruncatedSeries w_one_minus_w = TruncatedSeries::zero(1, VarSet::NAB, {K + 2}, K + 2, K + 2);
    w_one_minus_w.add_term(SExpo{1}, rf_const(1));
    w_one_minus_w.add_term(SExpo{2}, rf_const(-1));
    std::array<TruncatedSeries, 4> U;
    if (R.p == Point::Zero) {
        U = add4(lift(U0, poly1(1, -1)), lift(U1, poly1(0, 1)));
    } else if (R.p == Point::Infinity) {
        U = add4(lift(U0, poly1(1, -1)), lift(U1, poly1(-1, 0)));
    } else {
        throw std::invalid_argument("lax check at p in {zero, infinity} only");
    }
    std::array<TruncatedSeries, 4> lhs;
    for (int i = 0; i < 4; ++i) lhs[i] = w_one_minus_w * ddw(R.m[i]);
    auto comm = mat_comm(U, R.m);
    int max_order = R.p == Point::Zero ? K - 1 : K;
    for (int ord = 0; ord <= max_order; ++ord) {
        for (int i = 0; i < 4; ++i) {
            RationalFunction resid = R.p == Point::Zero
                                         ? lhs[i].coeff(SExpo{static_cast<uint16_t>(ord)}) -
                                               comm[i].coeff(SExpo{static_cast<uint16_t>(ord)})
                                         : lhs[i].coeff(SExpo{static_cast<uint16_t>(ord)}) +
                                               comm[i].coeff(SExpo{static_cast<uint16_t>(ord)});
            if (!resid.is_zero()) {
                if (first_failing_order) *first_failing_order = ord;
                return false;
            }
        }
    }
    return true;
}

bool lax_residue_check(Point p, int K, int* first_failing_order) {
    if (K < 2) throw std::invalid_argument("lax_residue_check: K >= 2");
    return lax_check_matrix(r_series(p, K), first_failing_order);
}

}  // namespace jue
