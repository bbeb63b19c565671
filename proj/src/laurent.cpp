#include "jue/laurent.hpp"

#include <vector>

#include "jue/errors.hpp"

namespace jue {

namespace {

// Slices of a polynomial in N with coefficients over CC, indexed from the top:
// p = N^top * (s[0] + s[1]/N + s[2]/N^2 + ...).
std::vector<SparsePoly> top_slices(const SparsePoly& p_ncc, int& top) {
    auto by_n = p_ncc.coefficients_in(0);
    top = static_cast<int>(by_n.rbegin()->first);
    std::vector<SparsePoly> s(top + 1, SparsePoly::zero(VarSet::CC));
    for (auto& [k, q] : by_n) {
        // drop the N variable: re-express over CC (c_alpha, c_beta)
        SparsePoly r(VarSet::CC);
        for (const auto& [e, c] : q.terms()) r.add_term(Expo{e[1], e[2], 0}, c);
        s[top - static_cast<int>(k)] = std::move(r);
    }
    return s;
}

}  // namespace

LaurentInN laurent_expand(const RationalFunction& f, int depth) {
    if (f.var_set() != VarSet::NAB) throw std::invalid_argument("laurent_expand needs {N,alpha,beta}");
    LaurentInN out;
    if (f.is_zero()) {
        out.zero = true;
        out.e_max = 0;
        out.e_min = -depth;
        return out;
    }
    // alpha = (c_alpha - 1) N, beta = (c_beta - 1) N
    SparsePoly n_img = SparsePoly::variable(VarSet::NCC, 0);
    SparsePoly a_img = (SparsePoly::variable(VarSet::NCC, 1) -
                        SparsePoly::constant(VarSet::NCC, 1)) *
                       SparsePoly::variable(VarSet::NCC, 0);
    SparsePoly b_img = (SparsePoly::variable(VarSet::NCC, 2) -
                        SparsePoly::constant(VarSet::NCC, 1)) *
                       SparsePoly::variable(VarSet::NCC, 0);
    SparsePoly num = f.num().compose(VarSet::NCC, {n_img, a_img, b_img});
    SparsePoly den = f.den().compose(VarSet::NCC, {n_img, a_img, b_img});
    if (num.is_zero()) {
        out.zero = true;
        out.e_max = 0;
        out.e_min = -depth;
        return out;
    }

    int ntop = 0, dtop = 0;
    std::vector<SparsePoly> ns = top_slices(num, ntop);
    std::vector<SparsePoly> ds = top_slices(den, dtop);
    if (ds[0].is_zero())
        throw std::domain_error("laurent_expand: leading denominator coefficient vanishes");

    // invert the denominator tail as a geometric series in 1/N:
    // 1/(d0 + d1 x + ...) = g0 + g1 x + ... with x = 1/N
    RationalFunction d0 = RationalFunction::from_poly(ds[0]);
    std::vector<RationalFunction> g(depth + 1, RationalFunction(VarSet::CC));
    g[0] = RationalFunction::constant(VarSet::CC, 1) / d0;
    for (int t = 1; t <= depth; ++t) {
        RationalFunction acc(VarSet::CC);
        for (int j = 1; j <= t; ++j) {
            if (j >= static_cast<int>(ds.size())) break;
            if (ds[j].is_zero()) continue;
            acc += RationalFunction::from_poly(ds[j]) * g[t - j];
        }
        g[t] = -(acc / d0);
    }
    // multiply by the numerator slices
    out.zero = false;
    out.e_max = ntop - dtop;
    out.e_min = out.e_max - depth;
    for (int t = 0; t <= depth; ++t) {
        RationalFunction c(VarSet::CC);
        for (int j = 0; j <= t; ++j) {
            if (j >= static_cast<int>(ns.size())) break;
            if (ns[j].is_zero()) continue;
            c += RationalFunction::from_poly(ns[j]) * g[t - j];
        }
        if (!c.is_zero()) out.coeffs.emplace(out.e_max - t, c);
    }
    return out;
}

}  // namespace jue
