#include "jue/yjm.hpp"

#include <stdexcept>

namespace jue {

void GroupAlgebraElement::add(const Permutation& p, const SparsePoly& c) {
    if (c.is_zero()) return;
    auto it = coeffs.find(p);
    if (it == coeffs.end()) {
        coeffs.emplace(p, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.n != b.n) throw std::invalid_argument("group algebra size mismatch");
    GroupAlgebraElement r;
    r.n = a.n;
    for (const auto& [pa, ca] : a.coeffs)
        for (const auto& [pb, cb] : b.coeffs) r.add(pa * pb, ca * cb);
    return r;
}

GroupAlgebraElement yjm_product_expansion(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("yjm_product_expansion: n must be in 1..5");
    SparsePoly eps = SparsePoly::variable(VarSet::EPS, 0);
    GroupAlgebraElement acc;
    acc.n = n;
    acc.add(Permutation::identity(n), SparsePoly::constant(VarSet::EPS, 1));
    // J_1 = 0, so the a = 1 factor is the identity
    for (int a = 1; a < n; ++a) {
        GroupAlgebraElement factor;
        factor.n = n;
        factor.add(Permutation::identity(n), SparsePoly::constant(VarSet::EPS, 1));
        for (int b = 0; b < a; ++b)
            factor.add(Permutation::transposition(n, b, a), eps);
        acc = acc * factor;
    }
    return acc;
}

GroupAlgebraElement class_sum_expansion(int n) {
    GroupAlgebraElement r;
    r.n = n;
    SparsePoly eps = SparsePoly::variable(VarSet::EPS, 0);
    for (const auto& lambda : partitions_of(n)) {
        SparsePoly w = eps.pow(static_cast<unsigned>(n - lambda.length()));
        for (const auto& p : conjugacy_class(lambda, n)) r.add(p, w);
    }
    return r;
}

}  // namespace jue
