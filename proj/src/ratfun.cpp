#include "jue/ratfun.hpp"

#include <algorithm>

#include "jue/errors.hpp"

namespace jue {

namespace {

std::vector<SparsePoly> build_forms(VarSet vs) {
    std::vector<SparsePoly> out;
    auto lin = [&](std::vector<std::pair<int, long>> vars, long c) {
        SparsePoly p(vs);
        for (auto [idx, coef] : vars) p += SparsePoly::variable(vs, idx) * Rational(coef);
        p += SparsePoly::constant(vs, Rational(c));
        return p;
    };
    const long range_s = 18, range_a = 14;
    switch (vs) {
        case VarSet::NAB:
            // alpha + beta + 2N + c
            for (long c = -range_s; c <= range_s; ++c)
                out.push_back(lin({{0, 2}, {1, 1}, {2, 1}}, c));
            // alpha + c, beta + c
            for (long c = -range_a; c <= range_a; ++c) out.push_back(lin({{1, 1}}, c));
            for (long c = -range_a; c <= range_a; ++c) out.push_back(lin({{2, 1}}, c));
            break;
        case VarSet::NCC:
        case VarSet::CC: {
            int ca = vs == VarSet::CC ? 0 : 1;
            int cb = ca + 1;
            out.push_back(lin({{ca, 1}, {cb, 1}}, 0));   // c_alpha + c_beta
            out.push_back(lin({{ca, 1}, {cb, 1}}, -1));  // c_alpha + c_beta - 1
            out.push_back(lin({{ca, 1}}, -1));           // c_alpha - 1
            out.push_back(lin({{cb, 1}}, -1));           // c_beta - 1
            break;
        }
        case VarSet::EPS: break;
    }
    return out;
}

}  // namespace

const std::vector<SparsePoly>& structured_linear_forms(VarSet vs) {
    static const std::vector<SparsePoly> nab = build_forms(VarSet::NAB);
    static const std::vector<SparsePoly> ncc = build_forms(VarSet::NCC);
    static const std::vector<SparsePoly> cc = build_forms(VarSet::CC);
    static const std::vector<SparsePoly> eps = build_forms(VarSet::EPS);
    switch (vs) {
        case VarSet::NAB: return nab;
        case VarSet::NCC: return ncc;
        case VarSet::CC: return cc;
        case VarSet::EPS: return eps;
    }
    return eps;
}

RationalFunction::RationalFunction(SparsePoly num, SparsePoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.var_set() != den_.var_set()) throw std::invalid_argument("variable-set mismatch");
    normalize();
}

RationalFunction RationalFunction::from_poly(SparsePoly p) {
    VarSet vs = p.var_set();
    return RationalFunction(std::move(p), SparsePoly::constant(vs, 1));
}

RationalFunction RationalFunction::constant(VarSet vs, const Rational& c) {
    return from_poly(SparsePoly::constant(vs, c));
}

RationalFunction RationalFunction::variable(VarSet vs, int idx) {
    return from_poly(SparsePoly::variable(vs, idx));
}

Rational RationalFunction::constant_value() const {
    if (!is_constant()) throw std::domain_error("not a constant rational function");
    if (num_.is_zero()) return Rational(0);
    return num_.constant_term() / den_.constant_term();
}

void RationalFunction::normalize() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
        den_ = SparsePoly::constant(num_.var_set(), 1);
        return;
    }
    // shared monomial content
    Expo mn = num_.monomial_content();
    Expo md = den_.monomial_content();
    Expo shared{std::min(mn[0], md[0]), std::min(mn[1], md[1]), std::min(mn[2], md[2])};
    if (shared[0] | shared[1] | shared[2]) {
        num_ = num_.divide_by_monomial(shared);
        den_ = den_.divide_by_monomial(shared);
    }
    // best-effort cancellation of structured linear factors
    if (den_.total_degree() > 0) {
        for (const auto& f : structured_linear_forms(num_.var_set())) {
            for (;;) {
                if (den_.total_degree() == 0) break;
                auto qd = den_.exact_divide(f);
                if (!qd) break;
                auto qn = num_.exact_divide(f);
                if (!qn) break;
                den_ = std::move(*qd);
                num_ = std::move(*qn);
            }
            if (den_.total_degree() == 0) break;
        }
    }
    // joint integer content and denominator sign
    Rational cn = num_.rational_content();
    Rational cd = den_.rational_content();
    Int g;
    mpz_gcd(g.get_mpz_t(), cn.get_num().get_mpz_t(), cd.get_num().get_mpz_t());
    Int l;
    mpz_lcm(l.get_mpz_t(), cn.get_den().get_mpz_t(), cd.get_den().get_mpz_t());
    Rational scale = make_rational(l, g);  // divide by g/l
    if (den_.leading_coeff() < 0) scale = -scale;
    if (scale != 1) {
        num_ *= scale;
        den_ *= scale;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.var_set() != b.var_set()) throw std::invalid_argument("variable-set mismatch");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    // divisibility fast paths keep structured denominators from compounding
    if (auto q = b.den_.exact_divide(a.den_))
        return RationalFunction(a.num_ * *q + b.num_, b.den_);
    if (auto q = a.den_.exact_divide(b.den_))
        return RationalFunction(a.num_ + b.num_ * *q, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.var_set() != b.var_set()) throw std::invalid_argument("variable-set mismatch");
    if (a.is_zero() || b.is_zero()) return RationalFunction(a.var_set());
    // cross-cancel before multiplying
    const SparsePoly *n1 = &a.num_, *d1 = &a.den_, *n2 = &b.num_, *d2 = &b.den_;
    SparsePoly sn1(a.var_set()), sd2(a.var_set()), sn2(a.var_set()), sd1(a.var_set());
    if (auto q = n1->exact_divide(*d2)) {
        sn1 = std::move(*q);
        n1 = &sn1;
        sd2 = SparsePoly::constant(a.var_set(), 1);
        d2 = &sd2;
    }
    if (auto q = n2->exact_divide(*d1)) {
        sn2 = std::move(*q);
        n2 = &sn2;
        sd1 = SparsePoly::constant(a.var_set(), 1);
        d1 = &sd1;
    }
    return RationalFunction(*n1 * *n2, *d1 * *d2);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    RationalFunction inv(b.den_, b.num_);
    return a * inv;
}

RationalFunction RationalFunction::pow(int k) const {
    if (k < 0) {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return RationalFunction(den_, num_).pow(-k);
    }
    return RationalFunction(num_.pow(static_cast<unsigned>(k)),
                            den_.pow(static_cast<unsigned>(k)));
}

RationalFunction RationalFunction::substitute(int v, const Rational& value) const {
    SparsePoly n = num_.substitute(v, value);
    SparsePoly d = den_.substitute(v, value);
    if (d.is_zero()) throw PoleError("denominator vanished under substitution");
    return RationalFunction(std::move(n), std::move(d));
}

Rational RationalFunction::evaluate(const std::vector<Rational>& values) const {
    Rational d = den_.evaluate(values);
    if (d == 0) throw PoleError("pole at the evaluation point");
    return num_.evaluate(values) / d;
}

RationalFunction RationalFunction::compose(VarSet target,
                                           const std::vector<SparsePoly>& images) const {
    SparsePoly n = num_.compose(target, images);
    SparsePoly d = den_.compose(target, images);
    if (d.is_zero()) throw PoleError("denominator vanished under composition");
    return RationalFunction(std::move(n), std::move(d));
}

RationalFunction RationalFunction::swap_vars(int i, int j) const {
    return RationalFunction(num_.swap_vars(i, j), den_.swap_vars(i, j));
}

std::string RationalFunction::to_string() const {
    if (num_.is_zero()) return "0";
    if (den_.is_constant() && den_.constant_term() == 1) {
        if (num_.term_count() == 1) return num_.to_string();
        return "(" + num_.to_string() + ")";
    }
    std::string n = num_.term_count() == 1 ? num_.to_string() : "(" + num_.to_string() + ")";
    std::string d = den_.term_count() == 1 ? den_.to_string() : "(" + den_.to_string() + ")";
    if (num_.term_count() == 1 && num_.to_string().find('-') == 0)
        n = "(" + num_.to_string() + ")";
    if (den_.term_count() == 1 && den_.to_string().find('-') == 0)
        d = "(" + den_.to_string() + ")";
    return n + "/" + d;
}

bool ratfun_eq(const RationalFunction& f, const RationalFunction& g) {
    if (f.var_set() != g.var_set()) throw std::invalid_argument("variable-set mismatch");
    return (f.num() * g.den() - g.num() * f.den()).is_zero();
}

RationalFunction pochhammer(const RationalFunction& s, int k) {
    if (k < 0) throw std::invalid_argument("pochhammer needs k >= 0");
    RationalFunction r = RationalFunction::constant(s.var_set(), 1);
    for (int i = 0; i < k; ++i)
        r *= s + RationalFunction::constant(s.var_set(), Rational(i));
    return r;
}

}  // namespace jue
