#include "jue/poly.hpp"

#include <algorithm>
#include <sstream>

namespace jue {

SparsePoly SparsePoly::constant(VarSet vs, const Rational& c) {
    SparsePoly p(vs);
    if (c != 0) p.terms_[{0, 0, 0}] = c;
    return p;
}

SparsePoly SparsePoly::variable(VarSet vs, int idx, unsigned power) {
    if (idx < 0 || idx >= var_count(vs)) throw std::out_of_range("variable index");
    SparsePoly p(vs);
    Expo e{0, 0, 0};
    e[idx] = power;
    p.terms_[e] = 1;
    return p;
}

SparsePoly SparsePoly::monomial(VarSet vs, const Expo& e, const Rational& c) {
    SparsePoly p(vs);
    if (c != 0) p.terms_[e] = c;
    return p;
}

bool SparsePoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Expo{0, 0, 0});
}

Rational SparsePoly::constant_term() const {
    auto it = terms_.find({0, 0, 0});
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned SparsePoly::total_degree() const {
    return terms_.empty() ? 0 : expo_degree(terms_.begin()->first);
}

unsigned SparsePoly::degree_in(int v) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;
}

const Expo& SparsePoly::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("leading monomial of zero polynomial");
    return terms_.begin()->first;
}

const Rational& SparsePoly::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("leading coeff of zero polynomial");
    return terms_.begin()->second;
}

void SparsePoly::add_term(const Expo& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r(vs_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    if (vs_ != o.vs_) throw std::invalid_argument("variable-set mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    if (vs_ != o.vs_) throw std::invalid_argument("variable-set mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    if (a.vs_ != b.vs_) throw std::invalid_argument("variable-set mismatch");
    SparsePoly r(a.vs_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    // iterate over the smaller operand outside
    const SparsePoly& s = a.terms_.size() <= b.terms_.size() ? a : b;
    const SparsePoly& t = a.terms_.size() <= b.terms_.size() ? b : a;
    Rational prod;
    for (const auto& [es, cs] : s.terms_) {
        for (const auto& [et, ct] : t.terms_) {
            Expo e{es[0] + et[0], es[1] + et[1], es[2] + et[2]};
            prod = cs * ct;
            r.add_term(e, prod);
        }
    }
    return r;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

SparsePoly SparsePoly::pow(unsigned k) const {
    SparsePoly r = constant(vs_, 1);
    SparsePoly base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

std::optional<SparsePoly> SparsePoly::exact_divide(const SparsePoly& d) const {
    if (vs_ != d.vs_) throw std::invalid_argument("variable-set mismatch");
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    SparsePoly q(vs_);
    SparsePoly r = *this;
    const Expo& dl = d.leading_monomial();
    const Rational& dc = d.leading_coeff();
    while (!r.is_zero()) {
        const Expo& rl = r.leading_monomial();
        Expo e;
        for (int i = 0; i < 3; ++i) {
            if (rl[i] < dl[i]) return std::nullopt;
            e[i] = rl[i] - dl[i];
        }
        Rational c = r.leading_coeff() / dc;
        SparsePoly t = monomial(vs_, e, c);
        q += t;
        r -= t * d;
    }
    return q;
}

bool SparsePoly::divisible_by_monomial(const Expo& e) const {
    for (const auto& [m, c] : terms_)
        for (int i = 0; i < 3; ++i)
            if (m[i] < e[i]) return false;
    return true;
}

SparsePoly SparsePoly::divide_by_monomial(const Expo& e) const {
    SparsePoly r(vs_);
    for (const auto& [m, c] : terms_) {
        Expo f;
        for (int i = 0; i < 3; ++i) {
            if (m[i] < e[i]) throw std::domain_error("monomial division not exact");
            f[i] = m[i] - e[i];
        }
        r.terms_[f] = c;
    }
    return r;
}

Expo SparsePoly::monomial_content() const {
    if (terms_.empty()) return {0, 0, 0};
    Expo m{UINT32_MAX, UINT32_MAX, UINT32_MAX};
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < 3; ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

Rational SparsePoly::rational_content() const {
    if (terms_.empty()) return Rational(1);
    Int gn = 0, gd = 1;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(gn.get_mpz_t(), gn.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(gd.get_mpz_t(), gd.get_mpz_t(), c.get_den().get_mpz_t());
    }
    return make_rational(gn, gd);
}

SparsePoly SparsePoly::substitute(int v, const Rational& value) const {
    SparsePoly r(vs_);
    for (const auto& [e, c] : terms_) {
        Rational pw = 1;
        for (unsigned i = 0; i < e[v]; ++i) pw *= value;
        Expo f = e;
        f[v] = 0;
        r.add_term(f, c * pw);
    }
    return r;
}

SparsePoly SparsePoly::compose(VarSet target, const std::vector<SparsePoly>& images) const {
    if (static_cast<int>(images.size()) != nvars())
        throw std::invalid_argument("compose: wrong image count");
    // cache powers of the images
    std::vector<std::vector<SparsePoly>> pows(images.size());
    for (size_t i = 0; i < images.size(); ++i) pows[i].push_back(SparsePoly::constant(target, 1));
    auto power_of = [&](size_t i, unsigned k) -> const SparsePoly& {
        while (pows[i].size() <= k) pows[i].push_back(pows[i].back() * images[i]);
        return pows[i][k];
    };
    SparsePoly r(target);
    for (const auto& [e, c] : terms_) {
        SparsePoly t = SparsePoly::constant(target, c);
        for (int i = 0; i < nvars(); ++i)
            if (e[i]) t = t * power_of(i, e[i]);
        r += t;
    }
    return r;
}

SparsePoly SparsePoly::swap_vars(int i, int j) const {
    SparsePoly r(vs_);
    for (const auto& [e, c] : terms_) {
        Expo f = e;
        std::swap(f[i], f[j]);
        r.terms_[f] = c;
    }
    return r;
}

std::map<unsigned, SparsePoly> SparsePoly::coefficients_in(int v) const {
    std::map<unsigned, SparsePoly> out;
    for (const auto& [e, c] : terms_) {
        Expo f = e;
        unsigned k = f[v];
        f[v] = 0;
        auto it = out.find(k);
        if (it == out.end()) it = out.emplace(k, SparsePoly(vs_)).first;
        it->second.add_term(f, c);
    }
    return out;
}

Rational SparsePoly::evaluate(const std::vector<Rational>& values) const {
    if (static_cast<int>(values.size()) != nvars())
        throw std::invalid_argument("evaluate: wrong value count");
    Rational r = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= values[i];
        r += t;
    }
    return r;
}

std::string SparsePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        bool has_var = expo_degree(e) > 0;
        bool coeff_shown = !has_var || ac != 1;
        if (coeff_shown) os << rational_to_string(ac);
        bool need_star = coeff_shown;
        for (int i = 0; i < nvars(); ++i) {
            if (!e[i]) continue;
            if (need_star) os << "*";
            os << var_name(vs_, i);
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace jue
