#include "jue/series.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace jue {

TruncatedSeries::TruncatedSeries(int nvars, VarSet coeff_vs, std::vector<int> budgets, int cap,
                                 int trust)
    : nvars_(nvars), vs_(coeff_vs), budgets_(std::move(budgets)), cap_(cap), trust_(trust) {
    if (nvars_ < 1 || nvars_ > kMaxSeriesVars) throw std::invalid_argument("bad nvars");
    if (static_cast<int>(budgets_.size()) != nvars_)
        throw std::invalid_argument("budget count mismatch");
}

TruncatedSeries TruncatedSeries::zero(int nvars, VarSet vs, std::vector<int> budgets, int cap,
                                      int trust) {
    return TruncatedSeries(nvars, vs, std::move(budgets), cap, trust);
}

TruncatedSeries TruncatedSeries::constant(int nvars, VarSet vs, std::vector<int> budgets,
                                          int cap, int trust, RationalFunction c) {
    TruncatedSeries s(nvars, vs, std::move(budgets), cap, trust);
    s.add_term(SExpo{}, c);
    return s;
}

TruncatedSeries TruncatedSeries::from_exact_monomial(int nvars, VarSet vs,
                                                     std::vector<int> budgets, int cap,
                                                     const SExpo& e, RationalFunction c) {
    TruncatedSeries s(nvars, vs, std::move(budgets), cap, cap);
    s.add_term(e, c);
    return s;
}

bool TruncatedSeries::storable(const SExpo& e) const {
    if (static_cast<int>(sexpo_degree(e)) > cap_) return false;
    for (int i = 0; i < nvars_; ++i)
        if (e[i] > static_cast<unsigned>(std::max(budgets_[i], 0))) return false;
    return true;
}

void TruncatedSeries::add_term(const SExpo& e, const RationalFunction& c) {
    if (c.is_zero() || !storable(e)) return;
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
        coeffs_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

bool TruncatedSeries::is_trusted(const SExpo& e) const {
    if (static_cast<int>(sexpo_degree(e)) > trust_) return false;
    for (int i = 0; i < nvars_; ++i)
        if (e[i] > static_cast<unsigned>(std::max(budgets_[i], -1))) return false;
    return true;
}

RationalFunction TruncatedSeries::coeff(const SExpo& e) const {
    if (!is_trusted(e)) throw std::logic_error("coefficient outside the trusted window");
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? RationalFunction(vs_) : it->second;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
    if (nvars_ != o.nvars_ || vs_ != o.vs_) throw std::invalid_argument("series mismatch");
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r = *this;
    for (auto& [e, c] : r.coeffs_) c = -c;
    return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_compatible(b);
    std::vector<int> budgets(a.nvars_);
    for (int i = 0; i < a.nvars_; ++i) budgets[i] = std::min(a.budgets_[i], b.budgets_[i]);
    TruncatedSeries r(a.nvars_, a.vs_, budgets, std::min(a.cap_, b.cap_),
                      std::min(a.trust_, b.trust_));
    for (const auto& [e, c] : a.coeffs_) r.add_term(e, c);
    for (const auto& [e, c] : b.coeffs_) r.add_term(e, c);
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a + (-b);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_compatible(b);
    // per-variable valuations (minimum exponents); cap_ for missing variables
    auto valuations = [](const TruncatedSeries& s) {
        std::vector<int> v(s.nvars_, s.cap_);
        int tv = s.cap_;
        for (const auto& [e, c] : s.coeffs_) {
            tv = std::min(tv, static_cast<int>(sexpo_degree(e)));
            for (int i = 0; i < s.nvars_; ++i) v[i] = std::min(v[i], static_cast<int>(e[i]));
        }
        v.push_back(tv);  // total valuation at the back
        return v;
    };
    std::vector<int> va = valuations(a), vb = valuations(b);
    int tva = va.back(), tvb = vb.back();
    std::vector<int> budgets(a.nvars_);
    for (int i = 0; i < a.nvars_; ++i)
        budgets[i] = std::min(a.budgets_[i] + vb[i], b.budgets_[i] + va[i]);
    int cap = std::min(a.cap_, b.cap_);
    int trust = std::min(a.trust_ + tvb, b.trust_ + tva);
    trust = std::min(trust, cap);
    TruncatedSeries r(a.nvars_, a.vs_, budgets, cap, trust);
    for (const auto& [ea, ca] : a.coeffs_) {
        for (const auto& [eb, cb] : b.coeffs_) {
            SExpo e{};
            bool ok = true;
            unsigned deg = 0;
            for (int i = 0; i < a.nvars_; ++i) {
                e[i] = static_cast<uint16_t>(ea[i] + eb[i]);
                deg += e[i];
                if (e[i] > static_cast<unsigned>(std::max(budgets[i], 0))) ok = false;
            }
            if (!ok || static_cast<int>(deg) > cap) continue;
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const RationalFunction& c) const {
    TruncatedSeries r(nvars_, vs_, budgets_, cap_, trust_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : coeffs_) r.coeffs_.emplace(e, v * c);
    return r;
}

TruncatedSeries TruncatedSeries::shifted(int v, int k) const {
    std::vector<int> budgets = budgets_;
    budgets[v] += k;
    TruncatedSeries r(nvars_, vs_, budgets, cap_, std::min(trust_ + k, cap_));
    for (const auto& [e, c] : coeffs_) {
        SExpo f = e;
        f[v] = static_cast<uint16_t>(f[v] + k);
        if (r.storable(f)) r.coeffs_.emplace(f, c);
    }
    return r;
}

TruncatedSeries TruncatedSeries::times_difference(int a, int b) const {
    TruncatedSeries r(nvars_, vs_, budgets_, cap_, std::min(trust_ + 1, cap_));
    for (const auto& [e, c] : coeffs_) {
        SExpo f = e;
        f[a] = static_cast<uint16_t>(f[a] + 1);
        if (r.storable(f)) r.add_term(f, c);
        SExpo g = e;
        g[b] = static_cast<uint16_t>(g[b] + 1);
        if (r.storable(g)) r.add_term(g, -c);
    }
    return r;
}

TruncatedSeries TruncatedSeries::map_coeffs(
    const std::function<RationalFunction(const RationalFunction&)>& f) const {
    TruncatedSeries r(nvars_, vs_, budgets_, cap_, trust_);
    for (const auto& [e, c] : coeffs_) {
        RationalFunction m = f(c);
        if (!m.is_zero()) r.coeffs_.emplace(e, m);
    }
    return r;
}

TruncatedSeries TruncatedSeries::divide_by_difference(int a, int b) const {
    if (a == b || a < 0 || b < 0 || a >= nvars_ || b >= nvars_)
        throw std::invalid_argument("bad variable pair");
    // slices by exponent of w_a
    std::map<int, std::map<SExpo, RationalFunction>> slices;
    int kmax = 0;
    for (const auto& [e, c] : coeffs_) {
        SExpo f = e;
        int k = f[a];
        f[a] = 0;
        slices[k].emplace(f, c);
        kmax = std::max(kmax, k);
    }
    std::vector<int> budgets = budgets_;
    budgets[a] -= 1;
    budgets[b] -= 1;
    TruncatedSeries q(nvars_, vs_, budgets, cap_, trust_ - 1);
    if (coeffs_.empty()) return q;

    // descending synthetic division: Q_{k-1} = S_k + w_b * Q_k
    std::map<SExpo, RationalFunction> cur;  // Q_k while walking down
    auto shift_b = [&](std::map<SExpo, RationalFunction> m) {
        std::map<SExpo, RationalFunction> out;
        for (auto& [e, c] : m) {
            SExpo f = e;
            f[b] = static_cast<uint16_t>(f[b] + 1);
            out.emplace(f, std::move(c));
        }
        return out;
    };
    auto merge_into = [](std::map<SExpo, RationalFunction>& dst,
                         const std::map<SExpo, RationalFunction>& src) {
        for (const auto& [e, c] : src) {
            auto it = dst.find(e);
            if (it == dst.end()) {
                dst.emplace(e, c);
            } else {
                it->second += c;
                if (it->second.is_zero()) dst.erase(it);
            }
        }
    };
    for (int k = kmax; k >= 1; --k) {
        cur = shift_b(std::move(cur));
        auto it = slices.find(k);
        if (it != slices.end()) merge_into(cur, it->second);
        for (const auto& [e, c] : cur) {
            SExpo f = e;
            f[a] = static_cast<uint16_t>(k - 1);
            q.add_term(f, c);
        }
    }
    // remainder check: S_0 + w_b * Q_0 must vanish within the trusted window
    cur = shift_b(std::move(cur));
    auto it = slices.find(0);
    if (it != slices.end()) merge_into(cur, it->second);
    for (const auto& [e, c] : cur) {
        if (c.is_zero()) continue;
        bool in_window = static_cast<int>(sexpo_degree(e)) <= q.trust_;
        for (int i = 0; i < nvars_ && in_window; ++i)
            if (e[i] > static_cast<unsigned>(std::max(i == a ? budgets[i] + 1 : budgets[i], 0)))
                in_window = false;
        if (in_window)
            throw std::domain_error("divide_by_difference: nonzero remainder in trusted window");
    }
    return q;
}

}  // namespace jue
