#include "jue/correlators.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "jue/wilson.hpp"

namespace jue {

const RationalFunction& moment(int k, Sign sign) {
    static std::vector<RationalFunction> pos, neg;
    static std::mutex mtx;
    if (k < 0) throw std::invalid_argument("moment: k >= 0");
    std::lock_guard<std::mutex> lock(mtx);
    auto& t = sign == Sign::Positive ? pos : neg;
    if (t.empty()) t.push_back(rf_N());
    while (static_cast<int>(t.size()) <= k) {
        int j = static_cast<int>(t.size()) - 1;
        t.push_back(sign == Sign::Positive ? t[j] - coeff_A(j) : t[j] + coeff_A_tilde(j));
    }
    return t[k];
}

namespace {

// Embed a one-variable matrix series into an nvars-variable series space at
// variable index v. The engine runs with trust = cap: the series order K and
// the cap are provisioned so that every coefficient consumed on the way to
// the extraction point is exact (validated independently by the division
// remainder checks and the Schur-route equality suite).
TruncatedSeries embed(const TruncatedSeries& s, int nvars, int v, const std::vector<int>& budgets,
                      int cap) {
    TruncatedSeries r = TruncatedSeries::zero(nvars, s.coeff_var_set(), budgets, cap, cap);
    for (const auto& [e, c] : s.coefficients()) {
        SExpo f{};
        f[v] = e[0];
        r.add_term(f, c);
    }
    return r;
}

struct Mat {
    std::array<TruncatedSeries, 4> m;
    const TruncatedSeries& at(int i, int j) const { return m[2 * i + j]; }
};

Mat mat_mul(const Mat& A, const Mat& B) {
    return Mat{{A.at(0, 0) * B.at(0, 0) + A.at(0, 1) * B.at(1, 0),
                A.at(0, 0) * B.at(0, 1) + A.at(0, 1) * B.at(1, 1),
                A.at(1, 0) * B.at(0, 0) + A.at(1, 1) * B.at(1, 0),
                A.at(1, 0) * B.at(0, 1) + A.at(1, 1) * B.at(1, 1)}};
}

TruncatedSeries mat_trace(const Mat& A) { return A.at(0, 0) + A.at(1, 1); }

// 1/(z_x - z_y) for factors at distinct points, as an explicit series
// (a unit series times a monomial):
//   inf(x), zero(y):  w_x Sum_m (w_x v_y)^m
//   zero(x), inf(y): -w_y Sum_m (v_x w_y)^m
TruncatedSeries cross_inverse(Point px, int x, Point py, int y, int nvars,
                              const std::vector<int>& budgets, int cap) {
    TruncatedSeries s = TruncatedSeries::zero(nvars, VarSet::NAB, budgets, cap, cap);
    RationalFunction one = rf_const(1);
    int wi = px == Point::Infinity ? x : y;
    int vi = px == Point::Infinity ? y : x;
    Rational sgn = px == Point::Infinity ? 1 : -1;
    for (int m = 0;; ++m) {
        SExpo e{};
        e[wi] = static_cast<uint16_t>(m + 1);
        e[vi] = static_cast<uint16_t>(m);
        if (2 * m + 1 > cap) break;
        s.add_term(e, rf_const(sgn));
    }
    return s;
}

}  // namespace

RationalFunction connected_by_series(const std::vector<TraceFactor>& factors) {
    const int l = static_cast<int>(factors.size());
    if (l < 2) throw std::invalid_argument("connected_by_series: need >= 2 factors");
    if (l > kMaxSeriesVars) throw std::invalid_argument("too many trace factors");
    for (const auto& f : factors)
        if (f.p == Point::One)
            throw std::invalid_argument("point-one factors must be reduced upstream");

    int max_k = 0, total = 0;
    for (const auto& f : factors) {
        max_k = std::max(max_k, f.power);
        total += f.power;
    }
    const int K = std::max(max_k + 2, total);
    const int cap = total + 3 * l + l * (l - 1) / 2;
    std::vector<int> budgets(l, cap);

    // per-factor matrix series
    std::vector<Mat> mats;
    mats.reserve(l);
    for (int j = 0; j < l; ++j) {
        MatrixSeries2x2 R = r_series(factors[j].p, K);
        Mat M;
        for (int i = 0; i < 4; ++i) M.m[i] = embed(R.m[i], l, j, budgets, cap);
        mats.push_back(std::move(M));
    }

    auto same_point = [&](int u, int v) { return factors[u].p == factors[v].p; };
    std::vector<std::pair<int, int>> same_pairs;
    for (int u = 0; u < l; ++u)
        for (int v = u + 1; v < l; ++v)
            if (same_point(u, v)) same_pairs.emplace_back(u, v);

    // canonical difference polynomial for a same-point pair (u < v):
    // (w_u - w_v) at infinity, (v_u - v_v) at zero (z_u - z_v = v_u - v_v)
    auto diff_poly = [&](int u, int v) {
        TruncatedSeries s = TruncatedSeries::zero(l, VarSet::NAB, budgets, cap, cap);
        SExpo e{};
        e[u] = 1;
        s.add_term(e, rf_const(1));
        SExpo f{};
        f[v] = 1;
        s.add_term(f, rf_const(-1));
        return s;
    };

    TruncatedSeries num = TruncatedSeries::zero(l, VarSet::NAB, budgets, cap, 0);
    if (l == 2) {
        TruncatedSeries t =
            mat_trace(mat_mul(mats[0], mats[1])) -
            TruncatedSeries::constant(l, VarSet::NAB, budgets, cap, cap, rf_const(1));
        if (same_point(0, 1)) {
            if (factors[0].p == Point::Infinity) t = t.shifted(0, 2).shifted(1, 2);
            num = t;
        } else {
            TruncatedSeries inv = cross_inverse(factors[0].p, 0, factors[1].p, 1, l, budgets, cap);
            num = t * inv * inv;
        }
    } else {
        // sum over l-cycles, written over the common denominator
        // prod_{same-point pairs} d_{uv}; cross-point edges contribute their
        // inverse series directly
        std::vector<int> rest(l - 1);
        std::iota(rest.begin(), rest.end(), 1);
        std::sort(rest.begin(), rest.end());
        do {
            std::vector<int> order{0};
            order.insert(order.end(), rest.begin(), rest.end());
            Mat prod = mats[order[0]];
            for (int i = 1; i < l; ++i) prod = mat_mul(prod, mats[order[i]]);
            TruncatedSeries term = mat_trace(prod);
            int sign = -1;  // leading minus of the cyclic formula
            std::vector<std::pair<int, int>> edge_pairs;
            for (int i = 0; i < l; ++i) {
                int x = order[i], y = order[(i + 1) % l];
                if (same_point(x, y)) {
                    if (factors[x].p == Point::Infinity) {
                        // 1/(z_x - z_y) = w_x w_y / (w_y - w_x)
                        term = term.shifted(x, 1).shifted(y, 1);
                        if (y > x) sign = -sign;  // (w_y - w_x) = -(w_min - w_max) when y > x
                    } else {
                        // 1/(z_x - z_y) = 1/(v_x - v_y)
                        if (x > y) sign = -sign;
                    }
                    edge_pairs.emplace_back(std::min(x, y), std::max(x, y));
                } else {
                    term = term * cross_inverse(factors[x].p, x, factors[y].p, y, l, budgets, cap);
                }
            }
            for (auto [u, v] : same_pairs) {
                if (std::find(edge_pairs.begin(), edge_pairs.end(), std::make_pair(u, v)) ==
                    edge_pairs.end())
                    term = term * diff_poly(u, v);
            }
            num += sign > 0 ? term : -term;
        } while (std::next_permutation(rest.begin(), rest.end()));
    }

    for (auto [u, v] : same_pairs) {
        num = num.divide_by_difference(u, v);
        if (l == 2) num = num.divide_by_difference(u, v);
    }

    SExpo e{};
    Rational sgn = 1;
    for (int j = 0; j < l; ++j) {
        if (factors[j].p == Point::Infinity) {
            e[j] = static_cast<uint16_t>(factors[j].power + 1);
        } else {
            e[j] = static_cast<uint16_t>(factors[j].power - 1);
            sgn = -sgn;
        }
    }
    return num.coeff(e) * rf_const(sgn);
}

namespace {

RationalFunction connected_cached(std::vector<int> powers, Sign sign) {
    std::sort(powers.rbegin(), powers.rend());
    static std::map<std::pair<std::vector<int>, int>, RationalFunction> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(powers, sign == Sign::Positive ? 0 : 1);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    RationalFunction val(VarSet::NAB);
    if (powers.size() == 1) {
        val = moment(powers[0], sign);
    } else {
        std::vector<TraceFactor> fs;
        Point p = sign == Sign::Positive ? Point::Infinity : Point::Zero;
        for (int k : powers) fs.push_back({p, k});
        val = connected_by_series(fs);
    }
    cache.emplace(std::move(key), val);
    return val;
}

}  // namespace

RationalFunction connected_correlator(const CorrelatorQuery& q) {
    if (q.lambda.empty()) return rf_const(1);
    for (int p : q.lambda.parts())
        if (p < 1) throw std::invalid_argument("powers must be >= 1");
    return connected_cached(q.lambda.parts(), q.sign);
}

RationalFunction correlator(const CorrelatorQuery& q) {
    if (q.lambda.empty()) return rf_const(1);
    int l = q.lambda.length();
    RationalFunction total(VarSet::NAB);
    for (const auto& sp : set_partitions(l)) {
        RationalFunction prod = rf_const(1);
        for (const auto& block : sp.blocks) {
            std::vector<int> powers;
            for (int idx : block) powers.push_back(q.lambda.part(idx));
            prod *= connected_cached(std::move(powers), q.sign);
        }
        total += prod;
    }
    return total;
}

RationalFunction mixed_connected(const Partition& q_pos, const Partition& q_neg,
                                 const Partition& q_one) {
    int total_factors = q_pos.length() + q_neg.length() + q_one.length();
    if (total_factors == 0) throw std::invalid_argument("mixed_connected: no factors");

    std::vector<TraceFactor> base;
    for (int k : q_pos.parts()) base.push_back({Point::Infinity, k});
    for (int k : q_neg.parts()) base.push_back({Point::Zero, k});

    // expand each tr(1-X)^j binomially; a tr X^0 factor is the constant N,
    // which kills every joint cumulant and survives only as a lone mean
    std::vector<int> ones = q_one.parts();
    RationalFunction total(VarSet::NAB);
    std::vector<int> ms(ones.size(), 0);
    std::function<void(size_t, Rational)> rec = [&](size_t idx, Rational coef) {
        if (idx == ones.size()) {
            std::vector<TraceFactor> fs = base;
            bool has_zero_power = false;
            for (int m : ms) {
                if (m == 0)
                    has_zero_power = true;
                else
                    fs.push_back({Point::Infinity, m});
            }
            if (has_zero_power) {
                if (total_factors == 1) total += rf_const(coef * Rational(1)) * rf_N();
                return;
            }
            RationalFunction val;
            if (fs.size() == 1) {
                val = moment(fs[0].power, fs[0].p == Point::Infinity ? Sign::Positive
                                                                     : Sign::Negative);
            } else {
                val = connected_by_series(fs);
            }
            total += rf_const(coef) * val;
            return;
        }
        int j = ones[idx];
        for (int m = 0; m <= j; ++m) {
            Rational c = Rational(binomial(static_cast<unsigned>(j), static_cast<unsigned>(m)));
            if (m % 2) c = -c;
            ms[idx] = m;
            rec(idx + 1, coef * c);
        }
    };
    rec(0, Rational(1));
    return total;
}

}  // namespace jue
