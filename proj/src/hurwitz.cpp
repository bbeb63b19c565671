#include "jue/hurwitz.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "jue/characters.hpp"
#include "jue/errors.hpp"

namespace jue {

namespace {

struct Transposition {
    int a, b;  // 0-based, a < b
};

std::vector<Transposition> all_transpositions(int n) {
    std::vector<Transposition> out;
    for (int b = 1; b < n; ++b)
        for (int a = 0; a < b; ++a) out.push_back({a, b});
    return out;
}

// DFS over monotone transposition sequences extending prod, counting
// sequences of exact length r whose final product has type lambda
// (and, if connected, whose full tuple generates a transitive subgroup).
struct Enumerator {
    int n;
    int r;
    const Partition& lambda;
    bool connected;
    bool strict;
    const std::vector<Transposition>& trs;
    const Permutation& pi1;
    const Permutation& pi2;
    std::vector<Transposition> taus;
    Int count = 0;

    void dfs(const Permutation& prod, int depth, int min_b, int min_a_if_equal) {
        if (depth == r) {
            if (prod.cycle_type() != lambda) return;
            if (connected) {
                std::vector<Permutation> gens{pi1, pi2};
                for (const auto& t : taus)
                    gens.push_back(Permutation::transposition(n, t.a, t.b));
                if (!is_transitive(gens, n)) return;
            }
            ++count;
            return;
        }
        for (const auto& t : trs) {
            if (t.b < min_b) continue;
            if (strict && t.b == min_b) continue;
            taus.push_back(t);
            dfs(prod * Permutation::transposition(n, t.a, t.b), depth + 1, t.b, 0);
            taus.pop_back();
        }
    }
};

void check_guards(int n, int r, const EnumGuards& g) {
    if (n > g.max_weight)
        throw GuardError("weight " + std::to_string(n) + " exceeds guard max_weight=" +
                         std::to_string(g.max_weight));
    if (r > g.max_r)
        throw GuardError("r=" + std::to_string(r) + " exceeds guard max_r=" +
                         std::to_string(g.max_r));
}

Int count_for_pair(const Permutation& pi1, const Permutation& pi2, int r,
                   const Partition& lambda, bool connected, bool strict,
                   const std::vector<Transposition>& trs) {
    Enumerator e{pi1.size(), r, lambda, connected, strict, trs, pi1, pi2, {}, 0};
    e.dfs(pi1 * pi2, 0, 0, 0);
    return e.count;
}

}  // namespace

Int count_hurwitz(const HurwitzQuery& q, const EnumGuards& guards) {
    int n = q.lambda.weight();
    if (q.mu.weight() != n || q.nu.weight() != n)
        throw std::invalid_argument("count_hurwitz: weight mismatch");
    int r = hurwitz_r(q.lambda, q.mu, q.nu, q.genus);
    if (r < 0) return 0;
    check_guards(n, r, guards);
    if (n == 0) return 1;  // empty cover: single empty tuple

    auto trs = all_transpositions(n);
    auto c_mu = conjugacy_class(q.mu, n);
    auto c_nu = conjugacy_class(q.nu, n);

    int threads = std::max(1, guards.threads);
    if (threads == 1 || c_mu.size() == 1) {
        Int total = 0;
        for (const auto& p1 : c_mu)
            for (const auto& p2 : c_nu)
                total += count_for_pair(p1, p2, r, q.lambda, q.connected, q.strict_monotone, trs);
        return total;
    }
    // partition work across pi1 values; integer merge is order-independent
    std::vector<std::future<Int>> futs;
    size_t chunk = (c_mu.size() + threads - 1) / threads;
    for (size_t start = 0; start < c_mu.size(); start += chunk) {
        size_t end = std::min(c_mu.size(), start + chunk);
        futs.push_back(std::async(std::launch::async, [&, start, end]() {
            Int local = 0;
            for (size_t i = start; i < end; ++i)
                for (const auto& p2 : c_nu)
                    local += count_for_pair(c_mu[i], p2, r, q.lambda, q.connected,
                                            q.strict_monotone, trs);
            return local;
        }));
    }
    Int total = 0;
    for (auto& f : futs) total += f.get();
    return total;
}

std::map<std::pair<Partition, Partition>, Int> hurwitz_table(const Partition& lambda, int genus,
                                                             bool connected,
                                                             const EnumGuards& guards) {
    std::map<std::pair<Partition, Partition>, Int> out;
    auto parts = partitions_of(lambda.weight());
    for (const auto& mu : parts)
        for (const auto& nu : parts) {
            HurwitzQuery q{lambda, mu, nu, genus, connected};
            out.emplace(std::make_pair(mu, nu), count_hurwitz(q, guards));
        }
    return out;
}

SparsePoly content_product_series(const WeightSpec& w, const Partition& lambda, int d_max) {
    // per box: (1 + eps c)(1 + gamma eps c) * sum_k (delta eps c)^k
    SparsePoly acc = SparsePoly::constant(VarSet::EPS, 1);
    for (auto [i, j] : lambda.boxes()) {
        Rational c(j - i);
        SparsePoly factor(VarSet::EPS);
        for (int k = 0; k <= d_max; ++k) {
            Rational dk = 1;
            for (int t = 0; t < k; ++t) dk *= w.delta * c;
            factor.add_term(Expo{static_cast<uint32_t>(k), 0, 0}, dk);
        }
        SparsePoly lin1 = SparsePoly::constant(VarSet::EPS, 1);
        lin1.add_term(Expo{1, 0, 0}, c);
        SparsePoly lin2 = SparsePoly::constant(VarSet::EPS, 1);
        lin2.add_term(Expo{1, 0, 0}, w.gamma * c);
        acc = acc * lin1 * lin2 * factor;
        // clip beyond d_max
        SparsePoly clipped(VarSet::EPS);
        for (const auto& [e, v] : acc.terms())
            if (e[0] <= static_cast<unsigned>(d_max)) clipped.add_term(e, v);
        acc = clipped;
    }
    return acc;
}

Rational weighted_hurwitz_char(const WeightSpec& w, const Partition& mu, int d) {
    if (d < 0) return Rational(0);
    Rational total = 0;
    for (const auto& lambda : partitions_of(mu.weight())) {
        SparsePoly r = content_product_series(w, lambda, d);
        Rational coeff = 0;
        auto it = r.terms().find(Expo{static_cast<uint32_t>(d), 0, 0});
        if (it != r.terms().end()) coeff = it->second;
        if (coeff == 0) continue;
        total += dim_over_factorial(lambda) * coeff * Rational(character(lambda, mu));
    }
    return total / Rational(mu.z());
}

Rational weighted_hurwitz_sum(const WeightSpec& w, const Partition& lambda, int genus,
                              const EnumGuards& guards) {
    int n = lambda.weight();
    Rational total = 0;
    auto parts = partitions_of(n);
    for (const auto& mu : parts) {
        for (const auto& nu : parts) {
            int r = hurwitz_r(lambda, mu, nu, genus);
            if (r < 0) continue;
            HurwitzQuery q{lambda, mu, nu, genus, false};
            Int h = count_hurwitz(q, guards);
            if (h == 0) continue;
            Rational term(h);
            for (int t = 0; t < n - nu.length(); ++t) term *= w.gamma;
            for (int t = 0; t < r; ++t) term *= w.delta;
            total += term;
        }
    }
    return total / Rational(factorial(static_cast<unsigned>(n)));
}

}  // namespace jue
