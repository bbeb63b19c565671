#include "jue/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace jue {

namespace {

Int dim_by_hooks(const Partition& lambda) {
    Int d = factorial(static_cast<unsigned>(lambda.weight()));
    for (auto [i, j] : lambda.boxes()) d /= lambda.hook_length(i, j);
    return d;
}

// dim/|lambda|! from the difference-product formula at N = l(lambda).
Rational dim_ratio_formula(const Partition& lambda) {
    int n = lambda.length();
    if (n == 0) return Rational(1);
    Int num = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            num *= Int(lambda.part(i - 1) - lambda.part(j - 1) + j - i);
    Int den = 1;
    for (int k = 1; k <= n; ++k)
        den *= factorial(static_cast<unsigned>(lambda.part(k - 1) - k + n));
    return make_rational(num, den);
}

}  // namespace

Int dim_lambda(const Partition& lambda) {
    Int hooks = dim_by_hooks(lambda);
    Rational ratio = dim_ratio_formula(lambda) * Rational(factorial(static_cast<unsigned>(lambda.weight())));
    if (!is_integer(ratio) || ratio.get_num() != hooks)
        throw std::logic_error("dimension formulas disagree");
    return hooks;
}

Rational dim_over_factorial(const Partition& lambda) {
    return make_rational(dim_lambda(lambda), factorial(static_cast<unsigned>(lambda.weight())));
}

namespace {

// Beta-set representation: distinct values lambda_i + l - i. Removing a
// border strip of length r is moving some b to b - r (must stay distinct);
// the strip height is the number of set elements strictly between them.
Int mn_recursive(std::vector<int> lam, std::vector<int> mu,
                 std::map<std::pair<std::vector<int>, std::vector<int>>, Int>& memo) {
    if (mu.empty()) return 1;
    auto key = std::make_pair(lam, mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int r = mu.front();
    std::vector<int> mu_rest(mu.begin() + 1, mu.end());
    int l = static_cast<int>(lam.size());
    std::vector<int> beta(l);
    for (int i = 0; i < l; ++i) beta[i] = lam[i] + l - 1 - i;  // strictly decreasing

    Int total = 0;
    for (int i = 0; i < l; ++i) {
        int nb = beta[i] - r;
        if (nb < 0) continue;
        bool clash = false;
        int height = 0;
        for (int j = 0; j < l; ++j) {
            if (j == i) continue;
            if (beta[j] == nb) clash = true;
            if (beta[j] < beta[i] && beta[j] > nb) ++height;
        }
        if (clash) continue;
        std::vector<int> nbeta = beta;
        nbeta[i] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        std::vector<int> nlam;
        for (int j = 0; j < l; ++j) {
            int part = nbeta[j] - (l - 1 - j);
            if (part > 0) nlam.push_back(part);
        }
        Int sub = mn_recursive(nlam, mu_rest, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

Int character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("character: weight mismatch");
    static std::map<std::pair<std::vector<int>, std::vector<int>>, Int> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    return mn_recursive(lambda.parts(), mu.parts(), memo);
}

}  // namespace jue
