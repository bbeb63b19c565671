#include "jue/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jue {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.img_.resize(n);
    std::iota(p.img_.begin(), p.img_.end(), 0);
    return p;
}

Permutation Permutation::from_images(const std::vector<int>& images1) {
    Permutation p;
    p.img_.reserve(images1.size());
    std::vector<bool> seen(images1.size(), false);
    for (int v : images1) {
        if (v < 1 || v > static_cast<int>(images1.size()) || seen[v - 1])
            throw std::invalid_argument("not a permutation");
        seen[v - 1] = true;
        p.img_.push_back(v - 1);
    }
    return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
    Permutation p = identity(n);
    std::swap(p.img_[a], p.img_[b]);
    return p;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw std::invalid_argument("size mismatch");
    Permutation r;
    r.img_.resize(p.size());
    for (int i = 0; i < p.size(); ++i) r.img_[i] = p.img_[q.img_[i]];
    return r;
}

Partition Permutation::cycle_type() const {
    int n = size();
    std::vector<bool> seen(n, false);
    std::vector<int> lens;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = img_[j];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(lens);
}

Partition cycle_type(const Permutation& p) { return p.cycle_type(); }

std::vector<Permutation> conjugacy_class(const Partition& lambda, int n) {
    if (lambda.weight() != n)
        throw std::invalid_argument("conjugacy_class: weight mismatch");
    std::vector<Permutation> out;
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    do {
        Permutation p = Permutation::from_images(img);
        if (p.cycle_type() == lambda) out.push_back(p);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

bool is_transitive(const std::vector<Permutation>& perms, int n) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& p : perms) {
        if (p.size() != n) throw std::invalid_argument("permutation size mismatch");
        for (int i = 0; i < n; ++i) {
            int a = find(i), b = find(p.apply(i));
            if (a != b) parent[a] = b;
        }
    }
    int root = find(0);
    for (int i = 1; i < n; ++i)
        if (find(i) != root) return false;
    return true;
}

}  // namespace jue
