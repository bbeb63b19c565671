#pragma once

#include <vector>

#include "jue/partition.hpp"

namespace jue {

// Permutation of {1..n}, stored 0-based: images[i] = pi(i+1) - 1.
class Permutation {
public:
    Permutation() = default;
    static Permutation identity(int n);
    // 1-based images, e.g. [2,3,1] for the 3-cycle (1 2 3).
    static Permutation from_images(const std::vector<int>& images1);
    static Permutation transposition(int n, int a, int b);  // 0-based a < b

    int size() const { return static_cast<int>(img_.size()); }
    int apply(int i) const { return img_[i]; }  // 0-based
    const std::vector<int>& images() const { return img_; }

    // (p * q)(i) = p(q(i))
    friend Permutation operator*(const Permutation& p, const Permutation& q);

    Partition cycle_type() const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

Partition cycle_type(const Permutation& p);

// All permutations of cycle type lambda in S_n (|lambda| must equal n).
std::vector<Permutation> conjugacy_class(const Partition& lambda, int n);

// Whether the subgroup generated by `perms` acts transitively on {1..n}.
bool is_transitive(const std::vector<Permutation>& perms, int n);

}  // namespace jue
