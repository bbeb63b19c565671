#pragma once

#include <string>
#include <vector>

#include "jue/rational.hpp"

namespace jue {

// Integer partition: weakly decreasing positive parts. The empty partition
// (weight 0) is valid.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition from_string(const std::string& s);  // "3,1,1"; "" is empty
    std::string to_string() const;

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[i]; }

    // multiplicity of part value v
    int multiplicity(int v) const;

    // z_lambda = prod_i i^{m_i} m_i!
    Int z() const;

    // Young diagram boxes (i, j), 1-based, row-major.
    std::vector<std::pair<int, int>> boxes() const;

    // hook length of box (i, j) (1-based)
    int hook_length(int i, int j) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// All partitions of n, ordered decreasing-lex (n first, 1^n last).
std::vector<Partition> partitions_of(int n);

// Set partition of {1..l} into disjoint nonempty blocks covering everything.
struct SetPartition {
    std::vector<std::vector<int>> blocks;  // 0-based element labels
    int block_count() const { return static_cast<int>(blocks.size()); }
};

// All set partitions of {1..l}; count is Bell(l).
std::vector<SetPartition> set_partitions(int l);

}  // namespace jue
