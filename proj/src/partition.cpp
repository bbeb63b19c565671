#include "jue/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "jue/errors.hpp"

namespace jue {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::from_string(const std::string& s) {
    std::vector<int> parts;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad partition part: " + tok);
        }
        if (pos != tok.size() || v <= 0) throw ParseError("bad partition part: " + tok);
        parts.push_back(v);
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out;
}

int Partition::multiplicity(int v) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

Int Partition::z() const {
    Int z = 1;
    int i = 0;
    while (i < length()) {
        int j = i;
        while (j < length() && parts_[j] == parts_[i]) ++j;
        int m = j - i;
        for (int t = 0; t < m; ++t) z *= parts_[i];
        z *= factorial(static_cast<unsigned>(m));
        i = j;
    }
    return z;
}

std::vector<std::pair<int, int>> Partition::boxes() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(weight_);
    for (int i = 0; i < length(); ++i)
        for (int j = 1; j <= parts_[i]; ++j) out.emplace_back(i + 1, j);
    return out;
}

int Partition::hook_length(int i, int j) const {
    int arm = parts_[i - 1] - j;
    int leg = 0;
    for (int r = i; r < length(); ++r)
        if (parts_[r] >= j) ++leg;
    return arm + leg + 1;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxp) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<SetPartition> set_partitions(int l) {
    if (l < 1) throw std::invalid_argument("set_partitions needs l >= 1");
    std::vector<SetPartition> out;
    SetPartition cur;
    std::function<void(int)> rec = [&](int e) {
        if (e == l) {
            out.push_back(cur);
            return;
        }
        for (auto& b : cur.blocks) {
            b.push_back(e);
            rec(e + 1);
            b.pop_back();
        }
        cur.blocks.push_back({e});
        rec(e + 1);
        cur.blocks.pop_back();
    };
    rec(0);
    return out;
}

}  // namespace jue
