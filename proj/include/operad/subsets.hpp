#pragma once

// The common index set Lambda(n): all (n-1)-element subsets of {1..2n-1},
// enumerated in ascending lexicographic order of their sorted element
// lists.  Shared by the operad space, the tabloid module, and the odd
// graph, which all use it as their coordinate basis.

#include <map>
#include <stdexcept>
#include <vector>

#include "operad/permutation.hpp"
#include "operad/rational.hpp"

namespace operad {

using Subset = std::vector<int>;  // sorted ascending, distinct elements

class SubsetTable {
public:
    explicit SubsetTable(int n) : n_(n) {
        if (n < 2) throw std::invalid_argument("SubsetTable: n >= 2 required");
        const int m = 2 * n - 1, k = n - 1;
        Subset cur(k);
        for (int i = 0; i < k; ++i) cur[i] = i + 1;
        for (;;) {
            index_[cur] = static_cast<int>(subsets_.size());
            subsets_.push_back(cur);
            int i = k - 1;
            while (i >= 0 && cur[i] == m - k + 1 + i) --i;
            if (i < 0) break;
            ++cur[i];
            for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
        }
    }

    int n() const { return n_; }
    int ground_size() const { return 2 * n_ - 1; }
    int size() const { return static_cast<int>(subsets_.size()); }
    const Subset& at(int i) const { return subsets_[i]; }
    const std::vector<Subset>& all() const { return subsets_; }

    int index_of(const Subset& s) const {
        auto it = index_.find(s);
        if (it == index_.end()) throw std::invalid_argument("subset not in table");
        return it->second;
    }
    bool valid(const Subset& s) const { return index_.count(s) != 0; }

private:
    int n_;
    std::vector<Subset> subsets_;
    std::map<Subset, int> index_;
};

inline bool subsets_disjoint(const Subset& a, const Subset& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        (a[i] < b[j]) ? ++i : ++j;
    }
    return true;
}

inline int intersection_size(const Subset& a, const Subset& b) {
    std::size_t i = 0, j = 0;
    int c = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) { ++c; ++i; ++j; }
        else (a[i] < b[j]) ? ++i : ++j;
    }
    return c;
}

inline Subset subset_complement(const Subset& s, int ground) {
    Subset out;
    std::size_t i = 0;
    for (int v = 1; v <= ground; ++v) {
        if (i < s.size() && s[i] == v) ++i;
        else out.push_back(v);
    }
    return out;
}

// sigma^{-1}(S), sorted.
inline Subset subset_preimage(const Subset& s, const perm::Permutation& sigma) {
    perm::Permutation inv = sigma.inverse();
    Subset out;
    out.reserve(s.size());
    for (int v : s) out.push_back(inv.apply(v));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace operad
