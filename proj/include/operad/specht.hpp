#pragma once

// Two-row tableaux of shape (n, n-1), tabloids in row-2-set coordinates,
// polytabloids, the transfer map onto the trivial-side operad space (a
// coordinate identity), hook-length dimensions, and the dimension identity
// for the decomposition into irreducibles.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "operad/catalan.hpp"
#include "operad/operad_space.hpp"
#include "operad/rational.hpp"
#include "operad/subsets.hpp"

namespace operad::specht {

struct Tableau {
    int n = 0;
    std::vector<int> row1;  // n entries, the first row
    std::vector<int> row2;  // n-1 entries, the second row

    Tableau(int arity, std::vector<int> r1, std::vector<int> r2)
        : n(arity), row1(std::move(r1)), row2(std::move(r2)) {
        if (static_cast<int>(row1.size()) != n || static_cast<int>(row2.size()) != n - 1)
            throw std::invalid_argument("tableau shape must be (n, n-1)");
        std::vector<int> all = row1;
        all.insert(all.end(), row2.begin(), row2.end());
        std::sort(all.begin(), all.end());
        for (int i = 0; i < 2 * n - 1; ++i)
            if (all[i] != i + 1)
                throw std::invalid_argument("tableau entries must be a permutation of {1..2n-1}");
    }

    // Entries x replaced by sigma^{-1}(x); the right action on tableaux.
    Tableau acted(const perm::Permutation& sigma) const {
        perm::Permutation inv = sigma.inverse();
        std::vector<int> r1 = row1, r2 = row2;
        for (int& x : r1) x = inv.apply(x);
        for (int& x : r2) x = inv.apply(x);
        return Tableau(n, std::move(r1), std::move(r2));
    }
};

// Row 1 = (1..n), row 2 = (n+1..2n-1).
inline Tableau standard_tableau(int n) {
    std::vector<int> r1(n), r2(n - 1);
    for (int i = 0; i < n; ++i) r1[i] = i + 1;
    for (int i = 0; i < n - 1; ++i) r2[i] = n + 1 + i;
    return Tableau(n, std::move(r1), std::move(r2));
}

// Rows unordered, so a tabloid is determined by its row-2 set.
class TabloidVector {
public:
    explicit TabloidVector(int n) : n_(n) {}

    int n() const { return n_; }
    const std::map<Subset, Rat>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    void add_term(Subset row2set, const Rat& v) {
        std::sort(row2set.begin(), row2set.end());
        if (static_cast<int>(row2set.size()) != n_ - 1)
            throw std::invalid_argument("tabloid row-2 set must have n-1 elements");
        auto [it, inserted] = c_.try_emplace(std::move(row2set), v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        } else if (it->second == 0) {
            c_.erase(it);
        }
    }

    Rat coefficient(const Subset& s) const {
        auto it = c_.find(s);
        return it == c_.end() ? Rat(0) : it->second;
    }

private:
    int n_;
    std::map<Subset, Rat> c_;
};

// e_T = sum over the column group of T of sgn(sigma) {T sigma}: one term
// per subset of the n-1 two-cell columns, swapping the chosen columns.
inline TabloidVector polytabloid(const Tableau& t) {
    TabloidVector e(t.n);
    const int cols = t.n - 1;
    for (unsigned mask = 0; mask < (1u << cols); ++mask) {
        Subset row2 = t.row2;
        int sgn = 1;
        for (int j = 0; j < cols; ++j) {
            if (mask & (1u << j)) {
                row2[j] = t.row1[j];
                sgn = -sgn;
            }
        }
        e.add_term(std::move(row2), Rat(sgn));
    }
    return e;
}

// Coordinate-identical transfer onto the trivial side of the operad space.
inline space::SubsetVector phi(const TabloidVector& v) {
    space::SubsetVector out(v.n(), space::RepKind::trivial);
    for (const auto& [s, c] : v.coefficients()) out.add_term(s, c);
    return out;
}

// m! / product of hook lengths, for a partition given as weakly
// decreasing positive parts (zero parts allowed and ignored).
inline Int hook_length_dim(std::vector<int> shape) {
    shape.erase(std::remove(shape.begin(), shape.end(), 0), shape.end());
    if (shape.empty()) return 1;
    for (std::size_t i = 0; i + 1 < shape.size(); ++i)
        if (shape[i] < shape[i + 1]) throw std::invalid_argument("not a partition");
    long m = 0;
    for (int part : shape) {
        if (part < 0) throw std::invalid_argument("not a partition");
        m += part;
    }
    Int product = 1;
    for (std::size_t i = 0; i < shape.size(); ++i) {
        for (int j = 0; j < shape[i]; ++j) {
            int arm = shape[i] - j - 1;
            int leg = 0;
            for (std::size_t k = i + 1; k < shape.size(); ++k)
                if (shape[k] > j) ++leg;
            product *= arm + leg + 1;
        }
    }
    return factorial(m) / product;
}

// Rank of the span of all polytabloids.  The module is cyclic, so closing
// the standard polytabloid under the group action reaches the whole span.
inline int specht_dimension(int n) {
    return static_cast<int>(space::span_closure(phi(polytabloid(standard_tableau(n)))).size());
}

// All standard tableaux of shape (n, n-1): rows increase left to right and
// the n-1 two-cell columns increase downward.
inline std::vector<Tableau> standard_tableaux(int n) {
    const int m = 2 * n - 1;
    std::vector<Tableau> out;
    std::vector<int> r1;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(r1.size()) == n) {
            Subset row1set(r1.begin(), r1.end());
            Subset row2 = subset_complement(row1set, m);
            for (int j = 0; j < n - 1; ++j)
                if (r1[j] > row2[j]) return;
            out.emplace_back(n, r1, row2);
            return;
        }
        for (int v = next; v <= m; ++v) {
            r1.push_back(v);
            self(self, v + 1);
            r1.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

// binom(2n-1, n-1) - C_n = sum of hook-length dimensions of the two-row
// shapes (n+i, n-i-1) strictly dominating (n, n-1); the i = n-1 summand is
// the one-row partition (2n-1).
inline bool decomposition_dimension_check(int n) {
    Int lhs = binomial(2 * n - 1, n - 1) - catalan::catalan(n);
    Int rhs = 0;
    for (int i = 1; i <= n; ++i) {
        if (n - i - 1 < 0) continue;
        rhs += hook_length_dim({n + i, n - i - 1});
    }
    return lhs == rhs;
}

}  // namespace operad::specht
