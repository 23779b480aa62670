#pragma once

// Permutations of {1..m} in one-line notation (1-based, matching the
// indexing used everywhere else in the library), the distinguished cycles
// lambda = (1 2 ... 2n-1) and omega = (1 2 ... n), and the column group of
// the two-row tableau of shape (n, n-1).

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace operad::perm {

class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (int v : images_) {
            if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
                throw std::invalid_argument("not a bijection of {1..m}");
            seen[v - 1] = true;
        }
    }

    static Permutation identity(int m) {
        std::vector<int> im(m);
        std::iota(im.begin(), im.end(), 1);
        return Permutation(std::move(im));
    }

    // Single cycle (c1 c2 ... ck) on ground set {1..m}.
    static Permutation cycle(int m, const std::vector<int>& c) {
        std::vector<int> im(m);
        std::iota(im.begin(), im.end(), 1);
        for (std::size_t i = 0; i < c.size(); ++i)
            im[c[i] - 1] = c[(i + 1) % c.size()];
        return Permutation(std::move(im));
    }

    static Permutation transposition(int m, int a, int b) {
        return cycle(m, {a, b});
    }

    int size() const { return static_cast<int>(images_.size()); }
    int apply(int i) const { return images_[i - 1]; }
    int operator()(int i) const { return images_[i - 1]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const {
        for (int i = 1; i <= size(); ++i)
            if (apply(i) != i) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> im(images_.size());
        for (int i = 1; i <= size(); ++i) im[apply(i) - 1] = i;
        return Permutation(std::move(im));
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images_ == b.images_;
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.images_ < b.images_;
    }

    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(images_[i]);
        }
        return s + "]";
    }

private:
    std::vector<int> images_;
};

// (p*q)(i) = p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("compose: ground-set size mismatch");
    std::vector<int> im(p.size());
    for (int i = 1; i <= p.size(); ++i) im[i - 1] = p.apply(q.apply(i));
    return Permutation(std::move(im));
}

// Parity via cycle decomposition, O(m).
inline int sign(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    int transpositions = 0;
    for (int i = 1; i <= p.size(); ++i) {
        if (seen[i - 1]) continue;
        int len = 0;
        for (int j = i; !seen[j - 1]; j = p.apply(j)) {
            seen[j - 1] = true;
            ++len;
        }
        transpositions += len - 1;
    }
    return (transpositions % 2 == 0) ? 1 : -1;
}

// lambda = (1 2 ... 2n-1) and omega = (1 2 ... n), both in Sigma_{2n-1}.
inline std::pair<Permutation, Permutation> standard_cycles(int n) {
    if (n < 2) throw std::invalid_argument("standard_cycles: n >= 2 required");
    const int m = 2 * n - 1;
    std::vector<int> full(m), head(n);
    std::iota(full.begin(), full.end(), 1);
    std::iota(head.begin(), head.end(), 1);
    return {Permutation::cycle(m, full), Permutation::cycle(m, head)};
}

inline Permutation power(const Permutation& p, int k) {
    Permutation r = Permutation::identity(p.size());
    for (int i = 0; i < k; ++i) r = compose(r, p);
    return r;
}

// All 2^{n-1} products of subsets of {(i, n+i) : 1 <= i <= n-1}, each with
// its sign (-1)^{#transpositions}.
struct ColumnGroup {
    int n = 0;
    std::vector<std::pair<Permutation, int>> elements;
};

inline ColumnGroup column_group(int n) {
    if (n < 2) throw std::invalid_argument("column_group: n >= 2 required");
    const int m = 2 * n - 1;
    ColumnGroup g;
    g.n = n;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        Permutation p = Permutation::identity(m);
        int s = 1;
        for (int i = 1; i <= n - 1; ++i) {
            if (mask & (1u << (i - 1))) {
                p = compose(p, Permutation::transposition(m, i, n + i));
                s = -s;
            }
        }
        g.elements.emplace_back(std::move(p), s);
    }
    return g;
}

// An even permutation sigma with sigma^{-1}({n+1..2n-1}) = S.  Parity is
// fixed by an internal swap inside one part of the coset, so an even
// representative always exists.
inline Permutation even_representative(std::vector<int> S, int n) {
    const int m = 2 * n - 1;
    std::sort(S.begin(), S.end());
    if (static_cast<int>(S.size()) != n - 1)
        throw std::invalid_argument("even_representative: |S| must be n-1");
    std::vector<bool> in(m + 1, false);
    for (int v : S) {
        if (v < 1 || v > m || in[v]) throw std::invalid_argument("even_representative: malformed subset");
        in[v] = true;
    }
    std::vector<int> comp;
    for (int v = 1; v <= m; ++v)
        if (!in[v]) comp.push_back(v);
    // sigma sends complement -> {1..n} and S -> {n+1..2n-1}, order-preserving
    std::vector<int> im(m);
    for (int i = 0; i < n; ++i) im[comp[i] - 1] = i + 1;
    for (int i = 0; i < n - 1; ++i) im[S[i] - 1] = n + 1 + i;
    Permutation sigma{im};
    if (sign(sigma) == 1) return sigma;
    if (n >= 3)
        std::swap(im[S[0] - 1], im[S[1] - 1]);
    else
        std::swap(im[comp[0] - 1], im[comp[1] - 1]);
    return Permutation{im};
}

inline Permutation random_permutation(int m, std::mt19937_64& rng) {
    std::vector<int> im(m);
    std::iota(im.begin(), im.end(), 1);
    for (int i = m - 1; i > 0; --i) {
        int j = static_cast<int>(rng() % static_cast<unsigned long>(i + 1));
        std::swap(im[i], im[j]);
    }
    return Permutation(std::move(im));
}

}  // namespace operad::perm
