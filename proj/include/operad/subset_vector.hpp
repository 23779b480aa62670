#pragma once

// Exact-rational linear combinations of (n-1)-subsets of {1..2n-1}: the
// coordinate model for both weight-two operad spaces.  The group acts on
// basis elements by e_S -> e_{sigma^{-1}(S)}, with an extra sgn(sigma)
// factor on the signed side; the pairing is the Kronecker form on the
// common subset basis.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "operad/permutation.hpp"
#include "operad/rational.hpp"
#include "operad/subsets.hpp"

namespace operad::space {

enum class RepKind { trivial, sign };

class SubsetVector {
public:
    SubsetVector(int n, RepKind kind) : n_(n), kind_(kind) {}

    int n() const { return n_; }
    int ground_size() const { return 2 * n_ - 1; }
    RepKind kind() const { return kind_; }
    const std::map<Subset, Rat>& coefficients() const { return c_; }
    std::size_t term_count() const { return c_.size(); }
    bool is_zero() const { return c_.empty(); }

    Rat coefficient(const Subset& s) const {
        auto it = c_.find(s);
        return it == c_.end() ? Rat(0) : it->second;
    }

    void add_term(Subset s, const Rat& v) {
        if (static_cast<int>(s.size()) != n_ - 1)
            throw std::invalid_argument("subset size must be n-1");
        auto [it, inserted] = c_.try_emplace(std::move(s), v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        } else if (it->second == 0) {
            c_.erase(it);
        }
    }

    friend SubsetVector operator+(const SubsetVector& a, const SubsetVector& b) {
        SubsetVector r = a;
        for (const auto& [s, v] : b.c_) r.add_term(s, v);
        return r;
    }
    friend SubsetVector operator*(const Rat& t, const SubsetVector& a) {
        SubsetVector r(a.n_, a.kind_);
        if (t != 0)
            for (const auto& [s, v] : a.c_) r.c_.emplace(s, t * v);
        return r;
    }

    friend bool operator==(const SubsetVector& a, const SubsetVector& b) {
        return a.n_ == b.n_ && a.kind_ == b.kind_ && a.c_ == b.c_;
    }

    std::string to_string(const std::string& letter) const {
        if (c_.empty()) return "0";
        std::string out;
        for (const auto& [s, v] : c_) {
            if (!out.empty()) out += (v > 0) ? " + " : " - ";
            else if (v < 0) out += "-";
            Rat a = abs(v);
            if (a != 1) out += a.get_str() + "*";
            out += letter + "{";
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (i) out += ",";
                out += std::to_string(s[i]);
            }
            out += "}";
        }
        return out;
    }

private:
    int n_;
    RepKind kind_;
    std::map<Subset, Rat> c_;  // no zero coefficients stored
};

inline SubsetVector act(const SubsetVector& v, const perm::Permutation& sigma) {
    if (sigma.size() != v.ground_size())
        throw std::invalid_argument("act: permutation ground set must be 2n-1");
    const Rat factor = (v.kind() == RepKind::sign) ? Rat(perm::sign(sigma)) : Rat(1);
    perm::Permutation inv = sigma.inverse();
    SubsetVector out(v.n(), v.kind());
    for (const auto& [s, c] : v.coefficients()) {
        Subset img;
        img.reserve(s.size());
        for (int a : s) img.push_back(inv.apply(a));
        std::sort(img.begin(), img.end());
        out.add_term(std::move(img), factor * c);
    }
    return out;
}

inline Rat pairing(const SubsetVector& u, const SubsetVector& v) {
    if (u.n() != v.n()) throw std::invalid_argument("pairing: arity mismatch");
    const auto& small = (u.term_count() <= v.term_count()) ? u : v;
    const auto& large = (u.term_count() <= v.term_count()) ? v : u;
    Rat acc = 0;
    for (const auto& [s, c] : small.coefficients()) acc += c * large.coefficient(s);
    return acc;
}

}  // namespace operad::space
