#pragma once

// Integer-coefficient univariate polynomials, ascending degree order.
// Just enough arithmetic for characteristic polynomials: ring ops, P(-x),
// Taylor shifts P(x+c), exact division by powers of x and by linear
// factors, and extraction of integer root multiplicities.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "operad/rational.hpp"

namespace operad::linalg {

struct IncompleteFactorization : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<Int> cs) : coef_(cs) { trim(); }
    explicit IntPolynomial(std::vector<Int> cs) : coef_(std::move(cs)) { trim(); }

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial constant(Int c) { return IntPolynomial({std::move(c)}); }
    // x - r
    static IntPolynomial linear_root(const Int& r) { return IntPolynomial({-r, 1}); }

    bool is_zero() const { return coef_.empty(); }
    int degree() const { return static_cast<int>(coef_.size()) - 1; }  // -1 for zero
    const std::vector<Int>& coefficients() const { return coef_; }
    Int coefficient(int k) const {
        return (k >= 0 && k < static_cast<int>(coef_.size())) ? coef_[k] : Int(0);
    }
    Int leading() const { return is_zero() ? Int(0) : coef_.back(); }

    Int evaluate(const Int& x) const {
        Int acc = 0;
        for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coef_ == b.coef_;
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<Int> c(std::max(a.coef_.size(), b.coef_.size()), Int(0));
        for (std::size_t i = 0; i < a.coef_.size(); ++i) c[i] += a.coef_[i];
        for (std::size_t i = 0; i < b.coef_.size(); ++i) c[i] += b.coef_[i];
        return IntPolynomial(std::move(c));
    }
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<Int> c(std::max(a.coef_.size(), b.coef_.size()), Int(0));
        for (std::size_t i = 0; i < a.coef_.size(); ++i) c[i] += a.coef_[i];
        for (std::size_t i = 0; i < b.coef_.size(); ++i) c[i] -= b.coef_[i];
        return IntPolynomial(std::move(c));
    }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Int> c(a.coef_.size() + b.coef_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.coef_.size(); ++i)
            for (std::size_t j = 0; j < b.coef_.size(); ++j) c[i + j] += a.coef_[i] * b.coef_[j];
        return IntPolynomial(std::move(c));
    }
    friend IntPolynomial operator*(const Int& s, const IntPolynomial& a) {
        std::vector<Int> c = a.coef_;
        for (auto& v : c) v *= s;
        return IntPolynomial(std::move(c));
    }
    IntPolynomial operator-() const { return Int(-1) * (*this); }

    // P(-x)
    IntPolynomial negate_variable() const {
        std::vector<Int> c = coef_;
        for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
        return IntPolynomial(std::move(c));
    }

    // P(x + c) by Horner-style synthetic Taylor shift.
    IntPolynomial shift_variable(const Int& c) const {
        std::vector<Int> a = coef_;
        const int d = degree();
        for (int i = 0; i < d; ++i)
            for (int j = d - 1; j >= i; --j) a[j] += c * a[j + 1];
        return IntPolynomial(std::move(a));
    }

    // Exact quotient P / x^k; NonDivisible if any of the k lowest
    // coefficients is nonzero.
    IntPolynomial divide_by_power_of_x(int k) const {
        if (k == 0) return *this;
        if (degree() < k)
            throw NonDivisible("polynomial degree below requested power of x");
        for (int i = 0; i < k; ++i)
            if (coef_[i] != 0) throw NonDivisible("x^" + std::to_string(k) + " does not divide polynomial");
        return IntPolynomial(std::vector<Int>(coef_.begin() + k, coef_.end()));
    }

    // Synthetic division by (x - r); second member is the remainder P(r).
    std::pair<IntPolynomial, Int> divide_by_linear(const Int& r) const {
        if (is_zero()) return {IntPolynomial(), Int(0)};
        std::vector<Int> q(coef_.size() - 1, Int(0));
        Int carry = coef_.back();
        for (int i = degree() - 1; i >= 0; --i) {
            q[i] = carry;
            carry = coef_[i] + r * carry;
        }
        return {IntPolynomial(std::move(q)), carry};
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string s;
        for (int k = degree(); k >= 0; --k) {
            const Int& c = coef_[k];
            if (c == 0) continue;
            if (!s.empty()) s += (c > 0) ? " + " : " - ";
            else if (c < 0) s += "-";
            Int a = abs(c);
            bool show_coef = (a != 1) || k == 0;
            if (show_coef) s += a.get_str();
            if (k > 0) {
                if (show_coef) s += "*";
                s += var;
                if (k > 1) s += "^" + std::to_string(k);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
    }
    std::vector<Int> coef_;  // coef_[k] = coefficient of x^k
};

// For each candidate root, the exact multiplicity of (x - r) in P.  Errors
// with IncompleteFactorization when the extracted linear factors do not
// exhaust P (residual degree > 0).
inline std::vector<std::pair<Int, int>> integer_root_multiplicities(
    const IntPolynomial& p, const std::vector<Int>& candidates) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no factorization");
    IntPolynomial rest = p;
    std::vector<std::pair<Int, int>> out;
    for (const Int& r : candidates) {
        int mult = 0;
        for (;;) {
            auto [q, rem] = rest.divide_by_linear(r);
            if (rem != 0) break;
            rest = std::move(q);
            ++mult;
        }
        out.emplace_back(r, mult);
    }
    if (rest.degree() > 0)
        throw IncompleteFactorization("residual of degree " + std::to_string(rest.degree()) +
                                      " after removing candidate roots");
    return out;
}

}  // namespace operad::linalg
