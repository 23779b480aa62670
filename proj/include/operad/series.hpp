#pragma once

// Truncated power series with exact rational coefficients, all arithmetic
// closed at a fixed order K (coefficients of t^0..t^K).

#include <stdexcept>
#include <utility>
#include <vector>

#include "operad/rational.hpp"

namespace operad::linalg {

class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : c_(order + 1, Rat(0)) {}
    TruncatedSeries(int order, std::vector<Rat> low) : c_(order + 1, Rat(0)) {
        for (std::size_t i = 0; i < low.size() && i < c_.size(); ++i) c_[i] = std::move(low[i]);
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& coefficient(int k) const { return c_[k]; }
    Rat& coefficient(int k) { return c_[k]; }

    static TruncatedSeries one(int order) { return TruncatedSeries(order, {Rat(1)}); }
    static TruncatedSeries t(int order) { return TruncatedSeries(order, {Rat(0), Rat(1)}); }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(check_same(a, b));
        for (int k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(check_same(a, b));
        for (int k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(check_same(a, b));
        for (int i = 0; i <= a.order(); ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; i + j <= b.order(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    // a(b(t)); requires b(0) = 0.
    friend TruncatedSeries compose(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_same(a, b);
        if (b.c_[0] != 0)
            throw std::invalid_argument("series composition needs zero constant term inside");
        TruncatedSeries r(a.order()), pw = one(a.order());
        for (int k = 0; k <= a.order(); ++k) {
            if (a.c_[k] != 0)
                for (int j = 0; j <= r.order(); ++j) r.c_[j] += a.c_[k] * pw.c_[j];
            if (k < a.order()) pw = pw * b;
        }
        return r;
    }

    // a / b; requires b(0) != 0.
    friend TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_same(a, b);
        if (b.c_[0] == 0) throw std::invalid_argument("division by series with zero constant term");
        TruncatedSeries q(a.order());
        for (int k = 0; k <= a.order(); ++k) {
            Rat acc = a.c_[k];
            for (int j = 0; j < k; ++j) acc -= q.c_[j] * b.c_[k - j];
            q.c_[k] = acc / b.c_[0];
        }
        return q;
    }

    // Coefficients of a / t^k; the k lowest coefficients must vanish and
    // the top k of the result are unknown, so the order drops by k.
    TruncatedSeries shift_down(int k) const {
        for (int i = 0; i < k && i <= order(); ++i)
            if (c_[i] != 0) throw std::invalid_argument("series not divisible by t^k");
        TruncatedSeries r(order() - k);
        for (int j = 0; j <= r.order(); ++j) r.c_[j] = c_[j + k];
        return r;
    }

private:
    static int check_same(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
        return a.order();
    }
    std::vector<Rat> c_;
};

// Catalan generating function c(t) = sum C_k t^k, built from the
// convolution recurrence C_{k+1} = sum_i C_i C_{k-i}.
inline TruncatedSeries catalan_series(int order) {
    TruncatedSeries c(order);
    c.coefficient(0) = 1;
    for (int k = 0; k < order; ++k) {
        Rat acc = 0;
        for (int i = 0; i <= k; ++i) acc += c.coefficient(i) * c.coefficient(k - i);
        c.coefficient(k + 1) = acc;
    }
    return c;
}

}  // namespace operad::linalg
