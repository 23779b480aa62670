#pragma once

// Catalan numbers, Shapiro's Catalan triangle E_{n,k}, and its proper
// Riordan array characterization d(t) = h(t) = (c(t)-1)/t.

#include <string>
#include <vector>

#include "operad/rational.hpp"
#include "operad/series.hpp"

namespace operad::catalan {

inline Int catalan(long n) { return binomial(2 * n, n) / Int(n + 1); }

struct CatalanTriangle {
    // rows[n][k] = E_{n,k} for 0 <= k <= n
    std::vector<std::vector<Int>> rows;

    const Int& at(int n, int k) const { return rows[n][k]; }

    std::string to_csv() const {
        std::string s;
        for (const auto& row : rows) {
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (k) s += ',';
                s += row[k].get_str();
            }
            s += '\n';
        }
        return s;
    }
};

// Rows 0..row_count-1 by the recurrence
// E_{n,k} = E_{n-1,k-1} + 2 E_{n-1,k} + E_{n-1,k+1}, out-of-range terms 0.
inline CatalanTriangle triangle(int row_count) {
    if (row_count < 1) throw std::invalid_argument("triangle: row_count >= 1 required");
    CatalanTriangle t;
    t.rows.push_back({Int(1)});
    for (int n = 1; n < row_count; ++n) {
        const auto& prev = t.rows.back();
        auto get = [&](int k) { return (k >= 0 && k < static_cast<int>(prev.size())) ? prev[k] : Int(0); };
        std::vector<Int> row(n + 1);
        for (int k = 0; k <= n; ++k) row[k] = get(k - 1) + 2 * get(k) + get(k + 1);
        t.rows.push_back(std::move(row));
    }
    return t;
}

// Verifies E_{n,k} = [t^n] d(t) (t h(t))^k with d = h = (c(t)-1)/t for all
// n, k <= max_row.  Series order max_row + 1 is the minimum sufficient.
inline bool riordan_check(int max_row) {
    using linalg::TruncatedSeries;
    const int order = max_row + 1;
    CatalanTriangle tri = triangle(max_row + 1);
    TruncatedSeries c = linalg::catalan_series(order + 1);
    TruncatedSeries d = (c - TruncatedSeries::one(order + 1)).shift_down(1);  // order drops to `order`
    TruncatedSeries th = TruncatedSeries::t(order) * d;                       // t*h(t)
    TruncatedSeries col = d;
    for (int k = 0; k <= max_row; ++k) {
        for (int n = 0; n <= max_row; ++n) {
            Int expected = (k <= n) ? tri.at(n, k) : Int(0);
            if (col.coefficient(n) != Rat(expected)) return false;
        }
        col = col * th;
    }
    return true;
}

}  // namespace operad::catalan
