#pragma once

// Sparse multivariate polynomials with exact rational coefficients, and
// determinants of small polynomial matrices by Leibniz expansion.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "operad/rational.hpp"

namespace operad::algebras {

class MultiPoly {
public:
    explicit MultiPoly(int vars) : vars_(vars) {}

    static MultiPoly constant(int vars, const Rat& c) {
        MultiPoly p(vars);
        p.add_term(std::vector<int>(vars, 0), c);
        return p;
    }
    // The variable x_i, 1-based.
    static MultiPoly variable(int vars, int i) {
        MultiPoly p(vars);
        std::vector<int> e(vars, 0);
        e[i - 1] = 1;
        p.add_term(std::move(e), 1);
        return p;
    }

    int vars() const { return vars_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<std::vector<int>, Rat>& terms() const { return t_; }

    void add_term(std::vector<int> exps, const Rat& c) {
        if (static_cast<int>(exps.size()) != vars_)
            throw std::invalid_argument("exponent tuple length mismatch");
        for (int e : exps)
            if (e < 0) throw std::invalid_argument("negative exponent");
        auto [it, inserted] = t_.try_emplace(std::move(exps), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        } else if (it->second == 0) {
            t_.erase(it);
        }
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, c] : b.t_) r.add_term(e, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r = a;
        for (const auto& [e, c] : b.t_) r.add_term(e, -c);
        return r;
    }
    friend MultiPoly operator*(const Rat& s, const MultiPoly& a) {
        MultiPoly r(a.vars_);
        if (s != 0)
            for (const auto& [e, c] : a.t_) r.t_.emplace(e, s * c);
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        if (a.vars_ != b.vars_) throw std::invalid_argument("variable count mismatch");
        MultiPoly r(a.vars_);
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                std::vector<int> e(a.vars_);
                for (int i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.t_ == b.t_;
    }

    // d/dx_i, 1-based.
    MultiPoly partial(int i) const {
        MultiPoly r(vars_);
        for (const auto& [e, c] : t_) {
            if (e[i - 1] == 0) continue;
            std::vector<int> d = e;
            --d[i - 1];
            r.add_term(std::move(d), c * e[i - 1]);
        }
        return r;
    }

    std::string to_string() const {
        if (t_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : t_) {
            if (!out.empty()) out += (c > 0) ? " + " : " - ";
            else if (c < 0) out += "-";
            Rat a = abs(c);
            std::string mono;
            for (int i = 0; i < vars_; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "x" + std::to_string(i + 1);
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty()) out += a.get_str();
            else {
                if (a != 1) out += a.get_str() + "*";
                out += mono;
            }
        }
        return out;
    }

private:
    int vars_;
    std::map<std::vector<int>, Rat> t_;  // exponent tuple -> coefficient
};

// Leibniz expansion; fine for the small matrices that arise here (n <= 4).
inline MultiPoly poly_determinant(const std::vector<std::vector<MultiPoly>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) throw std::invalid_argument("empty matrix");
    const int vars = m[0][0].vars();
    MultiPoly det(vars);
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inv;
        MultiPoly prod = MultiPoly::constant(vars, (inv % 2) ? -1 : 1);
        for (int i = 0; i < n; ++i) prod = prod * m[i][p[i]];
        det = det + prod;
    } while (std::next_permutation(p.begin(), p.end()));
    return det;
}

// det of the matrix of partials d f_i / d x_j: n polynomials in n variables.
inline MultiPoly jacobian_bracket(const std::vector<MultiPoly>& fs) {
    const int n = static_cast<int>(fs.size());
    if (n == 0) throw std::invalid_argument("jacobian_bracket: no arguments");
    for (const auto& f : fs)
        if (f.vars() != n)
            throw std::invalid_argument("jacobian_bracket: needs n polynomials in n variables");
    std::vector<std::vector<MultiPoly>> jac(n, std::vector<MultiPoly>(n, MultiPoly(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) jac[i][j] = fs[i].partial(j + 1);
    return poly_determinant(jac);
}

}  // namespace operad::algebras
