#pragma once

// Executable checkers for the n-Lie (Filippov) and n-Com axioms on
// concrete ungraded algebras: the Jacobian bracket and derivation products
// on polynomial rings, and finite structure-constant instances on free
// modules.  Everything is exact; a check passes iff every defect is zero.

#include <istream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "operad/multipoly.hpp"
#include "operad/permutation.hpp"
#include "operad/rational.hpp"

namespace operad::algebras {

enum class SymKind { symmetric, antisymmetric };

struct ModuleElement {
    std::vector<Rat> c;

    explicit ModuleElement(int rank) : c(rank, Rat(0)) {}
    static ModuleElement basis(int rank, int i) {
        ModuleElement e(rank);
        e.c[i - 1] = 1;
        return e;
    }
    bool is_zero() const {
        for (const Rat& v : c)
            if (v != 0) return false;
        return true;
    }
    friend ModuleElement operator+(const ModuleElement& a, const ModuleElement& b) {
        ModuleElement r = a;
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
        return r;
    }
    friend ModuleElement operator-(const ModuleElement& a, const ModuleElement& b) {
        ModuleElement r = a;
        for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
        return r;
    }
    friend ModuleElement operator*(const Rat& s, const ModuleElement& a) {
        ModuleElement r = a;
        for (Rat& v : r.c) v *= s;
        return r;
    }
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            if (!out.empty()) out += " + ";
            out += c[i].get_str() + "*e" + std::to_string(i + 1);
        }
        return out.empty() ? "0" : out;
    }
};

// n-ary multiplication table on a rank-m free module.  Entries are stored
// on sorted index tuples; antisymmetric tables pick up the sort sign and
// vanish on repeated indices.
class StructureConstants {
public:
    StructureConstants(int arity, int rank, SymKind kind)
        : arity_(arity), rank_(rank), kind_(kind) {}

    int arity() const { return arity_; }
    int rank() const { return rank_; }
    SymKind kind() const { return kind_; }

    void set(std::vector<int> inputs, int out, const Rat& value) {
        auto [key, sgn] = normalize(std::move(inputs));
        if (kind_ == SymKind::antisymmetric && sgn == 0)
            throw std::invalid_argument("antisymmetric table entry with repeated index");
        check_range(key, out);
        Rat v = (kind_ == SymKind::antisymmetric) ? Rat(sgn) * value : value;
        if (v == 0) table_.erase({key, out});
        else table_[{std::move(key), out}] = v;
    }

    Rat coefficient(std::vector<int> inputs, int out) const {
        auto [key, sgn] = normalize(std::move(inputs));
        if (kind_ == SymKind::antisymmetric && sgn == 0) return 0;
        auto it = table_.find({key, out});
        if (it == table_.end()) return 0;
        return (kind_ == SymKind::antisymmetric) ? Rat(sgn) * it->second : it->second;
    }

    ModuleElement apply_basis(const std::vector<int>& inputs) const {
        ModuleElement r(rank_);
        for (int j = 1; j <= rank_; ++j) r.c[j - 1] = coefficient(inputs, j);
        return r;
    }

    // Multilinear extension to arbitrary coordinate vectors.
    ModuleElement apply(const std::vector<ModuleElement>& args) const {
        if (static_cast<int>(args.size()) != arity_)
            throw std::invalid_argument("structure constants: arity mismatch");
        ModuleElement r(rank_);
        std::vector<int> idx(arity_, 1);
        for (;;) {
            Rat coef = 1;
            for (int k = 0; k < arity_ && coef != 0; ++k) coef *= args[k].c[idx[k] - 1];
            if (coef != 0) r = r + coef * apply_basis(idx);
            int k = arity_ - 1;
            while (k >= 0 && idx[k] == rank_) idx[k--] = 1;
            if (k < 0) break;
            ++idx[k];
        }
        return r;
    }

    const std::map<std::pair<std::vector<int>, int>, Rat>& table() const { return table_; }

private:
    std::pair<std::vector<int>, int> normalize(std::vector<int> v) const {
        int sgn = 1;
        for (std::size_t i = 1; i < v.size(); ++i)
            for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
                std::swap(v[j - 1], v[j]);
                sgn = -sgn;
            }
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] == v[i - 1]) sgn = 0;
        return {std::move(v), sgn};
    }
    void check_range(const std::vector<int>& key, int out) const {
        if (static_cast<int>(key.size()) != arity_)
            throw std::invalid_argument("structure constants: wrong tuple length");
        for (int i : key)
            if (i < 1 || i > rank_) throw std::invalid_argument("index out of range");
        if (out < 1 || out > rank_) throw std::invalid_argument("output index out of range");
    }

    int arity_, rank_;
    SymKind kind_;
    std::map<std::pair<std::vector<int>, int>, Rat> table_;
};

// [v_1,...,v-hat_i,...,v_{n+1}] = (-1)^{n+1+i} v_i on a rank n+1 module.
inline StructureConstants filippov_example(int n) {
    if (n < 2) throw std::invalid_argument("filippov_example: n >= 2 required");
    StructureConstants sc(n, n + 1, SymKind::antisymmetric);
    for (int i = 1; i <= n + 1; ++i) {
        std::vector<int> inputs;
        for (int j = 1; j <= n + 1; ++j)
            if (j != i) inputs.push_back(j);
        sc.set(std::move(inputs), i, ((n + 1 + i) % 2 == 0) ? Rat(1) : Rat(-1));
    }
    return sc;
}

// lambda^j_{i_1..i_n} = delta whenever j occurs among the inputs, else 0.
// Satisfies the relation only at rank 1: for m >= 2 the relation has a
// nonzero defect on repeated-index tuples (first at (1,1,1,2,2) for
// n = 3), which the exhaustive checkers report.
inline StructureConstants delta_ncom(int n, int m, const Rat& delta) {
    if (n < 3) throw std::invalid_argument("delta_ncom: n >= 3 required");
    if (m < 1) throw std::invalid_argument("delta_ncom: rank >= 1 required");
    StructureConstants sc(n, m, SymKind::symmetric);
    std::vector<int> idx(n, 1);
    for (;;) {
        for (int j = 1; j <= m; ++j)
            if (std::find(idx.begin(), idx.end(), j) != idx.end()) sc.set(idx, j, delta);
        int k = n - 1;
        while (k >= 0 && idx[k] == m) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < n; ++j) idx[j] = idx[k];  // multisets: nondecreasing tuples
    }
    return sc;
}

// lambda^j_{i_1..i_n} = delta * #{t : i_t = j}, the Leibniz-shaped variant
// T(v_1..v_n) = delta sum_t s(v_1)..s(v_{t-1}) v_t s(v_{t+1}).. with s the
// coordinate sum; this one satisfies the relation at every rank.
inline StructureConstants weighted_delta_ncom(int n, int m, const Rat& delta) {
    if (n < 3) throw std::invalid_argument("weighted_delta_ncom: n >= 3 required");
    if (m < 1) throw std::invalid_argument("weighted_delta_ncom: rank >= 1 required");
    StructureConstants sc(n, m, SymKind::symmetric);
    std::vector<int> idx(n, 1);
    for (;;) {
        for (int j = 1; j <= m; ++j) {
            long count = std::count(idx.begin(), idx.end(), j);
            if (count > 0) sc.set(idx, j, Rat(count) * delta);
        }
        int k = n - 1;
        while (k >= 0 && idx[k] == m) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < n; ++j) idx[j] = idx[k];
    }
    return sc;
}

// f_1,...,f_n  ->  d/dx_i (f_1 ... f_n); symmetric for any derivation.
inline MultiPoly derivation_product(int i, const std::vector<MultiPoly>& args) {
    if (args.empty()) throw std::invalid_argument("derivation_product: no arguments");
    MultiPoly prod = MultiPoly::constant(args[0].vars(), 1);
    for (const auto& f : args) prod = prod * f;
    return prod.partial(i);
}

struct DerivationNCom {
    int i;
    MultiPoly operator()(const std::vector<MultiPoly>& args) const {
        return derivation_product(i, args);
    }
};

// The paper proves the axiom for this product only from arity 3 up.
inline DerivationNCom derivation_ncom(int i, int n) {
    if (n < 3) throw std::invalid_argument("derivation_ncom: n >= 3 required");
    return DerivationNCom{i};
}

// Defect of the generalized Jacobi identity on 2n-1 inputs:
// [[v_1..v_n],v_{n+1}..] - sum_i [v_1..,[v_i,v_{n+1},..],..v_n].
template <typename Elem, typename Bracket>
Elem check_filippov(const Bracket& bracket, const std::vector<Elem>& v, int n) {
    if (static_cast<int>(v.size()) != 2 * n - 1)
        throw std::invalid_argument("check_filippov: needs 2n-1 inputs");
    std::vector<Elem> head(v.begin(), v.begin() + n);
    std::vector<Elem> outer(v.begin() + n, v.end());
    outer.insert(outer.begin(), bracket(head));
    Elem defect = bracket(outer);
    for (int i = 0; i < n; ++i) {
        std::vector<Elem> inner = {v[i]};
        inner.insert(inner.end(), v.begin() + n, v.end());
        std::vector<Elem> args = head;
        args[i] = bracket(inner);
        defect = defect - bracket(args);
    }
    return defect;
}

// Defect of the column-group relation on 2n-1 inputs:
// sum_{sigma in C_{T_lambda}} sgn(sigma)
//   m(m(u_{sigma(1)},..,u_{sigma(n)}), u_{sigma(n+1)},..,u_{sigma(2n-1)}),
// where every column-group element is its own inverse.
template <typename Elem, typename Mult>
Elem check_ncom(const Mult& mult, const std::vector<Elem>& u, int n) {
    if (static_cast<int>(u.size()) != 2 * n - 1)
        throw std::invalid_argument("check_ncom: needs 2n-1 inputs");
    bool first = true;
    Elem defect = u[0];  // overwritten before use
    for (const auto& [sigma, sgn] : perm::column_group(n).elements) {
        std::vector<Elem> inner, outer;
        for (int k = 1; k <= n; ++k) inner.push_back(u[sigma.apply(k) - 1]);
        outer.push_back(mult(inner));
        for (int k = n + 1; k <= 2 * n - 1; ++k) outer.push_back(u[sigma.apply(k) - 1]);
        Elem term = mult(outer);
        if (first) {
            defect = (sgn > 0) ? term : Rat(-1) * term;
            first = false;
        } else {
            defect = (sgn > 0) ? defect + term : defect - term;
        }
    }
    return defect;
}

// Exhaustive version of the displayed coefficient condition: for every
// input tuple and output index l,
// sum_{sigma} sum_j sgn(sigma) lam^j_{i_{sigma(1)}..i_{sigma(n)}}
//                               lam^l_{j, i_{sigma(n+1)}..} = 0.
inline bool coefficient_identity_check(const StructureConstants& sc) {
    if (sc.kind() != SymKind::symmetric)
        throw std::invalid_argument("coefficient_identity_check: symmetric table required");
    const int n = sc.arity(), m = sc.rank();
    auto group = perm::column_group(n);
    std::vector<int> idx(2 * n - 1, 1);
    for (;;) {
        for (int l = 1; l <= m; ++l) {
            Rat acc = 0;
            for (const auto& [sigma, sgn] : group.elements) {
                std::vector<int> inner(n), outer(n);
                for (int k = 1; k <= n; ++k) inner[k - 1] = idx[sigma.apply(k) - 1];
                for (int k = n + 1; k <= 2 * n - 1; ++k) outer[k - n] = idx[sigma.apply(k) - 1];
                for (int j = 1; j <= m; ++j) {
                    outer[0] = j;
                    acc += Rat(sgn) * sc.coefficient(inner, j) * sc.coefficient(outer, l);
                }
            }
            if (acc != 0) return false;
        }
        int k = 2 * n - 2;
        while (k >= 0 && idx[k] == m) idx[k--] = 1;
        if (k < 0) break;
        ++idx[k];
    }
    return true;
}

template <typename Elem, typename Op>
bool is_antisymmetric_on(const Op& op, const std::vector<Elem>& args) {
    Elem base = op(args);
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
        std::vector<Elem> swapped = args;
        std::swap(swapped[i], swapped[i + 1]);
        if (!(op(swapped) + base).is_zero()) return false;
    }
    return true;
}

template <typename Elem, typename Op>
bool is_symmetric_on(const Op& op, const std::vector<Elem>& args) {
    Elem base = op(args);
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
        std::vector<Elem> swapped = args;
        std::swap(swapped[i], swapped[i + 1]);
        if (!(op(swapped) - base).is_zero()) return false;
    }
    return true;
}

struct CheckReport {
    std::string axiom;  // "filippov" or "ncom"
    int trials = 0;
    std::vector<std::pair<std::string, std::string>> failures;  // (inputs, defect)
    bool pass() const { return failures.empty(); }
};

// Sparse random polynomial: at most max_terms monomials of total degree
// <= max_deg, coefficients drawn from a small fixed set.
inline MultiPoly random_multipoly(std::mt19937_64& rng, int vars, int max_terms = 4,
                                  int max_deg = 3) {
    static const int nums[] = {1, -1, 2, -2, 3, -3, 1, -1};
    MultiPoly p(vars);
    int terms = 1 + static_cast<int>(rng() % static_cast<unsigned long>(max_terms));
    for (int t = 0; t < terms; ++t) {
        int deg = static_cast<int>(rng() % static_cast<unsigned long>(max_deg + 1));
        std::vector<int> e(vars, 0);
        for (int d = 0; d < deg; ++d) ++e[rng() % static_cast<unsigned long>(vars)];
        int pick = static_cast<int>(rng() % 8);
        Rat c = (pick < 6) ? Rat(nums[pick]) : Rat(nums[pick], 2);
        p.add_term(std::move(e), c);
    }
    return p;
}

// Jacobian bracket vs the Filippov identity on a seeded corpus of sparse
// polynomial tuples.
inline CheckReport jacobian_filippov_corpus(int n, int trials, unsigned long seed) {
    CheckReport rep{"filippov", trials, {}};
    std::mt19937_64 rng(seed);
    auto bracket = [](const std::vector<MultiPoly>& fs) { return jacobian_bracket(fs); };
    for (int t = 0; t < trials; ++t) {
        std::vector<MultiPoly> v;
        for (int k = 0; k < 2 * n - 1; ++k) v.push_back(random_multipoly(rng, n));
        MultiPoly defect = check_filippov(bracket, v, n);
        if (!defect.is_zero()) {
            std::string in;
            for (const auto& f : v) in += (in.empty() ? "" : "; ") + f.to_string();
            rep.failures.emplace_back(in, defect.to_string());
        }
    }
    return rep;
}

// Filippov's rank-(n+1) example, exhaustively over all basis tuples.
inline CheckReport filippov_example_exhaustive(int n) {
    CheckReport rep{"filippov", 0, {}};
    StructureConstants sc = filippov_example(n);
    auto bracket = [&](const std::vector<ModuleElement>& args) { return sc.apply(args); };
    std::vector<int> idx(2 * n - 1, 1);
    for (;;) {
        std::vector<ModuleElement> v;
        for (int k = 0; k < 2 * n - 1; ++k) v.push_back(ModuleElement::basis(n + 1, idx[k]));
        ++rep.trials;
        ModuleElement defect = check_filippov(bracket, v, n);
        if (!defect.is_zero()) {
            std::string in;
            for (int k = 0; k < 2 * n - 1; ++k) in += (k ? "," : "") + std::to_string(idx[k]);
            rep.failures.emplace_back("e_(" + in + ")", defect.to_string());
        }
        int k = 2 * n - 2;
        while (k >= 0 && idx[k] == n + 1) idx[k--] = 1;
        if (k < 0) break;
        ++idx[k];
    }
    return rep;
}

// Derivation product vs the n-Com relation on a seeded corpus.
inline CheckReport derivation_ncom_corpus(int i, int n, int trials, unsigned long seed,
                                          int vars = 0) {
    CheckReport rep{"ncom", trials, {}};
    if (vars == 0) vars = n;
    std::mt19937_64 rng(seed);
    DerivationNCom mult = derivation_ncom(i, n);
    for (int t = 0; t < trials; ++t) {
        std::vector<MultiPoly> u;
        for (int k = 0; k < 2 * n - 1; ++k) u.push_back(random_multipoly(rng, vars));
        MultiPoly defect = check_ncom(mult, u, n);
        if (!defect.is_zero()) {
            std::string in;
            for (const auto& f : u) in += (in.empty() ? "" : "; ") + f.to_string();
            rep.failures.emplace_back(in, defect.to_string());
        }
    }
    return rep;
}

// Any symmetric structure-constant table vs the n-Com relation,
// exhaustively over all basis tuples.
inline CheckReport ncom_exhaustive(const StructureConstants& sc) {
    CheckReport rep{"ncom", 0, {}};
    const int n = sc.arity(), m = sc.rank();
    auto mult = [&](const std::vector<ModuleElement>& args) { return sc.apply(args); };
    std::vector<int> idx(2 * n - 1, 1);
    for (;;) {
        std::vector<ModuleElement> u;
        for (int k = 0; k < 2 * n - 1; ++k) u.push_back(ModuleElement::basis(m, idx[k]));
        ++rep.trials;
        ModuleElement defect = check_ncom(mult, u, n);
        if (!defect.is_zero()) {
            std::string in;
            for (int k = 0; k < 2 * n - 1; ++k) in += (k ? "," : "") + std::to_string(idx[k]);
            rep.failures.emplace_back("e_(" + in + ")", defect.to_string());
        }
        int k = 2 * n - 2;
        while (k >= 0 && idx[k] == m) idx[k--] = 1;
        if (k < 0) break;
        ++idx[k];
    }
    return rep;
}

// Plain-text table: one line per entry with arity input indices, the
// output index, and a rational value; '#' starts a comment.
inline StructureConstants load_structure_constants(std::istream& in, int arity, int rank,
                                                   SymKind kind) {
    StructureConstants sc(arity, rank, kind);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<int> inputs(arity);
        if (!(ls >> inputs[0])) continue;  // blank line
        for (int k = 1; k < arity; ++k)
            if (!(ls >> inputs[k]))
                throw std::invalid_argument("table line " + std::to_string(lineno) + ": expected " +
                                            std::to_string(arity) + " input indices");
        int out;
        std::string value;
        if (!(ls >> out >> value))
            throw std::invalid_argument("table line " + std::to_string(lineno) +
                                        ": expected output index and rational value");
        sc.set(std::move(inputs), out, parse_rational(value));
    }
    return sc;
}

}  // namespace operad::algebras
