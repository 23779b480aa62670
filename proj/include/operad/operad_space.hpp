#pragma once

// The weight-two component of the free operad on a one-dimensional arity-n
// generator.  The n-Lie relation generator lives on the signed side, the
// n-Com generator on the trivial side; spans are closed under the group
// action generated by adjacent transpositions, and the duality verdict
// compares the annihilator of the n-Lie span with the n-Com span under the
// Kronecker pairing.

#include <vector>

#include "operad/catalan.hpp"
#include "operad/matrix.hpp"
#include "operad/permutation.hpp"
#include "operad/subset_vector.hpp"
#include "operad/subsets.hpp"

namespace operad::space {

// r_n = v_{{n+1..2n-1}} + (-1)^n sum_{i=0}^{n-1} v_{(lambda^n omega^i)^{-1}({n+1..2n-1})}.
// For odd n every lambda^n omega^i is even; for even n the odd ones are
// normalized by a factor (1 2), which fixes the subset and absorbs the
// alternating sign.  Either way the generator has n+1 terms with
// coefficients +-1 depending only on the parity of n.
inline SubsetVector lie_generator(int n) {
    if (n < 2) throw std::invalid_argument("lie_generator: n >= 2 required");
    auto [lambda, omega] = perm::standard_cycles(n);
    Subset base;
    for (int a = n + 1; a <= 2 * n - 1; ++a) base.push_back(a);
    SubsetVector r(n, RepKind::sign);
    r.add_term(base, Rat(1));
    const Rat c = (n % 2 == 0) ? Rat(1) : Rat(-1);
    perm::Permutation p = perm::power(lambda, n);
    for (int i = 0; i < n; ++i) {
        r.add_term(subset_preimage(base, p), c);
        p = perm::compose(p, omega);
    }
    return r;
}

// s_n = sum_{sigma in C_{T_lambda}} sgn(sigma) u_{sigma^{-1}({n+1..2n-1})},
// one term per column-group element, 2^{n-1} in total.
inline SubsetVector com_generator(int n) {
    if (n < 2) throw std::invalid_argument("com_generator: n >= 2 required");
    Subset base;
    for (int a = n + 1; a <= 2 * n - 1; ++a) base.push_back(a);
    SubsetVector s(n, RepKind::trivial);
    for (const auto& [sigma, sgn] : perm::column_group(n).elements)
        s.add_term(subset_preimage(base, sigma), Rat(sgn));
    return s;
}

inline std::vector<Rat> to_dense(const SubsetVector& v, const SubsetTable& table) {
    std::vector<Rat> row(table.size(), Rat(0));
    for (const auto& [s, c] : v.coefficients()) row[table.index_of(s)] = c;
    return row;
}

inline SubsetVector from_dense(const std::vector<Rat>& row, const SubsetTable& table, RepKind kind) {
    SubsetVector v(table.n(), kind);
    for (int i = 0; i < table.size(); ++i)
        if (row[i] != 0) v.add_term(table.at(i), row[i]);
    return v;
}

namespace detail {
// Index image of one adjacent transposition acting on the subset basis;
// on the signed side every such action also flips the sign.
struct BasisAction {
    std::vector<int> image;  // basis index -> basis index
};

inline std::vector<BasisAction> adjacent_actions(const SubsetTable& table) {
    const int m = table.ground_size();
    std::vector<BasisAction> acts;
    for (int t = 1; t < m; ++t) {
        BasisAction a;
        a.image.resize(table.size());
        for (int i = 0; i < table.size(); ++i) {
            Subset s = table.at(i);
            for (int& x : s) {
                if (x == t) x = t + 1;
                else if (x == t + 1) x = t;
            }
            std::sort(s.begin(), s.end());
            a.image[i] = table.index_of(s);
        }
        acts.push_back(std::move(a));
    }
    return acts;
}
}  // namespace detail

// Basis of the smallest action-stable subspace containing the seed,
// computed by a worklist closure under the adjacent transpositions
// (1 2),...,(2n-2 2n-1), which generate the whole symmetric group.
inline std::vector<SubsetVector> span_closure(const SubsetVector& seed) {
    SubsetTable table(seed.n());
    auto acts = detail::adjacent_actions(table);
    const Rat sign_factor = (seed.kind() == RepKind::sign) ? Rat(-1) : Rat(1);

    linalg::RowSpace basis(table.size());
    std::vector<std::vector<Rat>> pending;
    std::vector<Rat> first = to_dense(seed, table);
    if (basis.insert(first)) pending.push_back(std::move(first));
    while (!pending.empty()) {
        std::vector<Rat> v = std::move(pending.back());
        pending.pop_back();
        for (const auto& a : acts) {
            std::vector<Rat> w(table.size(), Rat(0));
            for (int i = 0; i < table.size(); ++i)
                if (v[i] != 0) w[a.image[i]] = sign_factor * v[i];
            if (basis.insert(w)) pending.push_back(std::move(w));
        }
    }
    std::vector<SubsetVector> out;
    out.reserve(basis.dimension());
    for (const auto& row : basis.rows()) out.push_back(from_dense(row, table, seed.kind()));
    return out;
}

// Basis of the pairing-annihilator of a signed-side span; the result lives
// on the trivial side.  Rejects linearly dependent input.  An empty input
// annihilates nothing, so the complement is the full ambient basis.
inline std::vector<SubsetVector> orthogonal_complement(const std::vector<SubsetVector>& basis, int n) {
    SubsetTable table(n);
    if (basis.empty()) {
        std::vector<SubsetVector> full;
        for (int i = 0; i < table.size(); ++i) {
            SubsetVector u(n, RepKind::trivial);
            u.add_term(table.at(i), Rat(1));
            full.push_back(std::move(u));
        }
        return full;
    }
    linalg::RationalMatrix m(static_cast<int>(basis.size()), table.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (const auto& [s, c] : basis[i].coefficients()) m.at(static_cast<int>(i), table.index_of(s)) = c;
    if (linalg::rank(m) != m.rows())
        throw std::invalid_argument("orthogonal_complement: input vectors not linearly independent");
    std::vector<SubsetVector> out;
    for (auto& v : linalg::nullspace_basis(m)) out.push_back(from_dense(v, table, RepKind::trivial));
    return out;
}

struct KoszulReport {
    int n = 0;
    int d = 0;  // degree label, metadata only; the dual side sits in -d+n-2
    int dimAmbient = 0;
    int dimR = 0;
    int dimS = 0;
    Int catalan = 0;
    bool sInRperp = false;
    bool rperpCoefficientCheck = false;
    bool equal = false;

    int dual_degree() const { return -d + n - 2; }
};

// Coefficient condition on the annihilator (trivial-side vector U):
// (-1)^n U[w] + sum_{t disjoint from w} U[t] = 0 for every subset w.
inline bool rperp_coefficient_condition(const SubsetVector& u, const SubsetTable& table) {
    const Rat lead = (u.n() % 2 == 0) ? Rat(1) : Rat(-1);
    std::vector<Rat> dense = to_dense(u, table);
    for (int i = 0; i < table.size(); ++i) {
        Rat acc = lead * dense[i];
        for (int j = 0; j < table.size(); ++j)
            if (subsets_disjoint(table.at(i), table.at(j))) acc += dense[j];
        if (acc != 0) return false;
    }
    return true;
}

inline KoszulReport verify_koszul(int n, int d = 0) {
    KoszulReport rep;
    rep.n = n;
    rep.d = d;
    SubsetTable table(n);
    rep.dimAmbient = table.size();
    rep.catalan = catalan::catalan(n);

    std::vector<SubsetVector> R = span_closure(lie_generator(n));
    std::vector<SubsetVector> S = span_closure(com_generator(n));
    rep.dimR = static_cast<int>(R.size());
    rep.dimS = static_cast<int>(S.size());

    rep.sInRperp = true;
    for (const auto& s : S)
        for (const auto& r : R)
            if (pairing(s, r) != 0) rep.sInRperp = false;

    std::vector<SubsetVector> Rperp = orthogonal_complement(R, n);

    rep.rperpCoefficientCheck = true;
    for (const auto& u : Rperp)
        if (!rperp_coefficient_condition(u, table)) rep.rperpCoefficientCheck = false;

    // Mutual containment: sInRperp already certifies span(S) <= Rperp,
    // so span equality needs Rperp <= span(S) plus the dimension count.
    linalg::RowSpace s_span(table.size());
    for (const auto& s : S) s_span.insert(to_dense(s, table));
    bool rperp_in_s = true;
    for (const auto& u : Rperp)
        if (!s_span.contains(to_dense(u, table))) rperp_in_s = false;

    rep.equal = rep.sInRperp && rperp_in_s &&
                static_cast<int>(Rperp.size()) == rep.dimS &&
                Int(rep.dimS) == rep.catalan &&
                rep.dimAmbient - rep.dimR == rep.dimS;
    return rep;
}

}  // namespace operad::space
