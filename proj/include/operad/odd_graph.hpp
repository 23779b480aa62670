#pragma once

// Odd graphs O_n = K(2n-1, n-1): vertices are the (n-1)-subsets of
// {1..2n-1} in lex order, edges join disjoint pairs.  Provides the B^2
// profile, the Gamma partner maps, the block decomposition that makes
// {(B, C, D)} a balanced matrix sequence, the characteristic-polynomial
// recursion derived from it, and exact integer spectra.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "operad/catalan.hpp"
#include "operad/matrix.hpp"
#include "operad/polynomial.hpp"
#include "operad/rational.hpp"
#include "operad/subsets.hpp"

namespace operad::oddgraph {

struct MultiplicityMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OddGraph {
    int n = 0;
    SubsetTable vertices;
    linalg::RationalMatrix adjacency;  // symmetric 0/1, zero diagonal

    explicit OddGraph(int arity) : n(arity), vertices(arity) {}
};

inline OddGraph build(int n) {
    OddGraph g(n);
    const int v = g.vertices.size();
    g.adjacency = linalg::RationalMatrix(v, v);
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j)
            if (subsets_disjoint(g.vertices.at(i), g.vertices.at(j)))
                g.adjacency.at(i, j) = g.adjacency.at(j, i) = 1;
    return g;
}

// (B^2)_{tw} must be n on the diagonal, 1 when |t ^ w| = n-2, 0 when the
// intersection is smaller.
inline bool b_squared_profile(const OddGraph& g) {
    const int v = g.vertices.size();
    std::vector<std::vector<long>> b(v, std::vector<long>(v, 0));
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j) b[i][j] = (g.adjacency.at(i, j) == 1) ? 1 : 0;
    for (int i = 0; i < v; ++i) {
        for (int j = 0; j < v; ++j) {
            long acc = 0;
            for (int k = 0; k < v; ++k) acc += b[i][k] * b[k][j];
            long expected;
            if (i == j) expected = g.n;
            else {
                int shared = intersection_size(g.vertices.at(i), g.vertices.at(j));
                expected = (shared == g.n - 2) ? 1 : 0;
            }
            if (acc != expected) return false;
        }
    }
    return true;
}

// Unique disjoint partner of S in Lambda_{2+}(n) for S containing 2 but
// not 1: the complement of S minus the element 1.
inline Subset gamma2(const Subset& s, int n) {
    const int m = 2 * n - 1;
    bool has1 = std::binary_search(s.begin(), s.end(), 1);
    bool has2 = std::binary_search(s.begin(), s.end(), 2);
    if (has1 || !has2) throw std::invalid_argument("gamma2: subset must contain 2 and not 1");
    Subset comp = subset_complement(s, m);
    comp.erase(comp.begin());  // removes 1
    return comp;
}

// Unique disjoint partner of S in Lambda_{2+}(n) for S containing 1 but
// not 2: the complement of S minus the element 2.
inline Subset gamma12(const Subset& s, int n) {
    const int m = 2 * n - 1;
    bool has1 = std::binary_search(s.begin(), s.end(), 1);
    bool has2 = std::binary_search(s.begin(), s.end(), 2);
    if (!has1 || has2) throw std::invalid_argument("gamma12: subset must contain 1 and not 2");
    Subset comp = subset_complement(s, m);
    comp.erase(comp.begin());  // removes 2, the least element of the complement
    return comp;
}

namespace detail {
struct VertexClasses {
    std::vector<int> l12, l12p, l2, l2p;  // table order within each class
};

inline VertexClasses classify(const SubsetTable& t) {
    VertexClasses c;
    for (int i = 0; i < t.size(); ++i) {
        const Subset& s = t.at(i);
        bool has1 = std::binary_search(s.begin(), s.end(), 1);
        bool has2 = std::binary_search(s.begin(), s.end(), 2);
        if (has1 && has2) c.l12.push_back(i);
        else if (has1) c.l12p.push_back(i);
        else if (has2) c.l2.push_back(i);
        else c.l2p.push_back(i);
    }
    return c;
}

inline std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}
}  // namespace detail

// Block structure under the ordering (Lambda_1 lex, then Lambda_2, then
// Lambda_{2+}), which is plain lex order on all of Lambda(n):
//   B = [[0, C], [C^T, J]],  C = [[0, D], [B(O_{n-1}), J]],
//   D^T D + I = J B(O_{n-1})^2 J,
// with the lower-left block matched through the prepend/shift bijections
// psi_n, phi_n from Lambda(n-1).
inline bool verify_block_form(int n) {
    if (n < 3) throw std::invalid_argument("verify_block_form: n >= 3 required");
    OddGraph g = build(n), h = build(n - 1);
    auto cls = detail::classify(g.vertices);
    auto l1 = detail::concat(cls.l12, cls.l12p);
    auto l1p = detail::concat(cls.l2, cls.l2p);

    if (!g.adjacency.submatrix(l1, l1).is_zero()) return false;
    auto bottom_right = g.adjacency.submatrix(l1p, l1p);
    if (!(bottom_right == linalg::RationalMatrix::anti_identity(static_cast<int>(l1p.size()))))
        return false;

    if (!g.adjacency.submatrix(cls.l12, cls.l2).is_zero()) return false;
    auto c_corner = g.adjacency.submatrix(cls.l12p, cls.l2p);
    if (!(c_corner == linalg::RationalMatrix::anti_identity(static_cast<int>(cls.l12p.size()))))
        return false;

    // Lambda_{12+} x Lambda_2 block equals B(O_{n-1}) through psi_n, phi_n.
    for (int a = 0; a < h.vertices.size(); ++a) {
        Subset psi = {1};
        for (int x : h.vertices.at(a)) psi.push_back(x + 2);
        int row = g.vertices.index_of(psi);
        for (int b = 0; b < h.vertices.size(); ++b) {
            Subset phi = {2};
            for (int x : h.vertices.at(b)) phi.push_back(x + 2);
            if (g.adjacency.at(row, g.vertices.index_of(phi)) != h.adjacency.at(a, b)) return false;
        }
    }

    auto d_block = g.adjacency.submatrix(cls.l12, cls.l2p);
    auto j = linalg::RationalMatrix::anti_identity(h.vertices.size());
    auto lhs = d_block.transpose() * d_block + linalg::RationalMatrix::identity(h.vertices.size());
    auto rhs = j * (h.adjacency * h.adjacency) * j;
    return lhs == rhs;
}

// P_{B(n)}(x) = -(-1)^{N_n+N_{n-1}} x^{N_n-M_n} P_{B(n-1)}(-x)^2
//               P_{B(n-1)}(x-1) P_{B(n-1)}(x+1),
// iterated up from the directly computed base case P_{B(O_2)}.  The
// exponent N_n - M_n = -C_{n-1} is negative, so the three shifted factors
// must be exactly divisible by x^{C_{n-1}}; a nonzero remainder would
// falsify the recursion and raises NonDivisible.
inline linalg::IntPolynomial charpoly_recursive(int n) {
    if (n < 3) throw std::invalid_argument("charpoly_recursive: n >= 3 required");
    linalg::IntPolynomial p = linalg::charpoly(build(2).adjacency);
    for (int k = 3; k <= n; ++k) {
        Int nk = binomial(2 * k - 2, k - 2);
        Int mk = binomial(2 * k - 2, k - 1);
        Int x_exponent = mk - nk;  // C_{k-1}
        linalg::IntPolynomial neg = p.negate_variable();
        linalg::IntPolynomial prod = neg * neg * p.shift_variable(-1) * p.shift_variable(1);
        // Prefactor (-1)^{N_k}: the Schur complement contributes
        // (-1)^{N_k} x^{N_k-M_k} and the block-antitriangular reduction of
        // x J - x^2 I + C^T C is sign-free.  This also pins the leading
        // coefficient to (-1)^{N_k+M_k} with M_k even, matching the
        // det(M - xI) convention.
        Int sign_factor = (nk % 2 == 0) ? Int(1) : Int(-1);
        p = sign_factor * prod.divide_by_power_of_x(static_cast<int>(x_exponent.get_si()));
    }
    return p;
}

struct SpectrumReport {
    int n = 0;
    std::vector<std::pair<Int, int>> pairs;  // (eigenvalue, multiplicity), i = 1..n
    linalg::IntPolynomial charpolyDirect;
    std::optional<linalg::IntPolynomial> charpolyRecursive;
};

// Multiplicities of the predicted eigenvalues (-1)^{n+i} i extracted from
// the direct characteristic polynomial; they must exhaust it, match the
// Catalan-triangle entries E_{n-1,i-1}, and give C_n at (-1)^{n+1}.
inline SpectrumReport spectrum(int n, bool with_recursive = false) {
    if (n < 2) throw std::invalid_argument("spectrum: n >= 2 required");
    SpectrumReport rep;
    rep.n = n;
    OddGraph g = build(n);
    rep.charpolyDirect = linalg::charpoly(g.adjacency);

    std::vector<Int> candidates;
    for (int i = 1; i <= n; ++i)
        candidates.push_back(((n + i) % 2 == 0) ? Int(i) : Int(-i));
    auto mults = linalg::integer_root_multiplicities(rep.charpolyDirect, candidates);

    catalan::CatalanTriangle tri = catalan::triangle(n);
    Int total = 0, trace = 0;
    for (int i = 1; i <= n; ++i) {
        const auto& [eig, mult] = mults[i - 1];
        if (Int(mult) != tri.at(n - 1, i - 1))
            throw MultiplicityMismatch("multiplicity of eigenvalue " + eig.get_str() +
                                       " is " + std::to_string(mult) + ", expected " +
                                       tri.at(n - 1, i - 1).get_str());
        total += mult;
        trace += eig * mult;
        rep.pairs.emplace_back(eig, mult);
    }
    if (Int(mults[0].second) != catalan::catalan(n))
        throw MultiplicityMismatch("multiplicity at (-1)^{n+1} is not C_n");
    if (total != binomial(2 * n - 1, n - 1) || trace != 0)
        throw MultiplicityMismatch("multiplicities do not sum to the vertex count with zero trace");

    if (with_recursive && n >= 3) rep.charpolyRecursive = charpoly_recursive(n);
    return rep;
}

// DOT export: vertex label = subset, one edge per disjoint pair.
inline std::string to_dot(const OddGraph& g) {
    auto label = [&](int i) {
        std::string s = "\"";
        const Subset& sub = g.vertices.at(i);
        for (std::size_t k = 0; k < sub.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(sub[k]);
        }
        return s + "\"";
    };
    std::string out = "graph O_" + std::to_string(g.n) + " {\n";
    for (int i = 0; i < g.vertices.size(); ++i) out += "  " + label(i) + ";\n";
    for (int i = 0; i < g.vertices.size(); ++i)
        for (int j = i + 1; j < g.vertices.size(); ++j)
            if (g.adjacency.at(i, j) == 1) out += "  " + label(i) + " -- " + label(j) + ";\n";
    return out + "}\n";
}

}  // namespace operad::oddgraph
