#pragma once

// Gauss decomposition S(u) = F(u) D(u) E(u) over the truncated series ring,
// quasi-determinants, the inverse-factor (tilde) families, the shifted
// determinant product, and the current generating series
//   b_ji(u) = f_ji(u - i/2),   h_0(u) = d_1(u),
//   h_i(u) = d~_i(u - i/2) d_{i+1}(u - i/2).

#include "tyv/algebra.hpp"
#include "tyv/series.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace tyv {

struct GaussData {
    const Algebra* alg = nullptr;
    int n = 0;
    int order = 0;
    std::string var = "u";
    std::vector<TruncatedSeries> d;       // d[i], 1-based padding at index 0
    std::vector<TruncatedSeries> d_tilde; // inverses of d[i]
    MatrixOfSeries E;                     // upper unitriangular, entries e_ij (i<j)
    MatrixOfSeries F;                     // lower unitriangular, entries f_ji (i<j)
    MatrixOfSeries E_tilde;               // E^{-1}
    MatrixOfSeries F_tilde;               // F^{-1}

    const TruncatedSeries& e(int i, int j) const { return E.at(i, j); }
    const TruncatedSeries& f(int j, int i) const { return F.at(j, i); }
    const TruncatedSeries& e_tilde(int i, int j) const { return E_tilde.at(i, j); }
    const TruncatedSeries& f_tilde(int j, int i) const { return F_tilde.at(j, i); }
};

// Block LDU elimination by iterated Schur complements.  The constant term of
// S is the identity, so every pivot d_i has scalar constant term 1 and is
// invertible in the truncated ring; the decomposition is unique.
inline GaussData gauss_decompose(const MatrixOfSeries& S, const std::string& var = "u") {
    const int n = S.n();
    const Algebra* alg = S.at(1, 1).algebra();
    const auto& vars = S.at(1, 1).vars();
    const int order = S.at(1, 1).valid_order();
    GaussData g;
    g.alg = alg;
    g.n = n;
    g.order = order;
    g.var = var;
    g.d.assign(n + 1, TruncatedSeries::zero(alg, vars, order));
    g.d_tilde = g.d;
    g.E = MatrixOfSeries::identity(n, alg, vars, order);
    g.F = g.E;
    MatrixOfSeries A = S; // successive Schur complements in the trailing block
    for (int i = 1; i <= n; ++i) {
        g.d[i] = A.at(i, i);
        g.d_tilde[i] = g.d[i].inverse();
        for (int j = i + 1; j <= n; ++j) {
            g.E.at(i, j) = g.d_tilde[i] * A.at(i, j);
            g.F.at(j, i) = A.at(j, i) * g.d_tilde[i];
        }
        for (int k = i + 1; k <= n; ++k)
            for (int l = i + 1; l <= n; ++l)
                A.at(k, l) -= g.F.at(k, i) * (g.d[i] * g.E.at(i, l));
    }
    g.E_tilde = g.E.inverse();
    g.F_tilde = g.F.inverse();
    return g;
}

inline MatrixOfSeries reconstruct(const GaussData& g) {
    const auto& vars = g.d[1].vars();
    MatrixOfSeries D = MatrixOfSeries::zero(g.n, g.alg, vars, g.order);
    for (int i = 1; i <= g.n; ++i) D.at(i, i) = g.d[i];
    return g.F * (D * g.E);
}

// Quasi-determinant |X|_ij = ((X^{-1})_ji)^{-1}, computed in the equivalent
// Schur-complement form x_ij - r_i (X^{ij})^{-1} c_j, where X^{ij} drops row
// i and column j.  The bordered blocks used for e_ij / f_ji have a singular
// constant term as full matrices, but their (i,j)-minor is a leading
// principal block of S and is invertible, so this form always applies here.
inline TruncatedSeries quasideterminant(const MatrixOfSeries& X, int i, int j) {
    const int n = X.n();
    if (n == 1) return X.at(1, 1);
    std::vector<int> rows, cols;
    for (int r = 1; r <= n; ++r)
        if (r != i) rows.push_back(r);
    for (int c = 1; c <= n; ++c)
        if (c != j) cols.push_back(c);
    MatrixOfSeries M = MatrixOfSeries::zero(n - 1, X.at(1, 1).algebra(),
                                            X.at(1, 1).vars(),
                                            X.at(1, 1).valid_order());
    for (int a = 0; a < n - 1; ++a)
        for (int b = 0; b < n - 1; ++b) M.at(a + 1, b + 1) = X.at(rows[a], cols[b]);
    MatrixOfSeries Minv = M.inverse();
    TruncatedSeries acc = X.at(i, j);
    for (int a = 0; a < n - 1; ++a)
        for (int b = 0; b < n - 1; ++b)
            acc -= X.at(i, cols[a]) * (Minv.at(a + 1, b + 1) * X.at(rows[b], j));
    return acc;
}

// Direct inverse-entry form of the quasi-determinant; needs the whole matrix
// to have identity constant term (true for leading principal blocks of S).
inline TruncatedSeries quasideterminant_by_inverse(const MatrixOfSeries& X, int i,
                                                   int j) {
    if (X.n() == 1) return X.at(1, 1);
    return X.inverse().at(j, i).inverse();
}

inline MatrixOfSeries leading_block(const MatrixOfSeries& S, int k) {
    MatrixOfSeries B = MatrixOfSeries::zero(k, S.at(1, 1).algebra(), S.at(1, 1).vars(),
                                            S.at(1, 1).valid_order());
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) B.at(i, j) = S.at(i, j);
    return B;
}

// The bordered block whose boxed (i,i) quasi-determinant gives d_i e_ij:
// rows 1..i of S, columns 1..i-1 and j.
inline MatrixOfSeries e_block(const MatrixOfSeries& S, int i, int j) {
    MatrixOfSeries B = leading_block(S, i);
    for (int a = 1; a <= i; ++a) B.at(a, i) = S.at(a, j);
    return B;
}

// Mirror block for f_ji d_i: rows 1..i-1 and j, columns 1..i.
inline MatrixOfSeries f_block(const MatrixOfSeries& S, int j, int i) {
    MatrixOfSeries B = leading_block(S, i);
    for (int b = 1; b <= i; ++b) B.at(i, b) = S.at(j, b);
    return B;
}

// Signed-path formula for the entries of E^{-1}:
//   e~_ij(u) = sum over i = i_0 < i_1 < ... < i_s = j of
//              (-1)^s e_{i_0 i_1}(u) ... e_{i_{s-1} i_s}(u).
inline TruncatedSeries tilde_e_path(const GaussData& g, int i, int j) {
    const auto& vars = g.d[1].vars();
    TruncatedSeries acc = TruncatedSeries::zero(g.alg, vars, g.order);
    // Enumerate increasing paths by DFS, multiplying as we descend.
    struct Walker {
        const GaussData& g;
        TruncatedSeries& acc;
        int target;
        void go(int at, int sign, const TruncatedSeries& prefix) {
            if (at == target) {
                acc.add_scaled(prefix, sign);
                return;
            }
            for (int next = at + 1; next <= target; ++next)
                go(next, -sign, prefix * g.E.at(at, next));
        }
    } w{g, acc, j};
    w.go(i, 1, TruncatedSeries::scalar(g.alg, vars, 1, g.order));
    return acc;
}

// Mirror formula for F^{-1}: paths multiply downward, f-factors reversed.
inline TruncatedSeries tilde_f_path(const GaussData& g, int j, int i) {
    const auto& vars = g.d[1].vars();
    TruncatedSeries acc = TruncatedSeries::zero(g.alg, vars, g.order);
    struct Walker {
        const GaussData& g;
        TruncatedSeries& acc;
        int target;
        void go(int at, int sign, const TruncatedSeries& suffix) {
            if (at == target) {
                acc.add_scaled(suffix, sign);
                return;
            }
            for (int next = at + 1; next <= target; ++next)
                go(next, -sign, g.F.at(next, at) * suffix);
        }
    } w{g, acc, j};
    w.go(i, 1, TruncatedSeries::scalar(g.alg, vars, 1, g.order));
    return acc;
}

// sdet S(u) = d_1(u) d_2(u-1) ... d_n(u-n+1).
inline TruncatedSeries compute_sdet(const GaussData& g) {
    TruncatedSeries acc = g.d[1];
    for (int i = 2; i <= g.n; ++i) acc = acc * g.d[i].shift(g.var, -(i - 1));
    return acc;
}

// Current generating series and their coefficient tables.
struct Currents {
    const Algebra* alg = nullptr;
    int n = 0;
    int order = 0;
    std::vector<TruncatedSeries> b; // b[i] = b_{i+1,i}(u) = f_{i+1,i}(u - i/2), 1<=i<n
    std::vector<TruncatedSeries> h; // h[0] = d_1(u); h[i] = d~_i(u-i/2) d_{i+1}(u-i/2)
    std::map<std::pair<int, int>, TruncatedSeries> b_full; // b_ji for all i<j

    // b_{i,r} = coefficient of u^{-r-1} in b[i]
    Element b_coeff(int i, int r) const { return b.at(i).coefficient("u", -r - 1); }
    // h_{i,r} = coefficient of u^{-r-1} in h[i]; h_{i,-1} = 1 by convention
    Element h_coeff(int i, int r) const {
        if (r == -1) return Element::one();
        return h.at(i).coefficient("u", -r - 1);
    }
};

inline Currents build_currents(const GaussData& g) {
    Currents c;
    c.alg = g.alg;
    c.n = g.n;
    c.order = g.order;
    c.b.assign(g.n, TruncatedSeries::zero(g.alg, g.d[1].vars(), g.order));
    c.h.assign(g.n, TruncatedSeries::zero(g.alg, g.d[1].vars(), g.order));
    c.h[0] = g.d[1];
    for (int i = 1; i < g.n; ++i) {
        c.b[i] = g.F.at(i + 1, i).shift(g.var, -Rat(i, 2));
        c.h[i] = g.d_tilde[i].shift(g.var, -Rat(i, 2)) *
                 g.d[i + 1].shift(g.var, -Rat(i, 2));
    }
    for (int i = 1; i < g.n; ++i)
        for (int j = i + 1; j <= g.n; ++j)
            c.b_full[{j, i}] = g.F.at(j, i).shift(g.var, -Rat(i, 2));
    return c;
}

// Table of the formal brackets [h_{i,m}, b_{j,-1}] from the presentation's
// r = 0 Serre convention, built by the inductive rule
//   [h_{i,-1}, b_{j,-1}] = 0,  [h_{i,0}, b_{j,-1}] = 0,
//   [h_{i,m+1}, b_{j,-1}] = [h_{i,m-1}, b_{j,1}] - {h_{i,m-1}, b_{j,0}}
//                           + (1/4)[h_{i,m-1}, b_{j,-1}],
// where h_{i,-1} = 1 acts as [1,x] = 0, {1,x} = 2x.
inline std::vector<Element> h_b_minus1_table(const Currents& c, int i, int j,
                                             int max_m) {
    const Algebra& A = *c.alg;
    std::vector<Element> table(max_m + 1); // table[m] = [h_{i,m}, b_{j,-1}]
    for (int m = 0; m <= max_m; ++m) {
        if (m == 0) continue; // declared zero
        // m = (m-2) + 2 pattern: use the rule with h_{i,m-2}
        const int p = m - 2; // h-index feeding the recursion
        Element via_rule;
        if (p == -1) {
            via_rule = A.commutator(Element::one(), c.b_coeff(j, 1)) -
                       (c.b_coeff(j, 0) * Rat(2));
            // + (1/4) * 0
        } else {
            via_rule = A.commutator(c.h_coeff(i, p), c.b_coeff(j, 1)) -
                       A.anticommutator(c.h_coeff(i, p), c.b_coeff(j, 0));
            via_rule.add_scaled(table[p], Rat(1, 4));
        }
        table[m] = std::move(via_rule);
    }
    return table;
}

} // namespace tyv
