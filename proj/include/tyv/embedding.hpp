#pragma once

// Realization of the twisted Yangian inside Y(gl_N): build the generator
// matrix T(u), the product S(u) = T(u) T^t(-u), and verify the defining
// relations of the twisted Yangian (quaternary, symmetry, inverse-matrix
// exchange) plus the RTT oracle that legitimizes the straightening rule.

#include "tyv/algebra.hpp"
#include "tyv/parallel.hpp"
#include "tyv/report.hpp"
#include "tyv/series.hpp"

#include <string>
#include <vector>

namespace tyv {

// T(u): entry (i,j) = delta_ij + sum_{r<=order} t_ij^(r) u^{-r}.
inline MatrixOfSeries build_T(const Algebra& A, int order,
                              std::vector<std::string> vars = {"u"},
                              const std::string& v = "u") {
    MatrixOfSeries T = MatrixOfSeries::zero(A.n(), &A, vars, order);
    for (int i = 1; i <= A.n(); ++i) {
        for (int j = 1; j <= A.n(); ++j) {
            TruncatedSeries s = TruncatedSeries::zero(&A, vars, order);
            if (i == j) s.accumulate({0, 0, 0}, Element::one());
            TruncatedSeries::Exp e{0, 0, 0};
            const int k = s.var_index(v);
            for (int r = 1; r <= order; ++r) {
                e[k] = -r;
                s.accumulate(e, A.generator(i, j, r));
            }
            T.at(i, j) = std::move(s);
        }
    }
    return T;
}

// S(u) = T(u) T^t(-u); entry (i,j) = sum_a t_ia(u) t_ja(-u).
inline MatrixOfSeries build_S_matrix(const Algebra& A, int order,
                                     std::vector<std::string> vars = {"u"},
                                     const std::string& v = "u") {
    MatrixOfSeries T = build_T(A, order, vars, v);
    MatrixOfSeries Tt = T;
    for (int i = 1; i <= A.n(); ++i)
        for (int j = 1; j <= A.n(); ++j) Tt.at(i, j) = T.at(j, i).negate_var(v);
    return T * Tt;
}

struct EmbeddedS {
    const Algebra* alg = nullptr;
    int n = 0;
    int order = 0;
    MatrixOfSeries S;
    MatrixOfSeries S_inv;
};

inline EmbeddedS build_S(const Algebra& A, int order) {
    EmbeddedS out{&A, A.n(), order, build_S_matrix(A, order), MatrixOfSeries(1, TruncatedSeries::zero(&A, {"u"}, 0))};
    out.S_inv = out.S.inverse();
    return out;
}

// ---- check plumbing --------------------------------------------------------

// Records pass/fail of "s == 0" into the row; on failure the first nonzero
// term becomes the witness and its exponents are recorded.
inline void finish_zero_check(const Algebra& A, const TruncatedSeries& s,
                              RelationReport row, const Stopwatch& sw,
                              ReportSink& sink) {
    if (auto t = s.first_term()) {
        row.pass = false;
        row.exponents = {t->first[0], t->first[1], t->first[2]};
        row.witness = A.to_string(t->second);
    } else {
        row.pass = true;
    }
    row.millis = sw.millis();
    sink.add(std::move(row));
}

// ---- RTT oracle -------------------------------------------------------------

// Cleared RTT relation (u-v)[t_ij(u), t_kl(v)] = t_kj(u) t_il(v) - t_kj(v) t_il(u),
// checked coefficientwise for all index 4-tuples and all exponent pairs with
// r + s <= max_level.  This run is the oracle that justifies the
// componentwise straightening formula used by the algebra kernel.
inline void verify_rtt_components(const Algebra& A, int max_level, ReportSink& sink,
                                  int jobs = 0) {
    const int n = A.n();
    const std::vector<std::string> vars{"u", "v"};
    MatrixOfSeries Tu = build_T(A, max_level + 1, vars, "u");
    MatrixOfSeries Tv = build_T(A, max_level + 1, vars, "v");
    TruncatedSeries uv = TruncatedSeries::monomial(&A, vars, "u", 1) -
                         TruncatedSeries::monomial(&A, vars, "v", 1);
    std::vector<std::array<int, 4>> tuples;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) tuples.push_back({i, j, k, l});
    parallel_for(tuples.size(), [&](std::size_t t) {
        auto [i, j, k, l] = tuples[t];
        Stopwatch sw;
        TruncatedSeries lhs =
            uv * (Tu.at(i, j) * Tv.at(k, l) - Tv.at(k, l) * Tu.at(i, j));
        TruncatedSeries rhs = Tu.at(k, j) * Tv.at(i, l) - Tv.at(k, j) * Tu.at(i, l);
        RelationReport row;
        row.suite = "embedding";
        row.relation = "rtt";
        row.indices = {i, j, k, l};
        finish_zero_check(A, lhs - rhs, std::move(row), sw, sink);
    }, jobs);
}

// ---- defining relations of the twisted Yangian ------------------------------

// Cleared quaternary relation:
// (u^2-v^2)[s_ij(u), s_kl(v)] = (u+v)(s_kj(u) s_il(v) - s_kj(v) s_il(u))
//                             - (u-v)(s_ik(u) s_jl(v) - s_ki(v) s_lj(u))
//                             + s_ki(u) s_jl(v) - s_ki(v) s_jl(u)
inline void verify_quaternary_on(const Algebra& A, const MatrixOfSeries& Su,
                                 const MatrixOfSeries& Sv, ReportSink& sink,
                                 int jobs = 0, const std::string& suite = "embedding",
                                 const std::string& relation = "quaternary") {
    const int n = Su.n();
    const std::vector<std::string>& vars = Su.at(1, 1).vars();
    auto u = TruncatedSeries::monomial(&A, vars, "u", 1);
    auto v = TruncatedSeries::monomial(&A, vars, "v", 1);
    std::vector<std::array<int, 4>> tuples;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) tuples.push_back({i, j, k, l});
    parallel_for(tuples.size(), [&](std::size_t t) {
        auto [i, j, k, l] = tuples[t];
        Stopwatch sw;
        TruncatedSeries lhs = (u * u - v * v) *
                              (Su.at(i, j) * Sv.at(k, l) - Sv.at(k, l) * Su.at(i, j));
        TruncatedSeries rhs =
            (u + v) * (Su.at(k, j) * Sv.at(i, l) - Sv.at(k, j) * Su.at(i, l)) -
            (u - v) * (Su.at(i, k) * Sv.at(j, l) - Sv.at(k, i) * Su.at(l, j)) +
            Su.at(k, i) * Sv.at(j, l) - Sv.at(k, i) * Su.at(j, l);
        RelationReport row;
        row.suite = suite;
        row.relation = relation;
        row.indices = {i, j, k, l};
        finish_zero_check(A, lhs - rhs, std::move(row), sw, sink);
    }, jobs);
}

inline void verify_quaternary(const Algebra& A, int max_pair_order, ReportSink& sink,
                              int jobs = 0, const std::string& suite = "embedding") {
    const int D = max_pair_order + 2;
    const std::vector<std::string> vars{"u", "v"};
    MatrixOfSeries Su = build_S_matrix(A, D, vars, "u");
    MatrixOfSeries Sv = build_S_matrix(A, D, vars, "v");
    verify_quaternary_on(A, Su, Sv, sink, jobs, suite);
}

// Cleared symmetry relation 2u (s_ji(-u) - s_ij(u)) = s_ij(u) - s_ij(-u),
// plus evenness of every diagonal series s_ii(u).
inline void verify_symmetry(const EmbeddedS& E, ReportSink& sink, int jobs = 0) {
    const Algebra& A = *E.alg;
    const std::vector<std::string> vars{"u"};
    auto u = TruncatedSeries::monomial(&A, vars, "u", 1);
    std::vector<std::array<int, 2>> tuples;
    for (int i = 1; i <= E.n; ++i)
        for (int j = 1; j <= E.n; ++j) tuples.push_back({i, j});
    parallel_for(tuples.size(), [&](std::size_t t) {
        auto [i, j] = tuples[t];
        Stopwatch sw;
        const TruncatedSeries& sij = E.S.at(i, j);
        TruncatedSeries sij_neg = sij.negate_var("u");
        TruncatedSeries sji_neg = E.S.at(j, i).negate_var("u");
        TruncatedSeries lhs = Rat(2) * (u * (sji_neg - sij));
        RelationReport row;
        row.suite = "embedding";
        row.relation = "symmetry";
        row.indices = {i, j};
        finish_zero_check(A, lhs - (sij - sij_neg), std::move(row), sw, sink);
        if (i == j) {
            Stopwatch sw2;
            RelationReport even;
            even.suite = "embedding";
            even.relation = "diagonal-even";
            even.indices = {i};
            finish_zero_check(A, sij - sij_neg, std::move(even), sw2, sink);
        }
    }, jobs);
}

// Exchange relation between S(u) and its inverse S~(v) (cleared):
// (u^2-v^2)[s_ij(u), s~_kl(v)] =
//   (u+v)(d_jk sum_a s_ia(u) s~_al(v) - d_il sum_a s~_ka(v) s_aj(u))
// + (u-v)(d_jl sum_a s~_ka(v) s_ia(u) - d_ik sum_a s_aj(u) s~_al(v))
// +       d_ik sum_a s_ja(u) s~_al(v) - d_jl sum_a s~_ka(v) s_ai(u)
// Note the (u-v) block sums over a *shared column* (s~_ka s_ia) and a
// *shared row* (s_aj s~_al); only the other four sums are matrix products.
// and, whenever {i,j} and {k,l} are disjoint, [s_ij(u), s~_kl(v)] = 0.
inline void verify_sts(const Algebra& A, int max_pair_order, ReportSink& sink,
                       int jobs = 0) {
    const int n = A.n();
    const int D = max_pair_order + 2;
    const std::vector<std::string> vars{"u", "v"};
    MatrixOfSeries Su = build_S_matrix(A, D, vars, "u");
    MatrixOfSeries Stv = build_S_matrix(A, D, vars, "v").inverse();
    auto u = TruncatedSeries::monomial(&A, vars, "u", 1);
    auto v = TruncatedSeries::monomial(&A, vars, "v", 1);
    std::vector<std::array<int, 4>> tuples;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) tuples.push_back({i, j, k, l});
    parallel_for(tuples.size(), [&](std::size_t t) {
        auto [i, j, k, l] = tuples[t];
        Stopwatch sw;
        TruncatedSeries com =
            Su.at(i, j) * Stv.at(k, l) - Stv.at(k, l) * Su.at(i, j);
        TruncatedSeries lhs = (u * u - v * v) * com;
        TruncatedSeries rhs = TruncatedSeries::zero(&A, vars, lhs.valid_order());
        auto sum1 = [&](int p, int q, bool s_first) {
            TruncatedSeries acc = TruncatedSeries::zero(&A, vars, D);
            for (int a = 1; a <= n; ++a)
                acc += s_first ? Su.at(p, a) * Stv.at(a, q)
                               : Stv.at(p, a) * Su.at(a, q);
            return acc;
        };
        auto shared_col = [&](int p, int q) { // sum_a s~_pa(v) s_qa(u)
            TruncatedSeries acc = TruncatedSeries::zero(&A, vars, D);
            for (int a = 1; a <= n; ++a) acc += Stv.at(p, a) * Su.at(q, a);
            return acc;
        };
        auto shared_row = [&](int p, int q) { // sum_a s_ap(u) s~_aq(v)
            TruncatedSeries acc = TruncatedSeries::zero(&A, vars, D);
            for (int a = 1; a <= n; ++a) acc += Su.at(a, p) * Stv.at(a, q);
            return acc;
        };
        if (j == k) rhs += (u + v) * sum1(i, l, true);
        if (i == l) rhs -= (u + v) * sum1(k, j, false);
        if (j == l) rhs += (u - v) * shared_col(k, i);
        if (i == k) rhs -= (u - v) * shared_row(j, l);
        if (i == k) rhs += sum1(j, l, true);
        if (j == l) rhs -= sum1(k, i, false);
        RelationReport row;
        row.suite = "embedding";
        row.relation = "sts";
        row.indices = {i, j, k, l};
        finish_zero_check(A, lhs - rhs, std::move(row), sw, sink);
        if (i != k && i != l && j != k && j != l) {
            Stopwatch sw2;
            RelationReport disj;
            disj.suite = "embedding";
            disj.relation = "sts-disjoint";
            disj.indices = {i, j, k, l};
            finish_zero_check(A, com, std::move(disj), sw2, sink);
        }
    }, jobs);
}

// ---- numeric Yang-Baxter check ----------------------------------------------

namespace detail {

// Dense square matrix of exact rationals, row-major.
struct QMat {
    int d = 0;
    std::vector<Rat> a;
    explicit QMat(int dim) : d(dim), a(static_cast<std::size_t>(dim) * dim, Rat(0)) {}
    Rat& at(int r, int c) { return a[static_cast<std::size_t>(r) * d + c]; }
    const Rat& at(int r, int c) const { return a[static_cast<std::size_t>(r) * d + c]; }
    static QMat identity(int dim) {
        QMat m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
        return m;
    }
    friend QMat operator*(const QMat& x, const QMat& y) {
        QMat z(x.d);
        for (int r = 0; r < x.d; ++r)
            for (int k = 0; k < x.d; ++k) {
                if (x.at(r, k) == 0) continue;
                for (int c = 0; c < x.d; ++c) {
                    if (y.at(k, c) == 0) continue;
                    z.at(r, c) += x.at(r, k) * y.at(k, c);
                }
            }
        return z;
    }
    bool operator==(const QMat& y) const { return a == y.a; }
};

// Flip of tensor factors p < q in (C^n)^{otimes 3}.
inline QMat flip3(int n, int p, int q) {
    const int d = n * n * n;
    QMat m(d);
    for (int i1 = 0; i1 < n; ++i1)
        for (int i2 = 0; i2 < n; ++i2)
            for (int i3 = 0; i3 < n; ++i3) {
                int idx[3] = {i1, i2, i3};
                int col = (i1 * n + i2) * n + i3;
                std::swap(idx[p], idx[q]);
                int row = (idx[0] * n + idx[1]) * n + idx[2];
                m.at(row, col) = 1;
            }
    return m;
}

inline QMat r_matrix(const QMat& id, const QMat& flip, const Rat& x) {
    QMat m = id;
    for (std::size_t k = 0; k < m.a.size(); ++k) m.a[k] -= flip.a[k] / x;
    return m;
}

} // namespace detail

// R(u) = 1 - P/u on the tensor cube, checked at generic rational points.
inline void verify_yang_baxter(int n, ReportSink& sink) {
    using detail::QMat;
    const int d = n * n * n;
    QMat id = QMat::identity(d);
    QMat p12 = detail::flip3(n, 0, 1);
    QMat p13 = detail::flip3(n, 0, 2);
    QMat p23 = detail::flip3(n, 1, 2);
    {
        Stopwatch sw;
        RelationReport row;
        row.suite = "embedding";
        row.relation = "flip-squares-to-identity";
        row.indices = {n};
        row.pass = (p12 * p12 == id) && (p13 * p13 == id) && (p23 * p23 == id);
        row.millis = sw.millis();
        sink.add(std::move(row));
    }
    const std::pair<int, int> points[] = {{3, 1}, {5, 2}, {7, 3}, {2, 9}, {11, 4}, {-4, 5}};
    for (auto [pu, pv] : points) {
        Stopwatch sw;
        Rat u = pu, v = pv;
        QMat r12 = detail::r_matrix(id, p12, u - v);
        QMat r13 = detail::r_matrix(id, p13, u);
        QMat r23 = detail::r_matrix(id, p23, v);
        RelationReport row;
        row.suite = "embedding";
        row.relation = "yang-baxter";
        row.indices = {n, pu, pv};
        row.pass = (r12 * r13) * r23 == (r23 * r13) * r12;
        if (!row.pass) row.witness = "matrix mismatch at the reported point";
        row.millis = sw.millis();
        sink.add(std::move(row));
    }
}

} // namespace tyv
