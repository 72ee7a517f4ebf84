#pragma once

// Linear-independence check for ordered monomials in the current-coefficient
// generators, at bounded degree and length, against a purely combinatorial
// count.  Three counts must agree: the enumerated monomial list, the exact
// rational rank of the image matrix, and a multiplicity-based recurrence that
// never touches the algebra engine.

#include "tyv/gauss.hpp"
#include "tyv/embedding.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tyv {

// One generator of the bounded PBW alphabet.  Kinds: h_{k,2s+1} (odd degree
// 2s+1) listed before every b_{ji,r} (degree r, 1 <= i < j <= n).
struct PbwGen {
    bool is_h = false;
    int a = 0, b = 0; // h: (k, 0); b: (j, i) with j > i
    int r = 0;        // coefficient index; degree = r for b, r for h (r odd)
    int degree = 0;
};

struct PbwBasisSpec {
    int n = 0;
    bool h_includes_zero = true; // k ranges over 0..n-1; false -> 1..n-1
    std::vector<PbwGen> gens;    // all h's first, then all b's, degree-sorted
};

inline PbwBasisSpec make_pbw_spec(int n, int max_degree, bool h_includes_zero = true) {
    PbwBasisSpec spec;
    spec.n = n;
    spec.h_includes_zero = h_includes_zero;
    for (int d = 1; d <= max_degree; d += 2)
        for (int k = h_includes_zero ? 0 : 1; k < n; ++k)
            spec.gens.push_back({true, k, 0, d, d});
    for (int d = 0; d <= max_degree; ++d)
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) spec.gens.push_back({false, j, i, d, d});
    return spec;
}

// All ordered monomials (non-decreasing generator index sequences) with total
// degree <= d and length <= length_cap; degree-0 generators force the length
// cap.  Deterministic order: by length-lex on generator indices.
inline std::vector<std::vector<int>> enumerate_pbw_monomials(const PbwBasisSpec& spec,
                                                             int d, int length_cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int min_gen, int deg_left) -> void {
        out.push_back(cur);
        if (static_cast<int>(cur.size()) >= length_cap) return;
        for (int g = min_gen; g < static_cast<int>(spec.gens.size()); ++g) {
            if (spec.gens[g].degree > deg_left) continue;
            cur.push_back(g);
            self(self, g, deg_left - spec.gens[g].degree);
            cur.pop_back();
        }
    };
    rec(rec, 0, d);
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return out;
}

// Combinatorial count of the same monomial set from generator-degree
// multiplicities alone: per degree t the alphabet has n(n-1)/2 generators,
// plus n (or n-1) more when t is odd.  DP over (#degrees seen, remaining
// degree, remaining length), choosing a multiset from each degree class.
inline long long dimension_oracle(int n, int d, int length_cap,
                                  bool h_includes_zero = true) {
    std::vector<long long> mult(d + 1);
    for (int t = 0; t <= d; ++t) {
        mult[t] = static_cast<long long>(n) * (n - 1) / 2;
        if (t % 2 == 1) mult[t] += h_includes_zero ? n : (n - 1);
    }
    // ways[deg][len] after processing degree classes 0..t
    std::vector<std::vector<long long>> ways(d + 1,
                                             std::vector<long long>(length_cap + 1));
    ways[0][0] = 1;
    auto binom = [](long long a, long long b) {
        long long r = 1;
        for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    for (int t = 0; t <= d; ++t) {
        std::vector<std::vector<long long>> next(d + 1,
                                                 std::vector<long long>(length_cap + 1));
        for (int deg = 0; deg <= d; ++deg)
            for (int len = 0; len <= length_cap; ++len) {
                if (!ways[deg][len]) continue;
                for (int k = 0; len + k <= length_cap; ++k) {
                    long long ndeg = deg + static_cast<long long>(k) * t;
                    if (t > 0 && ndeg > d) break;
                    if (t == 0 && k > 0 && deg > d) break;
                    // multiset of k generators from mult[t] choices
                    next[static_cast<int>(ndeg)][len + k] +=
                        ways[deg][len] * binom(mult[t] + k - 1, k);
                    if (t == 0 && mult[t] == 0 && k > 0) break;
                }
            }
        ways.swap(next);
    }
    long long total = 0;
    for (int deg = 0; deg <= d; ++deg)
        for (int len = 0; len <= length_cap; ++len) total += ways[deg][len];
    return total;
}

// Image of one alphabet generator inside the truncated model.
inline Element pbw_image(const Currents& c, const PbwGen& g) {
    if (g.is_h) return c.h_coeff(g.a, g.r);
    if (g.b == g.a - 1) return c.b_coeff(g.b, g.r);
    return c.b_full.at({g.a, g.b}).coefficient("u", -g.r - 1);
}

struct RankResult {
    int n = 0;
    int degree = 0;
    int length_cap = 0;
    long long monomial_count = 0;
    long long rank = 0;
    long long oracle_count = 0;
    bool pass() const { return rank == monomial_count && oracle_count == monomial_count; }
};

namespace detail {

// Exact rank of a sparse rational matrix (rows as column->value maps) by
// Gaussian elimination with full fractions; column order is supplied.
inline long long sparse_rank(std::vector<std::map<int, Rat>> rows) {
    long long rank = 0;
    std::vector<std::pair<int, std::map<int, Rat>>> pivots; // (col, normalized row)
    for (auto& row : rows) {
        for (const auto& [pc, pr] : pivots) {
            auto it = row.find(pc);
            if (it == row.end()) continue;
            Rat f = it->second;
            for (const auto& [c2, v2] : pr) {
                Rat& slot = row[c2];
                slot -= f * v2;
                if (slot == 0) row.erase(c2);
            }
        }
        if (row.empty()) continue;
        int pc = row.begin()->first;
        Rat lead = row.begin()->second;
        for (auto& [c2, v2] : row) v2 /= lead;
        pivots.emplace_back(pc, std::move(row));
        std::sort(pivots.begin(), pivots.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        ++rank;
    }
    return rank;
}

} // namespace detail

// Maps each enumerated monomial to its normal form, assembles the sparse
// coefficient matrix (columns = ambient basis words in graded-lex order) and
// computes its exact rank.  extra_rows lets tests inject dependent rows.
inline RankResult rank_check(const Algebra& A, const PbwBasisSpec& spec, int d,
                             int length_cap, int order,
                             const std::vector<Element>& extra_rows = {}) {
    if (order < d + 2)
        throw std::invalid_argument("rank_check: order too small for exact images");
    MatrixOfSeries S = build_S_matrix(A, order);
    Currents cur = build_currents(gauss_decompose(S));
    std::vector<Element> gen_images(spec.gens.size());
    for (std::size_t g = 0; g < spec.gens.size(); ++g)
        gen_images[g] = pbw_image(cur, spec.gens[g]);

    std::vector<std::vector<int>> monos = enumerate_pbw_monomials(spec, d, length_cap);
    std::vector<Element> images(monos.size() + extra_rows.size());
    parallel_for(monos.size(), [&](std::size_t t) {
        Element p = Element::one();
        for (int g : monos[t]) p = A.mul(p, gen_images[g]);
        images[t] = std::move(p);
    });
    for (std::size_t t = 0; t < extra_rows.size(); ++t)
        images[monos.size() + t] = extra_rows[t];

    // Column order: graded lexicographic on the ambient normal words.
    std::vector<MonoId> cols;
    for (const auto& e : images)
        for (const auto& [m, c] : e.terms()) cols.push_back(m);
    std::sort(cols.begin(), cols.end(), [&](MonoId x, MonoId y) {
        int dx = A.mono_degree(x), dy = A.mono_degree(y);
        if (dx != dy) return dx < dy;
        return A.word(x) < A.word(y);
    });
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    std::map<MonoId, int> col_of;
    for (std::size_t k = 0; k < cols.size(); ++k) col_of[cols[k]] = static_cast<int>(k);

    std::vector<std::map<int, Rat>> rows(images.size());
    for (std::size_t t = 0; t < images.size(); ++t)
        for (const auto& [m, c] : images[t].terms()) rows[t][col_of.at(m)] = c;

    RankResult res;
    res.n = A.n();
    res.degree = d;
    res.length_cap = length_cap;
    res.monomial_count = static_cast<long long>(monos.size() + extra_rows.size());
    res.rank = detail::sparse_rank(std::move(rows));
    res.oracle_count = dimension_oracle(A.n(), d, length_cap, spec.h_includes_zero) +
                       static_cast<long long>(extra_rows.size());
    return res;
}

inline void report_rank_result(const RankResult& r, ReportSink& sink) {
    Stopwatch sw;
    RelationReport row;
    row.suite = "pbw";
    row.relation = "three-way-count";
    row.indices = {r.n, r.degree, r.length_cap, static_cast<int>(r.monomial_count),
                   static_cast<int>(r.rank), static_cast<int>(r.oracle_count)};
    row.pass = r.pass();
    if (!row.pass) row.witness = "count/rank/oracle disagree";
    row.millis = sw.millis();
    sink.add(std::move(row));
}

} // namespace tyv
