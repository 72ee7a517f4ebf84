#pragma once

// Pinned acceptance configuration: the full battery at the sizes the project
// commits to, one pass/fail line per criterion.

#include "tyv/pbw.hpp"
#include "tyv/verifier.hpp"

#include <iostream>
#include <random>

namespace tyv {

inline int run_acceptance(std::ostream& os, int jobs = 0, unsigned seed = 1) {
    int failures = 0;
    auto criterion = [&](const std::string& name, bool pass) {
        os << (pass ? "PASS" : "FAIL") << "  " << name << "\n" << std::flush;
        if (!pass) ++failures;
    };
    // 1. componentwise commutation oracle
    {
        ReportSink sink;
        for (int n : {2, 3}) {
            Algebra A(n);
            verify_rtt_components(A, 8, sink, jobs);
        }
        criterion("commutation oracle: n=2,3, all tuples, levels r+s<=8",
                  sink.all_pass());
    }
    // 2. defining relations of the embedded S
    {
        ReportSink sink;
        for (int n : {2, 3}) {
            Algebra A(n);
            verify_quaternary(A, 4, sink, jobs);
            EmbeddedS E = build_S(A, 6);
            verify_symmetry(E, sink, jobs);
            verify_sts(A, 4, sink, jobs);
        }
        criterion("embedding: exchange, symmetry, inverse-exchange (n=2,3, order 6)",
                  sink.all_pass());
    }
    // 3. Gauss reconstruction, quasideterminants, path expansion
    {
        bool ok = true;
        for (int n : {2, 3, 4}) {
            Algebra A(n);
            MatrixOfSeries S = build_S_matrix(A, 5);
            GaussData g = gauss_decompose(S);
            MatrixOfSeries R = reconstruct(g);
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    ok = ok && (R.at(i, j) - S.at(i, j)).is_zero();
            if (n == 3) {
                for (int k = 1; k <= n; ++k)
                    ok = ok &&
                         (quasideterminant(leading_block(S, k), k, k).truncate(4) -
                          g.d[k].truncate(4))
                             .is_zero();
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j)
                        ok = ok &&
                             (tilde_e_path(g, i, j) - g.e_tilde(i, j)).is_zero() &&
                             (tilde_f_path(g, j, i) - g.f_tilde(j, i)).is_zero();
            }
        }
        criterion("gauss: F.D.E = S (n=2,3,4, order 5); quasideterminants; paths", ok);
    }
    // 4. rank-1 relation suite
    {
        Algebra A(2);
        ReportSink sink;
        verify_rank1_suite(A, 6, sink, jobs);
        criterion("rank-1 factor/current relation suite (budget 6)", sink.all_pass());
    }
    // 5. rank-2 relation suite
    {
        Algebra A(3);
        ReportSink sink;
        verify_rank2_suite(A, 4, sink, jobs);
        criterion("rank-2 factor/current relation suite (budget 4, both orders)",
                  sink.all_pass());
    }
    // 6. symmetrized triple-bracket claims
    {
        Algebra A(3);
        ReportSink sink;
        verify_serre_claims(A, 4, sink);
        criterion("triple-bracket sum form, antisymmetry, odd vanishing (<=4)",
                  sink.all_pass());
    }
    // 7. full current-presentation sweep
    {
        Algebra A(4);
        ReportSink sink;
        verify_drinfeld(A, 6, 3, sink);
        criterion("current presentation: n=4, order 6, budget 3, incl. row 0",
                  sink.all_pass());
    }
    // 8. transform images
    {
        ReportSink sink;
        for (int n : {2, 3}) {
            Algebra A(n);
            verify_transforms(A, 4, sink, jobs);
        }
        criterion("transform images: exchange law, involution, factor matching",
                  sink.all_pass());
    }
    // 9. centrality of the shifted determinant
    {
        ReportSink sink;
        for (int n : {2, 3}) {
            Algebra A(n);
            verify_sdet_central(A, 5, sink);
        }
        criterion("shifted-determinant coefficients central (r+s<=5, n=2,3)",
                  sink.all_pass());
    }
    // 10. ordered-monomial independence, three-way agreement
    {
        bool ok = true;
        {
            Algebra A(2);
            RankResult r = rank_check(A, make_pbw_spec(2, 2), 2, 3, 5);
            ok = ok && r.pass();
            MatrixOfSeries S = build_S_matrix(A, 5);
            Currents cur = build_currents(gauss_decompose(S));
            Element dep = cur.b_coeff(1, 0) + cur.b_coeff(1, 1);
            RankResult bad = rank_check(A, make_pbw_spec(2, 2), 2, 3, 5, {dep});
            ok = ok && bad.rank < bad.monomial_count;
        }
        {
            Algebra A(3);
            RankResult r = rank_check(A, make_pbw_spec(3, 1), 1, 2, 4);
            ok = ok && r.pass();
        }
        criterion("pbw: three-way count agreement + negative control", ok);
    }
    // 11. kernel health
    {
        Algebra A(3);
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> idx(1, 3), lvl(1, 3), num(-9, 9);
        auto random_element = [&](int terms, int factors) {
            Element e;
            for (int t = 0; t < terms; ++t) {
                Element m = Element::one();
                for (int f = 0; f < factors; ++f)
                    m = A.mul(m, A.generator(idx(rng), idx(rng), lvl(rng)));
                int c = 0;
                while (c == 0) c = num(rng);
                e.add_scaled(m, Rat(c));
            }
            return e;
        };
        bool ok = true;
        for (int s = 0; s < 500 && ok; ++s) {
            Element a = random_element(1, 2), b = random_element(1, 2),
                    c = random_element(1, 2);
            Element lhs = A.mul(A.mul(a, b), c), rhs = A.mul(a, A.mul(b, c));
            ok = ok && lhs == rhs;
            ok = ok && A.mul(lhs, Element::one()) == lhs; // normal form is stable
        }
        criterion("kernel: 500-sample associativity fuzz + idempotence", ok);
    }
    os << (failures ? "ACCEPTANCE: FAIL" : "ACCEPTANCE: PASS") << "\n";
    return failures ? 1 : 0;
}

} // namespace tyv
