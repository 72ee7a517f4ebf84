#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tyv/verifier.hpp"

using namespace tyv;

namespace {

std::size_t count_rel(const ReportSink& sink, const std::string& rel) {
    std::size_t k = 0;
    for (const auto& r : sink.sorted_rows())
        if (r.relation == rel) ++k;
    return k;
}

} // namespace

TEST_CASE("rank-1 suite passes at a reduced sweep") {
    Algebra A(2);
    ReportSink sink;
    verify_rank1_suite(A, 3, sink);
    REQUIRE(sink.all_pass());
    // Every catalogued relation family must actually have run.
    for (const char* rel :
         {"d-commute", "f-reflects-to-e", "dd-even", "d1-e-exchange", "d1-f-exchange",
          "d2-e-exchange", "d2-f-exchange", "e-f-exchange", "e-f-exchange-mirror",
          "e-e-exchange", "f-f-exchange", "hh-series", "bb-series", "hb-series",
          "h-even", "hh", "bb", "hb", "bb-alt"})
        CHECK_MESSAGE(count_rel(sink, rel) > 0, rel);
}

TEST_CASE("rank-1 componentwise oracle: [b_1, b_0] against the closed form") {
    // Independent of the series machinery: the alternative bracket form at
    // (r,s) = (1,0) says [b_1, b_0] = b_0 b_0 + h_1 (sign (-1)^1 on h).
    Algebra A(2);
    MatrixOfSeries S = build_S_matrix(A, 5);
    Currents c = build_currents(gauss_decompose(S));
    Element lhs = A.commutator(c.b_coeff(1, 1), c.b_coeff(1, 0));
    Element rhs = A.mul(c.b_coeff(1, 0), c.b_coeff(1, 0)) - c.h_coeff(1, 1);
    CHECK(lhs == rhs);
}

TEST_CASE("negative control: perturbed rank-1 bracket identity fails") {
    Algebra A(2);
    MatrixOfSeries S = build_S_matrix(A, 5);
    Currents c = build_currents(gauss_decompose(S));
    Element lhs = A.commutator(c.b_coeff(1, 1), c.b_coeff(1, 0));
    Element rhs = A.mul(c.b_coeff(1, 0), c.b_coeff(1, 0)) + c.h_coeff(1, 1);
    CHECK_FALSE(lhs == rhs);
}

TEST_CASE("rank-2 suite passes at a reduced sweep") {
    Algebra A(3);
    ReportSink sink;
    verify_rank2_suite(A, 2, sink);
    REQUIRE(sink.all_pass());
    for (const char* rel :
         {"ef-reflection", "ef-reflection-mirror", "e1-e2-exchange",
          "e1-e2-exchange-mirror", "e-coeff-dtilde", "e-coeff-dtilde-mirror",
          "long-e-exchange", "long-e-exchange-mirror", "ee-adjacent",
          "ee-adjacent-mirror", "double-bracket", "double-bracket-mirror", "h-even",
          "hh", "hb", "bb", "serre-sum", "serre-reduction", "serre-simple"})
        CHECK_MESSAGE(count_rel(sink, rel) > 0, rel);
}

TEST_CASE("symmetrized triple-bracket claims at a reduced sweep") {
    Algebra A(3);
    ReportSink sink;
    verify_serre_claims(A, 2, sink);
    REQUIRE(sink.all_pass());
    CHECK(count_rel(sink, "sum-form-agrees") > 0);
    CHECK(count_rel(sink, "raise-lower-antisym") +
              count_rel(sink, "raise-lower-antisym-base") >
          0);
    CHECK(count_rel(sink, "odd-vanish") > 0);
}

TEST_CASE("current-presentation sweep at n=2 reproduces the rank-1 components") {
    Algebra A(2);
    ReportSink sink;
    verify_drinfeld(A, 5, 2, sink);
    REQUIRE(sink.all_pass());
    // No serre rows at n=2: there is only one b index, so no (i,j) pair
    // with Cartan entry -1 among the b's.
    for (const char* rel : {"h-even", "hh", "hb", "h1b", "bb"})
        CHECK_MESSAGE(count_rel(sink, rel) > 0, rel);
    CHECK(count_rel(sink, "serre") == 0);
}

TEST_CASE("current-presentation sweep at n=3 includes distant and serre rows") {
    Algebra A(3);
    ReportSink sink;
    verify_drinfeld(A, 4, 1, sink);
    REQUIRE(sink.all_pass());
    CHECK(count_rel(sink, "serre") > 0);
    CHECK(count_rel(sink, "serre-r0") > 0);
}

TEST_CASE("shifted determinant coefficients are central (n=2, small sweep)") {
    Algebra A(2);
    ReportSink sink;
    verify_sdet_central(A, 4, sink);
    REQUIRE(sink.all_pass());
    CHECK(sink.size() > 0);
}

TEST_CASE("frozen oracle: sdet for n=2 equals d_1(u) d_2(u-1) entrywise") {
    Algebra A(2);
    MatrixOfSeries S = build_S_matrix(A, 4);
    GaussData g = gauss_decompose(S);
    TruncatedSeries expect = g.d[1] * g.d[2].shift("u", -1);
    CHECK((compute_sdet(g) - expect).is_zero());
    // c_1 = s_11^(1) + s_22^(1) - 2; the -2 shifts away since s_ii^(1) has no
    // scalar part -- here c_1 = s_22^(1) * coefficient bookkeeping check:
    Element c1 = compute_sdet(g).coefficient("u", -1);
    Element direct = S.at(1, 1).coefficient("u", -1) + S.at(2, 2).coefficient("u", -1);
    CHECK(c1 == direct);
}

TEST_CASE("transform images at n=2: involution, exchange law, factor matching") {
    Algebra A(2);
    ReportSink sink;
    verify_transforms(A, 2, sink);
    REQUIRE(sink.all_pass());
    for (const char* rel :
         {"reflect-quaternary", "reverse-quaternary", "reflect-involutive",
          "reverse-d", "reverse-e", "reverse-f", "reverse-e-current",
          "reverse-f-current"})
        CHECK_MESSAGE(count_rel(sink, rel) > 0, rel);
}

TEST_CASE("transform oracle: reflected matrix times reflected inverse is identity") {
    Algebra A(2);
    MatrixOfSeries S = build_S_matrix(A, 4);
    MatrixOfSeries W = detail::reflect_transform(S, "u");
    // W is entrywise S^{-1}(-u-1); applying the same map to W must return S
    // because the reflection substitution is a ring map commuting with
    // matrix inversion.
    MatrixOfSeries WW = detail::reflect_transform(W, "u");
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) CHECK((WW.at(i, j) - S.at(i, j)).is_zero());
}
