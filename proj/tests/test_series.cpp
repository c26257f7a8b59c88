#include <doctest.h>

#include "goldenmean/errors.hpp"
#include "goldenmean/series.hpp"

using namespace goldenmean;

namespace {
Dyadic dy(long mant, std::int64_t exp) { return Dyadic(mpz_class(mant), exp); }
}

TEST_CASE("stream construction and first terms") {
    TermStream beta(2, SeriesKind::Beta);
    CHECK(beta.index() == 1);
    CHECK(beta.binomial() == 1);  // C(3, 0)
    CHECK(beta.coefficient() == 1);

    TermStream gap(2, SeriesKind::InverseGap);
    CHECK(gap.binomial() == 3);  // C(3, 2)
    CHECK(gap.coefficient() == 3);

    TermStream alpha(2, SeriesKind::Alpha);
    CHECK(alpha.binomial() == 1);  // C(1, 0)

    CHECK_THROWS_AS(TermStream(1, SeriesKind::Alpha), DomainError);
}

TEST_CASE("terms for n = 2 match hand evaluation") {
    TermStream beta(2, SeriesKind::Beta);
    CHECK(beta.term() == dy(1, 3));
    beta.advance();
    CHECK(beta.coefficient() == 3);  // (1/2) C(6,1)
    CHECK(beta.term() == dy(3, 6));
    beta.advance();
    CHECK(beta.coefficient() == 12);  // (1/3) C(9,2)
    CHECK(beta.term() == dy(12, 9));

    TermStream alpha(2, SeriesKind::Alpha);
    CHECK(alpha.term() == dy(1, 3));
    alpha.advance();
    CHECK(alpha.coefficient() == 2);  // (1/2) C(4,1)
    CHECK(alpha.term() == dy(2, 6));
    alpha.advance();
    CHECK(alpha.coefficient() == 7);  // (1/3) C(7,2)
    CHECK(alpha.term() == dy(7, 9));

    TermStream gap(2, SeriesKind::InverseGap);
    CHECK(gap.term() == dy(3, 3));
    gap.advance();
    CHECK(gap.coefficient() == 10);  // (1/2) C(6,3)
    CHECK(gap.term() == dy(10, 6));
}

TEST_CASE("incremental update matches the direct closed form") {
    for (long n : {2L, 3L, 5L, 12L}) {
        for (SeriesKind kind : {SeriesKind::Beta, SeriesKind::Alpha, SeriesKind::InverseGap}) {
            TermStream stream(n, kind);
            for (long k = 1; k <= 40; ++k) {
                CHECK(stream.binomial() == TermStream::direct_binomial(n, kind, k));
                stream.advance();
            }
        }
    }
}

TEST_CASE("spot integrality: (1/4) C(12,3) = 55") {
    TermStream beta(2, SeriesKind::Beta);
    for (int i = 0; i < 3; ++i) beta.advance();
    CHECK(beta.index() == 4);
    CHECK(beta.binomial() == 220);
    CHECK(beta.coefficient() == 55);
}

TEST_CASE("evaluate applies the affine wrappers exactly") {
    CHECK(evaluate(2, SeriesKind::Alpha, 2) == dy(27, 4));       // 1.6875
    CHECK(evaluate(2, SeriesKind::Beta, 0) == dy(1, 1));         // empty sum
    CHECK(evaluate(2, SeriesKind::InverseGap, 2) == dy(175, 6)); // 2.734375
    CHECK(evaluate(2, SeriesKind::Alpha, 2).to_decimal(4).text == "1.6875");

    CHECK_THROWS_AS(evaluate(1, SeriesKind::Beta, 5), DomainError);
    CHECK_THROWS_AS(evaluate(2, SeriesKind::Beta, -1), DomainError);
}

TEST_CASE("evaluate moves monotonically toward the target") {
    for (long n : {2L, 3L}) {
        Dyadic prev_alpha = evaluate(n, SeriesKind::Alpha, 0);
        Dyadic prev_beta = evaluate(n, SeriesKind::Beta, 0);
        Dyadic prev_gap = evaluate(n, SeriesKind::InverseGap, 0);
        for (long K = 1; K <= 12; ++K) {
            Dyadic a = evaluate(n, SeriesKind::Alpha, K);
            Dyadic b = evaluate(n, SeriesKind::Beta, K);
            Dyadic g = evaluate(n, SeriesKind::InverseGap, K);
            CHECK(a < prev_alpha);
            CHECK(b > prev_beta);
            CHECK(g < prev_gap);
            prev_alpha = a;
            prev_beta = b;
            prev_gap = g;
        }
    }
}

TEST_CASE("tail_bound majorizes with the asymptotic ratio") {
    // With rho = max(t3/t2, L(2)) = 27/32 the bound at (2, Beta, 1) is
    // 3/20 up to the round-up guard.
    Dyadic b = tail_bound(2, SeriesKind::Beta, 1);
    Dyadic exact(mpz_class(3), 0);
    exact = exact.div_exact(5).mul_pow2(-2);  // 3/20 = (3/5)/4
    CHECK(b >= exact);
    CHECK(b - exact <= Dyadic::pow2(-60));

    // it must cover the true truncation error: beta < 5/8, so the error of
    // evaluate(2, Beta, 1) = 9/16 is below 1/16 < 3/20.
    CHECK(evaluate(2, SeriesKind::Beta, 1) == dy(9, 4));
    CHECK(b > dy(1, 4));

    CHECK_THROWS_AS(tail_bound(2, SeriesKind::Beta, 0), DomainError);
    CHECK_THROWS_AS(tail_bound(1, SeriesKind::Beta, 1), DomainError);
}

TEST_CASE("tail_bound shrinks geometrically in K") {
    for (SeriesKind kind : {SeriesKind::Beta, SeriesKind::Alpha, SeriesKind::InverseGap}) {
        Dyadic prev = tail_bound(2, kind, 1);
        for (long K = 2; K <= 30; ++K) {
            Dyadic cur = tail_bound(2, kind, K);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("series name round trip") {
    CHECK(series_from_name("alpha") == SeriesKind::Alpha);
    CHECK(series_from_name("beta") == SeriesKind::Beta);
    CHECK(series_from_name("gap") == SeriesKind::InverseGap);
    CHECK(std::string(to_string(SeriesKind::InverseGap)) == "gap");
    CHECK_THROWS_AS(series_from_name("phi"), DomainError);
}
