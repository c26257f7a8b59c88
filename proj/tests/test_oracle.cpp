#include <doctest.h>

#include "goldenmean/errors.hpp"
#include "goldenmean/oracle.hpp"

using namespace goldenmean;

namespace {
Dyadic dy(long mant, std::int64_t exp) { return Dyadic(mpz_class(mant), exp); }
}

TEST_CASE("poly_sign is exact") {
    CHECK(poly_sign(2, Dyadic(1)) == 0);       // x = 1 is always a root
    CHECK(poly_sign(2, Dyadic(2)) > 0);        // q_n(2) = 1
    CHECK(poly_sign(5, Dyadic(2)) > 0);
    CHECK(poly_sign(2, dy(3, 1)) < 0);         // q_2(3/2) = -1/8
    CHECK(poly_sign(2, dy(13, 3)) > 0);        // q_2(13/8) = 5/512
    CHECK(poly_sign(3, dy(7, 2)) < 0);         // q_3(7/4) = -87/256
}

TEST_CASE("forsyth bracket for n = 2") {
    RootBracket br = forsyth_bracket(2);
    CHECK(br.lo == dy(3, 1));  // the lower Forsyth bound 1.5 is exact
    CHECK(br.sign_lo < 0);
    CHECK(br.sign_hi > 0);
    CHECK(br.hi < Dyadic(2));
    CHECK(br.hi * Dyadic(3) >= Dyadic(5));  // hi >= 5/3, outward rounding
    CHECK_THROWS_AS(forsyth_bracket(1), DomainError);
}

TEST_CASE("forsyth bracket certifies a sign change for larger n") {
    for (long n : {3L, 4L, 10L, 33L}) {
        RootBracket br = forsyth_bracket(n);
        CHECK(br.lo < br.hi);
        CHECK(br.lo >= dy(3, 1));
        CHECK(br.hi < Dyadic(2));
        CHECK(poly_sign(n, br.lo) < 0);
        CHECK(poly_sign(n, br.hi) > 0);
    }
}

TEST_CASE("alpha_ref encloses the root with the requested width") {
    for (long n : {2L, 3L, 7L}) {
        for (long bits : {24L, 80L, 300L}) {
            ReferenceValue ref = alpha_ref(n, bits);
            CHECK(ref.error_bound.sign() > 0);
            CHECK(ref.error_bound <= Dyadic::pow2(-bits).mul_pow2(-1));
            CHECK(poly_sign(n, ref.value - ref.error_bound) < 0);
            CHECK(poly_sign(n, ref.value + ref.error_bound) > 0);
            // inside the Forsyth bracket
            RootBracket br = forsyth_bracket(n);
            CHECK(ref.value - ref.error_bound >= br.lo);
            CHECK(ref.value + ref.error_bound <= br.hi);
        }
    }
    CHECK_THROWS_AS(alpha_ref(1, 64), DomainError);
    CHECK_THROWS_AS(alpha_ref(2, 3), DomainError);
}

TEST_CASE("bisection-only and accelerated references agree") {
    for (long n : {2L, 9L}) {
        ReferenceValue fast = alpha_ref(n, 128, true);
        ReferenceValue slow = alpha_ref(n, 128, false);
        CHECK((fast.value - slow.value).abs() <= fast.error_bound + slow.error_bound);
    }
}

TEST_CASE("derived references: golden-ratio self checks at n = 2") {
    ReferenceValue a = alpha_ref(2, 150);
    ReferenceValue b = derived_ref(SeriesKind::Beta, 2, 150);
    ReferenceValue g = derived_ref(SeriesKind::InverseGap, 2, 150);

    Dyadic slack = Dyadic::pow2(-140);
    // beta = alpha - 1 and 1/(2-alpha) = alpha + 1 are specific to n = 2
    CHECK((b.value - (a.value - Dyadic(1))).abs() < slack);
    CHECK((g.value - (a.value + Dyadic(1))).abs() < slack);
    // beta * alpha = 1 within the propagated bounds
    CHECK((b.value * a.value - Dyadic(1)).abs() < slack);

    CHECK_THROWS_AS(derived_ref(SeriesKind::Alpha, 2, 64), DomainError);
}

TEST_CASE("derived reference error bound is honest") {
    for (long n : {2L, 10L}) {
        for (SeriesKind target : {SeriesKind::Beta, SeriesKind::InverseGap}) {
            ReferenceValue ref = derived_ref(target, n, 120);
            CHECK(ref.error_bound <= Dyadic::pow2(-120));
            // recompute tighter and compare midpoints
            ReferenceValue tight = derived_ref(target, n, 220);
            CHECK((ref.value - tight.value).abs() <= ref.error_bound + tight.error_bound);
        }
    }
}

TEST_CASE("derived_from_alpha signals an interval that is too wide") {
    ReferenceValue coarse{SeriesKind::Alpha, dy(13, 3), Dyadic::pow2(-6)};
    CHECK_THROWS_AS(derived_from_alpha(coarse, SeriesKind::Beta, 100), PrecisionExhausted);
}

TEST_CASE("reciprocal with directed rounding") {
    Dyadic third_down = reciprocal(Dyadic(3), 8, Rounding::Down);
    Dyadic third_up = reciprocal(Dyadic(3), 8, Rounding::Up);
    CHECK(third_down == dy(85, 8));
    CHECK(third_up == dy(86, 8));
    CHECK(third_down * Dyadic(3) < Dyadic(1));
    CHECK(third_up * Dyadic(3) > Dyadic(1));
    CHECK(reciprocal(dy(1, 2), 10, Rounding::Down) == Dyadic(4));  // exact either way
    CHECK_THROWS_AS(reciprocal(Dyadic(), 8, Rounding::Down), DomainError);
}

TEST_CASE("kbonacci ratios approach the dominant root") {
    CHECK(kbonacci_ratio(2, 10, 5) == "1.61818");  // 89/55
    CHECK(kbonacci_ratio(4, 10, 4) == "1.9285");   // 108/56
    CHECK(kbonacci_ratio(2, 12, 0) == "1");        // 233/144 truncated to integer
    CHECK_THROWS_AS(kbonacci_ratio(1, 10, 5), DomainError);
    CHECK_THROWS_AS(kbonacci_ratio(5, 4, 5), DomainError);
    CHECK_THROWS_AS(kbonacci_ratio(2, 10, -1), DomainError);
}
