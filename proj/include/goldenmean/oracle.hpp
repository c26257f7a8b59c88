#pragma once

#include <cstdint>
#include <string>

#include "goldenmean/dyadic.hpp"
#include "goldenmean/series.hpp"

namespace goldenmean {

/// Certified enclosure of alpha_n as a sign change of
/// q_n(x) = x^(n+1) - 2 x^n + 1 on [lo, hi] inside [3/2, 2).
/// The spurious root x = 1 of q_n is excluded structurally.
struct RootBracket {
    long n;
    Dyadic lo, hi;
    int sign_lo, sign_hi;  // exact signs of q_n, sign_lo < 0 < sign_hi

    Dyadic width() const { return hi - lo; }
};

/// High-precision reference with a guaranteed error bound:
/// |value - true target| <= error_bound.
struct ReferenceValue {
    SeriesKind target;
    Dyadic value;
    Dyadic error_bound;
};

// Exact sign of q_n(x) = x^(n+1) - 2 x^n + 1, evaluated in dyadic
// arithmetic with no rounding anywhere.
int poly_sign(long n, const Dyadic& x);

// Dyadic outer rounding of the enclosure
//   2 - 1/(2^n - n/2 - n^2/2^n) < alpha_n < 2 - 1/(2^n - n/2),
// endpoints on the 2^-(n+8) grid, re-certified by exact sign evaluation
// (widened by one grid step and retried if certification ever failed).
RootBracket forsyth_bracket(long n);

// Certified alpha_n: final interval width <= 2^-bits, value is the interval
// midpoint, error_bound half the width, endpoints sign-certified and inside
// the Forsyth bracket. Bisection is the baseline (1 bit per exact-sign
// step); with accelerate, Newton iterations with doubling working precision
// do the refinement and the result is re-certified by exact signs.
ReferenceValue alpha_ref(long n, long bits, bool accelerate = true);

// 1/alpha or 1/(2-alpha) by interval reciprocal of a certified alpha
// enclosure, endpoints directed-rounded outward. Throws PrecisionExhausted
// when the alpha interval is too wide for the requested bound.
ReferenceValue derived_from_alpha(const ReferenceValue& alpha, SeriesKind target, long bits);

// As derived_from_alpha, but computes the alpha enclosure itself, retrying
// with more input bits until the output bound 2^-bits is met.
ReferenceValue derived_ref(SeriesKind target, long n, long bits);

// G_{i+1}/G_i for the order-n recurrence G_i = G_{i-1} + ... + G_{i-n} with
// initial terms G_0 = ... = G_{n-2} = 0, G_{n-1} = 1, as a decimal string
// truncated to `digits` places. Root-finding-free sanity check: the ratio
// approaches alpha_n. Requires i >= n.
std::string kbonacci_ratio(long n, long i, long digits);

// 1/x on the 2^-frac_bits grid, rounded in the given direction.
Dyadic reciprocal(const Dyadic& x, std::int64_t frac_bits, Rounding mode);

}  // namespace goldenmean
