#include "goldenmean/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "goldenmean/errors.hpp"

namespace goldenmean {

namespace {

void require_order(long n) {
    if (n < 2) throw DomainError("order must be >= 2, got " + std::to_string(n));
}

// floor(log2 |x|) for x != 0.
std::int64_t floor_log2_abs(const Dyadic& x) {
    return static_cast<std::int64_t>(x.mantissa_bits()) - 1 - x.exponent();
}

// a / b on the 2^-frac_bits grid, rounded in the given direction.
Dyadic div_quantized(const Dyadic& a, const Dyadic& b, std::int64_t frac_bits, Rounding mode) {
    if (b.is_zero()) throw DomainError("division by zero");
    if (a.is_zero()) return Dyadic();
    // a/b = ma 2^(eb - ea) / mb; scale to the grid and divide once.
    mpz_class num = a.mantissa();
    mpz_class den = b.mantissa();
    std::int64_t shift = b.exponent() - a.exponent() + frac_bits;
    if (shift >= 0) {
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    } else {
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
    }
    mpz_class q;
    switch (mode) {
        case Rounding::Down:
            mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            break;
        case Rounding::Up:
            mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            break;
        case Rounding::TowardZero:
            mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            break;
    }
    if (frac_bits >= 0) return Dyadic(std::move(q), frac_bits);
    mpz_mul_2exp(q.get_mpz_t(), q.get_mpz_t(), static_cast<mp_bitcnt_t>(-frac_bits));
    return Dyadic(std::move(q), 0);
}

// One exact-sign bisection step; returns the midpoint sign.
void bisect_step(RootBracket& br) {
    Dyadic mid = (br.lo + br.hi).mul_pow2(-1);
    int s = poly_sign(br.n, mid);
    if (s == 0) {
        // alpha_n is irrational, a dyadic midpoint can never hit it.
        throw std::logic_error("bisection midpoint is an exact root");
    }
    if (s < 0) {
        br.lo = std::move(mid);
        br.sign_lo = s;
    } else {
        br.hi = std::move(mid);
        br.sign_hi = s;
    }
}

void refine_bisect(RootBracket& br, long bits) {
    Dyadic limit = Dyadic::pow2(-bits);
    while (br.width() > limit) bisect_step(br);
}

ReferenceValue midpoint_reference(const RootBracket& br) {
    Dyadic mid = (br.lo + br.hi).mul_pow2(-1);
    Dyadic half = br.width().mul_pow2(-1);
    return {SeriesKind::Alpha, std::move(mid), std::move(half)};
}

// q(x) and q'(x) = x^(n-1) ((n+1) x - 2n), both exact.
struct PolyEval {
    Dyadic q, dq;
};

PolyEval eval_q(long n, const Dyadic& x) {
    Dyadic xnm1 = pow(x, static_cast<unsigned long>(n - 1));
    Dyadic xn = xnm1 * x;
    PolyEval out;
    out.q = xn * (x - Dyadic(2)) + Dyadic(1);
    out.dq = xnm1 * (Dyadic(n + 1) * x - Dyadic(2 * n));
    return out;
}

}  // namespace

int poly_sign(long n, const Dyadic& x) {
    require_order(n);
    Dyadic v = pow(x, static_cast<unsigned long>(n)) * (x - Dyadic(2)) + Dyadic(1);
    return v.sign();
}

RootBracket forsyth_bracket(long n) {
    require_order(n);
    const std::int64_t p = n + 8;

    // 1/(2^n - n/2 - n^2/2^n) = 2^n / D1 with D1 = 2^(2n) - n 2^(n-1) - n^2.
    mpz_class d1;
    mpz_setbit(d1.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * n));
    mpz_class t;
    mpz_setbit(t.get_mpz_t(), static_cast<mp_bitcnt_t>(n - 1));
    d1 -= t * n;
    d1 -= mpz_class(n) * n;

    mpz_class num;
    mpz_setbit(num.get_mpz_t(), static_cast<mp_bitcnt_t>(n + p));
    mpz_class lo_num;
    mpz_cdiv_q(lo_num.get_mpz_t(), num.get_mpz_t(), d1.get_mpz_t());  // round 1/(...) up => lo down
    Dyadic lo = Dyadic(2) - Dyadic(std::move(lo_num), p);

    // 1/(2^n - n/2) = 2 / (2^(n+1) - n).
    mpz_class d2;
    mpz_setbit(d2.get_mpz_t(), static_cast<mp_bitcnt_t>(n + 1));
    d2 -= n;
    mpz_class num2;
    mpz_setbit(num2.get_mpz_t(), static_cast<mp_bitcnt_t>(p + 1));
    mpz_class hi_num;
    mpz_fdiv_q(hi_num.get_mpz_t(), num2.get_mpz_t(), d2.get_mpz_t());  // round 1/(...) down => hi up
    Dyadic hi = Dyadic(2) - Dyadic(std::move(hi_num), p);

    Dyadic step = Dyadic::pow2(-p);
    for (int attempt = 0; attempt < 64; ++attempt) {
        int slo = poly_sign(n, lo);
        int shi = poly_sign(n, hi);
        if (slo < 0 && shi > 0) return {n, std::move(lo), std::move(hi), slo, shi};
        // Outward rounding makes this unreachable; widen and retry anyway.
        lo = lo - step;
        hi = hi + step;
    }
    throw std::logic_error("forsyth_bracket: sign certification failed for n = " + std::to_string(n));
}

ReferenceValue alpha_ref(long n, long bits, bool accelerate) {
    require_order(n);
    if (bits < 4) throw DomainError("precision must be >= 4 bits, got " + std::to_string(bits));

    RootBracket br = forsyth_bracket(n);
    if (!accelerate) {
        refine_bisect(br, bits);
        return midpoint_reference(br);
    }

    // Seed Newton from a modestly refined bracket.
    refine_bisect(br, std::min<long>(bits, 48));
    if (br.width() <= Dyadic::pow2(-bits)) return midpoint_reference(br);

    std::int64_t have = -floor_log2_abs(br.width());  // certified correct bits
    const std::int64_t target = bits + 6;
    Dyadic x = quantize((br.lo + br.hi).mul_pow2(-1), have + 32, Rounding::TowardZero);

    for (int attempt = 0; attempt < 8; ++attempt) {
        std::int64_t acc = std::max<std::int64_t>(have - 2, 4);
        for (int iter = 0; iter < 200 && acc < target; ++iter) {
            std::int64_t w = std::min<std::int64_t>(2 * acc, target) + 32;
            PolyEval pe = eval_q(n, x);
            if (pe.dq.is_zero()) throw std::logic_error("q' vanished inside the bracket");
            Dyadic step = div_quantized(pe.q, pe.dq, w, Rounding::TowardZero);
            x = quantize(x - step, w, Rounding::TowardZero);
            // Measure progress from the step size; in the quadratic basin the
            // step is of the order of the previous error.
            acc = step.is_zero() ? w - 2 : std::min<std::int64_t>(-floor_log2_abs(step) - 2, w - 2);
            if (acc < 4) acc = 4;
        }

        // Certify an enclosure of half-width 2^-(bits+1) by exact signs,
        // clipped to the Forsyth bracket.
        Dyadic h = Dyadic::pow2(-bits - 1);
        Dyadic lo = x - h;
        Dyadic hi = x + h;
        int slo, shi;
        if (lo < br.lo) {
            lo = br.lo;
            slo = br.sign_lo;
        } else {
            slo = poly_sign(n, lo);
        }
        if (hi > br.hi) {
            hi = br.hi;
            shi = br.sign_hi;
        } else {
            shi = poly_sign(n, hi);
        }
        if (slo < 0 && shi > 0) {
            RootBracket out{n, std::move(lo), std::move(hi), slo, shi};
            return midpoint_reference(out);
        }
        // Not certified: run more Newton at higher precision.
        have = std::max<std::int64_t>(have, 4);
    }

    // Unreachable in practice; bisection is the guaranteed fallback.
    refine_bisect(br, bits);
    return midpoint_reference(br);
}

Dyadic reciprocal(const Dyadic& x, std::int64_t frac_bits, Rounding mode) {
    if (x.is_zero()) throw DomainError("reciprocal of zero");
    return div_quantized(Dyadic(1), x, frac_bits, mode);
}

ReferenceValue derived_from_alpha(const ReferenceValue& alpha, SeriesKind target, long bits) {
    if (target != SeriesKind::Beta && target != SeriesKind::InverseGap) {
        throw DomainError("derived reference target must be beta or gap");
    }
    if (bits < 4) throw DomainError("precision must be >= 4 bits, got " + std::to_string(bits));

    Dyadic alo = alpha.value - alpha.error_bound;
    Dyadic ahi = alpha.value + alpha.error_bound;
    const std::int64_t w = bits + 16;

    Dyadic vlo, vhi;
    if (target == SeriesKind::Beta) {
        // beta = 1/alpha is decreasing in alpha.
        vlo = reciprocal(ahi, w, Rounding::Down);
        vhi = reciprocal(alo, w, Rounding::Up);
    } else {
        // 1/(2 - alpha) is increasing in alpha; needs 2 - ahi > 0.
        Dyadic den_hi = Dyadic(2) - alo;
        Dyadic den_lo = Dyadic(2) - ahi;
        if (den_lo.sign() <= 0) {
            throw PrecisionExhausted("alpha interval reaches 2; cannot bound 1/(2-alpha)");
        }
        vlo = reciprocal(den_hi, w, Rounding::Down);
        vhi = reciprocal(den_lo, w, Rounding::Up);
    }

    Dyadic width = vhi - vlo;
    if (width > Dyadic::pow2(-bits)) {
        throw PrecisionExhausted("alpha interval too wide for the requested derived bound");
    }
    return {target, (vlo + vhi).mul_pow2(-1), width.mul_pow2(-1)};
}

ReferenceValue derived_ref(SeriesKind target, long n, long bits) {
    require_order(n);
    // The gap reciprocal amplifies the alpha error by (2-alpha)^-2 < 2^(2n).
    long extra = (target == SeriesKind::InverseGap) ? 2 * static_cast<long>(n) + 16 : 16;
    for (int attempt = 0; attempt < 6; ++attempt) {
        ReferenceValue a = alpha_ref(n, bits + extra);
        try {
            return derived_from_alpha(a, target, bits);
        } catch (const PrecisionExhausted&) {
            extra *= 2;
        }
    }
    throw PrecisionExhausted("derived_ref: could not reach 2^-" + std::to_string(bits) +
                             " for n = " + std::to_string(n));
}

std::string kbonacci_ratio(long n, long i, long digits) {
    require_order(n);
    if (i < n) throw DomainError("index must be >= order, got i = " + std::to_string(i));
    if (digits < 0) throw DomainError("digits must be >= 0");

    // Rolling window of the last n terms with a running sum.
    std::vector<mpz_class> window(static_cast<std::size_t>(n));
    window[static_cast<std::size_t>(n - 1)] = 1;
    mpz_class sum(1);
    mpz_class prev(1);  // G_{n-1}
    mpz_class cur;
    for (long j = n; j <= i + 1; ++j) {
        cur = sum;
        std::size_t slot = static_cast<std::size_t>(j % n);
        sum += cur - window[slot];
        if (j <= i) prev = cur;
        window[slot] = cur;
    }
    // cur = G_{i+1}, prev = G_i; both positive for i >= n - 1.
    mpz_class scaled = cur;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10u, static_cast<unsigned long>(digits));
    scaled *= p10;
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), prev.get_mpz_t());

    std::string s = q.get_str();
    if (digits == 0) return s;
    if (static_cast<long>(s.size()) <= digits) {
        s.insert(0, static_cast<std::size_t>(digits + 1 - static_cast<long>(s.size())), '0');
    }
    std::size_t point = s.size() - static_cast<std::size_t>(digits);
    return s.substr(0, point) + "." + s.substr(point);
}

}  // namespace goldenmean
