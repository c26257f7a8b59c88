#include "goldenmean/render.hpp"

#include <cmath>

#include "goldenmean/errors.hpp"

namespace goldenmean {

namespace {

void require_args(long n, long digits) {
    if (n < 2) throw DomainError("order must be >= 2, got " + std::to_string(n));
    if (digits < 1) throw DomainError("digits must be >= 1, got " + std::to_string(digits));
}

// Rough per-term digit gain, only used to seed the term count; the
// certificate below does not depend on it.
double rate_estimate(long n) {
    double nn = static_cast<double>(n);
    double r = (nn + 1.0) - ((nn + 1.0) * std::log2(nn + 1.0) - nn * std::log2(nn));
    return r * 0.30102999566398119;
}

}  // namespace

std::string round_decimal(const Dyadic& x, long places) {
    if (places < 0) throw DomainError("places must be >= 0");
    // round(x 10^p) = floor((2 |m| 10^p + 2^e) / 2^(e+1)) on the magnitude.
    mpz_class a;
    mpz_abs(a.get_mpz_t(), x.mantissa().get_mpz_t());
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10u, static_cast<unsigned long>(places));
    mpz_class num = a * p10;
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 1);
    mpz_class half;
    mpz_setbit(half.get_mpz_t(), static_cast<mp_bitcnt_t>(x.exponent()));
    num += half;
    mpz_class q;
    mpz_fdiv_q_2exp(q.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(x.exponent() + 1));

    std::string digits = q.get_str();
    std::string text;
    if (places == 0) {
        text = digits;
    } else {
        if (static_cast<long>(digits.size()) <= places) {
            digits.insert(0, static_cast<std::size_t>(places + 1 - static_cast<long>(digits.size())), '0');
        }
        std::size_t point = digits.size() - static_cast<std::size_t>(places);
        text = digits.substr(0, point) + "." + digits.substr(point);
    }
    if (x.sign() < 0 && q != 0) text.insert(0, 1, '-');
    return text;
}

std::optional<std::string> agreed_decimal(const Dyadic& lo, const Dyadic& hi, long places) {
    // Rounding is monotone in the value, so endpoint agreement certifies
    // every point in between.
    std::string a = round_decimal(lo, places);
    std::string b = round_decimal(hi, places);
    if (a == b) return a;
    return std::nullopt;
}

RenderedValue series_digits(long n, SeriesKind kind, long digits) {
    require_args(n, digits);
    double per_term = rate_estimate(n);
    long K = std::max<long>(1, static_cast<long>(std::ceil((static_cast<double>(digits) + 4.0) / per_term)));

    for (int attempt = 0; attempt < 40; ++attempt, K *= 2) {
        Dyadic value = evaluate(n, kind, K);
        Dyadic bound = tail_bound(n, kind, K);
        // Beta increases toward its target; Alpha and InverseGap decrease.
        Dyadic lo = (kind == SeriesKind::Beta) ? value : value - bound;
        Dyadic hi = (kind == SeriesKind::Beta) ? value + bound : value;
        if (auto text = agreed_decimal(lo, hi, digits)) {
            return {*text, K, -digits};
        }
    }
    throw std::logic_error("series_digits: digits did not stabilize");
}

RenderedValue oracle_digits(long n, SeriesKind target, long digits) {
    require_args(n, digits);
    long bits = static_cast<long>(std::ceil(static_cast<double>(digits + 6) * 3.3219280948873623)) + 8;

    for (int attempt = 0; attempt < 40; ++attempt, bits *= 2) {
        ReferenceValue ref = (target == SeriesKind::Alpha) ? alpha_ref(n, bits)
                                                           : derived_ref(target, n, bits);
        Dyadic lo = ref.value - ref.error_bound;
        Dyadic hi = ref.value + ref.error_bound;
        if (auto text = agreed_decimal(lo, hi, digits)) {
            return {*text, bits, -digits};
        }
    }
    throw std::logic_error("oracle_digits: digits did not stabilize");
}

}  // namespace goldenmean
