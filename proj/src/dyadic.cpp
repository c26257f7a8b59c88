#include "goldenmean/dyadic.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <utility>

namespace goldenmean {

namespace {

// Exponents are machine integers; series/oracle work stays far below this.
constexpr std::int64_t kMaxExponent = std::int64_t{1} << 48;

void check_exponent(std::int64_t e) {
    if (e < 0 || e > kMaxExponent) {
        throw std::overflow_error("dyadic exponent out of range: " + std::to_string(e));
    }
}

mpz_class pow10_mpz(std::int64_t e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10u, static_cast<unsigned long>(e));
    return p;
}

}  // namespace

Dyadic::Dyadic(mpz_class mantissa, std::int64_t exponent) : mant_(std::move(mantissa)), exp_(exponent) {
    check_exponent(exponent);
    normalize();
}

void Dyadic::normalize() {
    if (mant_ == 0) {
        exp_ = 0;
        return;
    }
    if (exp_ == 0) return;
    mp_bitcnt_t tz = mpz_scan1(mant_.get_mpz_t(), 0);
    std::int64_t shift = std::min<std::int64_t>(static_cast<std::int64_t>(tz), exp_);
    if (shift > 0) {
        mpz_tdiv_q_2exp(mant_.get_mpz_t(), mant_.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
        exp_ -= shift;
    }
}

Dyadic Dyadic::pow2(std::int64_t k) {
    if (k >= 0) {
        mpz_class m;
        mpz_setbit(m.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
        return Dyadic(std::move(m), 0);
    }
    return Dyadic(mpz_class(1), -k);
}

Dyadic Dyadic::abs() const {
    Dyadic r = *this;
    mpz_abs(r.mant_.get_mpz_t(), r.mant_.get_mpz_t());
    return r;
}

Dyadic Dyadic::operator-() const {
    Dyadic r = *this;
    mpz_neg(r.mant_.get_mpz_t(), r.mant_.get_mpz_t());
    return r;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    std::int64_t e = std::max(a.exp_, b.exp_);
    mpz_class m = a.mant_;
    mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(e - a.exp_));
    mpz_class mb = b.mant_;
    mpz_mul_2exp(mb.get_mpz_t(), mb.get_mpz_t(), static_cast<mp_bitcnt_t>(e - b.exp_));
    m += mb;
    return Dyadic(std::move(m), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    return Dyadic(a.mant_ * b.mant_, a.exp_ + b.exp_);
}

Dyadic Dyadic::mul_pow2(std::int64_t k) const {
    if (is_zero() || k == 0) return *this;
    if (k < 0) return Dyadic(mant_, exp_ - k);
    if (exp_ >= k) return Dyadic(mant_, exp_ - k);
    mpz_class m = mant_;
    mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(k - exp_));
    return Dyadic(std::move(m), 0);
}

Dyadic Dyadic::div_exact(const mpz_class& divisor) const {
    if (divisor == 0) throw DomainError("div_exact: divisor is zero");
    if (is_zero()) return Dyadic();
    mpz_class d = divisor;
    bool negate = false;
    if (d < 0) {
        negate = true;
        mpz_neg(d.get_mpz_t(), d.get_mpz_t());
    }
    // Absorb the divisor's powers of two into the exponent.
    mp_bitcnt_t tz = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), tz);
    if (mpz_divisible_p(mant_.get_mpz_t(), d.get_mpz_t()) == 0) {
        throw InexactDivision("div_exact: odd part of divisor does not divide mantissa");
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), mant_.get_mpz_t(), d.get_mpz_t());
    if (negate) mpz_neg(q.get_mpz_t(), q.get_mpz_t());
    return Dyadic(std::move(q), exp_ + static_cast<std::int64_t>(tz));
}

int compare(const Dyadic& a, const Dyadic& b) {
    int sa = a.sign();
    int sb = b.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    std::int64_t e = std::max(a.exp_, b.exp_);
    mpz_class ma = a.mant_;
    mpz_mul_2exp(ma.get_mpz_t(), ma.get_mpz_t(), static_cast<mp_bitcnt_t>(e - a.exp_));
    mpz_class mb = b.mant_;
    mpz_mul_2exp(mb.get_mpz_t(), mb.get_mpz_t(), static_cast<mp_bitcnt_t>(e - b.exp_));
    int c = cmp(ma, mb);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

Dyadic::Decimal Dyadic::to_decimal(std::int64_t places) const {
    if (places < 0) throw DomainError("to_decimal: places must be >= 0");
    mpz_class a;
    mpz_abs(a.get_mpz_t(), mant_.get_mpz_t());
    // |x| * 10^places = a * 10^places / 2^exp; truncate toward zero.
    mpz_class num = a * pow10_mpz(places);
    mpz_class q, r;
    mpz_tdiv_q_2exp(q.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(exp_));
    mpz_tdiv_r_2exp(r.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(exp_));
    bool truncated = (r != 0);

    std::string digits = q.get_str();
    std::string text;
    if (places == 0) {
        text = digits;
    } else {
        if (static_cast<std::int64_t>(digits.size()) <= places) {
            digits.insert(0, static_cast<std::size_t>(places + 1 - static_cast<std::int64_t>(digits.size())), '0');
        }
        std::size_t point = digits.size() - static_cast<std::size_t>(places);
        text = digits.substr(0, point) + "." + digits.substr(point);
    }
    if (sign() < 0 && q != 0) text.insert(0, 1, '-');
    return {text, truncated};
}

std::int64_t Dyadic::floor_log10_abs() const {
    if (is_zero()) throw DomainError("floor_log10_abs: zero has no magnitude");
    mpz_class a;
    mpz_abs(a.get_mpz_t(), mant_.get_mpz_t());
    std::int64_t bits = static_cast<std::int64_t>(mpz_sizeinbase(a.get_mpz_t(), 2));
    // |x| in [2^(bits-1-exp), 2^(bits-exp)); seed the decimal exponent from that.
    std::int64_t e = static_cast<std::int64_t>(
        std::floor(static_cast<double>(bits - 1 - exp_) * 0.30102999566398119));

    auto cmp_pow10 = [&](std::int64_t p) {
        // compare |x| with 10^p
        if (p >= 0) {
            mpz_class t = pow10_mpz(p);
            mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), static_cast<mp_bitcnt_t>(exp_));
            return cmp(a, t);
        }
        mpz_class t = a * pow10_mpz(-p);
        mpz_class s;
        mpz_setbit(s.get_mpz_t(), static_cast<mp_bitcnt_t>(exp_));
        return cmp(t, s);
    };

    while (cmp_pow10(e) < 0) --e;
    while (cmp_pow10(e + 1) >= 0) ++e;
    return e;
}

std::size_t Dyadic::mantissa_bits() const {
    if (is_zero()) return 0;
    return mpz_sizeinbase(mant_.get_mpz_t(), 2);
}

Dyadic pow(const Dyadic& x, unsigned long e) {
    Dyadic result(1);
    Dyadic base = x;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

Dyadic quantize(const Dyadic& x, std::int64_t frac_bits, Rounding mode) {
    if (x.is_zero()) return x;
    std::int64_t shift = x.exponent() - frac_bits;
    if (shift <= 0) return x;  // already on the grid
    mpz_class q;
    switch (mode) {
        case Rounding::Down:
            mpz_fdiv_q_2exp(q.get_mpz_t(), x.mantissa().get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
            break;
        case Rounding::Up:
            mpz_cdiv_q_2exp(q.get_mpz_t(), x.mantissa().get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
            break;
        case Rounding::TowardZero:
            mpz_tdiv_q_2exp(q.get_mpz_t(), x.mantissa().get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
            break;
    }
    if (frac_bits >= 0) return Dyadic(std::move(q), frac_bits);
    mpz_mul_2exp(q.get_mpz_t(), q.get_mpz_t(), static_cast<mp_bitcnt_t>(-frac_bits));
    return Dyadic(std::move(q), 0);
}

}  // namespace goldenmean
