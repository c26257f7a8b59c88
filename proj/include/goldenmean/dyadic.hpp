#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "goldenmean/errors.hpp"

namespace goldenmean {

enum class Rounding { Down, Up, TowardZero };

/// Exact dyadic rational mantissa / 2^exponent.
///
/// Canonical form: the mantissa is odd, or the exponent is 0; zero is (0, 0).
/// Addition, subtraction, multiplication and negation are exact and closed.
/// There is no general division; see div_exact and the oracle module's
/// precision-contract reciprocals.
class Dyadic {
public:
    Dyadic() : mant_(0), exp_(0) {}
    explicit Dyadic(long value) : mant_(value), exp_(0) {}
    Dyadic(mpz_class mantissa, std::int64_t exponent);

    // 2^k, any sign of k.
    static Dyadic pow2(std::int64_t k);

    const mpz_class& mantissa() const { return mant_; }
    std::int64_t exponent() const { return exp_; }

    bool is_zero() const { return mant_ == 0; }
    int sign() const { return sgn(mant_); }
    Dyadic abs() const;

    Dyadic operator-() const;
    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

    // Exact scale by 2^k (k may be negative).
    Dyadic mul_pow2(std::int64_t k) const;

    // this / divisor, only when exact after absorbing the divisor's powers of
    // two into the exponent. Throws InexactDivision otherwise.
    Dyadic div_exact(const mpz_class& divisor) const;

    // Total order consistent with real-number order: -1, 0, +1.
    friend int compare(const Dyadic& a, const Dyadic& b);
    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.exp_ == b.exp_ && a.mant_ == b.mant_;
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return compare(a, b) >= 0; }

    struct Decimal {
        std::string text;
        bool truncated;  // a nonzero tail was discarded
    };

    // Decimal rendering with exactly `places` digits after the point,
    // truncated toward zero. places >= 0.
    Decimal to_decimal(std::int64_t places) const;

    // floor(log10 |x|), exact (compares against powers of ten, no floating
    // point). Throws DomainError on zero.
    std::int64_t floor_log10_abs() const;

    // Bit length of |mantissa|; 0 for zero.
    std::size_t mantissa_bits() const;

private:
    void normalize();

    mpz_class mant_;
    std::int64_t exp_;  // >= 0
};

// x^e, exact, by binary exponentiation.
Dyadic pow(const Dyadic& x, unsigned long e);

// Nearest multiple of 2^-frac_bits in the given direction. frac_bits may be
// negative (coarser than integers). Exact when x already fits the grid.
Dyadic quantize(const Dyadic& x, std::int64_t frac_bits, Rounding mode);

}  // namespace goldenmean
