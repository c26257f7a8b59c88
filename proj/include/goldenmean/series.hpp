#pragma once

#include <gmpxx.h>

#include <string>

#include "goldenmean/dyadic.hpp"

namespace goldenmean {

/// The three series targets, for the positive root alpha of
/// X^n - X^(n-1) - ... - X - 1 (equivalently of x^(n+1) - 2x^n + 1, x != 1):
///
///   Beta:       1/alpha     = 1/2 + (1/2) sum_{k>=1} (1/k) C(k(n+1), k-1)   / 2^(k(n+1))
///   Alpha:      alpha       = 2   -   2   sum_{k>=1} (1/k) C(k(n+1)-2, k-1) / 2^(k(n+1))
///   InverseGap: 1/(2-alpha) = 2^n - n/2 - (1/2) sum_{k>=1} (1/k) C(k(n+1), k+1) / 2^(k(n+1))
enum class SeriesKind { Beta, Alpha, InverseGap };

const char* to_string(SeriesKind kind);

// Accepts "alpha", "beta", "gap"; throws DomainError otherwise.
SeriesKind series_from_name(const std::string& name);

/// Generator of consecutive exact series terms for one (n, kind).
///
/// Holds the current binomial C(top, low) and advances it incrementally:
/// both indices shift by (n+1, 1) per term, so
///   C(t+n+1, l+1) = C(t, l) * prod_{i=1..n+1}(t+i) / ((l+1) * prod_{j=1..n}(t-l+j))
/// with every division exact. The 1/k factor is likewise absorbed by exact
/// division (Fuss-Catalan-type integrality); a remainder anywhere throws
/// InexactDivision, which means a broken invariant, not a user error.
class TermStream {
public:
    TermStream(long n, SeriesKind kind);  // throws DomainError if n < 2

    long order() const { return n_; }
    SeriesKind kind() const { return kind_; }
    long index() const { return k_; }

    const mpz_class& binomial() const { return binom_; }
    const mpz_class& coefficient() const { return coeff_; }  // binomial / k

    // The k-th term, coefficient / 2^(k(n+1)), exact.
    Dyadic term() const;

    // Advance to k+1. The update is bit-identical to recomputing the
    // closed-form binomial from scratch (tested).
    void advance();

    // Closed-form binomial for (n, kind, k), computed directly.
    static mpz_class direct_binomial(long n, SeriesKind kind, long k);

private:
    void set_coefficient();

    long n_;
    SeriesKind kind_;
    long k_;
    unsigned long top_, low_;  // current binomial indices
    mpz_class binom_;
    mpz_class coeff_;
};

// Exact truncated sum with the affine wrapper applied (see SeriesKind).
// K counts terms of the sum; K = 0 leaves only the constant part.
Dyadic evaluate(long n, SeriesKind kind, long K);

// Upper bound on |evaluate(n, kind, K) - true value|.
//
// Geometric majorant w * t_{K+1} / (1 - rho) where w is the wrapper
// coefficient and rho = max(t_{K+2}/t_{K+1}, L(n)) with
// L(n) = (n+1)^(n+1) / (n^n 2^(n+1)), the limit of consecutive-term ratios.
// Term ratios increase toward L(n) from below, so the observed ratio alone
// would undershoot; taking the max keeps the bound valid on both monotone
// regimes. Cross-validated against the oracle (see checks).
// Throws RatioNotContracting if rho >= 1. Requires K >= 1.
Dyadic tail_bound(long n, SeriesKind kind, long K);

}  // namespace goldenmean
