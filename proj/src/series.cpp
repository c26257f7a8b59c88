#include "goldenmean/series.hpp"

#include <utility>

#include "goldenmean/errors.hpp"

namespace goldenmean {

namespace {

void require_order(long n) {
    if (n < 2) throw DomainError("series order must be >= 2, got " + std::to_string(n));
}

struct Indices {
    unsigned long top, low;
};

Indices start_indices(long n, SeriesKind kind) {
    unsigned long np1 = static_cast<unsigned long>(n) + 1;
    switch (kind) {
        case SeriesKind::Beta:
            return {np1, 0};
        case SeriesKind::Alpha:
            return {np1 - 2, 0};
        case SeriesKind::InverseGap:
            return {np1, 2};
    }
    throw DomainError("unknown series kind");
}

}  // namespace

const char* to_string(SeriesKind kind) {
    switch (kind) {
        case SeriesKind::Beta:
            return "beta";
        case SeriesKind::Alpha:
            return "alpha";
        case SeriesKind::InverseGap:
            return "gap";
    }
    return "?";
}

SeriesKind series_from_name(const std::string& name) {
    if (name == "alpha") return SeriesKind::Alpha;
    if (name == "beta") return SeriesKind::Beta;
    if (name == "gap") return SeriesKind::InverseGap;
    throw DomainError("unknown series name: " + name);
}

TermStream::TermStream(long n, SeriesKind kind) : n_(n), kind_(kind), k_(1) {
    require_order(n);
    Indices ix = start_indices(n, kind);
    top_ = ix.top;
    low_ = ix.low;
    mpz_bin_uiui(binom_.get_mpz_t(), top_, low_);
    set_coefficient();
}

void TermStream::set_coefficient() {
    if (mpz_divisible_ui_p(binom_.get_mpz_t(), static_cast<unsigned long>(k_)) == 0) {
        throw InexactDivision("term index " + std::to_string(k_) + " does not divide C(" +
                              std::to_string(top_) + ", " + std::to_string(low_) + ") for " +
                              to_string(kind_) + " series, n = " + std::to_string(n_));
    }
    mpz_divexact_ui(coeff_.get_mpz_t(), binom_.get_mpz_t(), static_cast<unsigned long>(k_));
}

Dyadic TermStream::term() const {
    return Dyadic(coeff_, k_ * (n_ + 1));
}

void TermStream::advance() {
    mpz_class num(1), den(low_ + 1);
    for (unsigned long i = 1; i <= static_cast<unsigned long>(n_) + 1; ++i) {
        mpz_mul_ui(num.get_mpz_t(), num.get_mpz_t(), top_ + i);
    }
    for (unsigned long j = 1; j <= static_cast<unsigned long>(n_); ++j) {
        mpz_mul_ui(den.get_mpz_t(), den.get_mpz_t(), top_ - low_ + j);
    }
    binom_ *= num;
    if (mpz_divisible_p(binom_.get_mpz_t(), den.get_mpz_t()) == 0) {
        throw InexactDivision("binomial update not exact at k = " + std::to_string(k_ + 1) +
                              " for " + to_string(kind_) + " series, n = " + std::to_string(n_));
    }
    mpz_divexact(binom_.get_mpz_t(), binom_.get_mpz_t(), den.get_mpz_t());
    top_ += static_cast<unsigned long>(n_) + 1;
    low_ += 1;
    k_ += 1;
    set_coefficient();
}

mpz_class TermStream::direct_binomial(long n, SeriesKind kind, long k) {
    require_order(n);
    if (k < 1) throw DomainError("term index must be >= 1, got " + std::to_string(k));
    Indices ix = start_indices(n, kind);
    unsigned long step = static_cast<unsigned long>(k - 1);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), ix.top + step * (static_cast<unsigned long>(n) + 1), ix.low + step);
    return b;
}

Dyadic evaluate(long n, SeriesKind kind, long K) {
    require_order(n);
    if (K < 0) throw DomainError("term count must be >= 0, got " + std::to_string(K));

    // Accumulate sum_{k<=K} coeff_k 2^((K-k)(n+1)) over the common
    // denominator 2^(K(n+1)).
    mpz_class acc(0);
    if (K > 0) {
        TermStream stream(n, kind);
        for (long k = 1;; ++k) {
            mpz_mul_2exp(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<mp_bitcnt_t>(n + 1));
            acc += stream.coefficient();
            if (k == K) break;
            stream.advance();
        }
    }
    Dyadic sum(std::move(acc), K * (n + 1));

    switch (kind) {
        case SeriesKind::Beta:
            return Dyadic(mpz_class(1), 1) + sum.mul_pow2(-1);
        case SeriesKind::Alpha:
            return Dyadic(2) - sum.mul_pow2(1);
        case SeriesKind::InverseGap: {
            Dyadic lead = Dyadic::pow2(n) - Dyadic(mpz_class(n), 1);
            return lead - sum.mul_pow2(-1);
        }
    }
    throw DomainError("unknown series kind");
}

Dyadic tail_bound(long n, SeriesKind kind, long K) {
    require_order(n);
    if (K < 1) throw DomainError("tail_bound requires K >= 1, got " + std::to_string(K));

    TermStream stream(n, kind);
    for (long k = 1; k <= K; ++k) stream.advance();
    mpz_class c1 = stream.coefficient();  // coefficient of term K+1
    stream.advance();
    mpz_class c2 = stream.coefficient();  // coefficient of term K+2

    // rho_obs = c2 / (c1 2^(n+1));  L = (n+1)^(n+1) / (n^n 2^(n+1)).
    mpz_class c1_shifted = c1;
    mpz_mul_2exp(c1_shifted.get_mpz_t(), c1_shifted.get_mpz_t(), static_cast<mp_bitcnt_t>(n + 1));
    if (c2 >= c1_shifted) {
        throw RatioNotContracting("term ratio >= 1 after K = " + std::to_string(K) + " for " +
                                  to_string(kind) + " series, n = " + std::to_string(n));
    }
    mpz_class nn, np1p;
    mpz_ui_pow_ui(nn.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n));
    mpz_ui_pow_ui(np1p.get_mpz_t(), static_cast<unsigned long>(n) + 1, static_cast<unsigned long>(n) + 1);

    // rho = max(rho_obs, L) as numerator/denominator over 2^(n+1).
    mpz_class rho_num, rho_den;
    if (c2 * nn >= c1 * np1p) {
        rho_num = c2;
        rho_den = c1_shifted;
    } else {
        rho_num = np1p;
        rho_den = nn;
        mpz_mul_2exp(rho_den.get_mpz_t(), rho_den.get_mpz_t(), static_cast<mp_bitcnt_t>(n + 1));
    }
    if (rho_num >= rho_den) {
        throw RatioNotContracting("majorant ratio >= 1 for n = " + std::to_string(n));
    }

    // bound = w * t_{K+1} / (1 - rho), rounded up;
    // t_{K+1} = c1 / 2^((K+1)(n+1)), w = 2 for Alpha and 1/2 otherwise.
    mpz_class num = c1 * rho_den;
    mpz_class den = rho_den - rho_num;
    std::int64_t shift = (K + 1) * (n + 1);
    if (kind == SeriesKind::Alpha) {
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 1);
    } else {
        shift += 1;
    }

    // Round num / (den 2^shift) up to 64 guard bits.
    constexpr std::int64_t kGuard = 64;
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), kGuard);
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return Dyadic(std::move(q), shift + kGuard);
}

}  // namespace goldenmean
