#include "goldenmean/analysis.hpp"

#include <mpfr.h>

#include <stdexcept>
#include <string>

#include "goldenmean/errors.hpp"

namespace goldenmean {

namespace {

// floor(-log10 x) for x > 0: -m if x is exactly 10^m, else -m - 1.
long neg_floor_log10(const Dyadic& x) {
    std::int64_t m = x.floor_log10_abs();
    if (m >= 0) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10u, static_cast<unsigned long>(m));
        if (x == Dyadic(std::move(p), 0)) return static_cast<long>(-m);
    }
    // Negative powers of ten are never dyadic.
    return static_cast<long>(-m - 1);
}

class MpfrValue {
public:
    explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~MpfrValue() { mpfr_clear(v_); }
    MpfrValue(const MpfrValue&) = delete;
    MpfrValue& operator=(const MpfrValue&) = delete;
    mpfr_ptr get() { return v_; }

private:
    mpfr_t v_;
};

// K * log10(2) * ((n+1) + n log2 n - (n+1) log2(n+1)), rounded down or up.
// All three additive pieces are positive and r(n) itself is positive.
bool predicted_bound(long n, long K, mpfr_prec_t prec, bool lower, long* out) {
    mpfr_rnd_t toward = lower ? MPFR_RNDD : MPFR_RNDU;
    mpfr_rnd_t away = lower ? MPFR_RNDU : MPFR_RNDD;

    MpfrValue r(prec), t(prec), u(prec);
    // r = (n+1) + n*log2(n)   [rounded toward]
    mpfr_set_ui(t.get(), static_cast<unsigned long>(n), MPFR_RNDN);  // exact
    mpfr_log2(t.get(), t.get(), toward);
    mpfr_mul_ui(t.get(), t.get(), static_cast<unsigned long>(n), toward);
    mpfr_add_ui(r.get(), t.get(), static_cast<unsigned long>(n) + 1, toward);
    // u = (n+1)*log2(n+1)     [rounded away]
    mpfr_set_ui(u.get(), static_cast<unsigned long>(n) + 1, MPFR_RNDN);  // exact
    mpfr_log2(u.get(), u.get(), away);
    mpfr_mul_ui(u.get(), u.get(), static_cast<unsigned long>(n) + 1, away);
    mpfr_sub(r.get(), r.get(), u.get(), toward);
    if (mpfr_sgn(r.get()) <= 0) return false;  // precision too low to see r > 0

    // value = K * r * log10(2)
    mpfr_set_ui(t.get(), 2u, MPFR_RNDN);
    mpfr_log10(t.get(), t.get(), toward);
    mpfr_mul(r.get(), r.get(), t.get(), toward);
    mpfr_mul_ui(r.get(), r.get(), static_cast<unsigned long>(K), toward);

    mpfr_floor(r.get(), r.get());
    long f = mpfr_get_si(r.get(), MPFR_RNDN);
    *out = f;
    return true;
}

}  // namespace

long digits_of_accuracy(const Dyadic& estimate, const ReferenceValue& reference) {
    Dyadic d = (estimate - reference.value).abs();
    const Dyadic& eb = reference.error_bound;
    if (d.is_zero() || reference.error_bound.mul_pow2(2) >= d) {
        throw OraclePrecisionInsufficient("reference error bound is not < |difference| / 4");
    }
    long lo = neg_floor_log10(d + eb);   // fewest digits across the band
    long hi = neg_floor_log10(d - eb);
    if (lo != hi) {
        throw OraclePrecisionInsufficient("difference straddles a power of ten within the oracle band");
    }
    return lo;
}

long predicted_accuracy(long n, long K) {
    if (n < 2) throw DomainError("order must be >= 2, got " + std::to_string(n));
    if (K < 1) throw DomainError("term count must be >= 1, got " + std::to_string(K));
    // The Stirling rate tends to log2(n+1) + 1/log 2 as n grows; only the
    // finite-n value below is ever needed.
    for (mpfr_prec_t prec = 96; prec <= 65536; prec *= 2) {
        long lo, hi;
        if (!predicted_bound(n, K, prec, true, &lo)) continue;
        if (!predicted_bound(n, K, prec, false, &hi)) continue;
        if (lo == hi) return lo;
    }
    throw std::logic_error("predicted_accuracy: floor did not stabilize");
}

TermBits term_bits(long n, SeriesKind kind, long k) {
    mpz_class b = TermStream::direct_binomial(n, kind, k);
    if (mpz_divisible_ui_p(b.get_mpz_t(), static_cast<unsigned long>(k)) == 0) {
        throw InexactDivision("term index does not divide the binomial at k = " + std::to_string(k));
    }
    mpz_class c;
    mpz_divexact_ui(c.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(k));
    return {static_cast<long>(mpz_sizeinbase(c.get_mpz_t(), 2)), k * (n + 1)};
}

std::vector<AccuracyRow> accuracy_table(std::span<const std::pair<long, long>> rows) {
    std::vector<AccuracyRow> out;
    out.reserve(rows.size());
    for (const auto& [n, K] : rows) {
        long predicted = predicted_accuracy(n, K);
        Dyadic est_alpha = evaluate(n, SeriesKind::Alpha, K);
        Dyadic est_beta = evaluate(n, SeriesKind::Beta, K);
        Dyadic est_gap = evaluate(n, SeriesKind::InverseGap, K);

        long bits = (predicted + 15) * 4;
        bool done = false;
        for (int attempt = 0; attempt < 12 && !done; ++attempt) {
            // One root refinement per attempt; beta and gap reuse it.
            ReferenceValue a = alpha_ref(n, bits + 2 * n + 32);
            try {
                ReferenceValue ref_beta = derived_from_alpha(a, SeriesKind::Beta, bits);
                ReferenceValue ref_gap = derived_from_alpha(a, SeriesKind::InverseGap, bits);
                AccuracyRow row{n, K, predicted, 0, 0, 0};
                row.actual_alpha = digits_of_accuracy(est_alpha, a);
                row.actual_beta = digits_of_accuracy(est_beta, ref_beta);
                row.actual_gap = digits_of_accuracy(est_gap, ref_gap);
                out.push_back(row);
                done = true;
            } catch (const OraclePrecisionInsufficient&) {
                bits *= 2;
            } catch (const PrecisionExhausted&) {
                bits *= 2;
            }
        }
        if (!done) {
            throw OraclePrecisionInsufficient("accuracy_table: no stable digit count for n = " +
                                              std::to_string(n) + ", K = " + std::to_string(K));
        }
    }
    return out;
}

}  // namespace goldenmean
