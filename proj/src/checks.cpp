#include "goldenmean/checks.hpp"

#include <algorithm>

#include "goldenmean/analysis.hpp"
#include "goldenmean/dyadic.hpp"
#include "goldenmean/errors.hpp"
#include "goldenmean/oracle.hpp"
#include "goldenmean/series.hpp"

namespace goldenmean {

namespace {

const SeriesKind kAllKinds[] = {SeriesKind::Beta, SeriesKind::Alpha, SeriesKind::InverseGap};

std::vector<long> grid_orders(long n_max) {
    std::vector<long> out;
    for (long n : {2L, 3L, 10L}) {
        if (n <= n_max) out.push_back(n);
    }
    return out;
}

std::vector<long> grid_terms(long k_max) {
    std::vector<long> out;
    for (long k : {10L, 100L}) {
        if (k <= k_max) out.push_back(k);
    }
    return out;
}

}  // namespace

SuiteResult check_identity_residuals(long n_max, long bits) {
    SuiteResult res{"identity-residuals"};
    // Slack of 56 bits over the oracle precision: the residuals amplify the
    // midpoint error by at most ~2^(n+2) <= 2^34 on this grid, plus a few
    // bits of wrapper arithmetic.
    Dyadic threshold = Dyadic::pow2(-(bits - 56));
    for (long n = 2; n <= n_max; ++n) {
        ReferenceValue a = alpha_ref(n, bits);
        ReferenceValue b = derived_ref(SeriesKind::Beta, n, bits);

        Dyadic an = pow(a.value, static_cast<unsigned long>(n));
        Dyadic r1 = (an * (a.value - Dyadic(2)) + Dyadic(1)).abs();
        Dyadic bn1 = pow(b.value, static_cast<unsigned long>(n) + 1);
        Dyadic r2 = (b.value - Dyadic(mpz_class(1), 1) - bn1.mul_pow2(-1)).abs();
        Dyadic r4 = ((Dyadic(2) - a.value) * an - Dyadic(1)).abs();
        // |2/a - 1 - a^-(n+1)| = |q_n(a)| / a^(n+1), bounded from above.
        Dyadic r5 = r1 * reciprocal(an * a.value, bits, Rounding::Up);

        struct {
            const char* name;
            const Dyadic& r;
        } cases[] = {{"eq1", r1}, {"eq2", r2}, {"eq4", r4}, {"two-over-alpha", r5}};
        for (const auto& c : cases) {
            ++res.checks;
            if (!(c.r < threshold)) {
                res.failures.push_back(std::string(c.name) + " residual at n = " + std::to_string(n) +
                                       " is not below 2^-" + std::to_string(bits - 56));
            }
        }
    }
    return res;
}

SuiteResult check_integrality(long n_max, long k_max) {
    SuiteResult res{"integrality"};
    for (long n = 2; n <= n_max; ++n) {
        for (SeriesKind kind : kAllKinds) {
            try {
                TermStream stream(n, kind);
                for (long k = 1; k <= k_max; ++k) {
                    ++res.checks;
                    if (stream.binomial() != TermStream::direct_binomial(n, kind, k)) {
                        res.failures.push_back(std::string("incremental binomial mismatch at n = ") +
                                               std::to_string(n) + ", k = " + std::to_string(k) +
                                               ", " + to_string(kind));
                        break;
                    }
                    if (k < k_max) stream.advance();
                }
            } catch (const InexactDivision& e) {
                res.failures.push_back(std::string("inexact division: ") + e.what());
            }
        }
    }
    return res;
}

SuiteResult check_bracket_validity(long n_max) {
    SuiteResult res{"forsyth-bracket"};
    Dyadic three_halves(mpz_class(3), 1);
    for (long n = 2; n <= n_max; ++n) {
        ++res.checks;
        RootBracket br = forsyth_bracket(n);
        bool ok = br.lo < br.hi && br.lo >= three_halves && br.hi < Dyadic(2) &&
                  poly_sign(n, br.lo) < 0 && poly_sign(n, br.hi) > 0;
        if (!ok) res.failures.push_back("bracket certification failed at n = " + std::to_string(n));
    }
    return res;
}

SuiteResult check_monotonicity(long n_max, long bits) {
    SuiteResult res{"monotonicity"};
    ReferenceValue prev = alpha_ref(2, bits);
    for (long n = 2; n <= n_max; ++n) {
        ReferenceValue cur = (n == 2) ? prev : alpha_ref(n, bits);
        if (n > 2) {
            ++res.checks;
            // certified strict increase
            if (!(cur.value - cur.error_bound > prev.value + prev.error_bound)) {
                res.failures.push_back("alpha not increasing at n = " + std::to_string(n));
            }
        }
        ++res.checks;
        // certified 2 - alpha_n < 2^(-n+1)
        Dyadic gap_hi = Dyadic(2) - cur.value + cur.error_bound;
        if (!(gap_hi < Dyadic::pow2(-n + 1))) {
            res.failures.push_back("2 - alpha >= 2^(-n+1) at n = " + std::to_string(n));
        }
        prev = cur;
    }
    return res;
}

SuiteResult check_series_agreement(long n_max, long k_max, long bits) {
    SuiteResult res{"series-agreement"};
    for (long n : grid_orders(n_max)) {
        ReferenceValue a = alpha_ref(n, bits + 2 * n + 32);
        ReferenceValue b = derived_from_alpha(a, SeriesKind::Beta, bits);
        ReferenceValue g = derived_from_alpha(a, SeriesKind::InverseGap, bits);
        for (long K : grid_terms(k_max)) {
            struct {
                SeriesKind kind;
                const ReferenceValue& ref;
            } cases[] = {{SeriesKind::Beta, b}, {SeriesKind::Alpha, a}, {SeriesKind::InverseGap, g}};
            for (const auto& c : cases) {
                ++res.checks;
                Dyadic diff = (evaluate(n, c.kind, K) - c.ref.value).abs();
                Dyadic allowance = tail_bound(n, c.kind, K) + c.ref.error_bound;
                if (!(diff <= allowance)) {
                    res.failures.push_back(std::string("|evaluate - reference| > tail_bound at n = ") +
                                           std::to_string(n) + ", K = " + std::to_string(K) + ", " +
                                           to_string(c.kind));
                }
            }
        }
    }
    return res;
}

SuiteResult check_digit_stability(long n_max, long k_max) {
    SuiteResult res{"digit-stability"};
    for (long n : grid_orders(n_max)) {
        for (long K : grid_terms(k_max)) {
            long predicted = predicted_accuracy(n, K);
            long bits = (predicted + 15) * 4;
            for (SeriesKind kind : kAllKinds) {
                ++res.checks;
                Dyadic est = evaluate(n, kind, K);
                auto ref_at = [&](long b) {
                    return (kind == SeriesKind::Alpha) ? alpha_ref(n, b) : derived_ref(kind, n, b);
                };
                try {
                    long d1 = digits_of_accuracy(est, ref_at(bits));
                    long d2 = digits_of_accuracy(est, ref_at(2 * bits));
                    if (d1 != d2) {
                        res.failures.push_back(std::string("digit count moved under refinement at n = ") +
                                               std::to_string(n) + ", K = " + std::to_string(K) + ", " +
                                               to_string(kind));
                    }
                } catch (const OraclePrecisionInsufficient& e) {
                    res.failures.push_back(std::string("oracle precision insufficient at n = ") +
                                           std::to_string(n) + ", K = " + std::to_string(K) + ": " +
                                           e.what());
                }
            }
        }
    }
    return res;
}

SuiteResult check_newton_soundness(long n_max, long bits) {
    SuiteResult res{"newton-soundness"};
    for (long n : {2L, 5L, 16L}) {
        if (n > n_max) continue;
        ++res.checks;
        ReferenceValue fast = alpha_ref(n, bits, true);
        ReferenceValue slow = alpha_ref(n, bits, false);
        Dyadic diff = (fast.value - slow.value).abs();
        if (!(diff <= fast.error_bound + slow.error_bound)) {
            res.failures.push_back("accelerated and bisection references disagree at n = " +
                                   std::to_string(n));
        }
    }
    return res;
}

std::vector<SuiteResult> run_all_checks(long n_max, long k_max, long bits) {
    std::vector<SuiteResult> out;
    out.push_back(check_identity_residuals(n_max, bits));
    out.push_back(check_integrality(n_max, k_max));
    out.push_back(check_bracket_validity(n_max));
    out.push_back(check_monotonicity(std::min<long>(n_max, 32), std::min<long>(bits, 256)));
    out.push_back(check_series_agreement(n_max, k_max, std::min<long>(bits, 256)));
    out.push_back(check_digit_stability(n_max, k_max));
    out.push_back(check_newton_soundness(n_max, std::min<long>(bits, 512)));
    return out;
}

}  // namespace goldenmean
