#pragma once

#include <string>
#include <vector>

namespace goldenmean {

/// Outcome of one verification suite.
struct SuiteResult {
    std::string name;
    long checks = 0;
    std::vector<std::string> failures;  // first counterexample(s), small

    bool ok() const { return failures.empty(); }
};

// Residuals of the defining identities at certified reference midpoints:
//   |a^(n+1) - 2a^n + 1|, |b - 1/2 - b^(n+1)/2|, |(2-a) a^n - 1|,
//   and an upper bound on |2/a - 1 - a^-(n+1)|,
// all required below 2^-(bits - 56) for 2 <= n <= n_max.
SuiteResult check_identity_residuals(long n_max, long bits);

// Fuss-Catalan-type integrality (the 1/k division is exact) and the
// incremental binomial equals the direct closed form bit for bit, for
// 2 <= n <= n_max, 1 <= k <= k_max, all three series.
SuiteResult check_integrality(long n_max, long k_max);

// Forsyth bracket endpoints certify a strict sign change inside [3/2, 2).
SuiteResult check_bracket_validity(long n_max);

// alpha_n strictly increasing (certified) and 2 - alpha_n < 2^(-n+1).
SuiteResult check_monotonicity(long n_max, long bits);

// |evaluate - reference| <= tail_bound + reference error, over
// n in {2, 3, 10} (clipped to n_max), K in {10, 100} (clipped to k_max).
SuiteResult check_series_agreement(long n_max, long k_max, long bits);

// digits_of_accuracy is unchanged when every reference is recomputed at
// twice the precision, over the same grid as check_series_agreement.
SuiteResult check_digit_stability(long n_max, long k_max);

// Accelerated and bisection-only references agree within the sum of their
// error bounds.
SuiteResult check_newton_soundness(long n_max, long bits);

// Everything above with one set of bounds; order is stable.
std::vector<SuiteResult> run_all_checks(long n_max, long k_max, long bits);

}  // namespace goldenmean
