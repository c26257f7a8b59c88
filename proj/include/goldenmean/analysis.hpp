#pragma once

#include <span>
#include <utility>
#include <vector>

#include "goldenmean/dyadic.hpp"
#include "goldenmean/oracle.hpp"
#include "goldenmean/series.hpp"

namespace goldenmean {

/// One row of the predicted-vs-actual accuracy table.
struct AccuracyRow {
    long n;
    long terms;  // K
    long predicted;
    long actual_alpha;
    long actual_beta;
    long actual_gap;
};

// floor(-log10 |estimate - reference.value|), the number of correct decimal
// digits after the point. Certified: the result must be unchanged when the
// reference moves anywhere within +/- error_bound, and the bound must
// satisfy error_bound < |difference| / 4; otherwise throws
// OraclePrecisionInsufficient and the caller recomputes the reference at
// higher precision.
long digits_of_accuracy(const Dyadic& estimate, const ReferenceValue& reference);

// floor(K * r(n) * log10 2) with r(n) = (n+1) - ((n+1) log2(n+1) - n log2 n),
// the per-term loss in bits (r(2) ~ 0.24511). Logarithms are evaluated by
// interval arithmetic with doubling precision until the floor is certified.
long predicted_accuracy(long n, long K);

struct TermBits {
    long numerator_bits;  // bit length of the integer term numerator
    long shift;           // denominator exponent k(n+1)
};

// Exact sizes of the k-th term: numerator f(k, n) = binomial/k and the
// power-of-two denominator. numerator_bits/k approaches
// (n+1) log2(n+1) - n log2 n as k grows.
TermBits term_bits(long n, SeriesKind kind, long k);

// Accuracy rows for the given (n, K) pairs. Reference precision starts at
// (predicted + 15) * 4 bits and doubles on OraclePrecisionInsufficient.
std::vector<AccuracyRow> accuracy_table(std::span<const std::pair<long, long>> rows);

}  // namespace goldenmean
