#pragma once

#include <optional>
#include <string>

#include "goldenmean/dyadic.hpp"
#include "goldenmean/oracle.hpp"
#include "goldenmean/series.hpp"

namespace goldenmean {

/// A decimal string certified against an enclosure of the true value.
struct RenderedValue {
    std::string text;
    long work;            // terms used (series path) or bits (oracle path)
    long error_exponent;  // |printed - true| <= 10^error_exponent
};

// x rounded to nearest at `places` decimals (ties away from zero).
std::string round_decimal(const Dyadic& x, long places);

// The common digit certificate: if every value in [lo, hi] rounds to the
// same `places`-digit string, return it.
std::optional<std::string> agreed_decimal(const Dyadic& lo, const Dyadic& hi, long places);

// First `digits` decimals of the series target, certified oracle-free: the
// term count starts at the predicted-accuracy inversion and doubles until
// the tail_bound enclosure pins every printed digit.
RenderedValue series_digits(long n, SeriesKind kind, long digits);

// First `digits` decimals from the root-finding oracle, certified by the
// reference enclosure; precision doubles until the digits are pinned.
RenderedValue oracle_digits(long n, SeriesKind target, long digits);

}  // namespace goldenmean
