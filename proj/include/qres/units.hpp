#pragma once

// Fixed-point money/time and the exact rational type used for expectations.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qres {

/// Exact rational number. Expected costs are reported in dollars, expected
/// times in seconds.
using Exact = mpq_class;

inline constexpr std::int64_t kMicrosPerUnit = 1'000'000;

/// Dollars in integer micro-dollars.
struct Money {
  std::int64_t micros = 0;

  static constexpr Money from_micros(std::int64_t m) { return Money{m}; }

  constexpr Money& operator+=(Money o) {
    micros += o.micros;
    return *this;
  }
  friend constexpr Money operator+(Money a, Money b) { return Money{a.micros + b.micros}; }
  friend constexpr Money operator-(Money a, Money b) { return Money{a.micros - b.micros}; }
  friend constexpr Money operator*(Money a, std::int64_t k) { return Money{a.micros * k}; }
  friend constexpr Money operator*(std::int64_t k, Money a) { return Money{a.micros * k}; }
  friend constexpr auto operator<=>(Money, Money) = default;
};

/// Seconds in integer microseconds.
struct Duration {
  std::int64_t micros = 0;

  static constexpr Duration from_micros(std::int64_t m) { return Duration{m}; }

  friend constexpr Duration operator+(Duration a, Duration b) { return Duration{a.micros + b.micros}; }
  friend constexpr Duration operator-(Duration a, Duration b) { return Duration{a.micros - b.micros}; }
  friend constexpr auto operator<=>(Duration, Duration) = default;
};

/// Rounds a decimal amount to the nearest micro unit. Throws on non-finite
/// input or overflow.
std::int64_t to_micros(double value);

inline Money dollars(double value) { return Money{to_micros(value)}; }
inline Duration seconds(double value) { return Duration{to_micros(value)}; }

Exact micros_to_exact(std::int64_t micros);
inline Exact to_exact(Money m) { return micros_to_exact(m.micros); }
inline Exact to_exact(Duration d) { return micros_to_exact(d.micros); }

/// Exact cost of `time` at `rate_per_second`, in dollars.
Exact time_cost(Duration time, Money rate_per_second);

/// Formats `value` with exactly `digits` fraction digits, rounding half away
/// from zero. "-0.000000" is never produced.
std::string format_fixed(const Exact& value, int digits = 6);

/// Shortest decimal text that round-trips `m` ("1.68", "7", "0.1").
std::string format_decimal(Money m);
std::string format_decimal(Duration d);

/// True when `q` has a finite decimal expansion.
bool is_terminating_decimal(const Exact& q);

/// Exact decimal text when terminating; otherwise rounded to
/// `max_fraction_digits`. Trailing zeros are trimmed; integers print bare.
std::string format_exact_decimal(const Exact& q, int max_fraction_digits = 30);

/// Parses an optionally signed decimal ("-1.25", "3", "0.0010", "1e-3") into
/// an exact rational. Throws std::invalid_argument on malformed text.
Exact parse_decimal(std::string_view text);

/// Shortest round-trip decimal of a double, parsed exactly (0.3 -> 3/10).
Exact exact_from_double(double value);

/// Simplest rational (smallest denominator) in the closed interval [lo, hi].
Exact simplest_in_interval(const Exact& lo, const Exact& hi);

inline double to_double(const Exact& q) { return q.get_d(); }

}  // namespace qres
