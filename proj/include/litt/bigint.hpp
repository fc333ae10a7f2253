// bigint.hpp -- arbitrary-precision counts and dyadic rationals

#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace litt {

using BigInt = mpz_class;

/// Unsigned 128-bit count type; exact for every count up to 2^127.
using Count128 = unsigned __int128;

BigInt to_bigint(Count128 value);
BigInt to_bigint(std::uint64_t value);
inline BigInt to_bigint(const BigInt& value) { return value; }

std::string to_string(const BigInt& value);

/// Returns 2^exponent.
BigInt pow2(unsigned exponent);

/// Exact rational num / 2^den_pow2. Probabilities under the uniform measure
/// on {H,T}^n always have this form.
struct Dyadic {
  BigInt num;
  unsigned den_pow2 = 0;

  Dyadic() = default;
  Dyadic(BigInt numerator, unsigned exponent) : num(std::move(numerator)), den_pow2(exponent) {}

  static Dyadic half() { return Dyadic(1, 1); }

  /// Nearest double; exact for numerators below 2^53.
  double to_double() const;

  /// Smallest equivalent representation (odd numerator or zero exponent).
  Dyadic reduced() const;

  friend Dyadic operator+(const Dyadic& x, const Dyadic& y);
  friend Dyadic operator-(const Dyadic& x, const Dyadic& y);
  friend Dyadic abs(const Dyadic& x);

  friend std::strong_ordering operator<=>(const Dyadic& x, const Dyadic& y);
  friend bool operator==(const Dyadic& x, const Dyadic& y) { return (x <=> y) == 0; }
};

std::string to_string(const Dyadic& value);

}  // namespace litt
