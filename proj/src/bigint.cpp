#include "litt/bigint.hpp"

#include <algorithm>
#include <cmath>

namespace litt {

BigInt to_bigint(Count128 value) {
  BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(value >> 64)));
  BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(value)));
  return (hi << 64) + lo;
}

BigInt to_bigint(std::uint64_t value) { return BigInt(static_cast<unsigned long>(value)); }

std::string to_string(const BigInt& value) { return value.get_str(10); }

BigInt pow2(unsigned exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, exponent);
  return r;
}

double Dyadic::to_double() const {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, num.get_mpz_t());
  return std::ldexp(mant, static_cast<int>(exp) - static_cast<int>(den_pow2));
}

Dyadic Dyadic::reduced() const {
  if (num == 0) return Dyadic(0, 0);
  auto twos = static_cast<unsigned>(mpz_scan1(num.get_mpz_t(), 0));
  unsigned shift = std::min(twos, den_pow2);
  return Dyadic(BigInt(num >> shift), den_pow2 - shift);
}

namespace {

// Brings both operands to the larger exponent.
std::pair<BigInt, BigInt> align(const Dyadic& x, const Dyadic& y, unsigned& exponent) {
  exponent = std::max(x.den_pow2, y.den_pow2);
  return {BigInt(x.num << (exponent - x.den_pow2)), BigInt(y.num << (exponent - y.den_pow2))};
}

}  // namespace

Dyadic operator+(const Dyadic& x, const Dyadic& y) {
  unsigned e = 0;
  auto [a, b] = align(x, y, e);
  return Dyadic(a + b, e);
}

Dyadic operator-(const Dyadic& x, const Dyadic& y) {
  unsigned e = 0;
  auto [a, b] = align(x, y, e);
  return Dyadic(a - b, e);
}

Dyadic abs(const Dyadic& x) { return Dyadic(BigInt(::abs(x.num)), x.den_pow2); }

std::strong_ordering operator<=>(const Dyadic& x, const Dyadic& y) {
  unsigned e = 0;
  auto [a, b] = align(x, y, e);
  return cmp(a, b) <=> 0;
}

std::string to_string(const Dyadic& value) {
  return to_string(value.num) + "/2^" + std::to_string(value.den_pow2);
}

}  // namespace litt
