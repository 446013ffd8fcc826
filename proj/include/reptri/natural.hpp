#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace reptri {

/// Arbitrary-precision non-negative integer.
///
/// Thin value type over a GMP integer. Every operation that could produce a
/// negative value (subtraction) checks and throws std::domain_error instead.
class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  /// Throws std::domain_error if `v` is negative.
  explicit Natural(mpz_class v);

  /// Parses a decimal string of digits. Throws std::invalid_argument.
  static Natural from_decimal(std::string_view text);

  const mpz_class& mpz() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_odd() const { return mpz_odd_p(value_.get_mpz_t()) != 0; }
  std::size_t bit_length() const;
  /// Number of trailing zero bits; 0 for zero.
  std::size_t trailing_zeros() const;
  /// Value modulo a small modulus (> 0).
  std::uint32_t mod(std::uint32_t modulus) const;
  std::optional<std::uint64_t> to_u64() const;
  std::string to_string() const { return value_.get_str(10); }

  Natural& operator+=(const Natural& rhs);
  Natural& operator-=(const Natural& rhs);
  Natural& operator*=(const Natural& rhs);
  Natural& operator/=(const Natural& rhs);
  Natural& operator%=(const Natural& rhs);
  Natural& operator<<=(std::size_t bits);
  Natural& operator>>=(std::size_t bits);

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  friend Natural operator/(Natural a, const Natural& b) { return a /= b; }
  friend Natural operator%(Natural a, const Natural& b) { return a %= b; }
  friend Natural operator<<(Natural a, std::size_t bits) { return a <<= bits; }
  friend Natural operator>>(Natural a, std::size_t bits) { return a >>= bits; }

  friend bool operator==(const Natural& a, const Natural& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.value_; }

 private:
  mpz_class value_;
};

/// floor(sqrt(n)) by Newton iteration.
Natural isqrt(const Natural& n);

/// The root when `n` is a perfect square, std::nullopt otherwise.
std::optional<Natural> is_perfect_square(const Natural& n);

/// Cheap necessary condition for squareness: residues modulo 64 and 63.
/// False means `n` is certainly not a square.
bool passes_square_residues(const Natural& n);

Natural gcd(const Natural& a, const Natural& b);

/// Exact power; pow(x, 0) == 1 for every x including zero.
Natural pow(const Natural& base, std::uint64_t exponent);

}  // namespace reptri
