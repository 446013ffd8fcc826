#include "reptri/natural.hpp"

#include <array>
#include <climits>
#include <stdexcept>
#include <utility>

namespace reptri {

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "GMP ui functions must accept 64-bit operands");

namespace {

template <std::uint32_t M>
constexpr std::array<bool, M> square_residue_table() {
  std::array<bool, M> table{};
  for (std::uint32_t x = 0; x < M; ++x) table[(x * x) % M] = true;
  return table;
}

constexpr auto kSquaresMod64 = square_residue_table<64>();
constexpr auto kSquaresMod63 = square_residue_table<63>();

}  // namespace

Natural::Natural(mpz_class v) : value_(std::move(v)) {
  if (sgn(value_) < 0) throw std::domain_error("Natural: negative value");
}

Natural Natural::from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("Natural: empty string");
  for (char c : text) {
    if (c < '0' || c > '9') throw std::invalid_argument("Natural: not a decimal digit string: " + std::string(text));
  }
  return Natural(mpz_class(std::string(text), 10));
}

std::size_t Natural::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(value_.get_mpz_t(), 2);
}

std::size_t Natural::trailing_zeros() const {
  if (is_zero()) return 0;
  return mpz_scan1(value_.get_mpz_t(), 0);
}

std::uint32_t Natural::mod(std::uint32_t modulus) const {
  if (modulus == 0) throw std::domain_error("Natural::mod: zero modulus");
  return static_cast<std::uint32_t>(mpz_fdiv_ui(value_.get_mpz_t(), modulus));
}

std::optional<std::uint64_t> Natural::to_u64() const {
  if (!mpz_fits_ulong_p(value_.get_mpz_t())) return std::nullopt;
  return value_.get_ui();
}

Natural& Natural::operator+=(const Natural& rhs) {
  value_ += rhs.value_;
  return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
  if (cmp(value_, rhs.value_) < 0) throw std::domain_error("Natural: subtraction underflow");
  value_ -= rhs.value_;
  return *this;
}

Natural& Natural::operator*=(const Natural& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Natural& Natural::operator/=(const Natural& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Natural: division by zero");
  mpz_fdiv_q(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

Natural& Natural::operator%=(const Natural& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Natural: division by zero");
  mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
  return *this;
}

Natural& Natural::operator<<=(std::size_t bits) {
  mpz_mul_2exp(value_.get_mpz_t(), value_.get_mpz_t(), bits);
  return *this;
}

Natural& Natural::operator>>=(std::size_t bits) {
  mpz_fdiv_q_2exp(value_.get_mpz_t(), value_.get_mpz_t(), bits);
  return *this;
}

Natural isqrt(const Natural& n) {
  if (n < Natural(2)) return n;

  // 2^ceil(bits/2) > sqrt(n), so the iteration descends monotonically
  // onto floor(sqrt(n)) and stops the first time it fails to decrease.
  Natural x = Natural(1) << ((n.bit_length() + 1) / 2);
  for (;;) {
    Natural y = (x + n / x) >> 1;
    if (y >= x) break;
    x = std::move(y);
  }
  if (x * x > n) x -= Natural(1);
  return x;
}

bool passes_square_residues(const Natural& n) {
  return kSquaresMod64[n.mod(64)] && kSquaresMod63[n.mod(63)];
}

std::optional<Natural> is_perfect_square(const Natural& n) {
  if (!passes_square_residues(n)) return std::nullopt;
  Natural r = isqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

Natural gcd(const Natural& a, const Natural& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Natural(std::move(g));
}

Natural pow(const Natural& base, std::uint64_t exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), exponent);
  return Natural(std::move(r));
}

}  // namespace reptri
