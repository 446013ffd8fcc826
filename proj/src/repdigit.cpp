#include "reptri/repdigit.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <vector>

#include "reptri/error.hpp"

namespace reptri {

RepdigitSpec::RepdigitSpec(std::uint64_t k, std::uint64_t base, std::uint64_t digit)
    : k_(k), base_(base), digit_(digit) {
  if (base < 3) throw ConstraintError("base must satisfy b >= 3 (got b=" + std::to_string(base) + ")");
  if (digit < 2) throw ConstraintError("digit must satisfy d >= 2 (got d=" + std::to_string(digit) + ")");
  if (digit > base - 1) {
    throw ConstraintError("digit must satisfy d <= b - 1 (got d=" + std::to_string(digit) +
                          ", b=" + std::to_string(base) + ")");
  }
  if (k < 2) throw ConstraintError("digit count must satisfy k >= 2 (got k=" + std::to_string(k) + ")");
}

Natural repdigit_value(const RepdigitSpec& spec) {
  const Natural b(spec.base());
  const Natural d(spec.digit());
  Natural acc = d;
  for (std::uint64_t i = 1; i < spec.k(); ++i) {
    acc *= b;
    acc += d;
  }
  return acc;
}

Natural digit_power(const RepdigitSpec& spec) { return pow(Natural(spec.digit()), spec.k()); }

std::string render_base(const Natural& n, std::uint64_t base) {
  if (base < 2) throw ConstraintError("render base must satisfy base >= 2 (got " + std::to_string(base) + ")");

  std::vector<std::uint64_t> digits;  // least significant first
  mpz_class q = n.mpz();
  do {
    digits.push_back(mpz_fdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), base));
  } while (sgn(q) != 0);
  std::reverse(digits.begin(), digits.end());

  std::string out;
  if (base <= 10) {
    out.reserve(digits.size());
    for (auto dgt : digits) out.push_back(static_cast<char>('0' + dgt));
    return out;
  }
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0) out.push_back(':');
    out.push_back('[');
    out += std::to_string(digits[i]);
    out.push_back(']');
  }
  return out;
}

namespace {

std::uint64_t parse_digit(std::string_view text, std::uint64_t base) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("parse_base: bad digit '" + std::string(text) + "'");
  }
  if (value >= base) throw std::invalid_argument("parse_base: digit out of range for base");
  return value;
}

}  // namespace

Natural parse_base(std::string_view digits, std::uint64_t base) {
  if (base < 2) throw ConstraintError("parse base must satisfy base >= 2");
  if (digits.empty()) throw std::invalid_argument("parse_base: empty string");

  const Natural b(base);
  Natural acc;
  if (base <= 10) {
    for (char c : digits) {
      acc = acc * b + Natural(parse_digit(std::string_view(&c, 1), base));
    }
    return acc;
  }
  std::size_t pos = 0;
  for (;;) {
    if (digits.size() - pos < 3 || digits[pos] != '[') throw std::invalid_argument("parse_base: expected '['");
    auto close = digits.find(']', pos);
    if (close == std::string_view::npos) throw std::invalid_argument("parse_base: expected ']'");
    acc = acc * b + Natural(parse_digit(digits.substr(pos + 1, close - pos - 1), base));
    pos = close + 1;
    if (pos == digits.size()) return acc;
    if (digits[pos] != ':') throw std::invalid_argument("parse_base: expected ':'");
    ++pos;
  }
}

}  // namespace reptri
