#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "reptri/natural.hpp"

namespace reptri {

/// The (k, b, d) triple naming the base-b number with k digits all equal
/// to d. Always valid: b >= 3, 2 <= d <= b - 1, k >= 2.
class RepdigitSpec {
 public:
  /// Throws ConstraintError naming the violated bound.
  RepdigitSpec(std::uint64_t k, std::uint64_t base, std::uint64_t digit);

  std::uint64_t k() const { return k_; }
  std::uint64_t base() const { return base_; }
  std::uint64_t digit() const { return digit_; }

  friend bool operator==(const RepdigitSpec&, const RepdigitSpec&) = default;
  friend auto operator<=>(const RepdigitSpec&, const RepdigitSpec&) = default;

 private:
  std::uint64_t k_;
  std::uint64_t base_;
  std::uint64_t digit_;
};

/// d * (b^(k-1) + ... + b + 1), evaluated by Horner's scheme.
Natural repdigit_value(const RepdigitSpec& spec);

/// d^k.
Natural digit_power(const RepdigitSpec& spec);

/// Positional digits of `n` in `base`, most significant first. Bases up to
/// 10 give plain contiguous digits; larger bases give each digit as a
/// bracketed decimal value, joined by ':' (60 in base 11 is "[5]:[5]").
/// Throws ConstraintError when base < 2.
std::string render_base(const Natural& n, std::uint64_t base);

/// Inverse of render_base. Throws std::invalid_argument on malformed input.
Natural parse_base(std::string_view digits, std::uint64_t base);

}  // namespace reptri
