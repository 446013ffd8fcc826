#pragma once

#include <optional>
#include <string_view>

#include "reptri/natural.hpp"
#include "reptri/repdigit.hpp"

namespace reptri {

/// (delta, m, n) with m > n >= 1, gcd(m, n) = 1 and m + n odd. Every
/// Pythagorean triple is delta * (m^2 - n^2, 2mn, m^2 + n^2) for exactly one
/// such choice.
class TripleParams {
 public:
  /// Throws ConstraintError naming the violated condition.
  TripleParams(Natural delta, Natural m, Natural n);

  const Natural& delta() const { return delta_; }
  const Natural& m() const { return m_; }
  const Natural& n() const { return n_; }

  friend bool operator==(const TripleParams&, const TripleParams&) = default;

 private:
  Natural delta_;
  Natural m_;
  Natural n_;
};

struct Triple {
  Natural odd_leg;   // delta * (m^2 - n^2)
  Natural even_leg;  // delta * 2mn
  Natural hypotenuse;

  friend bool operator==(const Triple&, const Triple&) = default;
};

Triple compose_triple(const TripleParams& params);

/// Recovers (delta, m, n) from any Pythagorean triple. Leg order does not
/// matter; `c` is the hypotenuse. Throws ConstraintError if a side is zero or
/// a^2 + b^2 != c^2.
TripleParams decompose_triple(const Natural& a, const Natural& b, const Natural& c);

enum class TriangleType { Type1, Type2 };

/// "t1" / "t2".
std::string_view to_string(TriangleType type);
/// Accepts "t1", "t2", "1", "2" (case-insensitive "T1"/"T2" too).
std::optional<TriangleType> parse_triangle_type(std::string_view text);

/// A verified triangle. leg_a is always the digit-power side d^k.
struct TriangleWitness {
  Natural leg_a;
  Natural leg_b;
  Natural hypotenuse;
  TriangleType type;
  RepdigitSpec spec;
  std::optional<TripleParams> params;
};

/// Checks the side identity and the Type 1 / Type 2 role assignment.
bool witness_is_valid(const TriangleWitness& w);

/// Type 1: leg d^k, hypotenuse d_{k,b}.
std::optional<TriangleWitness> check_type1(const RepdigitSpec& spec);
/// Type 2: legs d^k and d_{k,b}.
std::optional<TriangleWitness> check_type2(const RepdigitSpec& spec);
std::optional<TriangleWitness> check_type(const RepdigitSpec& spec, TriangleType type);

namespace detail {
// Same as check_type1/check_type2 with the repdigit and the digit power
// already evaluated; `repdigit` = d_{k,b}, `power` = d^k.
std::optional<TriangleWitness> check_type1(const RepdigitSpec& spec, const Natural& repdigit, const Natural& power);
std::optional<TriangleWitness> check_type2(const RepdigitSpec& spec, const Natural& repdigit, const Natural& power);
}  // namespace detail

}  // namespace reptri
