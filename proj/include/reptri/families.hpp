#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reptri/repdigit.hpp"
#include "reptri/triples.hpp"

namespace reptri {

/// Two-digit (k = 2) constructions built on the identity
/// (r^2 - q^2)^2 + (2rq)^2 = (r^2 + q^2)^2.
///
///   F1 (l, q): r = q + l, b = 2rq - 1,       d = r^2 - q^2   (Type 2), l^2 <= 2q^2 - 2
///   F2 (l, q): r = q + l, b = r^2 - q^2 - 1, d = 2rq         (Type 2), l^2 >= 2q^2 + 2
///   S1 (r, q):            b = r^2 + q^2 - 1, d = r^2 - q^2   (Type 1), r > q >= 1
///   S2 (r, q):            b = r^2 + q^2 - 1, d = 2rq         (Type 1), r >= q + 2
///   U  (t):               b = t^2,           d = t^2 - 1     (Type 1), t >= 2
enum class FamilyId { F1, F2, S1, S2, U };

std::string_view to_string(FamilyId id);
std::optional<FamilyId> parse_family_id(std::string_view text);
/// Triangle type every member of the family has.
TriangleType family_type(FamilyId id);

/// Family parameters in the family's own tuple order: (l, q) for F1/F2,
/// (r, q) for S1/S2, (t) for U. Values are not validated here; see
/// validate_family_params.
struct FamilyParams {
  FamilyId family;
  std::uint64_t first;
  std::uint64_t second = 0;  // unused for U

  static FamilyParams f1(std::uint64_t l, std::uint64_t q) { return {FamilyId::F1, l, q}; }
  static FamilyParams f2(std::uint64_t l, std::uint64_t q) { return {FamilyId::F2, l, q}; }
  static FamilyParams s1(std::uint64_t r, std::uint64_t q) { return {FamilyId::S1, r, q}; }
  static FamilyParams s2(std::uint64_t r, std::uint64_t q) { return {FamilyId::S2, r, q}; }
  static FamilyParams u(std::uint64_t t) { return {FamilyId::U, t, 0}; }

  /// Named values, e.g. {{"l", 1}, {"q", 2}}.
  std::vector<std::pair<std::string, std::uint64_t>> named() const;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Throws ConstraintError naming the family inequality that fails.
void validate_family_params(const FamilyParams& params);

/// (r^2 - q^2)^2 + (2rq)^2 == (r^2 + q^2)^2, evaluated exactly.
bool basic_principle_check(std::uint64_t r, std::uint64_t q);

struct FamilyInstance {
  FamilyParams params;
  RepdigitSpec spec;
  TriangleWitness witness;
};

/// The (2, b, d) spec of the family member and its witness, obtained by
/// running the matching type check on the spec.
FamilyInstance generate_family(const FamilyParams& params);

/// Every valid parameter tuple with all parameters <= bound, in
/// lexicographic order of the family's tuple.
std::vector<FamilyInstance> enumerate_family(FamilyId family, std::uint64_t bound);

struct CorollaryResult {
  std::uint64_t base;
  FamilyInstance instance;
};

/// A base b with d <= b - 1 for which T(2, b, d) of the requested type
/// exists:
///   Type 1, odd d >= 3:  b = (d^2 - 1) / 2 via S1((d+1)/2, (d-1)/2)
///   Type 1, even d >= 6: b = d^2 / 4       via S2(d/2, 1)
///   Type 2, odd d >= 5:  b = (d^2 - 3) / 2 via F1(1, (d-1)/2)
///   Type 2, even d >= 6: b = (d^2 - 8) / 4 via F2(d/2 - 1, 1)
/// Throws UnsupportedDigitError for every other digit.
CorollaryResult corollary_base(std::uint64_t digit, TriangleType type);

}  // namespace reptri
