#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "reptri/natural.hpp"
#include "reptri/repdigit.hpp"
#include "reptri/triples.hpp"

namespace reptri {

/// Bounded (b, d, k) box. Digits default to every 2 <= d <= b - 1; listed
/// digits outside that interval are skipped for the bases where they are
/// invalid. k runs from 2 to k_max.
struct SearchRange {
  std::uint64_t base_min = 3;
  std::uint64_t base_max = 3;
  std::vector<std::uint64_t> digits;
  std::uint64_t k_max = 64;
  bool type1 = true;
  bool type2 = true;

  /// Throws ConstraintError.
  void validate() const;
};

struct SearchOptions {
  bool use_prefilters = true;
  /// Worker count; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

enum class RejectReason {
  BothLegsOdd,           // odd^2 + odd^2 = 2 (mod 4) is never a square
  EvenHypotenuseOddLeg,  // an even hypotenuse forces both legs even
  NoLegDivisibleBy4,     // the 2*delta*m*n leg is always = 0 (mod 4)
  NoLegDivisibleBy3,     // squares are 0 or 1 (mod 3)
  PowerOfTwoLeg,         // d = 2^e forces n = 1, m = 2^u, delta = 2^v
  SquareResidue,         // third side squared is a non-residue mod 64 or 63
};

inline constexpr std::size_t kRejectReasonCount = 6;

std::string_view to_string(RejectReason reason);

struct PrefilterResult {
  std::optional<RejectReason> rejection;

  bool maybe_hit() const { return !rejection.has_value(); }
};

/// Modular and structural obstructions. A rejection proves that no
/// triangle of the given type exists for `spec`; MaybeHit proves nothing.
PrefilterResult prefilter(const RepdigitSpec& spec, TriangleType type);

namespace detail {
PrefilterResult prefilter(const RepdigitSpec& spec, TriangleType type, const Natural& repdigit, const Natural& power);
}

struct SearchReport {
  SearchRange range;
  bool prefilters_used = true;
  std::vector<TriangleWitness> hits;  // sorted by (b, d, k, type)
  std::uint64_t specs_tested = 0;     // (spec, type) pairs
  std::uint64_t prefilter_rejections = 0;
  std::uint64_t full_checks = 0;
  std::array<std::uint64_t, kRejectReasonCount> rejections_by_reason{};
  std::chrono::nanoseconds elapsed{0};
};

/// Ordering used for hit lists: (b, d, k, type).
bool hit_less(const TriangleWitness& a, const TriangleWitness& b);

/// Tests every (spec, type) in the range. Hits are independent of
/// use_prefilters and of the worker count.
SearchReport search(const SearchRange& range, const SearchOptions& options = {});

enum class Verdict { Consistent, Violation };

std::string_view to_string(Verdict verdict);

struct TheoremBounds {
  std::uint64_t k_max = 64;      // ids 1-4
  std::uint64_t b_max = 10'000;  // id 5
};

struct TheoremReport {
  int id = 0;
  TheoremBounds bounds;
  SearchReport report;
  std::vector<RepdigitSpec> expected;      // the triangles the theorem permits
  Verdict verdict = Verdict::Consistent;
  std::vector<TriangleWitness> unexpected;  // hits the theorem forbids
  std::vector<RepdigitSpec> missing;        // permitted triangles not found
};

/// The search box for theorem `id`:
///   1: b = 4, d in {2, 3}, Type 2, no hits
///   2: b = 4, Type 1, exactly T1(2, 4, 3)
///   3: b = 3, Type 2, no hits
///   4: b = 3, Type 1, no hits
///   5: k = 2, d in {2, 3, 4}, 3 <= b <= b_max, Type 2, no hits
/// Throws ConstraintError for an unknown id or bounds below k_max = 2 / b_max = 5.
SearchRange theorem_range(int id, const TheoremBounds& bounds);

TheoremReport verify_theorem(int id, const TheoremBounds& bounds = {}, const SearchOptions& options = {});

/// Compares a finished search against what theorem `id` permits.
TheoremReport judge_theorem(int id, const TheoremBounds& bounds, SearchReport report);

/// One row of the mod-7 comparison behind the base-3 Type 1 result:
/// p = 0, 2, 4 and v = 1, 3, 5 (mod 6), with 2^p (2^(2v) + 1) and
/// 3^(p+v+1) - 1 reduced mod 7.
struct Mod7Row {
  unsigned p_class;
  unsigned v_class;
  unsigned power_of_two_side;
  unsigned power_of_three_side;

  friend bool operator==(const Mod7Row&, const Mod7Row&) = default;
};

std::array<Mod7Row, 9> base3_type1_mod7_table();

}  // namespace reptri
