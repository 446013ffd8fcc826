#include "reptri/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <tuple>

#include "reptri/error.hpp"

namespace reptri {

void SearchRange::validate() const {
  if (base_min < 3) throw ConstraintError("search range requires base lower bound >= 3");
  if (base_max < base_min) throw ConstraintError("search range requires base lower bound <= upper bound");
  if (k_max < 2) throw ConstraintError("search range requires k_max >= 2");
  if (!type1 && !type2) throw ConstraintError("search range requires at least one triangle type");
  for (auto d : digits) {
    if (d < 2) throw ConstraintError("search digits must satisfy d >= 2");
  }
}

std::string_view to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::BothLegsOdd: return "both-legs-odd";
    case RejectReason::EvenHypotenuseOddLeg: return "even-hypotenuse-odd-leg";
    case RejectReason::NoLegDivisibleBy4: return "no-leg-divisible-by-4";
    case RejectReason::NoLegDivisibleBy3: return "no-leg-divisible-by-3";
    case RejectReason::PowerOfTwoLeg: return "power-of-two-leg";
    case RejectReason::SquareResidue: return "square-residue";
  }
  return "?";
}

std::string_view to_string(Verdict verdict) { return verdict == Verdict::Consistent ? "CONSISTENT" : "VIOLATION"; }

namespace {

// 2^6 * 3^2 * 7: every residue test below reads off this one reduction.
constexpr std::uint64_t kResidueModulus = 4032;

constexpr std::array<bool, 64> kSquaresMod64 = [] {
  std::array<bool, 64> t{};
  for (std::uint64_t x = 0; x < 64; ++x) t[(x * x) % 64] = true;
  return t;
}();

constexpr std::array<bool, 63> kSquaresMod63 = [] {
  std::array<bool, 63> t{};
  for (std::uint64_t x = 0; x < 63; ++x) t[(x * x) % 63] = true;
  return t;
}();

bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

// With the digit-power leg 2^j, that leg must be delta*2mn with n = 1,
// m = 2^u (u >= 1), delta = 2^v, u + v + 1 = j. The remaining side is then
// 2^v (4^u - 1) as a leg or 2^v (4^u + 1) as the hypotenuse, and v is
// its 2-adic valuation.
bool power_of_two_leg_admits(const RepdigitSpec& spec, TriangleType type, const Natural& repdigit) {
  const std::uint64_t e = static_cast<std::uint64_t>(std::countr_zero(spec.digit()));
  const std::uint64_t j = e * spec.k();
  const std::uint64_t v = repdigit.trailing_zeros();
  if (v + 2 > j) return false;
  const std::uint64_t u = j - 1 - v;
  Natural target = Natural(1) << (2 * u);
  if (type == TriangleType::Type2) {
    target -= Natural(1);
  } else {
    target += Natural(1);
  }
  return (repdigit >> v) == target;
}

struct LocalTally {
  std::vector<TriangleWitness> hits;
  std::uint64_t specs_tested = 0;
  std::uint64_t prefilter_rejections = 0;
  std::uint64_t full_checks = 0;
  std::array<std::uint64_t, kRejectReasonCount> by_reason{};

  void absorb(LocalTally&& other) {
    hits.insert(hits.end(), std::make_move_iterator(other.hits.begin()), std::make_move_iterator(other.hits.end()));
    specs_tested += other.specs_tested;
    prefilter_rejections += other.prefilter_rejections;
    full_checks += other.full_checks;
    for (std::size_t i = 0; i < kRejectReasonCount; ++i) by_reason[i] += other.by_reason[i];
  }
};

void test_one(const RepdigitSpec& spec, TriangleType type, const Natural& repdigit, const Natural& power,
              bool use_prefilters, LocalTally& tally) {
  ++tally.specs_tested;
  if (use_prefilters) {
    auto pf = detail::prefilter(spec, type, repdigit, power);
    if (pf.rejection) {
      ++tally.prefilter_rejections;
      ++tally.by_reason[static_cast<std::size_t>(*pf.rejection)];
      return;
    }
  }
  ++tally.full_checks;
  auto w = type == TriangleType::Type1 ? detail::check_type1(spec, repdigit, power)
                                       : detail::check_type2(spec, repdigit, power);
  if (w) tally.hits.push_back(std::move(*w));
}

void search_base(const SearchRange& range, std::uint64_t base, const std::vector<std::uint64_t>& digits,
                 bool use_prefilters, LocalTally& tally) {
  const Natural b(base);
  auto run_digit = [&](std::uint64_t d) {
    const Natural dn(d);
    Natural repdigit = dn;
    Natural power = dn;
    for (std::uint64_t k = 2; k <= range.k_max; ++k) {
      repdigit *= b;
      repdigit += dn;
      power *= dn;
      const RepdigitSpec spec(k, base, d);
      if (range.type1) test_one(spec, TriangleType::Type1, repdigit, power, use_prefilters, tally);
      if (range.type2) test_one(spec, TriangleType::Type2, repdigit, power, use_prefilters, tally);
    }
  };
  if (digits.empty()) {
    for (std::uint64_t d = 2; d <= base - 1; ++d) run_digit(d);
  } else {
    for (auto d : digits) {
      if (d <= base - 1) run_digit(d);
    }
  }
}

}  // namespace

namespace detail {

PrefilterResult prefilter(const RepdigitSpec& spec, TriangleType type, const Natural& repdigit, const Natural& power) {
  const std::uint64_t h = repdigit.mod(kResidueModulus);
  const std::uint64_t l = power.mod(kResidueModulus);
  const std::uint64_t hh = h * h % kResidueModulus;
  const std::uint64_t ll = l * l % kResidueModulus;

  if (type == TriangleType::Type2) {
    if (h % 2 == 1 && l % 2 == 1) return {RejectReason::BothLegsOdd};
    if (h % 4 != 0 && l % 4 != 0) return {RejectReason::NoLegDivisibleBy4};
    if (h % 3 != 0 && l % 3 != 0) return {RejectReason::NoLegDivisibleBy3};
  } else {
    // Third side squared is hh - ll.
    const std::uint64_t third = (hh + kResidueModulus - ll) % kResidueModulus;
    if (h % 2 == 0 && l % 2 == 1) return {RejectReason::EvenHypotenuseOddLeg};
    if (l % 4 != 0 && third % 16 != 0) return {RejectReason::NoLegDivisibleBy4};
    if (l % 3 != 0 && third % 9 != 0) return {RejectReason::NoLegDivisibleBy3};
  }

  if (is_power_of_two(spec.digit()) && !power_of_two_leg_admits(spec, type, repdigit)) {
    return {RejectReason::PowerOfTwoLeg};
  }

  const std::uint64_t third =
      type == TriangleType::Type2 ? (hh + ll) % kResidueModulus : (hh + kResidueModulus - ll) % kResidueModulus;
  if (!kSquaresMod64[third % 64] || !kSquaresMod63[third % 63]) return {RejectReason::SquareResidue};
  return {};
}

}  // namespace detail

PrefilterResult prefilter(const RepdigitSpec& spec, TriangleType type) {
  return detail::prefilter(spec, type, repdigit_value(spec), digit_power(spec));
}

bool hit_less(const TriangleWitness& a, const TriangleWitness& b) {
  auto key = [](const TriangleWitness& w) {
    return std::make_tuple(w.spec.base(), w.spec.digit(), w.spec.k(), static_cast<int>(w.type));
  };
  return key(a) < key(b);
}

SearchReport search(const SearchRange& range, const SearchOptions& options) {
  range.validate();
  const auto start = std::chrono::steady_clock::now();

  std::vector<std::uint64_t> digits = range.digits;
  std::sort(digits.begin(), digits.end());
  digits.erase(std::unique(digits.begin(), digits.end()), digits.end());

  const std::uint64_t base_count = range.base_max - range.base_min + 1;
  unsigned workers = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  if (workers > base_count) workers = static_cast<unsigned>(base_count);

  // Bases are handed out one at a time; each worker keeps its own tally and
  // the tallies are merged and the hits sorted once all workers finish.
  std::atomic<std::uint64_t> next{0};
  std::vector<LocalTally> tallies(workers);
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&](LocalTally& tally) {
    try {
      for (;;) {
        const std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= base_count) return;
        search_base(range, range.base_min + i, digits, options.use_prefilters, tally);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(base_count);
    }
  };

  if (workers == 1) {
    work(tallies[0]);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, std::ref(tallies[w]));
  }
  if (failure) std::rethrow_exception(failure);

  LocalTally total;
  for (auto& t : tallies) total.absorb(std::move(t));
  std::sort(total.hits.begin(), total.hits.end(), hit_less);

  SearchReport report;
  report.range = range;
  report.prefilters_used = options.use_prefilters;
  report.hits = std::move(total.hits);
  report.specs_tested = total.specs_tested;
  report.prefilter_rejections = total.prefilter_rejections;
  report.full_checks = total.full_checks;
  report.rejections_by_reason = total.by_reason;
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

SearchRange theorem_range(int id, const TheoremBounds& bounds) {
  if (id < 1 || id > 5) throw ConstraintError("theorem id must be in 1..5 (got " + std::to_string(id) + ")");
  SearchRange r;
  if (id <= 4) {
    if (bounds.k_max < 2) throw ConstraintError("theorem verification requires k_max >= 2");
    r.k_max = bounds.k_max;
  }
  switch (id) {
    case 1:
      r.base_min = r.base_max = 4;
      r.digits = {2, 3};
      r.type1 = false;
      break;
    case 2:
      r.base_min = r.base_max = 4;
      r.type2 = false;
      break;
    case 3:
      r.base_min = r.base_max = 3;
      r.type1 = false;
      break;
    case 4:
      r.base_min = r.base_max = 3;
      r.type2 = false;
      break;
    case 5:
      if (bounds.b_max < 5) throw ConstraintError("id 5 requires b_max >= 5");
      r.base_min = 3;
      r.base_max = bounds.b_max;
      r.digits = {2, 3, 4};
      r.k_max = 2;
      r.type1 = false;
      break;
  }
  return r;
}

TheoremReport verify_theorem(int id, const TheoremBounds& bounds, const SearchOptions& options) {
  return judge_theorem(id, bounds, search(theorem_range(id, bounds), options));
}

TheoremReport judge_theorem(int id, const TheoremBounds& bounds, SearchReport report) {
  if (id < 1 || id > 5) throw ConstraintError("theorem id must be in 1..5 (got " + std::to_string(id) + ")");
  TheoremReport out;
  out.id = id;
  out.bounds = bounds;
  out.report = std::move(report);
  if (id == 2) out.expected.emplace_back(2, 4, 3);

  for (const auto& hit : out.report.hits) {
    if (std::find(out.expected.begin(), out.expected.end(), hit.spec) == out.expected.end()) {
      out.unexpected.push_back(hit);
    }
  }
  for (const auto& spec : out.expected) {
    auto found = std::find_if(out.report.hits.begin(), out.report.hits.end(),
                              [&](const TriangleWitness& w) { return w.spec == spec; });
    if (found == out.report.hits.end()) out.missing.push_back(spec);
  }
  out.verdict = out.unexpected.empty() && out.missing.empty() ? Verdict::Consistent : Verdict::Violation;
  return out;
}

std::array<Mod7Row, 9> base3_type1_mod7_table() {
  auto pow_mod7 = [](unsigned base, unsigned exp) {
    unsigned r = 1;
    for (unsigned i = 0; i < exp; ++i) r = r * base % 7;
    return r;
  };
  std::array<Mod7Row, 9> rows{};
  std::size_t i = 0;
  for (unsigned p : {0u, 2u, 4u}) {
    for (unsigned v : {1u, 3u, 5u}) {
      // Exponents only matter mod 6 (Fermat), so the class representatives suffice.
      const unsigned lhs = pow_mod7(2, p) * (pow_mod7(2, 2 * v) + 1) % 7;
      const unsigned rhs = (pow_mod7(3, p + v + 1) + 6) % 7;
      rows[i++] = Mod7Row{p, v, lhs, rhs};
    }
  }
  return rows;
}

}  // namespace reptri
