#include "reptri/families.hpp"

#include <stdexcept>

#include "reptri/error.hpp"

namespace reptri {

std::string_view to_string(FamilyId id) {
  switch (id) {
    case FamilyId::F1: return "F1";
    case FamilyId::F2: return "F2";
    case FamilyId::S1: return "S1";
    case FamilyId::S2: return "S2";
    case FamilyId::U: return "U";
  }
  return "?";
}

std::optional<FamilyId> parse_family_id(std::string_view text) {
  for (auto id : {FamilyId::F1, FamilyId::F2, FamilyId::S1, FamilyId::S2, FamilyId::U}) {
    if (text == to_string(id)) return id;
  }
  if (text == "f1") return FamilyId::F1;
  if (text == "f2") return FamilyId::F2;
  if (text == "s1") return FamilyId::S1;
  if (text == "s2") return FamilyId::S2;
  if (text == "u") return FamilyId::U;
  return std::nullopt;
}

TriangleType family_type(FamilyId id) {
  return (id == FamilyId::F1 || id == FamilyId::F2) ? TriangleType::Type2 : TriangleType::Type1;
}

std::vector<std::pair<std::string, std::uint64_t>> FamilyParams::named() const {
  switch (family) {
    case FamilyId::F1:
    case FamilyId::F2: return {{"l", first}, {"q", second}};
    case FamilyId::S1:
    case FamilyId::S2: return {{"r", first}, {"q", second}};
    case FamilyId::U: return {{"t", first}};
  }
  return {};
}

namespace {

std::optional<std::string> family_violation(const FamilyParams& p) {
  const std::string name(to_string(p.family));
  if (p.first == 0 || (p.family != FamilyId::U && p.second == 0)) {
    return name + " parameters must be positive integers";
  }
  const Natural a(p.first);
  const Natural b(p.second);
  switch (p.family) {
    case FamilyId::F1:
      // l^2 <= 2q^2 - 2, rearranged to stay non-negative
      if (a * a + Natural(2) > Natural(2) * b * b) return "F1 requires l^2 <= 2q^2 - 2";
      break;
    case FamilyId::F2:
      if (a * a < Natural(2) * b * b + Natural(2)) return "F2 requires l^2 >= 2q^2 + 2";
      break;
    case FamilyId::S1:
      if (!(p.first > p.second)) return "S1 requires r > q >= 1";
      break;
    case FamilyId::S2:
      if (p.first < p.second + 2 || p.second + 2 < p.second) return "S2 requires r >= q + 2";
      break;
    case FamilyId::U:
      if (p.first < 2) return "U requires t >= 2";
      break;
  }
  return std::nullopt;
}

std::uint64_t narrow(const Natural& v, std::string_view what) {
  auto out = v.to_u64();
  if (!out) throw ConstraintError(std::string(what) + " does not fit in 64 bits; family parameters too large");
  return *out;
}

// (b, d) of the family member.
std::pair<std::uint64_t, std::uint64_t> family_base_digit(const FamilyParams& p) {
  const Natural one(1);
  Natural base;
  Natural digit;
  switch (p.family) {
    case FamilyId::F1: {
      const Natural q(p.second);
      const Natural r = q + Natural(p.first);
      base = Natural(2) * r * q - one;
      digit = r * r - q * q;
      break;
    }
    case FamilyId::F2: {
      const Natural q(p.second);
      const Natural r = q + Natural(p.first);
      base = r * r - q * q - one;
      digit = Natural(2) * r * q;
      break;
    }
    case FamilyId::S1: {
      const Natural r(p.first);
      const Natural q(p.second);
      base = r * r + q * q - one;
      digit = r * r - q * q;
      break;
    }
    case FamilyId::S2: {
      const Natural r(p.first);
      const Natural q(p.second);
      base = r * r + q * q - one;
      digit = Natural(2) * r * q;
      break;
    }
    case FamilyId::U: {
      const Natural t(p.first);
      base = t * t;
      digit = base - one;
      break;
    }
  }
  return {narrow(base, "base"), narrow(digit, "digit")};
}

}  // namespace

void validate_family_params(const FamilyParams& params) {
  if (auto why = family_violation(params)) throw ConstraintError(*why);
}

bool basic_principle_check(std::uint64_t r, std::uint64_t q) {
  if (r == 0 || q == 0) throw ConstraintError("basic principle requires r, q >= 1");
  const Natural rr = Natural(r) * Natural(r);
  const Natural qq = Natural(q) * Natural(q);
  const Natural diff = rr >= qq ? rr - qq : qq - rr;
  const Natural twice = Natural(2) * Natural(r) * Natural(q);
  const Natural sum = rr + qq;
  return diff * diff + twice * twice == sum * sum;
}

FamilyInstance generate_family(const FamilyParams& params) {
  validate_family_params(params);
  const auto [base, digit] = family_base_digit(params);
  if (base < 3 || digit < 2 || digit > base - 1) {
    throw std::logic_error("generate_family: " + std::string(to_string(params.family)) +
                           " produced a digit outside 2 <= d <= b - 1");
  }
  RepdigitSpec spec(2, base, digit);
  auto witness = check_type(spec, family_type(params.family));
  if (!witness) {
    throw std::logic_error("generate_family: " + std::string(to_string(params.family)) +
                           " member has no witness triangle");
  }
  return FamilyInstance{params, spec, std::move(*witness)};
}

std::vector<FamilyInstance> enumerate_family(FamilyId family, std::uint64_t bound) {
  if (bound == 0) throw ConstraintError("enumeration bound must be >= 1");
  std::vector<FamilyInstance> out;
  if (family == FamilyId::U) {
    for (std::uint64_t t = 1; t <= bound; ++t) {
      auto p = FamilyParams::u(t);
      if (!family_violation(p)) out.push_back(generate_family(p));
    }
    return out;
  }
  for (std::uint64_t first = 1; first <= bound; ++first) {
    for (std::uint64_t second = 1; second <= bound; ++second) {
      FamilyParams p{family, first, second};
      if (!family_violation(p)) out.push_back(generate_family(p));
    }
  }
  return out;
}

CorollaryResult corollary_base(std::uint64_t digit, TriangleType type) {
  const bool odd = digit % 2 == 1;
  FamilyParams params{FamilyId::U, 0, 0};
  if (type == TriangleType::Type1) {
    if (odd && digit >= 3) {
      params = FamilyParams::s1((digit + 1) / 2, (digit - 1) / 2);
    } else if (!odd && digit >= 6) {
      params = FamilyParams::s2(digit / 2, 1);
    } else {
      throw UnsupportedDigitError("no base b with d <= b - 1 admits a Type 1 triangle T1(2,b,d) for d=" +
                                  std::to_string(digit) + " (d in {2,4} has none; d must be >= 2)");
    }
  } else {
    if (odd && digit >= 5) {
      params = FamilyParams::f1(1, (digit - 1) / 2);
    } else if (!odd && digit >= 6) {
      params = FamilyParams::f2(digit / 2 - 1, 1);
    } else {
      throw UnsupportedDigitError("no Type 2 triangle T2(2,b,d) exists for d=" + std::to_string(digit) +
                                  " (d in {2,3,4} has none; d must be >= 2)");
    }
  }
  FamilyInstance instance = generate_family(params);
  if (instance.spec.digit() != digit) throw std::logic_error("corollary_base: construction changed the digit");
  return CorollaryResult{instance.spec.base(), std::move(instance)};
}

}  // namespace reptri
