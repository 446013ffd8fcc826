#include "reptri/triples.hpp"

#include <stdexcept>
#include <utility>

#include "reptri/error.hpp"

namespace reptri {

TripleParams::TripleParams(Natural delta, Natural m, Natural n)
    : delta_(std::move(delta)), m_(std::move(m)), n_(std::move(n)) {
  if (delta_.is_zero()) throw ConstraintError("triple parameters require delta >= 1");
  if (n_.is_zero()) throw ConstraintError("triple parameters require n >= 1");
  if (m_ <= n_) throw ConstraintError("triple parameters require m > n");
  if (gcd(m_, n_) != Natural(1)) throw ConstraintError("triple parameters require gcd(m, n) = 1");
  if (m_.is_odd() == n_.is_odd()) throw ConstraintError("triple parameters require m + n odd");
}

Triple compose_triple(const TripleParams& p) {
  const Natural m2 = p.m() * p.m();
  const Natural n2 = p.n() * p.n();
  return Triple{
      p.delta() * (m2 - n2),
      p.delta() * ((p.m() * p.n()) << 1),
      p.delta() * (m2 + n2),
  };
}

TripleParams decompose_triple(const Natural& a, const Natural& b, const Natural& c) {
  if (a.is_zero() || b.is_zero() || c.is_zero()) throw ConstraintError("degenerate triangle: a side is zero");
  if (a * a + b * b != c * c) throw ConstraintError("not a Pythagorean triple: a^2 + b^2 != c^2");

  const Natural delta = gcd(a, gcd(b, c));
  const Natural pa = a / delta;
  const Natural pb = b / delta;
  const Natural pc = c / delta;

  // In a primitive triple exactly one leg is odd; it is m^2 - n^2.
  const Natural& odd = pa.is_odd() ? pa : pb;
  const Natural& even = pa.is_odd() ? pb : pa;
  if (!odd.is_odd() || even.is_odd()) throw std::logic_error("decompose_triple: primitive legs must differ in parity");

  Natural m = isqrt((pc + odd) >> 1);
  Natural n = isqrt((pc - odd) >> 1);
  TripleParams params(delta, std::move(m), std::move(n));

  const Triple t = compose_triple(params);
  if (t.odd_leg != odd * delta || t.even_leg != even * delta || t.hypotenuse != c) {
    throw std::logic_error("decompose_triple: recovered parameters do not reproduce the triple");
  }
  return params;
}

std::string_view to_string(TriangleType type) { return type == TriangleType::Type1 ? "t1" : "t2"; }

std::optional<TriangleType> parse_triangle_type(std::string_view text) {
  if (text == "t1" || text == "T1" || text == "1") return TriangleType::Type1;
  if (text == "t2" || text == "T2" || text == "2") return TriangleType::Type2;
  return std::nullopt;
}

bool witness_is_valid(const TriangleWitness& w) {
  if (w.leg_a * w.leg_a + w.leg_b * w.leg_b != w.hypotenuse * w.hypotenuse) return false;
  const Natural power = digit_power(w.spec);
  const Natural repdigit = repdigit_value(w.spec);
  if (w.leg_a != power) return false;
  if (w.type == TriangleType::Type1) return w.hypotenuse == repdigit;
  return w.leg_b == repdigit;
}

namespace detail {

std::optional<TriangleWitness> check_type1(const RepdigitSpec& spec, const Natural& repdigit, const Natural& power) {
  // d_{k,b} > d^k for every valid spec; equality would be an isosceles right triangle.
  if (repdigit <= power) throw std::logic_error("check_type1: hypotenuse does not exceed the digit-power leg");
  const Natural diff = repdigit * repdigit - power * power;
  auto root = is_perfect_square(diff);
  if (!root) return std::nullopt;
  TriangleWitness w{power, std::move(*root), repdigit, TriangleType::Type1, spec, std::nullopt};
  w.params = decompose_triple(w.leg_a, w.leg_b, w.hypotenuse);
  return w;
}

std::optional<TriangleWitness> check_type2(const RepdigitSpec& spec, const Natural& repdigit, const Natural& power) {
  auto root = is_perfect_square(repdigit * repdigit + power * power);
  if (!root) return std::nullopt;
  TriangleWitness w{power, repdigit, std::move(*root), TriangleType::Type2, spec, std::nullopt};
  w.params = decompose_triple(w.leg_a, w.leg_b, w.hypotenuse);
  return w;
}

}  // namespace detail

std::optional<TriangleWitness> check_type1(const RepdigitSpec& spec) {
  return detail::check_type1(spec, repdigit_value(spec), digit_power(spec));
}

std::optional<TriangleWitness> check_type2(const RepdigitSpec& spec) {
  return detail::check_type2(spec, repdigit_value(spec), digit_power(spec));
}

std::optional<TriangleWitness> check_type(const RepdigitSpec& spec, TriangleType type) {
  return type == TriangleType::Type1 ? check_type1(spec) : check_type2(spec);
}

}  // namespace reptri
