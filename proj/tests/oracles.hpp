#pragma once

// Reference implementations used only by tests. None of these call into the
// library: they use raw GMP integers, the closed-form repdigit formula and
// plain brute force, so agreement with the library is a genuine cross-check.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace oracle {

// d * (b^k - 1) / (b - 1), via exact division.
inline mpz_class repdigit_closed_form(std::uint64_t k, std::uint64_t b, std::uint64_t d) {
  mpz_class bk;
  mpz_ui_pow_ui(bk.get_mpz_t(), b, k);
  mpz_class num = mpz_class(static_cast<unsigned long>(d)) * (bk - 1);
  mpz_class den(static_cast<unsigned long>(b - 1));
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

inline mpz_class power(std::uint64_t d, std::uint64_t k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), d, k);
  return r;
}

inline bool gmp_is_square(const mpz_class& x) { return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0; }

inline mpz_class gmp_sqrt(const mpz_class& x) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

struct NaiveHit {
  std::uint64_t b, d, k;
  int type;  // 1 or 2
  std::string leg_a, leg_b, hypotenuse;

  friend bool operator==(const NaiveHit&, const NaiveHit&) = default;
};

// Direct perfect-square test on H^2 -/+ L^2 for every spec in the box,
// ordered by (b, d, k, type).
inline std::vector<NaiveHit> naive_search(std::uint64_t b_lo, std::uint64_t b_hi, std::uint64_t k_max, bool type1,
                                          bool type2, const std::vector<std::uint64_t>& digits = {}) {
  std::vector<NaiveHit> out;
  for (std::uint64_t b = b_lo; b <= b_hi; ++b) {
    std::vector<std::uint64_t> ds = digits;
    if (ds.empty()) {
      for (std::uint64_t d = 2; d + 1 <= b; ++d) ds.push_back(d);
    }
    for (auto d : ds) {
      if (d + 1 > b) continue;
      for (std::uint64_t k = 2; k <= k_max; ++k) {
        const mpz_class h = repdigit_closed_form(k, b, d);
        const mpz_class l = power(d, k);
        if (type1) {
          const mpz_class x = h * h - l * l;
          if (gmp_is_square(x)) out.push_back({b, d, k, 1, l.get_str(), gmp_sqrt(x).get_str(), h.get_str()});
        }
        if (type2) {
          const mpz_class x = h * h + l * l;
          if (gmp_is_square(x)) out.push_back({b, d, k, 2, l.get_str(), h.get_str(), gmp_sqrt(x).get_str()});
        }
      }
    }
  }
  return out;
}

inline std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Brute force over delta <= delta_max, n < m <= m_max for the (delta, m, n)
// producing legs {x, y} and hypotenuse z.
inline std::optional<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> brute_force_params(
    std::uint64_t x, std::uint64_t y, std::uint64_t z, std::uint64_t m_max, std::uint64_t delta_max) {
  for (std::uint64_t delta = 1; delta <= delta_max; ++delta) {
    for (std::uint64_t m = 2; m <= m_max; ++m) {
      for (std::uint64_t n = 1; n < m; ++n) {
        if (gcd64(m, n) != 1 || (m + n) % 2 == 0) continue;
        const std::uint64_t a = delta * (m * m - n * n);
        const std::uint64_t b = delta * 2 * m * n;
        const std::uint64_t c = delta * (m * m + n * n);
        if (c == z && ((a == x && b == y) || (a == y && b == x))) return std::make_tuple(delta, m, n);
      }
    }
  }
  return std::nullopt;
}

}  // namespace oracle
