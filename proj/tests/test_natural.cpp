#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "reptri/natural.hpp"

using reptri::Natural;

namespace {

Natural random_natural(std::mt19937_64& rng, unsigned bits) {
  mpz_class v;
  for (unsigned i = 0; i < bits; i += 64) {
    v <<= 64;
    v += mpz_class(static_cast<unsigned long>(rng()));
  }
  mpz_fdiv_r_2exp(v.get_mpz_t(), v.get_mpz_t(), bits);
  return Natural(v);
}

}  // namespace

TEST(Isqrt, Examples) {
  EXPECT_EQ(reptri::isqrt(Natural(0)), Natural(0));
  EXPECT_EQ(reptri::isqrt(Natural(24)), Natural(4));

  // 666^2 - 216^2 computed by plain 64-bit arithmetic.
  const std::uint64_t diff = 666ull * 666ull - 216ull * 216ull;
  ASSERT_EQ(diff, 396900u);
  ASSERT_EQ(630ull * 630ull, diff);
  EXPECT_EQ(reptri::isqrt(Natural(diff)), Natural(630));
}

TEST(Isqrt, FloorPropertyDenseRange) {
  for (std::uint64_t n = 0; n <= 1'000'000; ++n) {
    const Natural r = reptri::isqrt(Natural(n));
    const std::uint64_t rr = *r.to_u64();
    ASSERT_LE(rr * rr, n) << n;
    ASSERT_GT((rr + 1) * (rr + 1), n) << n;
  }
}

TEST(Isqrt, FloorPropertyRandom512Bit) {
  std::mt19937_64 rng(20241019);
  for (int i = 0; i < 2000; ++i) {
    const Natural n = random_natural(rng, 512);
    const Natural r = reptri::isqrt(n);
    ASSERT_LE(r * r, n);
    ASSERT_GT((r + Natural(1)) * (r + Natural(1)), n);
    ASSERT_EQ(r.mpz(), oracle::gmp_sqrt(n.mpz()));
  }
}

TEST(Isqrt, PerfectSquaresAndNeighbours) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Natural x = random_natural(rng, 1 + static_cast<unsigned>(rng() % 700));
    const Natural sq = x * x;
    EXPECT_EQ(reptri::isqrt(sq), x);
    if (!sq.is_zero()) EXPECT_EQ(reptri::isqrt(sq - Natural(1)) + Natural(1), x);
  }
}

TEST(PerfectSquare, Examples) {
  auto r = reptri::is_perfect_square(Natural(4225));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, Natural(65));
  EXPECT_EQ(65u * 65u, 4225u);

  // 8^2 - 4^2 from the base-3 spec (2, 3, 2); 6^2 < 48 < 7^2.
  EXPECT_FALSE(reptri::is_perfect_square(Natural(48)));

  auto one = reptri::is_perfect_square(Natural(1));
  ASSERT_TRUE(one);
  EXPECT_EQ(*one, Natural(1));
  EXPECT_EQ(reptri::is_perfect_square(Natural(0)).value(), Natural(0));
}

TEST(PerfectSquare, SquaresAcceptedSuccessorsRejected) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 3000; ++i) {
    Natural x = random_natural(rng, 1 + static_cast<unsigned>(rng() % 512));
    if (x.is_zero()) x = Natural(1);
    const Natural sq = x * x;
    ASSERT_TRUE(reptri::passes_square_residues(sq));
    auto root = reptri::is_perfect_square(sq);
    ASSERT_TRUE(root);
    ASSERT_EQ(*root, x);
    ASSERT_FALSE(reptri::is_perfect_square(sq + Natural(1)));
  }
}

TEST(PerfectSquare, AgreesWithGmpOnSmallRange) {
  for (std::uint64_t n = 0; n < 200'000; ++n) {
    ASSERT_EQ(reptri::is_perfect_square(Natural(n)).has_value(), oracle::gmp_is_square(mpz_class(n))) << n;
  }
}

TEST(PerfectSquare, ResidueFilterRejectsMostNonSquares) {
  std::uint64_t rejected = 0;
  const std::uint64_t total = 64 * 63 * 10;
  for (std::uint64_t n = 0; n < total; ++n) rejected += reptri::passes_square_residues(Natural(n)) ? 0 : 1;
  // 12 of 64 residues mod 64 and 16 of 63 mod 63 are squares: 1 - 12*16/4032.
  EXPECT_EQ(rejected, total - total * 12 * 16 / 4032);
}

TEST(Gcd, Examples) {
  EXPECT_EQ(oracle::gcd64(216, 630), 18u);
  EXPECT_EQ(reptri::gcd(Natural(216), Natural(630)), Natural(18));
  EXPECT_EQ(reptri::gcd(Natural(6), Natural(1)), Natural(1));
  EXPECT_EQ(reptri::gcd(Natural(0), Natural(7)), Natural(7));
}

TEST(Gcd, Properties) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const Natural common = random_natural(rng, 40);
    const Natural a = random_natural(rng, 200) * common;
    const Natural b = random_natural(rng, 200) * common;
    const Natural c = random_natural(rng, 200) * common;
    const Natural g = reptri::gcd(a, b);
    EXPECT_EQ(g, reptri::gcd(b, a));
    EXPECT_EQ(reptri::gcd(reptri::gcd(a, b), c), reptri::gcd(a, reptri::gcd(b, c)));
    if (!g.is_zero()) {
      EXPECT_TRUE((a % g).is_zero());
      EXPECT_TRUE((b % g).is_zero());
    }
  }
}

TEST(Pow, Examples) {
  EXPECT_EQ(reptri::pow(Natural(6), 3), Natural(216));
  EXPECT_EQ(reptri::pow(Natural(17), 1), Natural(17));
  EXPECT_EQ(reptri::pow(Natural(4), 5), Natural(1024));
  EXPECT_EQ(reptri::pow(Natural(0), 0), Natural(1));
  EXPECT_EQ(reptri::pow(Natural(0), 3), Natural(0));
}

TEST(Pow, SuccessorProperty) {
  for (std::uint64_t b = 0; b <= 40; ++b) {
    for (std::uint64_t j = 0; j <= 80; ++j) {
      ASSERT_EQ(reptri::pow(Natural(b), j + 1), reptri::pow(Natural(b), j) * Natural(b));
    }
  }
}

TEST(NaturalValue, NoNegativeValues) {
  EXPECT_THROW(Natural(3) - Natural(4), std::domain_error);
  EXPECT_THROW(Natural(mpz_class(-1)), std::domain_error);
  EXPECT_THROW(Natural(3) / Natural(0), std::domain_error);
  EXPECT_EQ(Natural(4) - Natural(4), Natural(0));
}

TEST(NaturalValue, LargeValuesAreExact) {
  // (10^6)^256 has 1537 decimal digits.
  const Natural big = reptri::pow(Natural(1'000'000), 256);
  EXPECT_EQ(big.to_string().size(), 1537u);
  EXPECT_EQ(Natural::from_decimal(big.to_string()), big);
  EXPECT_FALSE(big.to_u64());
  EXPECT_THROW(Natural::from_decimal("12a"), std::invalid_argument);
}
