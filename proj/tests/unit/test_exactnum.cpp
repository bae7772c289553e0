#include "nodalhodge/exactnum.hpp"

#include <gtest/gtest.h>

#include <random>

using nodalhodge::BigRat;
using nodalhodge::DivisionByZero;
using nodalhodge::GaussRat;
using nodalhodge::ParseError;

TEST(BigRat, ReducesToLowestTerms) {
  BigRat a(mpz_class(6), mpz_class(-4));
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_EQ(a.denominator(), 2);
  EXPECT_EQ(BigRat(1) / BigRat(3) + BigRat(1) / BigRat(6), BigRat(mpz_class(1), mpz_class(2)));
}

TEST(BigRat, ZeroDenominatorThrows) {
  EXPECT_THROW(BigRat(mpz_class(1), mpz_class(0)), DivisionByZero);
  EXPECT_THROW(BigRat(1) / BigRat(0), DivisionByZero);
}

TEST(BigRat, ParseAndPrint) {
  EXPECT_EQ(BigRat::parse("-12/8").to_string(), "-3/2");
  EXPECT_EQ(BigRat::parse("0").to_string(), "0");
  EXPECT_THROW(BigRat::parse("1/0"), ParseError);
  EXPECT_THROW(BigRat::parse("1/"), ParseError);
  EXPECT_THROW(BigRat::parse("x"), ParseError);
  EXPECT_THROW(BigRat::parse("1 "), ParseError);
}

TEST(BigRat, Ordering) {
  EXPECT_LT(BigRat::parse("-1/2"), BigRat::parse("1/3"));
  EXPECT_GT(BigRat(2), BigRat::parse("3/2"));
}

TEST(GaussRat, ISquaredIsMinusOne) {
  EXPECT_EQ(GaussRat::i() * GaussRat::i(), GaussRat(-1));
}

TEST(GaussRat, InverseOfOnePlusI) {
  const GaussRat z(BigRat(1), BigRat(1));
  const GaussRat expected(BigRat::parse("1/2"), BigRat::parse("-1/2"));
  EXPECT_EQ(z.inverse(), expected);
  EXPECT_EQ(z * z.inverse(), GaussRat(1));
}

TEST(GaussRat, InverseOfZeroThrows) {
  EXPECT_THROW(GaussRat(0).inverse(), DivisionByZero);
  EXPECT_THROW(nodalhodge::invert(GaussRat()), DivisionByZero);
}

TEST(GaussRat, CanonicalText) {
  EXPECT_EQ(GaussRat(3).to_string(), "3");
  EXPECT_EQ(GaussRat(BigRat::parse("-1/2")).to_string(), "-1/2");
  EXPECT_EQ(GaussRat(BigRat::parse("1/2"), BigRat::parse("1/3")).to_string(), "1/2+1/3i");
  EXPECT_EQ(GaussRat(BigRat(0), BigRat(-1)).to_string(), "-1i");
  EXPECT_EQ(GaussRat(BigRat(2), BigRat(-5)).to_string(), "2-5i");
}

TEST(GaussRat, ParseGrammar) {
  EXPECT_EQ(GaussRat::parse("3"), GaussRat(3));
  EXPECT_EQ(GaussRat::parse("-1i"), GaussRat(BigRat(0), BigRat(-1)));
  EXPECT_EQ(GaussRat::parse("1/2+1/3i"), GaussRat(BigRat::parse("1/2"), BigRat::parse("1/3")));
  EXPECT_EQ(GaussRat::parse("-2-7/4i"), GaussRat(BigRat(-2), BigRat::parse("-7/4")));
  EXPECT_THROW(GaussRat::parse("1+i"), ParseError);
  EXPECT_THROW(GaussRat::parse("1+2"), ParseError);
  EXPECT_THROW(GaussRat::parse(""), ParseError);
  try {
    GaussRat::parse("1/2+3/0i");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6U);
  }
}

namespace {

GaussRat random_gauss(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 12);
  return GaussRat(BigRat(mpz_class(num(rng)), mpz_class(den(rng))),
                  BigRat(mpz_class(num(rng)), mpz_class(den(rng))));
}

}  // namespace

TEST(GaussRat, FieldAxiomsOnRandomValues) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const GaussRat a = random_gauss(rng);
    const GaussRat b = random_gauss(rng);
    const GaussRat c = random_gauss(rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
    if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), GaussRat(1));
    EXPECT_EQ(GaussRat::parse(a.to_string()), a);
  }
}
