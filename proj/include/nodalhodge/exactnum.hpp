#pragma once

// Exact arithmetic over Q and the Gaussian rationals Q(i).

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nodalhodge {

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised for malformed literals; `position` is a 0-based offset into the
/// parsed text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Arbitrary-precision rational in lowest terms with a positive denominator.
class BigRat {
 public:
  BigRat() = default;
  BigRat(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  BigRat(const mpz_class& num, const mpz_class& den);
  explicit BigRat(mpq_class q);

  const mpq_class& value() const noexcept { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const noexcept { return sgn(q_) == 0; }
  int sign() const noexcept { return sgn(q_); }

  BigRat operator-() const { return BigRat(mpq_class(-q_)); }
  BigRat& operator+=(const BigRat& o) { q_ += o.q_; return *this; }
  BigRat& operator-=(const BigRat& o) { q_ -= o.q_; return *this; }
  BigRat& operator*=(const BigRat& o) { q_ *= o.q_; return *this; }
  BigRat& operator/=(const BigRat& o);

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// `p` or `p/q`, with a leading `-` for negatives.
  std::string to_string() const;

  /// rat := ["-"] digits ["/" digits]
  static BigRat parse(std::string_view text);

 private:
  mpq_class q_;
};

/// re + im*i with i^2 = -1. Both parts are kept reduced.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussRat(BigRat re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussRat(BigRat re, BigRat im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return GaussRat(BigRat(0), BigRat(1)); }

  const BigRat& re() const noexcept { return re_; }
  const BigRat& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const noexcept { return im_.is_zero() && re_ == BigRat(1); }
  bool is_real() const noexcept { return im_.is_zero(); }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  /// re^2 + im^2
  BigRat norm() const { return re_ * re_ + im_ * im_; }
  /// Throws DivisionByZero for zero.
  GaussRat inverse() const;

  GaussRat operator-() const { return GaussRat(-re_, -im_); }
  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o) { return *this *= o.inverse(); }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text form: `3`, `-1/2`, `1/2+1/3i`, `-1i`.
  std::string to_string() const;

  /// gauss := rat | rat ("+"|"-") rat "i" | ["-"] rat "i"
  static GaussRat parse(std::string_view text);

 private:
  BigRat re_;
  BigRat im_;
};

inline GaussRat invert(const GaussRat& a) { return a.inverse(); }

std::ostream& operator<<(std::ostream& os, const BigRat& v);
std::ostream& operator<<(std::ostream& os, const GaussRat& v);

}  // namespace nodalhodge
