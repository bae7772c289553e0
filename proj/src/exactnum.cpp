#include "nodalhodge/exactnum.hpp"

#include <cctype>

namespace nodalhodge {

BigRat::BigRat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero("BigRat with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRat::BigRat(mpq_class q) : q_(std::move(q)) {
  if (q_.get_den() == 0) throw DivisionByZero("BigRat with zero denominator");
  q_.canonicalize();
}

BigRat& BigRat::operator/=(const BigRat& o) {
  if (o.is_zero()) throw DivisionByZero("division of a rational by zero");
  q_ /= o.q_;
  return *this;
}

std::string BigRat::to_string() const { return q_.get_str(); }

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Parses a rational starting at `pos`, advancing it. Sign is not consumed.
BigRat parse_unsigned_rat(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  while (pos < text.size() && is_digit(text[pos])) ++pos;
  if (pos == start) throw ParseError("expected digits", start);
  mpz_class num(std::string(text.substr(start, pos - start)), 10);
  mpz_class den = 1;
  if (pos < text.size() && text[pos] == '/') {
    const std::size_t dstart = ++pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos;
    if (pos == dstart) throw ParseError("expected denominator digits", dstart);
    den = mpz_class(std::string(text.substr(dstart, pos - dstart)), 10);
    if (den == 0) throw ParseError("zero denominator", dstart);
  }
  return BigRat(num, den);
}

}  // namespace

BigRat BigRat::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  BigRat v = parse_unsigned_rat(text, pos);
  if (pos != text.size()) throw ParseError("trailing characters in rational", pos);
  return negative ? -v : v;
}

GaussRat GaussRat::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(i)");
  const BigRat n = norm();
  return GaussRat(re_ / n, -im_ / n);
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (o.im_.is_zero()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  if (im_.is_zero()) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  BigRat re = re_ * o.re_ - im_ * o.im_;
  BigRat im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussRat::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  if (re_.is_zero()) return im_.to_string() + "i";
  std::string s = re_.to_string();
  if (im_.sign() > 0) s += "+";
  s += im_.to_string();
  s += "i";
  return s;
}

GaussRat GaussRat::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  BigRat first = parse_unsigned_rat(text, pos);
  if (negative) first = -first;
  if (pos == text.size()) return GaussRat(first);
  if (text[pos] == 'i') {
    if (pos + 1 != text.size()) throw ParseError("trailing characters after 'i'", pos + 1);
    return GaussRat(BigRat(0), first);
  }
  if (text[pos] != '+' && text[pos] != '-') {
    throw ParseError("expected '+', '-' or 'i'", pos);
  }
  const bool minus = text[pos] == '-';
  ++pos;
  BigRat second = parse_unsigned_rat(text, pos);
  if (pos >= text.size() || text[pos] != 'i') throw ParseError("expected 'i'", pos);
  if (pos + 1 != text.size()) throw ParseError("trailing characters after 'i'", pos + 1);
  return GaussRat(first, minus ? -second : second);
}

std::ostream& operator<<(std::ostream& os, const BigRat& v) { return os << v.to_string(); }
std::ostream& operator<<(std::ostream& os, const GaussRat& v) { return os << v.to_string(); }

}  // namespace nodalhodge
