#include "minv/rational.hpp"

#include <cctype>
#include <ostream>

#include "minv/errors.hpp"

namespace minv {

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto bad = [&] { throw InputError("invalid rational '" + std::string(text) + "'"); };
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t numDigits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++numDigits;
  if (numDigits == 0) bad();
  if (i < text.size()) {
    if (text[i] != '/') bad();
    ++i;
    std::size_t denStart = i, denDigits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i, ++denDigits;
    if (denDigits == 0 || i != text.size()) bad();
    bool allZero = true;
    for (std::size_t k = denStart; k < text.size(); ++k)
      if (text[k] != '0') allZero = false;
    if (allZero) bad();
  }
  std::string_view digits = text;
  if (digits.front() == '+') digits.remove_prefix(1);  // set_str takes no '+'
  mpq_class v;
  if (v.set_str(std::string(digits), 10) != 0) bad();
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  return Rational(mpq_class(1) / v_);
}

std::string Rational::str() const {
  return is_integer() ? v_.get_num().get_str() : v_.get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace minv
