#include "phifact/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>

#include "phifact/errors.hpp"

namespace phifact {

namespace {

__extension__ typedef __int128 i128;

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw ArithmeticError("rational overflow");
  }
  return static_cast<std::int64_t>(v);
}

Rational make(i128 num, i128 den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 a = num < 0 ? -num : num;
  i128 b = den;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    if (num == std::numeric_limits<std::int64_t>::min() || den == std::numeric_limits<std::int64_t>::min()) {
      throw ArithmeticError("rational overflow");
    }
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational operator+(const Rational& x, const Rational& y) {
  return make(i128{x.num_} * y.den_ + i128{y.num_} * x.den_, i128{x.den_} * y.den_);
}

Rational operator-(const Rational& x, const Rational& y) {
  return make(i128{x.num_} * y.den_ - i128{y.num_} * x.den_, i128{x.den_} * y.den_);
}

Rational operator*(const Rational& x, const Rational& y) {
  return make(i128{x.num_} * y.num_, i128{x.den_} * y.den_);
}

Rational operator/(const Rational& x, const Rational& y) {
  return make(i128{x.num_} * y.den_, i128{x.den_} * y.num_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) noexcept {
  return i128{x.num_} * y.den_ <=> i128{y.num_} * x.den_;
}

std::string Rational::to_decimal(int digits) const {
  i128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = num_ < 0;
  const i128 mag = negative ? -i128{num_} : i128{num_};
  i128 q = mag * scale / den_;
  const i128 rem = mag * scale % den_;
  if (2 * rem > den_ || (2 * rem == den_ && (q & 1) != 0)) ++q;

  const i128 int_part = q / scale;
  i128 frac_part = q % scale;
  std::string out = negative && q != 0 ? "-" : "";
  out += std::to_string(static_cast<std::uint64_t>(int_part));
  if (digits > 0) {
    std::string frac(static_cast<std::size_t>(digits), '0');
    for (int i = digits - 1; i >= 0; --i) {
      frac[static_cast<std::size_t>(i)] = static_cast<char>('0' + static_cast<int>(frac_part % 10));
      frac_part /= 10;
    }
    out += '.';
    out += frac;
  }
  return out;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace phifact
