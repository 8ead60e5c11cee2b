#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace phifact {

// Exact reduced fraction with a positive denominator. Comparisons are done by
// 128-bit cross multiplication, so no floating point enters any decision.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Decimal rendering with `digits` fractional digits, ties rounded to even.
  std::string to_decimal(int digits) const;
  // "num/den", or just "num" when den == 1.
  std::string to_string() const;

  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);

  friend bool operator==(const Rational& x, const Rational& y) noexcept {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) noexcept;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace phifact
