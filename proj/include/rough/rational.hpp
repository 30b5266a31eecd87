#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace rough {

/// Exact non-negative fraction, always kept in lowest terms.
///
/// Membership values and walk thresholds are compared exactly; no floating
/// point is used anywhere in the library. Weighted degrees may exceed 1, so
/// the unit-interval constraint is checked by the consumers that need it.
class Rational {
 public:
  Rational() = default;  // 0/1
  Rational(std::int64_t numerator, std::int64_t denominator);

  /// Parses "p/q" or a bare non-negative integer "p". Decimal literals are
  /// rejected so comparisons stay exact.
  static Rational parse(const std::string& text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool in_unit_interval() const { return num_ <= den_; }

  /// Always renders as "num/den", e.g. "1/3", "0/1", "1/1".
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational min(const Rational& a, const Rational& b);

}  // namespace rough
