#include "rough/rational.hpp"

#include <cctype>
#include <numeric>

#include "rough/errors.hpp"

namespace rough {

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0) {
    throw InvalidInput("rational: denominator must be positive, got " +
                       std::to_string(denominator));
  }
  if (numerator < 0) {
    throw InvalidInput("rational: numerator must be non-negative, got " +
                       std::to_string(numerator));
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

namespace {

std::int64_t parse_digits(const std::string& text, const std::string& whole) {
  if (text.empty()) {
    throw InvalidInput("rational: empty component in '" + whole + "'");
  }
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw InvalidInput("rational: expected a fraction like 'p/q', got '" + whole +
                         "' (decimals and signs are not accepted)");
    }
  }
  return std::stoll(text);
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Rational(parse_digits(text, text), 1);
  }
  const std::int64_t num = parse_digits(text.substr(0, slash), text);
  const std::int64_t den = parse_digits(text.substr(slash + 1), text);
  if (den == 0) {
    throw InvalidInput("rational: zero denominator in '" + text + "'");
  }
  return Rational(num, den);
}

std::string Rational::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }

}  // namespace rough
