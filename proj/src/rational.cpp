#include "tristrat/rational.hpp"

#include <cctype>
#include <ostream>

#include "tristrat/error.hpp"

namespace tristrat {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// cpp_int reads a leading zero as an octal prefix.
BigInt parse_digits(std::string_view digits) {
  auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return BigInt(std::string(digits.substr(first)));
}

BigInt pow10(int exponent) {
  BigInt result = 1;
  for (int i = 0; i < exponent; ++i) result *= 10;
  return result;
}

[[noreturn]] void bad_literal(std::string_view text) {
  fail(ErrorKind::Parse, "malformed number '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorKind::Validation, "rational with zero denominator");
  value_ = den < 0 ? Value(-num, -den) : Value(num, den);
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  if (s.empty()) bad_literal(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  BigInt num;
  BigInt den = 1;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view n = trim(s.substr(0, slash));
    std::string_view d = trim(s.substr(slash + 1));
    if (!all_digits(n) || !all_digits(d)) bad_literal(text);
    num = parse_digits(n);
    den = parse_digits(d);
    if (den == 0) fail(ErrorKind::Validation, "zero denominator in '" + std::string(text) + "'");
  } else {
    std::string_view whole = s;
    std::string_view frac;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      whole = s.substr(0, dot);
      frac = s.substr(dot + 1);
    }
    if (whole.empty() && frac.empty()) bad_literal(text);
    if (!whole.empty() && !all_digits(whole)) bad_literal(text);
    if (!frac.empty() && !all_digits(frac)) bad_literal(text);
    std::string digits = std::string(whole) + std::string(frac);
    num = parse_digits(digits);
    den = pow10(static_cast<int>(frac.size()));
  }
  if (negative) num = -num;
  return Rational(num, den);
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

std::string Rational::to_string() const {
  BigInt den = denominator();
  if (den == 1) return numerator().str();
  return numerator().str() + "/" + den.str();
}

std::string Rational::to_decimal(int places) const {
  if (places < 0) places = 0;
  BigInt num = numerator();
  const BigInt den = denominator();
  const bool negative = num < 0;
  if (negative) num = -num;

  const BigInt scaled = num * pow10(places);
  BigInt quotient = scaled / den;
  const BigInt remainder = scaled % den;
  if (remainder * 2 >= den) quotient += 1;

  std::string digits = quotient.str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (negative && quotient != 0) digits.insert(0, "-");
  return digits;
}

std::string Rational::to_display(std::int64_t max_den) const {
  if (denominator() <= max_den) return to_string();
  return to_decimal(4);
}

double Rational::to_double() const { return value_.convert_to<double>(); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) fail(ErrorKind::ZeroMass, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(Value(-value_)); }

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  if (lhs.value_ < rhs.value_) return std::strong_ordering::less;
  if (lhs.value_ > rhs.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace tristrat
