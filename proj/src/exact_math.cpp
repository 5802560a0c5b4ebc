#include "waring/exact_math.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>

namespace waring {

Natural::Natural(BigInt v) : v_(std::move(v)) {
  if (v_.sign() < 0) throw std::domain_error("Natural: negative value " + v_.str());
}

Natural Natural::parse(const std::string& digits) {
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                     [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw std::invalid_argument("Natural: not a decimal integer: '" + digits + "'");
  }
  return Natural(BigInt(digits));
}

Natural& Natural::operator-=(const Natural& o) {
  if (v_ < o.v_) throw std::domain_error("Natural: subtraction underflow");
  v_ -= o.v_;
  return *this;
}

Natural Natural::div_floor(const Natural& b) const {
  if (b.is_zero()) throw DivisionByZero("Natural: division by zero");
  return Natural(BigInt(v_ / b.v_));
}

Natural Natural::mod(const Natural& b) const {
  if (b.is_zero()) throw DivisionByZero("Natural: division by zero");
  return Natural(BigInt(v_ % b.v_));
}

std::uint64_t Natural::to_u64() const {
  if (v_ > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("Natural: value does not fit in 64 bits");
  }
  return v_.convert_to<std::uint64_t>();
}

Natural pow(const Natural& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base.value();
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return Natural(std::move(result));
}

Natural factorial(std::uint64_t n) {
  BigInt result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return Natural(std::move(result));
}

Natural binomial(std::uint64_t m, std::uint64_t k) {
  if (k > m) return Natural(0);
  k = std::min(k, m - k);
  // Each partial product C(m-k+i, i) is an integer, so the division is exact.
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= m - k + i;
    result /= i;
  }
  return Natural(std::move(result));
}

Natural binomial_or_zero(std::int64_t m, std::int64_t k) {
  if (m < 0 || k < 0 || k > m) return Natural(0);
  return binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(k));
}

Natural ceil_div(const Natural& a, const Natural& b) {
  if (b.is_zero()) throw DivisionByZero("ceil_div: division by zero");
  BigInt q = a.value() / b.value();
  if (BigInt(a.value() % b.value()) != 0) ++q;
  return Natural(std::move(q));
}

Ratio::Ratio(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("Ratio: zero denominator");
  normalize();
}

void Ratio::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Ratio Ratio::parse(const std::string& text) {
  auto digits_ok = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && s[0] == '-') i = 1;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) {
    throw std::invalid_argument("Ratio: malformed fraction '" + text + "'");
  }
  return Ratio(BigInt(num), BigInt(den));
}

Ratio Ratio::operator-() const {
  Ratio r = *this;
  r.num_ = -r.num_;
  return r;
}

Ratio Ratio::abs() const { return is_negative() ? -*this : *this; }

Ratio operator+(const Ratio& a, const Ratio& b) {
  return Ratio(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Ratio operator-(const Ratio& a, const Ratio& b) {
  return Ratio(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Ratio operator*(const Ratio& a, const Ratio& b) { return Ratio(a.num_ * b.num_, a.den_ * b.den_); }

Ratio operator/(const Ratio& a, const Ratio& b) {
  if (b.is_zero()) throw DivisionByZero("Ratio: division by zero");
  return Ratio(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
  // Denominators are positive, so cross-multiplication preserves order.
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  return lhs.compare(rhs) <=> 0;
}

std::strong_ordering ratio_compare(const Ratio& a, const Ratio& b) { return a <=> b; }

std::string Ratio::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

double Ratio::to_double() const {
  // Scale down huge operands before converting so the quotient stays finite.
  using boost::multiprecision::msb;
  const bool negative = num_.sign() < 0;
  BigInt n = negative ? BigInt(-num_) : num_;
  BigInt d = den_;
  const auto bits = [](const BigInt& v) -> long { return v.is_zero() ? 0 : static_cast<long>(msb(v)); };
  const long excess = std::max(bits(n), bits(d)) - 900;
  if (excess > 0) {
    n >>= excess;
    d >>= excess;
    if (d.is_zero()) return negative ? -HUGE_VAL : HUGE_VAL;
  }
  const double q = n.convert_to<double>() / d.convert_to<double>();
  return negative ? -q : q;
}

std::string approx_string(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

}  // namespace waring
