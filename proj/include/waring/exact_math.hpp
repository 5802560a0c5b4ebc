#pragma once

/**
 * @file exact_math.hpp
 * @brief Exact integer and rational arithmetic.
 *
 * Every rank, binomial and bound in the library is a Natural; every ratio
 * (rank over generic rank, asymptotic limits, cleared inequality sides) is a
 * Ratio. Comparisons are exact. Doubles only appear through to_double(),
 * which exists for the "_approx" report columns.
 */

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "waring/errors.hpp"

namespace waring {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision nonnegative integer.
class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Natural(BigInt v);

  /// Parses a decimal string of digits.
  static Natural parse(const std::string& digits);

  const BigInt& value() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }

  Natural& operator+=(const Natural& o) { v_ += o.v_; return *this; }
  Natural& operator*=(const Natural& o) { v_ *= o.v_; return *this; }
  /// Throws std::domain_error if the result would be negative.
  Natural& operator-=(const Natural& o);

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }

  friend bool operator==(const Natural&, const Natural&) = default;
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    return a.v_.compare(b.v_) <=> 0;
  }

  /// Floor division; throws DivisionByZero when b is zero.
  Natural div_floor(const Natural& b) const;
  Natural mod(const Natural& b) const;

  std::string to_string() const { return v_.str(); }
  double to_double() const { return v_.convert_to<double>(); }
  /// Throws std::overflow_error if the value exceeds 64 bits.
  std::uint64_t to_u64() const;

  friend std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.v_; }

 private:
  BigInt v_;
};

Natural pow(const Natural& base, std::uint64_t exponent);
Natural factorial(std::uint64_t n);

/// C(m, k); zero when k > m.
Natural binomial(std::uint64_t m, std::uint64_t k);

/// C(m, k) for signed arguments, zero whenever m < 0, k < 0 or k > m.
/// The correction terms of the classical upper bounds rely on this.
Natural binomial_or_zero(std::int64_t m, std::int64_t k);

/// ceil(a / b); throws DivisionByZero when b is zero.
Natural ceil_div(const Natural& a, const Natural& b);

/// Exact rational in lowest terms with a positive denominator.
class Ratio {
 public:
  Ratio() : num_(0), den_(1) {}
  Ratio(std::int64_t v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)
  Ratio(const Natural& v) : num_(v.value()), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero when den is zero.
  Ratio(BigInt num, BigInt den);
  Ratio(const Natural& num, const Natural& den) : Ratio(num.value(), den.value()) {}

  /// Parses "p/q" or "p".
  static Ratio parse(const std::string& text);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_positive() const { return num_.sign() > 0; }
  bool is_negative() const { return num_.sign() < 0; }

  Ratio operator-() const;
  Ratio abs() const;

  friend Ratio operator+(const Ratio& a, const Ratio& b);
  friend Ratio operator-(const Ratio& a, const Ratio& b);
  friend Ratio operator*(const Ratio& a, const Ratio& b);
  friend Ratio operator/(const Ratio& a, const Ratio& b);

  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

  /// "p/q" in lowest terms, or "p" when the denominator is 1.
  std::string to_string() const;
  double to_double() const;

  friend std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.to_string(); }

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

/// Cross-multiplied comparison; the spelled-out form of operator<=>.
std::strong_ordering ratio_compare(const Ratio& a, const Ratio& b);

/// Decimal rendering rounded to 12 significant digits, for approximate columns.
std::string approx_string(double value);

}  // namespace waring
