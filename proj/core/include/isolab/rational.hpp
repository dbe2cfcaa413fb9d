#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace isolab {

/// Arbitrary-precision integer used throughout the library.
using Int = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with positive denominator.
///
/// All arithmetic is exact; there is deliberately no conversion to or from
/// floating point.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}           // NOLINT: implicit by design
  Rational(long long n) : num_(n), den_(1) {}     // NOLINT
  Rational(Int n) : num_(std::move(n)), den_(1) {}  // NOLINT
  Rational(Int num, Int den);

  /// Parses "a", "-a" or "a/b". Rejects anything else, in particular floats.
  static Rational parse(std::string_view text);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  Rational abs() const;
  Rational pow(unsigned exponent) const;

  /// "a" when the denominator is 1, otherwise "a/b".
  std::string str() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const Int lhs = a.num_ * b.den_;
    const Int rhs = b.num_ * a.den_;
    return lhs < rhs   ? std::strong_ordering::less
           : lhs > rhs ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
  }

 private:
  void normalize();

  Int num_;
  Int den_;  // > 0
};

Rational operator+(Rational a, const Rational& b);
Rational operator-(Rational a, const Rational& b);
Rational operator*(Rational a, const Rational& b);
Rational operator/(Rational a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace isolab
