#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>

namespace tropik {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Element of the max-plus semiring Z_max = (Z + {-inf}, max, +).
// Semiring operators: a + b is max(a, b), a * b is integer addition;
// bottom (-inf) is neutral for + and absorbing for *.
class TropicalValue {
 public:
  TropicalValue() : finite_(false) {}  // bottom
  explicit TropicalValue(BigInt v) : finite_(true), v_(std::move(v)) {}
  explicit TropicalValue(long long v) : finite_(true), v_(v) {}

  static TropicalValue bottom() { return TropicalValue(); }
  static TropicalValue zero() { return TropicalValue(BigInt(0)); }

  bool is_bottom() const { return !finite_; }
  bool is_finite() const { return finite_; }
  // Pre: is_finite().
  const BigInt& value() const { return v_; }

  friend TropicalValue operator+(const TropicalValue& a, const TropicalValue& b) {
    if (a.is_bottom()) return b;
    if (b.is_bottom()) return a;
    return TropicalValue(a.v_ >= b.v_ ? a.v_ : b.v_);
  }
  friend TropicalValue operator*(const TropicalValue& a, const TropicalValue& b) {
    if (a.is_bottom() || b.is_bottom()) return bottom();
    return TropicalValue(a.v_ + b.v_);
  }
  TropicalValue& operator+=(const TropicalValue& o) { *this = *this + o; return *this; }
  TropicalValue& operator*=(const TropicalValue& o) { *this = *this * o; return *this; }

  // Total order with bottom below every finite value.
  friend bool operator==(const TropicalValue& a, const TropicalValue& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.v_ == b.v_;
  }
  friend std::strong_ordering operator<=>(const TropicalValue& a, const TropicalValue& b) {
    if (!a.finite_ && !b.finite_) return std::strong_ordering::equal;
    if (!a.finite_) return std::strong_ordering::less;
    if (!b.finite_) return std::strong_ordering::greater;
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  bool is_negative() const { return !finite_ || v_ < 0; }

  std::string str() const;

 private:
  bool finite_;
  BigInt v_;
};

std::ostream& operator<<(std::ostream& os, const TropicalValue& v);

// Exact rational, extended with bottom (-inf) so cycle means over the
// tropical semiring always have a representation.
class Rational {
 public:
  Rational() : finite_(false) {}  // bottom
  explicit Rational(BigRational q) : finite_(true), q_(std::move(q)) {}
  Rational(BigInt num, BigInt den);  // reduces; pre: den != 0
  explicit Rational(long long v) : finite_(true), q_(v) {}

  static Rational bottom() { return Rational(); }

  bool is_bottom() const { return !finite_; }
  bool is_finite() const { return finite_; }
  // Pre: is_finite().
  const BigRational& value() const { return q_; }
  BigInt num() const { return boost::multiprecision::numerator(q_); }
  BigInt den() const { return boost::multiprecision::denominator(q_); }

  bool is_negative() const { return !finite_ || q_ < 0; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.finite_ && !b.finite_) return std::strong_ordering::equal;
    if (!a.finite_) return std::strong_ordering::less;
    if (!b.finite_) return std::strong_ordering::greater;
    if (a.q_ < b.q_) return std::strong_ordering::less;
    if (a.q_ > b.q_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational operator+(const Rational& o) const;  // bottom absorbs
  Rational operator-() const;

  std::string str() const;  // "num/den", plain integer when den == 1, "-inf" for bottom

 private:
  bool finite_;
  BigRational q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace tropik
