#include "tropik/values.hpp"

#include <ostream>
#include <stdexcept>

namespace tropik {

std::string TropicalValue::str() const {
  if (is_bottom()) return "-inf";
  return v_.str();
}

std::ostream& operator<<(std::ostream& os, const TropicalValue& v) {
  return os << v.str();
}

Rational::Rational(BigInt num, BigInt den) : finite_(true) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  // boost::rational over an unbounded integer type rejects negative
  // denominators outright, so move the sign to the numerator first.
  if (den < 0) {
    num = -num;
    den = -den;
  }
  q_ = BigRational(std::move(num), std::move(den));  // cpp_rational reduces
}

Rational Rational::operator+(const Rational& o) const {
  if (is_bottom() || o.is_bottom()) return bottom();
  return Rational(q_ + o.q_);
}

Rational Rational::operator-() const {
  if (is_bottom()) return bottom();
  return Rational(-q_);
}

std::string Rational::str() const {
  if (is_bottom()) return "-inf";
  BigInt n = num(), d = den();
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& v) {
  return os << v.str();
}

}  // namespace tropik
