#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace delsarte {

using Integer = mpz_class;

/// Exact rational scalar in canonical form: denominator >= 1,
/// gcd(|numerator|, denominator) = 1, zero stored as 0/1.
/// All arithmetic is exact; values are immutable plain data.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(const Integer& n) : v_(n) {}
  Rational(const Integer& num, const Integer& den) {
    if (den == 0)
      throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero())
      throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Textual form "p/q", with "/q" omitted when q = 1; sign on p.
  std::string str() const { return v_.get_str(); }

  static Rational parse(std::string_view s) {
    if (s.empty())
      throw std::invalid_argument("Rational: empty string");
    for (char ch : s) {
      if (ch != '-' && ch != '/' && (ch < '0' || ch > '9'))
        throw std::invalid_argument("Rational: bad character in '" + std::string(s) + "'");
    }
    mpq_class v;
    if (mpq_set_str(v.get_mpq_t(), std::string(s).c_str(), 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
    if (v.get_den() == 0)
      throw std::invalid_argument("Rational: zero denominator in '" + std::string(s) + "'");
    v.canonicalize();
    return Rational(v);
  }

private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace delsarte
