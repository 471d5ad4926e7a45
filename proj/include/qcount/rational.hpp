#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qcount {

using Integer = mpz_class;

/// Narrowing conversions for values used as counts or shift amounts.
/// Throws std::overflow_error when the value does not fit.
unsigned long to_ulong_checked(const Integer& v);
std::size_t to_size_checked(const Integer& v);

/// Reduced fraction num/den with den > 0. Zero is 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(const Integer& n) : v_(n) {}
  Rational(Integer num, Integer den);

  /// Accepts "p/q" or a bare decimal integer, optionally negative.
  static Rational parse(std::string_view text);

  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }

  /// "p/q" reduced, or bare "p" when the value is an integer.
  std::string str() const;

  double approx() const { return v_.get_d(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_), raw_tag{});
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_), raw_tag{});
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_), raw_tag{});
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) {
    return Rational(mpq_class(-a.v_), raw_tag{});
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  struct raw_tag {};
  Rational(mpq_class q, raw_tag) : v_(std::move(q)) {}
  mpq_class v_;
};

/// 1/x; throws std::domain_error on zero.
Rational reciprocal(const Rational& x);

/// Unique n with n <= x < n+1.
Integer int_floor(const Rational& x);

/// For x >= 1, the unique k >= 0 with 2^k <= x < 2^(k+1), by exact integer
/// comparison. Throws std::domain_error for x < 1.
unsigned long pow2_floor_exp(const Rational& x);

/// j / 2^k in [0, 1] with j odd, or j = 0 and k = 0.
class Dyadic {
 public:
  Dyadic() : num_(0), exp_(0) {}
  Dyadic(Integer j, unsigned long k);

  /// Requires x = j / 2^k in [0, 1]; throws std::domain_error otherwise.
  static Dyadic from_rational(const Rational& x);

  /// Accepts "j/2^k", "0.bits" ("1." for one), or a bare integer, or any
  /// rational text whose denominator is a power of two.
  static Dyadic parse(std::string_view text);

  Rational to_rational() const;
  const Integer& numerator() const { return num_; }
  unsigned long exponent() const { return exp_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return exp_ == 0 && num_ == 1; }

  std::string str() const;       // "j/2^k"
  std::string bits_str() const;  // "0.011"; "0." for zero, "1." for one

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
  friend bool operator<(const Dyadic& a, const Dyadic& b);

 private:
  Integer num_;
  unsigned long exp_;
};

Dyadic midpoint(const Dyadic& a, const Dyadic& b);
Dyadic half(const Dyadic& a);
Dyadic complement(const Dyadic& a);  // 1 - a

}  // namespace qcount
