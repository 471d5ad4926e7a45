#include "qcount/rational.hpp"

#include <cctype>

namespace qcount {

unsigned long to_ulong_checked(const Integer& v) {
  if (v < 0 || !v.fits_ulong_p()) {
    throw std::overflow_error("value does not fit in an unsigned long: " + v.get_str());
  }
  return v.get_ui();
}

std::size_t to_size_checked(const Integer& v) {
  return static_cast<std::size_t>(to_ulong_checked(v));
}

Rational::Rational(Integer num, Integer den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(std::move(num), std::move(den));
  v_.canonicalize();
}

namespace {

bool is_decimal(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool neg = false;
  if (!body.empty() && body.front() == '-') {
    neg = true;
    body.remove_prefix(1);
  }
  std::string_view num = body, den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!is_decimal(num) || !is_decimal(den)) {
    throw std::invalid_argument("invalid rational text: '" + std::string(text) + "'");
  }
  Integer p(std::string(num), 10), q(std::string(den), 10);
  if (neg) p = -p;
  return Rational(std::move(p), std::move(q));
}

std::string Rational::str() const {
  return is_integer() ? v_.get_num().get_str() : v_.get_str();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.v_ == 0) throw std::domain_error("division by zero");
  return Rational(mpq_class(a.v_ / b.v_), Rational::raw_tag{});
}

Rational reciprocal(const Rational& x) {
  return Rational(1) / x;
}

Integer int_floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
  return q;
}

unsigned long pow2_floor_exp(const Rational& x) {
  if (x < Rational(1)) throw std::domain_error("pow2_floor_exp requires x >= 1");
  const Integer p = x.num();
  const Integer q = x.den();
  std::size_t bp = mpz_sizeinbase(p.get_mpz_t(), 2);
  std::size_t bq = mpz_sizeinbase(q.get_mpz_t(), 2);
  unsigned long k = bp >= bq ? static_cast<unsigned long>(bp - bq) : 0;
  Integer shifted;
  // candidate from bit lengths is within one of the answer; fix up exactly
  mpz_mul_2exp(shifted.get_mpz_t(), q.get_mpz_t(), k);
  while (shifted > p) {
    --k;
    mpz_fdiv_q_2exp(shifted.get_mpz_t(), shifted.get_mpz_t(), 1);
  }
  Integer next;
  mpz_mul_2exp(next.get_mpz_t(), shifted.get_mpz_t(), 1);
  while (next <= p) {
    ++k;
    mpz_mul_2exp(next.get_mpz_t(), next.get_mpz_t(), 1);
  }
  return k;
}

Dyadic::Dyadic(Integer j, unsigned long k) : num_(std::move(j)), exp_(k) {
  if (num_ < 0) throw std::domain_error("dyadic numerator must be nonnegative");
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  unsigned long twos = static_cast<unsigned long>(mpz_scan1(num_.get_mpz_t(), 0));
  if (twos > exp_) twos = exp_;
  mpz_fdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), twos);
  exp_ -= twos;
  // value must lie in [0, 1]: j < 2^k, or j = 1 with k = 0
  if (exp_ == 0) {
    if (num_ > 1) throw std::domain_error("dyadic value exceeds 1");
  } else if (mpz_sizeinbase(num_.get_mpz_t(), 2) > exp_) {
    throw std::domain_error("dyadic value exceeds 1");
  }
}

Dyadic Dyadic::from_rational(const Rational& x) {
  if (x < Rational(0) || x > Rational(1)) {
    throw std::domain_error("dyadic value must lie in [0, 1]: " + x.str());
  }
  const Integer den = x.den();
  if (mpz_popcount(den.get_mpz_t()) != 1) {
    throw std::domain_error("not a dyadic rational: " + x.str());
  }
  unsigned long k = static_cast<unsigned long>(mpz_scan1(den.get_mpz_t(), 0));
  return Dyadic(x.num(), k);
}

Dyadic Dyadic::parse(std::string_view text) {
  if (auto caret = text.find("/2^"); caret != std::string_view::npos) {
    std::string_view j = text.substr(0, caret);
    std::string_view k = text.substr(caret + 3);
    if (!is_decimal(j) || !is_decimal(k)) {
      throw std::invalid_argument("invalid dyadic text: '" + std::string(text) + "'");
    }
    Integer num(std::string(j), 10);
    Integer exp(std::string(k), 10);
    return Dyadic(std::move(num), to_ulong_checked(exp));
  }
  if (text.size() >= 2 && (text[0] == '0' || text[0] == '1') && text[1] == '.') {
    std::string_view bits = text.substr(2);
    for (char c : bits) {
      if (c != '0' && c != '1') {
        throw std::invalid_argument("invalid binary text: '" + std::string(text) + "'");
      }
    }
    Integer j(0);
    for (char c : bits) {
      j <<= 1;
      if (c == '1') j += 1;
    }
    Dyadic frac(std::move(j), bits.size());
    if (text[0] == '0') return frac;
    if (!frac.is_zero()) throw std::domain_error("dyadic value exceeds 1");
    return Dyadic(1, 0);
  }
  return from_rational(Rational::parse(text));
}

Rational Dyadic::to_rational() const {
  Integer den(1);
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), exp_);
  return Rational(num_, std::move(den));
}

std::string Dyadic::str() const {
  return num_.get_str() + "/2^" + std::to_string(exp_);
}

std::string Dyadic::bits_str() const {
  if (is_one()) return "1.";
  std::string s = "0.";
  for (unsigned long i = 0; i < exp_; ++i) {
    s += mpz_tstbit(num_.get_mpz_t(), exp_ - 1 - i) ? '1' : '0';
  }
  return s;
}

bool operator<(const Dyadic& a, const Dyadic& b) {
  unsigned long k = std::max(a.exp_, b.exp_);
  Integer lhs, rhs;
  mpz_mul_2exp(lhs.get_mpz_t(), a.num_.get_mpz_t(), k - a.exp_);
  mpz_mul_2exp(rhs.get_mpz_t(), b.num_.get_mpz_t(), k - b.exp_);
  return lhs < rhs;
}

Dyadic midpoint(const Dyadic& a, const Dyadic& b) {
  unsigned long k = std::max(a.exponent(), b.exponent());
  Integer lhs, rhs;
  mpz_mul_2exp(lhs.get_mpz_t(), a.numerator().get_mpz_t(), k - a.exponent());
  mpz_mul_2exp(rhs.get_mpz_t(), b.numerator().get_mpz_t(), k - b.exponent());
  return Dyadic(lhs + rhs, k + 1);
}

Dyadic half(const Dyadic& a) {
  if (a.is_zero()) return a;
  return Dyadic(a.numerator(), a.exponent() + 1);
}

Dyadic complement(const Dyadic& a) {
  Integer full(1);
  mpz_mul_2exp(full.get_mpz_t(), full.get_mpz_t(), a.exponent());
  return Dyadic(full - a.numerator(), a.exponent());
}

}  // namespace qcount
