#include "qcount/enumerate.hpp"

#include "qcount/question_mark.hpp"

namespace qcount {

namespace {

void require_index(const Integer& n) {
  if (n < 0) throw std::domain_error("enumeration index must be nonnegative");
}

}  // namespace

Rational enum_positive(const Integer& n) {
  require_index(n);
  unsigned long steps = to_ulong_checked(n);
  Rational x(0);
  for (unsigned long i = 0; i < steps; ++i) x = newman_f(x);
  return x;
}

Rational enum_unit(const Integer& n) {
  require_index(n);
  unsigned long steps = to_ulong_checked(n);
  Rational x(0);
  for (unsigned long i = 0; i < steps; ++i) x = newman_t(x);
  return x;
}

Dyadic enum_dyadic(const Integer& n) {
  require_index(n);
  if (n == 0) return Dyadic();
  std::size_t width = mpz_sizeinbase(n.get_mpz_t(), 2);
  std::string bits(width, '0');
  for (std::size_t i = 0; i < width; ++i) {
    if (mpz_tstbit(n.get_mpz_t(), i)) bits[i] = '1';
  }
  return word_value(BinaryWord(std::move(bits)));
}

Rational calkin_wilf(const Integer& n) {
  require_index(n);
  if (n == 0) return Rational(0);
  Integer a(1), b(1);
  std::size_t width = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t i = width - 1; i-- > 0;) {
    if (mpz_tstbit(n.get_mpz_t(), i)) {
      a += b;  // right child (a+b)/b
    } else {
      b += a;  // left child a/(a+b)
    }
  }
  return Rational(std::move(a), std::move(b));
}

Integer index_of_unit(const Rational& x) {
  Dyadic d = qmark_bcf(x);  // checks the domain
  Integer n(0);
  unsigned long k = d.exponent();
  for (unsigned long i = 0; i < k; ++i) {
    if (mpz_tstbit(d.numerator().get_mpz_t(), i)) {
      mpz_setbit(n.get_mpz_t(), k - 1 - i);
    }
  }
  return n;
}

void CalkinWilfStream::advance() {
  auto [a, b] = queue_.front();
  queue_.pop_front();
  queue_.emplace_back(a, a + b);
  queue_.emplace_back(a + b, b);
  cur_ = Rational(std::move(a), std::move(b));
}

}  // namespace qcount
