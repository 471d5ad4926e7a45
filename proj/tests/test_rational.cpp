#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qcount/rational.hpp"

using namespace qcount;

TEST_CASE("rationals reduce and carry their sign in the numerator") {
  CHECK(Rational(Integer(6), Integer(8)).str() == "3/4");
  CHECK(Rational(Integer(-6), Integer(8)).str() == "-3/4");
  CHECK(Rational(Integer(6), Integer(-8)).str() == "-3/4");
  CHECK(Rational(Integer(0), Integer(7)).str() == "0");
  CHECK(Rational(Integer(0), Integer(7)).den() == 1);
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
}

TEST_CASE("rational text round trip") {
  for (const char* t : {"0", "1", "-1", "3/4", "-3/4", "12345678901234567890123/7"}) {
    CHECK(Rational::parse(t).str() == t);
  }
  CHECK(Rational::parse("6/8").str() == "3/4");
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1 /2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("0x10"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("int_floor") {
  CHECK(int_floor(Rational(0)) == 0);
  CHECK(int_floor(Rational::parse("3/2")) == 1);
  CHECK(int_floor(Rational::parse("5/3")) == 1);
  CHECK(int_floor(Rational::parse("-1/2")) == -1);
  CHECK(int_floor(Rational(7)) == 7);
}

TEST_CASE("int_floor brackets its argument") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-500, 500), den(1, 120);
  for (int i = 0; i < 2000; ++i) {
    Rational x = Rational(Integer(num(rng)), Integer(den(rng)));
    Rational fl = Rational(int_floor(x));
    CHECK(fl <= x);
    CHECK(x < fl + Rational(1));
  }
}

TEST_CASE("pow2_floor_exp") {
  CHECK(pow2_floor_exp(Rational(1)) == 0);
  CHECK(pow2_floor_exp(Rational::parse("7/2")) == 1);
  CHECK(pow2_floor_exp(Rational(8)) == 3);
  CHECK(pow2_floor_exp(Rational::parse("1000000000000000000000000")) == 79);
  CHECK_THROWS_AS(pow2_floor_exp(Rational::parse("99/100")), std::domain_error);
}

TEST_CASE("pow2_floor_exp brackets by exact comparison") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> num(1, 100000), den(1, 1000);
  for (int i = 0; i < 2000; ++i) {
    long p = num(rng), q = den(rng);
    if (p < q) std::swap(p, q);
    Rational x = Rational(Integer(p), Integer(q));
    unsigned long k = pow2_floor_exp(x);
    Integer lo(1), hi(1);
    mpz_mul_2exp(lo.get_mpz_t(), lo.get_mpz_t(), k);
    mpz_mul_2exp(hi.get_mpz_t(), hi.get_mpz_t(), k + 1);
    CHECK(Rational(lo) <= x);
    CHECK(x < Rational(hi));
  }
}

TEST_CASE("dyadic normal form keeps the numerator odd") {
  CHECK(Dyadic(Integer(6), 4).str() == "3/2^3");
  CHECK(Dyadic(Integer(0), 9).str() == "0/2^0");
  CHECK(Dyadic(Integer(16), 4).str() == "1/2^0");
  CHECK_THROWS_AS(Dyadic(Integer(5), 2), std::domain_error);
  CHECK_THROWS_AS(Dyadic(Integer(-1), 2), std::domain_error);
}

TEST_CASE("dyadic round trips through rational conversion") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<unsigned long> exp(0, 40);
  for (int i = 0; i < 500; ++i) {
    unsigned long k = exp(rng);
    Integer cap(1);
    mpz_mul_2exp(cap.get_mpz_t(), cap.get_mpz_t(), k);
    Integer j = Integer(rng()) % (cap + 1);
    Dyadic d(j, k);
    CHECK(Dyadic::from_rational(d.to_rational()) == d);
  }
  CHECK_THROWS_AS(Dyadic::from_rational(Rational::parse("1/3")), std::domain_error);
  CHECK_THROWS_AS(Dyadic::from_rational(Rational::parse("5/4")), std::domain_error);
}

TEST_CASE("dyadic text forms") {
  Dyadic d = Dyadic::parse("3/2^3");
  CHECK(d.bits_str() == "0.011");
  CHECK(Dyadic::parse("0.011") == d);
  CHECK(Dyadic::parse("0.0110") == d);  // trailing zeros are dropped
  CHECK(Dyadic::parse("3/8") == d);
  CHECK(Dyadic::parse("0") == Dyadic());
  CHECK(Dyadic::parse("1") == Dyadic(1, 0));
  CHECK(Dyadic::parse("1.").is_one());
  CHECK(Dyadic().bits_str() == "0.");
  CHECK(Dyadic(1, 0).bits_str() == "1.");
  CHECK_THROWS_AS(Dyadic::parse("1.1"), std::domain_error);
  CHECK_THROWS_AS(Dyadic::parse("abc"), std::invalid_argument);
}

TEST_CASE("dyadic midpoint, half and complement") {
  Dyadic a = Dyadic::parse("1/2^1");
  Dyadic b = Dyadic::parse("3/2^2");
  CHECK(midpoint(a, b) == Dyadic::parse("5/2^3"));
  CHECK(half(b) == Dyadic::parse("3/2^3"));
  CHECK(complement(b) == Dyadic::parse("1/2^2"));
  CHECK(complement(Dyadic()) == Dyadic(1, 0));
  CHECK(midpoint(Dyadic(), Dyadic(1, 0)) == a);
}
