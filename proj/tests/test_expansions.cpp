#include <doctest.h>

#include "oracles.hpp"
#include "qcount/expansions.hpp"

using namespace qcount;

namespace {

Rational rat(long p, long q) { return Rational(Integer(p), Integer(q)); }

std::vector<Integer> digits(std::initializer_list<long> xs) {
  return std::vector<Integer>(xs.begin(), xs.end());
}

// every reduced p/q in [0,1) with q <= qmax
template <typename Fn>
void each_unit_fraction(long qmax, Fn&& fn) {
  fn(0, 1);
  for (long q = 2; q <= qmax; ++q) {
    for (long p = 1; p < q; ++p) {
      if (std::gcd(p, q) == 1) fn(p, q);
    }
  }
}

}  // namespace

TEST_CASE("cf_expand frozen values") {
  CHECK(cf_expand(Rational(0)) == CfExpansion());
  CHECK(cf_expand(rat(2, 5)) == CfExpansion(digits({2, 2})));
  CHECK(cf_expand(rat(3, 5)) == CfExpansion(digits({1, 1, 2})));
  CHECK_THROWS_AS(cf_expand(Rational(1)), std::domain_error);
  CHECK_THROWS_AS(cf_expand(rat(-1, 2)), std::domain_error);
}

TEST_CASE("cf_eval frozen values") {
  CHECK(cf_eval(CfExpansion()) == Rational(0));
  CHECK(cf_eval(CfExpansion(digits({2, 2}))) == rat(2, 5));
  CHECK(cf_eval(CfExpansion(digits({3}))) == rat(1, 3));
}

TEST_CASE("cf round trip against the euclidean oracle") {
  each_unit_fraction(80, [](long p, long q) {
    CfExpansion e = cf_expand(rat(p, q));
    CHECK(cf_eval(e) == rat(p, q));
    if (p == 0) return;
    auto want = oracle::cf_digits(p, q);
    REQUIRE(e.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(e.digits()[i] == want[i]);
  });
}

TEST_CASE("cf canonical form merges a trailing one") {
  CHECK(CfExpansion(digits({1, 1, 1, 1})) == CfExpansion(digits({1, 1, 2})));
  CHECK_THROWS_AS(CfExpansion(digits({1})), std::invalid_argument);
  CHECK_THROWS_AS(CfExpansion(digits({0, 2})), std::invalid_argument);
}

TEST_CASE("bcf_expand frozen values") {
  CHECK(bcf_expand(Rational(0)) == BcfExpansion());
  CHECK(bcf_expand(rat(1, 2)) == BcfExpansion(digits({3})));
  CHECK(bcf_expand(rat(1, 3)) == BcfExpansion(digits({2, 3})));
  CHECK_THROWS_AS(bcf_expand(Rational(1)), std::domain_error);
}

TEST_CASE("bcf_eval frozen values") {
  CHECK(bcf_eval(BcfExpansion()) == Rational(0));
  CHECK(bcf_eval(BcfExpansion(digits({3}))) == rat(1, 2));
  CHECK(bcf_eval(BcfExpansion(digits({2, 4}))) == rat(2, 5));
}

TEST_CASE("bcf canonical form absorbs trailing twos") {
  CHECK(BcfExpansion(digits({3, 2, 2})) == BcfExpansion(digits({3})));
  CHECK(BcfExpansion(digits({2, 2})) == BcfExpansion());
  CHECK_THROWS_AS(BcfExpansion(digits({1, 3})), std::invalid_argument);
}

TEST_CASE("finite bcf input alias bumps the last digit") {
  CHECK(BcfExpansion::from_finite(digits({2})) == bcf_expand(rat(1, 2)));
  CHECK(BcfExpansion::from_finite(digits({2, 2})) == bcf_expand(rat(1, 3)));
  CHECK(BcfExpansion::from_finite(digits({3})) == bcf_expand(rat(2, 3)));
}

TEST_CASE("bcf round trip against the recursion oracle") {
  each_unit_fraction(80, [](long p, long q) {
    BcfExpansion e = bcf_expand(rat(p, q));
    CHECK(bcf_eval(e) == rat(p, q));
    auto want = oracle::bcf_digits(p, q);
    REQUIRE(e.head().size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(e.head()[i] == want[i]);
  });
}

TEST_CASE("bcf shift drops the first digit of the infinite expansion") {
  each_unit_fraction(60, [](long p, long q) {
    Rational x = rat(p, q);
    Rational shifted_value = reciprocal(Rational(1) - x);
    shifted_value = shifted_value - Rational(int_floor(shifted_value));
    CHECK(bcf_expand(x).shifted() == bcf_expand(shifted_value));
  });
}

TEST_CASE("gauss shift drops the first cf digit") {
  each_unit_fraction(60, [](long p, long q) {
    if (p == 0) return;
    Rational x = rat(p, q);
    Rational inv = reciprocal(x);
    Rational gx = inv - Rational(int_floor(inv));
    std::vector<Integer> rest(cf_expand(x).digits());
    rest.erase(rest.begin());
    CHECK(CfExpansion(std::move(rest)) == cf_expand(gx));
  });
}

TEST_CASE("cf_to_bcf frozen values") {
  CHECK(cf_to_bcf(CfExpansion(digits({3}))) == BcfExpansion(digits({2, 3})));
  CHECK(cf_to_bcf(CfExpansion(digits({2, 2}))) == BcfExpansion(digits({2, 4})));
  // [1,1,2] evaluates to 3/5; the transducer must agree with the recursion
  CHECK(cf_to_bcf(CfExpansion(digits({1, 1, 2}))) == BcfExpansion(digits({3, 3})));
  CHECK(cf_to_bcf(CfExpansion(digits({1, 1, 2}))) == bcf_expand(rat(3, 5)));
  CHECK(cf_to_bcf(CfExpansion()) == BcfExpansion());
}

TEST_CASE("bcf_to_cf frozen values") {
  CHECK(bcf_to_cf(BcfExpansion()) == CfExpansion());
  CHECK(bcf_to_cf(BcfExpansion(digits({2, 4}))) == CfExpansion(digits({2, 2})));
  CHECK(bcf_to_cf(BcfExpansion(digits({3}))) == CfExpansion(digits({2})));
}

TEST_CASE("the two continued fraction systems translate both ways") {
  each_unit_fraction(120, [](long p, long q) {
    CfExpansion cf = cf_expand(rat(p, q));
    BcfExpansion bcf = cf_to_bcf(cf);
    CHECK(bcf == bcf_expand(rat(p, q)));
    CHECK(bcf_to_cf(bcf) == cf);
  });
}

TEST_CASE("binary_expand frozen values") {
  CHECK(binary_expand(Dyadic()) == BinaryWord());
  CHECK(binary_expand(Dyadic::parse("1/2^1")) == BinaryWord("1"));
  CHECK(binary_expand(Dyadic::parse("3/2^3")) == BinaryWord("011"));
  CHECK_THROWS_AS(binary_expand(Dyadic(1, 0)), std::domain_error);
}

TEST_CASE("binary word value round trip") {
  for (unsigned long j = 0; j < (1u << 10); ++j) {
    Dyadic d(Integer(j), 10);
    CHECK(word_value(binary_expand(d)) == d);
  }
}

TEST_CASE("binary_prefix agrees with the exact word on dyadics") {
  Rational x = rat(11, 32);
  CHECK(binary_prefix(x, 5) == "01011");
  CHECK(binary_prefix(x, 8) == "01011000");
  CHECK(binary_prefix(rat(1, 3), 6) == "010101");
  CHECK_THROWS_AS(binary_prefix(Rational(1), 3), std::domain_error);
}

TEST_CASE("block codec frozen values") {
  CHECK(blocks_encode(BinaryWord("001110101111101")) ==
        BlockSequence({0, 0, 3, 1, 5, 1}));
  CHECK(blocks_encode(BinaryWord()) == BlockSequence());
  CHECK(blocks_encode(BinaryWord("011")) == BlockSequence({0, 2}));
  CHECK(blocks_decode(BlockSequence()) == BinaryWord());
  CHECK(blocks_decode(BlockSequence({0, 2})) == BinaryWord("011"));
  CHECK(blocks_decode(BlockSequence({0, 0, 3, 1, 5, 1})) ==
        BinaryWord("001110101111101"));
}

TEST_CASE("block codec round trip on every short word") {
  for (unsigned long len = 0; len <= 12; ++len) {
    for (unsigned long v = 0; v < (1u << len); ++v) {
      std::string bits;
      for (unsigned long i = 0; i < len; ++i) bits += (v >> i & 1) ? '1' : '0';
      BinaryWord w(bits);
      CHECK(blocks_decode(blocks_encode(w)) == w);
    }
  }
}

TEST_CASE("shift_h adds two to every block index") {
  CHECK(shift_h(BlockSequence()) == BcfExpansion());
  CHECK(shift_h(BlockSequence({0, 2})) == BcfExpansion(digits({2, 4})));
  CHECK(shift_h(BlockSequence({1})) == BcfExpansion(digits({3})));
  CHECK(shift_h_inverse(BcfExpansion(digits({2, 4}))) == BlockSequence({0, 2}));
  CHECK(shift_h_inverse(shift_h(BlockSequence({2, 0, 1}))) == BlockSequence({2, 0, 1}));
}

TEST_CASE("expansion text grammars round trip") {
  CHECK(CfExpansion(digits({2, 2})).str() == "[2,2]c");
  CHECK(CfExpansion().str() == "[]c");
  CHECK(CfExpansion::parse("[2,2]c") == CfExpansion(digits({2, 2})));
  CHECK(CfExpansion::parse("[]c") == CfExpansion());

  CHECK(BcfExpansion(digits({2, 3})).str() == "[2,3;2...]");
  CHECK(BcfExpansion().str() == "[;2...]");
  CHECK(BcfExpansion::parse("[2,3;2...]") == BcfExpansion(digits({2, 3})));
  CHECK(BcfExpansion::parse("[;2...]") == BcfExpansion());
  CHECK(BcfExpansion::parse("[2,2]") == BcfExpansion(digits({2, 3})));  // finite alias

  CHECK(BinaryWord("011").str() == "0.011");
  CHECK(BinaryWord::parse("0.011") == BinaryWord("011"));
  CHECK(BinaryWord::parse("0.") == BinaryWord());

  CHECK(BlockSequence({0, 2}).str() == "(0 2)");
  CHECK(BlockSequence().str() == "()");
  CHECK(BlockSequence::parse("(0 2)") == BlockSequence({0, 2}));
  CHECK(BlockSequence::parse("()") == BlockSequence());

  CHECK_THROWS_AS(CfExpansion::parse("[2,2]"), std::invalid_argument);
  CHECK_THROWS_AS(BcfExpansion::parse("2,3"), std::invalid_argument);
  CHECK_THROWS_AS(BinaryWord::parse("011"), std::invalid_argument);
  CHECK_THROWS_AS(BlockSequence::parse("(0,2)"), std::invalid_argument);
}
