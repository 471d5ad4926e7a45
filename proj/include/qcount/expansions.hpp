#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qcount/rational.hpp"

namespace qcount {

/// Classical continued fraction [m1, m2, ...] of a rational in [0, 1).
/// Canonical form: every digit >= 1, and the last digit >= 2 when there are
/// two or more digits. The empty expansion is 0. The constructor merges a
/// trailing [..., m, 1] into [..., m+1].
class CfExpansion {
 public:
  CfExpansion() = default;
  explicit CfExpansion(std::vector<Integer> digits);

  const std::vector<Integer>& digits() const { return digits_; }
  bool empty() const { return digits_.empty(); }
  std::size_t size() const { return digits_.size(); }

  std::string str() const;  // "[m1,m2,...]c"
  static CfExpansion parse(std::string_view text);

  friend bool operator==(const CfExpansion& a, const CfExpansion& b) {
    return a.digits_ == b.digits_;
  }
  friend bool operator!=(const CfExpansion& a, const CfExpansion& b) { return !(a == b); }

 private:
  std::vector<Integer> digits_;
};

/// Backward continued fraction: a finite head of digits >= 2 followed by an
/// implicit infinite tail of 2's. Canonical form keeps the head minimal, so
/// its last digit is >= 3; the empty head is 0 = [2,2,2,...]. The constructor
/// absorbs trailing 2's into the tail.
class BcfExpansion {
 public:
  BcfExpansion() = default;
  explicit BcfExpansion(std::vector<Integer> head);

  /// Finite-form alias [a1,...,an]: bumps the last digit and appends the
  /// 2-tail, yielding the canonical infinite expansion of the same value.
  static BcfExpansion from_finite(std::vector<Integer> digits);

  const std::vector<Integer>& head() const { return head_; }
  bool empty() const { return head_.empty(); }

  /// Digit of the infinite expansion at 0-based position i (2 past the head).
  Integer digit(std::size_t i) const { return i < head_.size() ? head_[i] : Integer(2); }

  /// Drops the first digit of the infinite expansion (shift).
  BcfExpansion shifted() const;

  std::string str() const;  // "[a1,...,ak;2...]", "[;2...]" for zero
  static BcfExpansion parse(std::string_view text);

  friend bool operator==(const BcfExpansion& a, const BcfExpansion& b) {
    return a.head_ == b.head_;
  }
  friend bool operator!=(const BcfExpansion& a, const BcfExpansion& b) { return !(a == b); }

 private:
  std::vector<Integer> head_;
};

/// Finite binary word b1 b2 ... bm followed by an implicit tail of zeros.
/// Canonical form drops trailing zeros, so the last stored bit is 1; the
/// empty word is 0.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::string bits);

  const std::string& bits() const { return bits_; }
  bool empty() const { return bits_.empty(); }
  std::size_t size() const { return bits_.size(); }

  /// Bit at 1-based position i, reading the implicit zero tail past the end.
  int bit(std::size_t i) const {
    return i >= 1 && i <= bits_.size() ? bits_[i - 1] - '0' : 0;
  }

  std::string str() const { return "0." + bits_; }
  static BinaryWord parse(std::string_view text);

  friend bool operator==(const BinaryWord& a, const BinaryWord& b) {
    return a.bits_ == b.bits_;
  }
  friend bool operator!=(const BinaryWord& a, const BinaryWord& b) { return !(a == b); }

 private:
  std::string bits_;
};

/// Block code of a binary word: indices k_i >= 0 where block k is k ones
/// followed by one zero (b_0 = "0"). Implicitly followed by b_0 blocks;
/// canonical form drops trailing zero indices.
class BlockSequence {
 public:
  BlockSequence() = default;
  explicit BlockSequence(std::vector<std::size_t> blocks);

  const std::vector<std::size_t>& blocks() const { return blocks_; }
  bool empty() const { return blocks_.empty(); }

  std::string str() const;  // "(k1 k2 ... kn)"
  static BlockSequence parse(std::string_view text);

  friend bool operator==(const BlockSequence& a, const BlockSequence& b) {
    return a.blocks_ == b.blocks_;
  }
  friend bool operator!=(const BlockSequence& a, const BlockSequence& b) { return !(a == b); }

 private:
  std::vector<std::size_t> blocks_;
};

/// Gauss digits of x in [0, 1); inverse of cf_eval.
CfExpansion cf_expand(const Rational& x);
Rational cf_eval(const CfExpansion& e);

/// Digit recursion a_n = [1/(1-x_n)] + 1, x_{n+1} = R(x_n); inverse of
/// bcf_eval. Terminates on every rational input.
BcfExpansion bcf_expand(const Rational& x);

/// Right-to-left evaluation v_i = 1 - 1/(a_i - 1 + v_{i+1}) with v = 0
/// standing in for the 2-tail.
Rational bcf_eval(const BcfExpansion& e);

/// Pairwise transducer between the two continued fraction systems: after
/// even-length normalization each pair (m, m') becomes m-1 twos followed by
/// m'+2. bcf_to_cf inverts it.
BcfExpansion cf_to_bcf(const CfExpansion& e);
CfExpansion bcf_to_cf(const BcfExpansion& e);

/// Exact bit string of a dyadic in [0, 1); rejects 1.
BinaryWord binary_expand(const Dyadic& x);

/// Value of a binary word; inverse of binary_expand.
Dyadic word_value(const BinaryWord& w);

/// First `depth` binary digits of any rational in [0, 1), by doubling.
/// The result is a plain prefix, not a canonical word.
std::string binary_prefix(Rational x, std::size_t depth);

/// Greedy parse of a word into blocks, closing the final run of ones with
/// the first implicit zero; blocks_decode inverts it.
BlockSequence blocks_encode(const BinaryWord& w);
BinaryWord blocks_decode(const BlockSequence& s);

/// Adds 2 to every block index, turning the implicit b_0 tail into the
/// implicit 2-tail; shift_h_inverse subtracts 2 from every head digit.
BcfExpansion shift_h(const BlockSequence& s);
BlockSequence shift_h_inverse(const BcfExpansion& e);

}  // namespace qcount
