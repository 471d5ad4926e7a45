#pragma once

#include <deque>
#include <utility>

#include "qcount/maps.hpp"
#include "qcount/rational.hpp"

namespace qcount {

/// F^n(0): walks 0, 1, 1/2, 2, 1/3, 3/2, ... through every positive
/// rational. Index 0 is the seed.
Rational enum_positive(const Integer& n);

/// T^n(0): walks 0, 1/2, 1/3, 2/3, 1/4, ... through every rational in
/// (0, 1). Equals enum_positive(2n).
Rational enum_unit(const Integer& n);

/// D2^n(0), by the bit-reversal closed form: write n in binary, reverse the
/// bits, read them as 0.bits.
Dyadic enum_dyadic(const Integer& n);

/// n-th node of the breadth-first walk of the tree with root 1/1 and
/// children a/(a+b), (a+b)/b; 0 for n = 0. Independent of the map F.
Rational calkin_wilf(const Integer& n);

/// Inverse of enum_unit: reverses the bit word of qmark_bcf(x).
Integer index_of_unit(const Rational& x);

/// Streaming orbit of a map: value() is m^k(seed) after k calls to advance().
class MapOrbit {
 public:
  MapOrbit(MapId m, Rational seed) : map_(m), cur_(std::move(seed)) {}
  const Rational& value() const { return cur_; }
  void advance() { cur_ = apply_map(map_, cur_); }

 private:
  MapId map_;
  Rational cur_;
};

/// Streaming breadth-first walk of the mediant tree; value() starts at the
/// index-0 convention 0 and reaches the root after one advance().
class CalkinWilfStream {
 public:
  CalkinWilfStream() { queue_.emplace_back(1, 1); }
  const Rational& value() const { return cur_; }
  void advance();

 private:
  std::deque<std::pair<Integer, Integer>> queue_;
  Rational cur_{0};
};

}  // namespace qcount
