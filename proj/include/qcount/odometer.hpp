#pragma once

#include "qcount/expansions.hpp"

namespace qcount {

/// Finite-support element of {0,1}^N, position 1 first, implicit zero tail.
/// Shares the canonical representation of BinaryWord; it prints as a bare
/// bit string via bits().
using BitSequence = BinaryWord;

/// Add-one-with-carry at position 1: flips the leading run of ones to zeros
/// and sets the next bit. The all-ones point has no finite-support
/// representative and cannot occur here.
BitSequence odometer_step(const BitSequence& w);

/// Block-level odometer: (k1, k2, rest) -> (k1 zeros, k2+1, rest), reading
/// the implicit zero tail. Conjugate of odometer_step under the block codec.
BlockSequence odometer_block_step(const BlockSequence& s);

/// Substitution on backward continued fraction digits:
/// (a1, a2, rest) -> (a1-2 twos, a2+1, rest), read from the infinite
/// expansion. Realizes T on the digit sequence.
BcfExpansion odometric_substitution(const BcfExpansion& e);

}  // namespace qcount
