#include "qcount/odometer.hpp"

namespace qcount {

BitSequence odometer_step(const BitSequence& w) {
  std::string b = w.bits();
  std::size_t i = 0;
  while (i < b.size() && b[i] == '1') b[i++] = '0';
  if (i < b.size()) {
    b[i] = '1';
  } else {
    b.push_back('1');  // carry lands on the first implicit zero
  }
  return BitSequence(std::move(b));
}

BlockSequence odometer_block_step(const BlockSequence& s) {
  const auto& ks = s.blocks();
  std::size_t k1 = ks.empty() ? 0 : ks[0];
  std::size_t k2 = ks.size() > 1 ? ks[1] : 0;
  std::vector<std::size_t> out(k1, 0);
  out.push_back(k2 + 1);
  if (ks.size() > 2) out.insert(out.end(), ks.begin() + 2, ks.end());
  return BlockSequence(std::move(out));
}

BcfExpansion odometric_substitution(const BcfExpansion& e) {
  std::size_t twos = to_size_checked(e.digit(0) - 2);
  std::vector<Integer> out(twos, Integer(2));
  out.push_back(e.digit(1) + 1);
  if (e.head().size() > 2) out.insert(out.end(), e.head().begin() + 2, e.head().end());
  return BcfExpansion(std::move(out));
}

}  // namespace qcount
