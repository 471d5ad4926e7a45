#include "qcount/expansions.hpp"

#include <algorithm>
#include <cctype>

namespace qcount {

namespace {

void require_unit_interval(const Rational& x, const char* who) {
  if (x < Rational(0) || x >= Rational(1)) {
    throw std::domain_error(std::string(who) + " requires x in [0,1), got " + x.str());
  }
}

std::vector<Integer> parse_digit_list(std::string_view body, char sep,
                                      std::string_view context) {
  std::vector<Integer> out;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t end = body.find(sep, pos);
    if (end == std::string_view::npos) end = body.size();
    std::string_view item = body.substr(pos, end - pos);
    if (item.empty()) {
      throw std::invalid_argument("empty digit in '" + std::string(context) + "'");
    }
    for (char c : item) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("invalid digit in '" + std::string(context) + "'");
      }
    }
    out.emplace_back(std::string(item), 10);
    pos = end + 1;
  }
  return out;
}

}  // namespace

CfExpansion::CfExpansion(std::vector<Integer> digits) : digits_(std::move(digits)) {
  for (const Integer& m : digits_) {
    if (m < 1) throw std::invalid_argument("continued fraction digit below 1");
  }
  if (!digits_.empty() && digits_.back() == 1) {
    if (digits_.size() == 1) {
      throw std::invalid_argument("continued fraction [1] denotes 1, outside [0,1)");
    }
    digits_.pop_back();
    digits_.back() += 1;
  }
}

std::string CfExpansion::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i > 0) s += ',';
    s += digits_[i].get_str();
  }
  s += "]c";
  return s;
}

CfExpansion CfExpansion::parse(std::string_view text) {
  if (text.size() < 3 || text.front() != '[' || text.substr(text.size() - 2) != "]c") {
    throw std::invalid_argument("invalid cf text: '" + std::string(text) + "'");
  }
  std::string_view body = text.substr(1, text.size() - 3);
  if (body.empty()) return CfExpansion();
  return CfExpansion(parse_digit_list(body, ',', text));
}

BcfExpansion::BcfExpansion(std::vector<Integer> head) : head_(std::move(head)) {
  for (const Integer& a : head_) {
    if (a < 2) throw std::invalid_argument("backward continued fraction digit below 2");
  }
  while (!head_.empty() && head_.back() == 2) head_.pop_back();
}

BcfExpansion BcfExpansion::from_finite(std::vector<Integer> digits) {
  if (digits.empty()) return BcfExpansion();
  for (const Integer& a : digits) {
    if (a < 2) throw std::invalid_argument("backward continued fraction digit below 2");
  }
  digits.back() += 1;
  return BcfExpansion(std::move(digits));
}

BcfExpansion BcfExpansion::shifted() const {
  if (head_.empty()) return BcfExpansion();
  return BcfExpansion(std::vector<Integer>(head_.begin() + 1, head_.end()));
}

std::string BcfExpansion::str() const {
  std::string s = "[";
  for (const Integer& a : head_) {
    s += a.get_str();
    s += ',';
  }
  if (!head_.empty()) s.pop_back();
  s += ";2...]";
  return s;
}

BcfExpansion BcfExpansion::parse(std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw std::invalid_argument("invalid bcf text: '" + std::string(text) + "'");
  }
  std::string_view body = text.substr(1, text.size() - 2);
  constexpr std::string_view kTail = ";2...";
  if (body.size() >= kTail.size() &&
      body.substr(body.size() - kTail.size()) == kTail) {
    body.remove_suffix(kTail.size());
    if (body.empty()) return BcfExpansion();
    return BcfExpansion(parse_digit_list(body, ',', text));
  }
  if (body.empty()) return BcfExpansion();
  return from_finite(parse_digit_list(body, ',', text));
}

BinaryWord::BinaryWord(std::string bits) : bits_(std::move(bits)) {
  for (char c : bits_) {
    if (c != '0' && c != '1') throw std::invalid_argument("binary word bit must be 0 or 1");
  }
  while (!bits_.empty() && bits_.back() == '0') bits_.pop_back();
}

BinaryWord BinaryWord::parse(std::string_view text) {
  if (text.size() < 2 || text.substr(0, 2) != "0.") {
    throw std::invalid_argument("invalid binary word text: '" + std::string(text) + "'");
  }
  return BinaryWord(std::string(text.substr(2)));
}

BlockSequence::BlockSequence(std::vector<std::size_t> blocks) : blocks_(std::move(blocks)) {
  while (!blocks_.empty() && blocks_.back() == 0) blocks_.pop_back();
}

std::string BlockSequence::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0) s += ' ';
    s += std::to_string(blocks_[i]);
  }
  s += ')';
  return s;
}

BlockSequence BlockSequence::parse(std::string_view text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw std::invalid_argument("invalid block sequence text: '" + std::string(text) + "'");
  }
  std::string_view body = text.substr(1, text.size() - 2);
  if (body.empty()) return BlockSequence();
  std::vector<Integer> raw = parse_digit_list(body, ' ', text);
  std::vector<std::size_t> ks;
  ks.reserve(raw.size());
  for (const Integer& k : raw) ks.push_back(to_size_checked(k));
  return BlockSequence(std::move(ks));
}

CfExpansion cf_expand(const Rational& x) {
  require_unit_interval(x, "cf_expand");
  std::vector<Integer> digits;
  Rational t = x;
  while (t != Rational(0)) {
    Rational inv = reciprocal(t);
    Integer m = int_floor(inv);
    digits.push_back(m);
    t = inv - Rational(m);
  }
  return CfExpansion(std::move(digits));
}

Rational cf_eval(const CfExpansion& e) {
  Rational acc(0);
  for (auto it = e.digits().rbegin(); it != e.digits().rend(); ++it) {
    acc = reciprocal(Rational(*it) + acc);
  }
  return acc;
}

BcfExpansion bcf_expand(const Rational& x) {
  require_unit_interval(x, "bcf_expand");
  std::vector<Integer> head;
  Rational t = x;
  while (t != Rational(0)) {
    Rational inv = reciprocal(Rational(1) - t);
    Integer fl = int_floor(inv);
    head.push_back(fl + 1);
    t = inv - Rational(fl);
  }
  return BcfExpansion(std::move(head));
}

Rational bcf_eval(const BcfExpansion& e) {
  Rational v(0);
  for (auto it = e.head().rbegin(); it != e.head().rend(); ++it) {
    v = Rational(1) - reciprocal(Rational(*it) - Rational(1) + v);
  }
  return v;
}

BcfExpansion cf_to_bcf(const CfExpansion& e) {
  std::vector<Integer> m = e.digits();
  if (m.size() % 2 == 1) {
    // canonical last digit is >= 2; split it to reach even length
    m.back() -= 1;
    m.push_back(1);
  }
  std::vector<Integer> head;
  for (std::size_t i = 0; i + 1 < m.size(); i += 2) {
    std::size_t twos = to_size_checked(m[i] - 1);
    head.insert(head.end(), twos, Integer(2));
    head.push_back(m[i + 1] + 2);
  }
  return BcfExpansion(std::move(head));
}

CfExpansion bcf_to_cf(const BcfExpansion& e) {
  std::vector<Integer> cf;
  const auto& h = e.head();
  std::size_t i = 0;
  while (i < h.size()) {
    std::size_t twos = 0;
    while (i < h.size() && h[i] == 2) {
      ++twos;
      ++i;
    }
    // the canonical head ends with a digit >= 3, so one follows every run
    cf.emplace_back(twos + 1);
    cf.push_back(h[i] - 2);
    ++i;
  }
  return CfExpansion(std::move(cf));
}

BinaryWord binary_expand(const Dyadic& x) {
  if (x.is_one()) throw std::domain_error("binary_expand requires x < 1");
  std::string bits(x.exponent(), '0');
  for (unsigned long i = 0; i < x.exponent(); ++i) {
    if (mpz_tstbit(x.numerator().get_mpz_t(), x.exponent() - 1 - i)) bits[i] = '1';
  }
  return BinaryWord(std::move(bits));
}

Dyadic word_value(const BinaryWord& w) {
  Integer j(0);
  for (char c : w.bits()) {
    j <<= 1;
    if (c == '1') j += 1;
  }
  return Dyadic(std::move(j), w.size());
}

std::string binary_prefix(Rational x, std::size_t depth) {
  require_unit_interval(x, "binary_prefix");
  std::string bits;
  bits.reserve(depth);
  for (std::size_t i = 0; i < depth; ++i) {
    x += x;
    if (x >= Rational(1)) {
      bits += '1';
      x -= Rational(1);
    } else {
      bits += '0';
    }
  }
  return bits;
}

BlockSequence blocks_encode(const BinaryWord& w) {
  std::vector<std::size_t> ks;
  std::size_t ones = 0;
  for (char c : w.bits()) {
    if (c == '1') {
      ++ones;
    } else {
      ks.push_back(ones);
      ones = 0;
    }
  }
  if (ones > 0) ks.push_back(ones);  // closed by the first implicit zero
  return BlockSequence(std::move(ks));
}

BinaryWord blocks_decode(const BlockSequence& s) {
  std::string bits;
  for (std::size_t k : s.blocks()) {
    bits.append(k, '1');
    bits.push_back('0');
  }
  return BinaryWord(std::move(bits));
}

BcfExpansion shift_h(const BlockSequence& s) {
  std::vector<Integer> head;
  head.reserve(s.blocks().size());
  for (std::size_t k : s.blocks()) head.emplace_back(k + 2);
  return BcfExpansion(std::move(head));
}

BlockSequence shift_h_inverse(const BcfExpansion& e) {
  std::vector<std::size_t> ks;
  ks.reserve(e.head().size());
  for (const Integer& a : e.head()) ks.push_back(to_size_checked(a - 2));
  return BlockSequence(std::move(ks));
}

}  // namespace qcount
