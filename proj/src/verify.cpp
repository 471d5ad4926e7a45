#include "qcount/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "qcount/enumerate.hpp"
#include "qcount/expansions.hpp"
#include "qcount/maps.hpp"
#include "qcount/odometer.hpp"
#include "qcount/question_mark.hpp"
#include "qcount/rational.hpp"

namespace qcount {

namespace {

template <typename V>
std::string to_text(const V& v) {
  if constexpr (requires { v.str(); }) {
    return v.str();
  } else if constexpr (std::is_same_v<V, Integer>) {
    return v.get_str();
  } else {
    return std::to_string(v);
  }
}

struct Checker {
  VerifyReport report;

  explicit Checker(std::string suite) { report.suite = std::move(suite); }
  bool failed() const { return !report.ok; }

  template <typename V, typename W>
  void expect_eq(const V& lhs, const V& rhs, const char* what, const W& input) {
    if (failed()) return;
    ++report.checked;
    if (!(lhs == rhs)) {
      report.ok = false;
      report.counterexample = std::string(what) + "\n  input = " + to_text(input) +
                              "\n  lhs   = " + to_text(lhs) +
                              "\n  rhs   = " + to_text(rhs);
    }
  }

  template <typename W>
  void expect(bool cond, const char* what, const W& input) {
    if (failed()) return;
    ++report.checked;
    if (!cond) {
      report.ok = false;
      report.counterexample = std::string(what) + "\n  input = " + to_text(input);
    }
  }
};

// Ascending reduced fractions p/q in (0,1) with q <= n, preceded by 0/1.
// The callback returns false to stop early.
template <typename Fn>
void for_each_farey(unsigned long n, bool include_zero, Fn&& fn) {
  if (include_zero && !fn(Rational(0))) return;
  if (n < 2) return;
  long nn = static_cast<long>(n);
  long a = 0, b = 1, c = 1, d = nn;
  while (true) {
    long k = (nn + b) / d;
    long a2 = k * c - a;
    long b2 = k * d - b;
    a = c;
    b = d;
    c = a2;
    d = b2;
    if (a == b) break;  // reached 1/1
    if (!fn(Rational(Integer(a), Integer(b)))) return;
  }
}

Rational pow2_rational(unsigned long k) {
  Integer p(1);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), k);
  return Rational(std::move(p));
}

Rational half_rational() { return Rational(Integer(1), Integer(2)); }

std::vector<BlockSequence> sample_block_sequences() {
  std::vector<BlockSequence> out;
  // every canonical sequence with at most 3 blocks and indices at most 3
  out.emplace_back();
  for (std::size_t len = 1; len <= 3; ++len) {
    std::vector<std::size_t> ks(len, 0);
    while (true) {
      if (ks.back() > 0) out.emplace_back(ks);
      std::size_t i = 0;
      while (i < len && ks[i] == 3) ks[i++] = 0;
      if (i == len) break;
      ++ks[i];
    }
  }
  // fixed-seed samples from the wider family (<= 16 blocks, indices <= 8)
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> len_dist(1, 16);
  std::uniform_int_distribution<std::size_t> idx_dist(0, 8);
  for (int i = 0; i < 400; ++i) {
    std::vector<std::size_t> ks(len_dist(rng));
    for (auto& k : ks) k = idx_dist(rng);
    if (ks.back() == 0) ks.back() = 1;
    out.emplace_back(std::move(ks));
  }
  return out;
}

std::vector<BitSequence> sample_bit_seeds() {
  std::vector<BitSequence> out;
  out.emplace_back();  // the zero sequence
  std::mt19937 rng(0xb17);
  std::uniform_int_distribution<std::size_t> len_dist(1, 24);
  std::uniform_int_distribution<int> bit_dist(0, 1);
  while (out.size() < 10) {
    std::string bits(len_dist(rng), '0');
    for (auto& c : bits) c = bit_dist(rng) ? '1' : '0';
    bits.back() = '1';
    out.emplace_back(std::move(bits));
  }
  return out;
}

VerifyReport verify_action(unsigned long bound) {
  Checker ch("action");
  for_each_farey(bound, true, [&](const Rational& x) {
    Rational tx = newman_t(x);
    ch.expect_eq(bcf_eval(odometric_substitution(bcf_expand(x))), tx,
                 "digit substitution realizes T", x);
    Rational a1 = Rational(int_floor(reciprocal(Rational(1) - x))) + Rational(1);
    ch.expect_eq(reciprocal(a1 - renyi(x)), tx, "T from first digit and shift", x);
    ch.expect_eq(newman_f(newman_f(x)), tx, "T is the second iterate of F", x);
    return !ch.failed();
  });
  return ch.report;
}

VerifyReport verify_conjugacy(unsigned long bound) {
  Checker ch("conjugacy");
  for_each_farey(bound, true, [&](const Rational& x) {
    Dyadic qx = qmark_bcf(x);
    ch.expect_eq(qmark_bcf(newman_t(x)),
                 Dyadic::from_rational(odometer_d2(qx.to_rational())),
                 "? carries T to the interval odometer", x);
    ch.expect_eq(qmark_bcf(backward_farey(x)),
                 Dyadic::from_rational(doubling(qx.to_rational())),
                 "? carries the backward Farey map to doubling", x);
    return !ch.failed();
  });
  if (!ch.failed()) {
    unsigned long level = std::min<unsigned long>(bound, 14);
    Integer count(1);
    mpz_mul_2exp(count.get_mpz_t(), count.get_mpz_t(), level);
    for (Integer j(0); j < count && !ch.failed(); ++j) {
      Dyadic d(j, level);
      ch.expect_eq(binary_expand(Dyadic::from_rational(odometer_d2(d.to_rational()))),
                   odometer_step(binary_expand(d)),
                   "interval and symbolic odometers agree on dyadics", d);
    }
  }
  for (const BlockSequence& s : sample_block_sequences()) {
    if (ch.failed()) break;
    ch.expect_eq(odometer_block_step(s),
                 blocks_encode(odometer_step(blocks_decode(s))),
                 "block odometer conjugates the bit odometer", s);
    ch.expect_eq(odometric_substitution(shift_h(s)),
                 shift_h(odometer_block_step(s)),
                 "substitution conjugates the block odometer", s);
  }
  return ch.report;
}

VerifyReport verify_qmark(unsigned long bound) {
  Checker ch("qmark");
  for_each_farey(bound, false, [&](const Rational& x) {
    Dyadic b = qmark_bcf(x);
    ch.expect_eq(qmark_mediant(x), b, "mediant descent matches block word", x);
    ch.expect_eq(qmark_denjoy(x), b, "alternating series matches block word", x);
    ch.expect_eq(qmark_bcf_series(x), b, "series form matches block word", x);
    ch.expect_eq(qmark_inverse(b), x, "inverse undoes ?", x);
    return !ch.failed();
  });
  for_each_farey(bound, true, [&](const Rational& x) {
    ch.expect_eq(qmark(x / (x + Rational(1))), half(qmark(x)), "?(x/(x+1)) = ?(x)/2", x);
    ch.expect_eq(qmark(Rational(1) - x), complement(qmark(x)), "?(1-x) = 1-?(x)", x);
    return !ch.failed();
  });
  if (!ch.failed()) {
    ch.expect_eq(qmark(Rational(1)), Dyadic(1, 0), "?(1) = 1", Rational(1));
  }
  unsigned long level = std::min<unsigned long>(bound, 14);
  Integer count(1);
  mpz_mul_2exp(count.get_mpz_t(), count.get_mpz_t(), level);
  for (Integer j(0); j < count && !ch.failed(); ++j) {
    Dyadic d(j, level);
    ch.expect_eq(qmark_bcf(qmark_inverse(d)), d, "? undoes its inverse", d);
  }
  return ch.report;
}

VerifyReport verify_jump(unsigned long bound) {
  Checker ch("jump");
  for_each_farey(bound, true, [&](const Rational& x) {
    Rational inv = reciprocal(Rational(1) - x);
    bool p_boundary = inv.is_integer();
    bool i_boundary = p_boundary && mpz_popcount(inv.num().get_mpz_t()) == 1;
    if (!p_boundary) {
      unsigned long tau = hitting_time_farey(x);
      Rational y = x;
      for (unsigned long i = 0; i < tau; ++i) y = backward_farey(y);
      ch.expect_eq(y, renyi(x), "R is the jump transformation of J", x);
      ch.expect_eq(renyi_branch(tau, x), renyi(x), "branch formula matches R", x);
    }
    if (!i_boundary) {
      unsigned long tau_b = hitting_time_doubling(x);
      Rational y = x;
      for (unsigned long i = 0; i < tau_b; ++i) y = doubling(y);
      ch.expect_eq(y, linear_renyi(x), "R2 is the jump transformation of B", x);
      unsigned long literal = 0;
      Rational z = x;
      while (z + z >= Rational(1)) {
        z = doubling(z);
        ++literal;
      }
      ch.expect_eq(tau_b, literal + 1, "tau_B equals the literal first hit", x);
    }
    return !ch.failed();
  });
  unsigned long descent = std::min<unsigned long>(bound, 64);
  for (unsigned long n = 1; n <= descent && !ch.failed(); ++n) {
    ch.expect_eq(backward_farey(Rational(Integer(n), Integer(n) + 1)),
                 Rational(Integer(n) - 1, Integer(n)),
                 "J sends the top of P_{n+1} to the top of P_n", n);
  }
  // both branches strictly increasing on a rational grid
  unsigned long grid = std::clamp<unsigned long>(bound, 4, 256);
  Rational prev_left(-1), prev_right(-1);
  for (unsigned long i = 0; i <= grid && !ch.failed(); ++i) {
    Rational x = Rational(Integer(i), Integer(grid));
    Rational jx = backward_farey(x);
    if (x + x < Rational(1)) {
      ch.expect(prev_left < jx, "left branch of J strictly increasing", x);
      prev_left = jx;
    } else {
      ch.expect(prev_right < jx, "right branch of J strictly increasing", x);
      prev_right = jx;
    }
  }
  if (!ch.failed()) {
    ch.expect_eq(backward_farey(Rational(0)), Rational(0), "J fixes 0", Rational(0));
    ch.expect_eq(backward_farey(Rational(1)), Rational(1), "J fixes 1", Rational(1));
  }
  return ch.report;
}

VerifyReport verify_measure(unsigned long bound) {
  Checker ch("measure");
  unsigned long levels = std::min<unsigned long>(bound, 32);
  Rational prev_lo(1);  // images tile downward from 1
  for (unsigned long n = 1; n <= levels && !ch.failed(); ++n) {
    Rational left = Rational(1) - reciprocal(pow2_rational(n - 1));
    Rational right = Rational(1) - reciprocal(pow2_rational(n));
    Rational mid = (left + right) * half_rational();
    Rational img_lo = odometer_d2(left);
    ch.expect_eq(odometer_d2(mid) - mid, img_lo - left,
                 "D2 translates I_n rigidly", n);
    ch.expect_eq(img_lo, reciprocal(pow2_rational(n)), "D2 image of I_n starts at 2^-n", n);
    ch.expect_eq(img_lo + (right - left), prev_lo,
                 "D2 images of consecutive I_n tile without gaps", n);
    prev_lo = img_lo;
    ch.expect_eq(linear_renyi(left), Rational(0), "R2 vanishes at the left of I_n", n);
    ch.expect_eq(linear_renyi(mid), pow2_rational(n) * (mid - left),
                 "R2 affine with slope 2^n on I_n", n);
    ch.expect_eq(pow2_rational(n) * (right - left), Rational(1),
                 "R2 covers [0,1) over I_n", n);
  }
  return ch.report;
}

VerifyReport verify_odometer_cover(unsigned long bound) {
  Checker ch("odometer-cover");
  unsigned long depth = std::min<unsigned long>(bound, 12);
  for (const BitSequence& seed : sample_bit_seeds()) {
    for (unsigned long n = 1; n <= depth && !ch.failed(); ++n) {
      std::vector<bool> seen(1ull << n, false);
      std::size_t distinct = 0;
      BitSequence w = seed;
      for (unsigned long long k = 0; k < (1ull << n); ++k) {
        std::size_t idx = 0;
        for (unsigned long i = 1; i <= n; ++i) idx = idx * 2 + w.bit(i);
        if (!seen[idx]) {
          seen[idx] = true;
          ++distinct;
        }
        w = odometer_step(w);
      }
      ch.expect(distinct == (1ull << n),
                "length-n prefixes of one odometer cycle cover {0,1}^n", seed);
    }
    if (ch.failed()) break;
  }
  return ch.report;
}

VerifyReport verify_enumeration(unsigned long bound) {
  Checker ch("enumeration");
  MapOrbit newman(MapId::F, Rational(0));
  CalkinWilfStream tree;
  for (unsigned long n = 0; n <= bound && !ch.failed(); ++n) {
    ch.expect_eq(newman.value(), tree.value(), "orbit of F matches the mediant tree", n);
    newman.advance();
    tree.advance();
  }
  unsigned long cap = std::min<unsigned long>(bound, 4096);
  MapOrbit unit(MapId::T, Rational(0));
  MapOrbit doubled(MapId::F, Rational(0));
  MapOrbit dyadic_orbit(MapId::D2, Rational(0));
  std::set<std::string> values;
  for (unsigned long n = 0; n <= cap && !ch.failed(); ++n) {
    Dyadic dn = enum_dyadic(Integer(static_cast<unsigned long>(n)));
    ch.expect_eq(qmark_bcf(unit.value()), dn, "? of the T orbit is the dyadic orbit", n);
    ch.expect_eq(Dyadic::from_rational(dyadic_orbit.value()), dn,
                 "bit-reversal closed form matches the D2 orbit", n);
    ch.expect_eq(index_of_unit(unit.value()), Integer(static_cast<unsigned long>(n)),
                 "index recovers the orbit position", n);
    ch.expect_eq(doubled.value(), unit.value(), "T orbit interleaves the F orbit", n);
    ch.expect(values.insert(unit.value().str()).second, "T orbit has no repeats", n);
    unit.advance();
    dyadic_orbit.advance();
    doubled.advance();
    doubled.advance();
  }
  for (unsigned long k = 0; k <= 12 && (1ull << k) <= cap + 1 && !ch.failed(); ++k) {
    std::vector<bool> seen(1ull << k, false);
    std::size_t distinct = 0;
    for (unsigned long long n = 0; n < (1ull << k); ++n) {
      Dyadic d = enum_dyadic(Integer(static_cast<unsigned long>(n)));
      Integer lifted;
      mpz_mul_2exp(lifted.get_mpz_t(), d.numerator().get_mpz_t(), k - d.exponent());
      std::size_t j = to_size_checked(lifted);
      if (!seen[j]) {
        seen[j] = true;
        ++distinct;
      }
    }
    ch.expect(distinct == (1ull << k), "first 2^k dyadics are exactly level k", k);
  }
  return ch.report;
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "action") return Suite::action;
  if (name == "conjugacy") return Suite::conjugacy;
  if (name == "qmark") return Suite::qmark;
  if (name == "jump") return Suite::jump;
  if (name == "measure") return Suite::measure;
  if (name == "odometer-cover") return Suite::odometer_cover;
  if (name == "enumeration") return Suite::enumeration;
  if (name == "all") return Suite::all;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::action: return "action";
    case Suite::conjugacy: return "conjugacy";
    case Suite::qmark: return "qmark";
    case Suite::jump: return "jump";
    case Suite::measure: return "measure";
    case Suite::odometer_cover: return "odometer-cover";
    case Suite::enumeration: return "enumeration";
    case Suite::all: return "all";
  }
  throw std::logic_error("unreachable suite");
}

std::vector<VerifyReport> run_suite(Suite s, unsigned long bound) {
  if (bound < 1) throw std::domain_error("verification bound must be at least 1");
  switch (s) {
    case Suite::action: return {verify_action(bound)};
    case Suite::conjugacy: return {verify_conjugacy(bound)};
    case Suite::qmark: return {verify_qmark(bound)};
    case Suite::jump: return {verify_jump(bound)};
    case Suite::measure: return {verify_measure(bound)};
    case Suite::odometer_cover: return {verify_odometer_cover(bound)};
    case Suite::enumeration: return {verify_enumeration(bound)};
    case Suite::all: {
      std::vector<VerifyReport> out;
      for (Suite each : {Suite::action, Suite::conjugacy, Suite::qmark, Suite::jump,
                         Suite::measure, Suite::odometer_cover, Suite::enumeration}) {
        auto r = run_suite(each, bound);
        out.insert(out.end(), r.begin(), r.end());
      }
      return out;
    }
  }
  throw std::logic_error("unreachable suite");
}

}  // namespace qcount
