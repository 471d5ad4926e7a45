#pragma once

// Test-only oracles on machine integers, independent of the library's
// arithmetic path. Keep inputs small enough that nothing here overflows.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

struct Frac {
  long long num = 0;
  long long den = 1;

  friend bool operator==(const Frac& a, const Frac& b) {
    return a.num == b.num && a.den == b.den;
  }
};

inline Frac reduce(long long n, long long d) {
  if (d == 0) throw std::domain_error("oracle: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  long long g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  return {n / g, d / g};
}

inline Frac add(Frac a, Frac b) { return reduce(a.num * b.den + b.num * a.den, a.den * b.den); }
inline Frac sub(Frac a, Frac b) { return reduce(a.num * b.den - b.num * a.den, a.den * b.den); }
inline Frac mul(Frac a, Frac b) { return reduce(a.num * b.num, a.den * b.den); }
inline Frac div(Frac a, Frac b) { return reduce(a.num * b.den, a.den * b.num); }
inline bool less(Frac a, Frac b) { return a.num * b.den < b.num * a.den; }

inline long long floor_div(long long n, long long d) {
  long long q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

inline long long floor_of(Frac a) { return floor_div(a.num, a.den); }

// continued fraction digits of p/q in (0,1), by the euclidean algorithm
inline std::vector<long long> cf_digits(long long p, long long q) {
  std::vector<long long> out;
  while (p != 0) {
    out.push_back(q / p);
    long long r = q % p;
    q = p;
    p = r;
  }
  return out;
}

// bottom-up continued fraction value
inline Frac cf_value(const std::vector<long long>& digits) {
  Frac acc{0, 1};
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    acc = div(Frac{1, 1}, add(Frac{*it, 1}, acc));
  }
  return acc;
}

// backward continued fraction head of p/q in [0,1) by the digit recursion
inline std::vector<long long> bcf_digits(long long p, long long q) {
  std::vector<long long> out;
  Frac x = reduce(p, q);
  while (x.num != 0) {
    Frac inv = div(Frac{1, 1}, sub(Frac{1, 1}, x));
    long long fl = floor_of(inv);
    out.push_back(fl + 1);
    x = sub(inv, Frac{fl, 1});
  }
  return out;
}

// head followed by the 2-tail, evaluated right to left with remainder 0
inline Frac bcf_value(const std::vector<long long>& head) {
  Frac v{0, 1};
  for (auto it = head.rbegin(); it != head.rend(); ++it) {
    v = sub(Frac{1, 1}, div(Frac{1, 1}, add(Frac{*it - 1, 1}, v)));
  }
  return v;
}

// literal first hitting time of [0, 1/2) under doubling, plus one
inline unsigned long tau_doubling(Frac x) {
  unsigned long n = 0;
  while (2 * x.num >= x.den) {
    long long t = 2 * x.num;
    if (t >= x.den) t -= x.den;
    x = reduce(t, x.den);
    ++n;
  }
  return n + 1;
}

// interval odometer by scanning the partition I_n directly
inline Frac odometer_by_scan(Frac x) {
  long long pow = 1;  // 2^(n-1)
  for (long long n = 1; n < 62; ++n) {
    Frac left{pow - 1, pow};
    Frac right{2 * pow - 1, 2 * pow};
    if (!less(x, left) && less(x, right)) {
      return add(x, Frac{3 - 2 * pow, 2 * pow});  // x + 3/2^n - 1
    }
    pow *= 2;
  }
  throw std::domain_error("oracle: partition scan ran out of levels");
}

// word of v written least significant bit first, trailing zeros trimmed
inline std::string lsb_word(unsigned long long v) {
  std::string bits;
  while (v != 0) {
    bits.push_back((v & 1) ? '1' : '0');
    v >>= 1;
  }
  return bits;
}

}  // namespace oracle
