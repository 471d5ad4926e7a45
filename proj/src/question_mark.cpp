#include "qcount/question_mark.hpp"

namespace qcount {

QmarkAlgo parse_qmark_algo(std::string_view name) {
  if (name == "mediant") return QmarkAlgo::mediant;
  if (name == "denjoy") return QmarkAlgo::denjoy;
  if (name == "bcf") return QmarkAlgo::bcf;
  throw std::invalid_argument("unknown qmark algorithm '" + std::string(name) + "'");
}

Dyadic qmark_mediant(const Rational& x) {
  if (x < Rational(0) || x > Rational(1)) {
    throw std::domain_error("qmark_mediant requires x in [0,1], got " + x.str());
  }
  if (x == Rational(0)) return Dyadic();
  if (x == Rational(1)) return Dyadic(1, 0);
  Integer lp(0), lq(1), hp(1), hq(1);
  Dyadic vlo, vhi(1, 0);
  while (true) {
    Integer mp = lp + hp;
    Integer mq = lq + hq;
    Dyadic vm = midpoint(vlo, vhi);
    Rational med(mp, mq);
    if (x == med) return vm;
    if (x < med) {
      hp = std::move(mp);
      hq = std::move(mq);
      vhi = vm;
    } else {
      lp = std::move(mp);
      lq = std::move(mq);
      vlo = vm;
    }
  }
}

Dyadic qmark_denjoy(const Rational& x) {
  if (x <= Rational(0) || x >= Rational(1)) {
    throw std::domain_error("qmark_denjoy requires x in (0,1), got " + x.str());
  }
  CfExpansion cf = cf_expand(x);
  // exponents of the terms are the partial digit sums, shifted by one
  std::vector<unsigned long> exps;
  exps.reserve(cf.size());
  Integer sum(0);
  for (const Integer& a : cf.digits()) {
    sum += a;
    exps.push_back(to_ulong_checked(sum - 1));
  }
  unsigned long total = exps.back();
  Integer num(0);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    Integer term(1);
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), total - exps[i]);
    if (i % 2 == 0) {
      num += term;
    } else {
      num -= term;
    }
  }
  return Dyadic(std::move(num), total);
}

Dyadic qmark_bcf(const Rational& x) {
  BcfExpansion e = bcf_expand(x);  // checks the domain
  std::string bits;
  for (const Integer& a : e.head()) {
    bits.append(to_size_checked(a - 2), '1');
    bits.push_back('0');
  }
  return word_value(BinaryWord(std::move(bits)));
}

Dyadic qmark_bcf_series(const Rational& x) {
  BcfExpansion e = bcf_expand(x);
  if (e.empty()) return Dyadic();
  // exponents e_j = (a1+...+aj) - j are strictly increasing
  std::vector<unsigned long> exps;
  exps.reserve(e.head().size());
  Integer sum(0);
  for (std::size_t j = 0; j < e.head().size(); ++j) {
    sum += e.head()[j];
    exps.push_back(to_ulong_checked(sum - Integer(j + 1)));
  }
  unsigned long total = exps.back();
  Integer num(1);
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), total);
  for (unsigned long ej : exps) {
    Integer term(1);
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), total - ej);
    num -= term;
  }
  num -= 1;  // the 2-tail contributes one more copy of the last term
  return Dyadic(std::move(num), total);
}

Dyadic qmark(const Rational& x, QmarkAlgo algo) {
  if (x == Rational(0)) return Dyadic();
  if (x == Rational(1)) return Dyadic(1, 0);
  switch (algo) {
    case QmarkAlgo::mediant: return qmark_mediant(x);
    case QmarkAlgo::denjoy: return qmark_denjoy(x);
    case QmarkAlgo::bcf: return qmark_bcf(x);
  }
  throw std::logic_error("unreachable qmark algorithm");
}

Rational qmark_inverse(const Dyadic& d) {
  if (d.is_one()) throw std::domain_error("qmark_inverse requires d < 1");
  return bcf_eval(shift_h(blocks_encode(binary_expand(d))));
}

}  // namespace qcount
