#include "qcount/maps.hpp"

#include <cctype>

namespace qcount {

namespace {

void require_unit_interval(const Rational& x, const char* who) {
  if (x < Rational(0) || x >= Rational(1)) {
    throw std::domain_error(std::string(who) + " requires x in [0,1), got " + x.str());
  }
}

void require_closed_unit(const Rational& x, const char* who) {
  if (x < Rational(0) || x > Rational(1)) {
    throw std::domain_error(std::string(who) + " requires x in [0,1], got " + x.str());
  }
}

Rational pow2_rational(unsigned long k) {
  Integer p(1);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), k);
  return Rational(std::move(p));
}

}  // namespace

MapId parse_map_id(std::string_view name) {
  std::string up;
  up.reserve(name.size());
  for (char c : name) up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (up == "F") return MapId::F;
  if (up == "T") return MapId::T;
  if (up == "R") return MapId::R;
  if (up == "G") return MapId::G;
  if (up == "B") return MapId::B;
  if (up == "R2") return MapId::R2;
  if (up == "J") return MapId::J;
  if (up == "D2") return MapId::D2;
  throw std::invalid_argument("unknown map '" + std::string(name) + "'");
}

std::string_view map_name(MapId m) {
  switch (m) {
    case MapId::F: return "F";
    case MapId::T: return "T";
    case MapId::R: return "R";
    case MapId::G: return "G";
    case MapId::B: return "B";
    case MapId::R2: return "R2";
    case MapId::J: return "J";
    case MapId::D2: return "D2";
  }
  throw std::logic_error("unreachable map id");
}

bool in_domain(MapId m, const Rational& x) {
  switch (m) {
    case MapId::F: return x >= Rational(0);
    case MapId::T:
    case MapId::R:
    case MapId::R2:
    case MapId::D2: return x >= Rational(0) && x < Rational(1);
    case MapId::G: return x > Rational(0) && x <= Rational(1);
    case MapId::B:
    case MapId::J: return x >= Rational(0) && x <= Rational(1);
  }
  return false;
}

Rational apply_map(MapId m, const Rational& x) {
  switch (m) {
    case MapId::F: return newman_f(x);
    case MapId::T: return newman_t(x);
    case MapId::R: return renyi(x);
    case MapId::G: return gauss(x);
    case MapId::B: return doubling(x);
    case MapId::R2: return linear_renyi(x);
    case MapId::J: return backward_farey(x);
    case MapId::D2: return odometer_d2(x);
  }
  throw std::logic_error("unreachable map id");
}

Rational newman_f(const Rational& x) {
  if (x < Rational(0)) throw std::domain_error("newman_f requires x >= 0, got " + x.str());
  Rational fl(int_floor(x));
  return reciprocal(fl + fl - x + Rational(1));
}

Rational newman_t(const Rational& x) {
  require_unit_interval(x, "newman_t");
  Rational inv = reciprocal(Rational(1) - x);
  Rational fl(int_floor(inv));
  return reciprocal(fl + fl + Rational(1) - inv);
}

Rational renyi(const Rational& x) {
  require_unit_interval(x, "renyi");
  Rational inv = reciprocal(Rational(1) - x);
  return inv - Rational(int_floor(inv));
}

Rational gauss(const Rational& x) {
  if (x <= Rational(0) || x > Rational(1)) {
    throw std::domain_error("gauss requires x in (0,1], got " + x.str());
  }
  Rational inv = reciprocal(x);
  return inv - Rational(int_floor(inv));
}

Rational doubling(const Rational& x) {
  require_closed_unit(x, "doubling");
  Rational two_x = x + x;
  if (two_x < Rational(1)) return two_x;
  return two_x - Rational(1);
}

Rational linear_renyi(const Rational& x) {
  require_unit_interval(x, "linear_renyi");
  unsigned long k = pow2_floor_exp(reciprocal(Rational(1) - x));
  return Rational(2) - pow2_rational(k + 1) * (Rational(1) - x);
}

Rational backward_farey(const Rational& x) {
  require_closed_unit(x, "backward_farey");
  if (x + x < Rational(1)) return x / (Rational(1) - x);
  return (x + x - Rational(1)) / x;
}

Rational odometer_d2(const Rational& x) {
  require_unit_interval(x, "odometer_d2");
  unsigned long n = pow2_floor_exp(reciprocal(Rational(1) - x)) + 1;
  return x + Rational(3) / pow2_rational(n) - Rational(1);
}

unsigned long hitting_time_farey(const Rational& x) {
  require_unit_interval(x, "hitting_time_farey");
  return to_ulong_checked(int_floor(reciprocal(Rational(1) - x)));
}

unsigned long hitting_time_doubling(const Rational& x) {
  require_unit_interval(x, "hitting_time_doubling");
  return pow2_floor_exp(reciprocal(Rational(1) - x)) + 1;
}

Rational renyi_branch(unsigned long n, const Rational& x) {
  if (n < 1) throw std::domain_error("renyi_branch requires n >= 1");
  Rational lo = Rational(Integer(n) - 1, Integer(n));
  Rational hi = Rational(Integer(n), Integer(n) + 1);
  if (x < lo || x >= hi) {
    throw std::domain_error("renyi_branch: " + x.str() + " outside P_" + std::to_string(n));
  }
  return (Rational(Integer(n)) * x - Rational(Integer(n) - 1)) / (Rational(1) - x);
}

std::vector<Rational> orbit(MapId m, const Rational& x, std::size_t steps) {
  std::vector<Rational> points;
  points.reserve(steps + 1);
  points.push_back(x);
  for (std::size_t i = 0; i < steps; ++i) {
    points.push_back(apply_map(m, points.back()));
  }
  return points;
}

}  // namespace qcount
