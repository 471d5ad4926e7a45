#pragma once

#include <string_view>
#include <vector>

#include "qcount/rational.hpp"

namespace qcount {

/// The interval maps, each with its own domain contract.
enum class MapId { F, T, R, G, B, R2, J, D2 };

MapId parse_map_id(std::string_view name);  // case-insensitive
std::string_view map_name(MapId m);
bool in_domain(MapId m, const Rational& x);
Rational apply_map(MapId m, const Rational& x);

/// F(x) = 1 / (2[x] - x + 1) on [0, inf).
Rational newman_f(const Rational& x);

/// T(x) = 1 / (2[1/(1-x)] + 1 - 1/(1-x)) on [0, 1); equals F(F(x)).
Rational newman_t(const Rational& x);

/// R(x) = 1/(1-x) - [1/(1-x)] on [0, 1); shift of the backward continued
/// fraction, fixed point at 0.
Rational renyi(const Rational& x);

/// G(x) = 1/x - [1/x] on (0, 1]; shift of the continued fraction.
Rational gauss(const Rational& x);

/// B(x) = 2x on [0, 1/2), 2x - 1 on [1/2, 1].
Rational doubling(const Rational& x);

/// R2(x) = 2 - 2^(k+1) (1 - x) with 2^k = [1/(1-x)]_2, on [0, 1).
Rational linear_renyi(const Rational& x);

/// J(x) = x/(1-x) on [0, 1/2), (2x-1)/x on [1/2, 1]. Two increasing branches.
Rational backward_farey(const Rational& x);

/// Interval odometer: x + 3/2^n - 1 on I_n = [1 - 2^(1-n), 1 - 2^(-n)).
Rational odometer_d2(const Rational& x);

/// tau(x) = [1/(1-x)]: first hitting time of [0, 1/2) under J, plus one.
/// R(x) = J^tau(x) away from partition endpoints.
unsigned long hitting_time_farey(const Rational& x);

/// tau_B(x) = k + 1 with 2^k = [1/(1-x)]_2; first hitting time of [0, 1/2)
/// under B, plus one. R2(x) = B^tau_B(x).
unsigned long hitting_time_doubling(const Rational& x);

/// Renyi branch formula (nx - (n-1)) / (1 - x), valid on
/// P_n = [(n-1)/n, n/(n+1)); rejects x outside P_n.
Rational renyi_branch(unsigned long n, const Rational& x);

/// [x, m(x), ..., m^n(x)], computed exactly.
std::vector<Rational> orbit(MapId m, const Rational& x, std::size_t steps);

}  // namespace qcount
