#pragma once

#include "qcount/expansions.hpp"
#include "qcount/rational.hpp"

namespace qcount {

/// Minkowski's question mark function. It maps rationals to dyadics; all
/// routes below compute it exactly and must agree.
enum class QmarkAlgo { mediant, denjoy, bcf };

QmarkAlgo parse_qmark_algo(std::string_view name);

/// Stern-Brocot descent from (0/1, 1/1), halving dyadic steps, until the
/// mediant hits x. Domain [0, 1].
Dyadic qmark_mediant(const Rational& x);

/// Alternating sum 2 * sum (-1)^(n+1) 2^-(a1+...+an) over the canonical
/// continued fraction of x. Domain (0, 1).
Dyadic qmark_denjoy(const Rational& x);

/// Block word of the backward continued fraction: the digit sequence
/// (a1, a2, ...) maps to the word b_(a1-2) b_(a2-2) ..., whose tail of b_0
/// blocks is the implicit zero tail. Domain [0, 1).
Dyadic qmark_bcf(const Rational& x);

/// Same value as qmark_bcf through the series
/// 1 - sum_j 2^-((a1+...+aj) - j), with the geometric tail past the head
/// summed in closed form. Kept as an independent route for cross-checks.
Dyadic qmark_bcf_series(const Rational& x);

/// Dispatcher over [0, 1] with the endpoint conventions ?(0) = 0, ?(1) = 1.
Dyadic qmark(const Rational& x, QmarkAlgo algo = QmarkAlgo::bcf);

/// Exact inverse on dyadics in [0, 1): evaluates the backward continued
/// fraction obtained by shifting the block code of d by two.
Rational qmark_inverse(const Dyadic& d);

}  // namespace qcount
