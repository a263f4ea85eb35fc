#pragma once

#include "schottky/hyperbolic.hpp"

#include <span>
#include <vector>

namespace schottky {

// (x|y)_w = (d(x,w) + d(y,w) - d(x,y)) / 2.
template <Scalar T>
Interval gromov_product(const HPoint<T>& x, const HPoint<T>& y, const HPoint<T>& w,
                        mpfr_prec_t prec = kDefaultPrecision) {
  const Interval half(Rational(1, 2), prec);
  const Interval g = (hyp_distance(x, w, prec) + hyp_distance(y, w, prec) - hyp_distance(x, y, prec)) * half;
  // The triangle inequality makes the true value nonnegative.
  return max(g, Interval(0L, prec));
}

// Gromov product of two ideal points seen from o, computed in the disk model
// after moving o to the centre: e^{-(a|b)_o} = sin(theta/2) = |a' - b'| / 2.
// Equal points give +inf.
Interval boundary_gromov_product(const BoundaryPoint<Rational>& a, const BoundaryPoint<Rational>& b,
                                 const HPoint<Rational>& o, mpfr_prec_t prec = kDefaultPrecision);
Interval boundary_gromov_product(const BoundaryPoint<Interval>& a, const BoundaryPoint<Interval>& b,
                                 const HPoint<Interval>& o);

// Visual distance e^{-eps (a|b)_o} of the pair, i.e. (|a' - b'|/2)^eps.
Interval visual_weight(const BoundaryPoint<Rational>& a, const BoundaryPoint<Rational>& b,
                       const HPoint<Rational>& o, const Rational& epsilon,
                       mpfr_prec_t prec = kDefaultPrecision);

// Chain metric d_{o,eps} restricted to a finite sample: the infimum over
// chains is the shortest path in the complete graph with edge weights
// e^{-eps (x_{i-1}|x_i)_o}. Entry [i][j] encloses d(sample[i], sample[j]).
std::vector<std::vector<Interval>> chain_metric(std::span<const BoundaryPoint<Rational>> sample,
                                                const HPoint<Rational>& o, const Rational& epsilon,
                                                mpfr_prec_t prec = kDefaultPrecision);

// Shortest-path closure of an explicit weight table (Floyd-Warshall with
// interval minima). Exposed separately so chain enumeration can be tested
// against it.
std::vector<std::vector<Interval>> shortest_chains(std::vector<std::vector<Interval>> weights);

}  // namespace schottky
