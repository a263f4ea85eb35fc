#include "schottky/visual.hpp"

namespace schottky {
namespace {

// Squared chord |a' - b'|^2 between the disk-model images of a and b after
// o has been moved to the centre.
template <Scalar T>
T chord_squared(const BoundaryPoint<T>& a, const BoundaryPoint<T>& b, const HPoint<T>& o) {
  const DiskPoint<T> da = disk_from_half_plane(recentre(a, o));
  const DiskPoint<T> db = disk_from_half_plane(recentre(b, o));
  const T dre = da.re - db.re;
  const T dim = da.im - db.im;
  return dre * dre + dim * dim;
}

Interval gromov_from_chord_squared(const Interval& chord2) {
  const mpfr_prec_t prec = chord2.precision();
  if (chord2.is_point() && !certainly_positive(chord2)) return Interval::positive_infinity(prec);
  // -(log(chord^2) - log 4)/2
  const Interval four(4L, prec);
  const Interval g = (log(four) - log(chord2)) * Interval(Rational(1, 2), prec);
  return max(g, Interval(0L, prec));
}

}  // namespace

Interval boundary_gromov_product(const BoundaryPoint<Rational>& a, const BoundaryPoint<Rational>& b,
                                 const HPoint<Rational>& o, mpfr_prec_t prec) {
  const Rational c2 = chord_squared(a, b, o);
  if (c2 == 0) return Interval::positive_infinity(prec);
  return gromov_from_chord_squared(Interval(c2, prec));
}

Interval boundary_gromov_product(const BoundaryPoint<Interval>& a, const BoundaryPoint<Interval>& b,
                                 const HPoint<Interval>& o) {
  return gromov_from_chord_squared(chord_squared(a, b, o));
}

Interval visual_weight(const BoundaryPoint<Rational>& a, const BoundaryPoint<Rational>& b,
                       const HPoint<Rational>& o, const Rational& epsilon, mpfr_prec_t prec) {
  const Rational c2 = chord_squared(a, b, o);
  if (c2 == 0) return Interval(0L, prec);
  // (chord/2)^eps = (chord^2/4)^(eps/2)
  return pow(Interval(c2 / 4, prec), Rational(epsilon / 2));
}

std::vector<std::vector<Interval>> chain_metric(std::span<const BoundaryPoint<Rational>> sample,
                                                const HPoint<Rational>& o, const Rational& epsilon,
                                                mpfr_prec_t prec) {
  if (epsilon <= 0) throw std::invalid_argument("chain metric needs a positive epsilon");
  const std::size_t n = sample.size();
  std::vector<std::vector<Interval>> weights(n, std::vector<Interval>(n, Interval(0L, prec)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      weights[i][j] = visual_weight(sample[i], sample[j], o, epsilon, prec);
      weights[j][i] = weights[i][j];
    }
  }
  return shortest_chains(std::move(weights));
}

std::vector<std::vector<Interval>> shortest_chains(std::vector<std::vector<Interval>> d) {
  const std::size_t n = d.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || i == k || j == k) continue;
        d[i][j] = min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

}  // namespace schottky
