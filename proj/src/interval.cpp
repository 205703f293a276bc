#include "exactreal/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "exactreal/errors.hpp"

namespace exactreal {

Interval::Interval(Rational center, Rational radius)
    : center_(std::move(center)), radius_(std::move(radius)) {
  if (radius_.sign() <= 0) throw std::domain_error("Interval: radius must be positive");
}

Interval Interval::from_endpoints(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::domain_error("Interval: endpoints must be ordered");
  return Interval((lo + hi) / 2, (hi - lo) / 2);
}

bool Interval::contains(const Rational& q) const { return lo() < q && q < hi(); }

Interval iv_sum(const Interval& i, const Interval& j) {
  return Interval(i.center() + j.center(), i.radius() + j.radius());
}

Interval iv_neg(const Interval& i) { return Interval(-i.center(), i.radius()); }

Interval iv_mul(const Interval& i, const Interval& j) {
  const Rational a = i.lo(), b = i.hi(), c = j.lo(), d = j.hi();
  const Rational p1 = a * c, p2 = a * d, p3 = b * c, p4 = b * d;
  Rational lo = min(min(p1, p2), min(p3, p4));
  Rational hi = max(max(p1, p2), max(p3, p4));
  return Interval::from_endpoints(lo, hi);
}

Interval iv_recip(const Interval& i) {
  if (abs(i.center()) <= i.radius()) throw ContainsZero("iv_recip: 0 in closure");
  return Interval::from_endpoints(Rational(1) / i.hi(), Rational(1) / i.lo());
}

Interval iv_enlarge(const Interval& i, const Rational& eps) {
  if (eps.sign() <= 0) throw NonPositiveEnlargement("iv_enlarge: eps must be positive");
  return Interval(i.center(), i.radius() + eps);
}

Interval iv_intersection(const Interval& i, const Interval& j) {
  if (!iv_intersects(i, j)) throw std::domain_error("iv_intersection: intervals do not intersect");
  return Interval::from_endpoints(max(i.lo(), j.lo()), min(i.hi(), j.hi()));
}

bool iv_lt_forall(const Interval& i, const Interval& j) { return i.hi() <= j.lo(); }

bool iv_le_exists(const Interval& i, const Interval& j) { return i.lo() < j.hi(); }

bool iv_intersects(const Interval& i, const Interval& j) {
  return abs(i.center() - j.center()) < i.radius() + j.radius();
}

bool iv_subset(const Interval& inner, const Interval& outer) {
  return outer.lo() <= inner.lo() && inner.hi() <= outer.hi();
}

bool iv_deep_subset(const Interval& inner, const Interval& outer) {
  return outer.lo() < inner.lo() && inner.hi() < outer.hi();
}

Rational iv_deep_margin(const Interval& inner, const Interval& outer) {
  if (!iv_deep_subset(inner, outer))
    throw std::domain_error("iv_deep_margin: not a deep subset");
  return min(inner.lo() - outer.lo(), outer.hi() - inner.hi());
}

std::array<Interval, 5> iv_fifths(const Interval& i) {
  const Rational r = i.radius() / 5;
  const Rational step = r * 2;
  const Rational first = i.center() - step * 2;
  return {Interval(first, r), Interval(first + step, r), Interval(first + step * 2, r),
          Interval(first + step * 3, r), Interval(first + step * 4, r)};
}

}  // namespace exactreal
