#pragma once

#include <array>

#include "exactreal/rational.hpp"

namespace exactreal {

/*
 * Open rational interval (center - radius, center + radius), radius > 0.
 * The open-interval reading matters: two intervals that merely touch at an
 * endpoint do not intersect.
 */
class Interval {
 public:
  Interval(Rational center, Rational radius);
  static Interval from_endpoints(const Rational& lo, const Rational& hi);

  const Rational& center() const { return center_; }
  const Rational& radius() const { return radius_; }
  Rational lo() const { return center_ - radius_; }
  Rational hi() const { return center_ + radius_; }
  Rational length() const { return radius_ * Rational(2); }
  bool contains(const Rational& q) const;

 private:
  Rational center_;
  Rational radius_;
};

// Elementwise sum: centers add, radii add.
Interval iv_sum(const Interval& i, const Interval& j);

Interval iv_neg(const Interval& i);

// Exact hull of the elementwise product: min/max of the four endpoint
// products. For open bounded intervals this hull equals the product set.
Interval iv_mul(const Interval& i, const Interval& j);

// Elementwise reciprocal; requires 0 outside the closure of i.
Interval iv_recip(const Interval& i);

// Enlarge the radius by eps > 0 (the roundification F_eps).
Interval iv_enlarge(const Interval& i, const Rational& eps);

// Overlap of two intersecting intervals, re-encoded as center +/- radius.
Interval iv_intersection(const Interval& i, const Interval& j);

// sup i <= inf j: every point of i lies below every point of j.
bool iv_lt_forall(const Interval& i, const Interval& j);

// inf i < sup j: some point of i lies below some point of j.
bool iv_le_exists(const Interval& i, const Interval& j);

bool iv_intersects(const Interval& i, const Interval& j);

// Closure-inclusive containment of inner in outer.
bool iv_subset(const Interval& inner, const Interval& outer);

// Strict containment with slack on both ends.
bool iv_deep_subset(const Interval& inner, const Interval& outer);

// The smaller of the two end slacks; requires iv_deep_subset.
Rational iv_deep_margin(const Interval& inner, const Interval& outer);

// Five consecutive intervals of equal length partitioning i. The middle
// three are each deeply contained in i.
std::array<Interval, 5> iv_fifths(const Interval& i);

}  // namespace exactreal
