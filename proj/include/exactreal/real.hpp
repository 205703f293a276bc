#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "exactreal/errors.hpp"
#include "exactreal/interval.hpp"

namespace exactreal {

/*
 * Refinement budget: a floor on the precision schedule, a cap on the number
 * of refinement steps, or both. At least one bound must be set. Schedules
 * start at eps = 1 and halve; the first trial is always allowed so that a
 * floor above 1 still yields a defined final precision.
 */
class Budget {
 public:
  static Budget by_epsilon(Rational min_epsilon);
  static Budget by_steps(std::uint64_t max_steps);
  static Budget bounded(Rational min_epsilon, std::uint64_t max_steps);

  const std::optional<Rational>& min_epsilon() const { return min_epsilon_; }
  const std::optional<std::uint64_t>& max_steps() const { return max_steps_; }

  // Whether a step with 0-based index `step` at precision eps fits.
  bool allows(std::uint64_t step, const Rational& eps) const;

 private:
  Budget() = default;
  std::optional<Rational> min_epsilon_;
  std::optional<std::uint64_t> max_steps_;
};

enum class Order { Less, Greater, Indeterminate };
enum class Ternary { Yes, No, Unknown };

struct Comparison {
  Order verdict;
  // Indeterminate only: |a - b| < gap_bound.
  std::optional<Rational> gap_bound;
  // Less/Greater only: the disjoint pair (A, B) in argument order.
  std::optional<std::pair<Interval, Interval>> witness;
};

/*
 * A real number as a canonical approximation oracle: approx(eps) returns an
 * open rational interval of radius <= eps containing the number, and any
 * two intervals ever returned intersect. Handles are cheap to copy and
 * share one cache holding the tightest knowledge so far; every answer is
 * checked against the cache and the intersection hull is stored and
 * returned. A radius overrun or an empty intersection is unrecoverable and
 * throws InternalInvariant. Concurrent approx calls may duplicate oracle
 * work but never violate consistency.
 */
class Real {
 public:
  explicit Real(std::function<Interval(const Rational&)> oracle);

  Interval approx(const Rational& eps) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

using RealSequence = std::function<Real(std::uint64_t)>;

Real embed(const Rational& q);
Real add(const Real& a, const Real& b);
Real neg(const Real& a);
Real sub(const Real& a, const Real& b);
Real mul(const Real& a, const Real& b);

// Reciprocal. The sign of a is certified up front by refining along the
// budget schedule; failure throws SignUnknown and no Real is produced.
Real recip(const Real& a, const Budget& budget);
Real div(const Real& a, const Real& b, const Budget& budget);

inline Real operator+(const Real& a, const Real& b) { return add(a, b); }
inline Real operator-(const Real& a) { return neg(a); }
inline Real operator-(const Real& a, const Real& b) { return sub(a, b); }
inline Real operator*(const Real& a, const Real& b) { return mul(a, b); }

// |center| + radius + 1 of approx(a, 1); a strict bound on |a|.
Rational bound(const Real& a);

// An integer n with a < n, certifiable by compare at eps = 1/4.
Integer archimedean_bound(const Real& a);

// Budgeted trichotomy: refine both sides along eps = 1, 1/2, 1/4, ... until
// the intervals separate or the budget ends. Indeterminate carries
// gap_bound = 4 * eps_final.
Comparison compare(const Real& a, const Real& b, const Budget& budget);

// |c_A - c_B| + r_A + r_B at precision eps; a = b forces this <= 4 * eps.
Rational distance_bound(const Real& a, const Real& b, const Rational& eps);

// Does the interval q +/- eps belong to a's filter? Decided through the
// two flanking comparisons; Unknown when the budget cannot tell.
Ternary member(const Rational& q, const Rational& eps, const Real& a, const Budget& budget);

// A rational strictly between a and b; requires compare(a, b) = Less
// within budget, otherwise throws NotSeparated.
Rational rational_between(const Real& a, const Real& b, const Budget& budget);

// Signed decimal string with exactly `digits` fractional digits and error
// below 10^-digits. Refines while the interval endpoints disagree on the
// printed string; if the budget ends first the result carries a '?' suffix
// (the undecided-rounding marker) and the cached interval still bounds the
// error.
std::string to_decimal(const Real& a, int digits, const Budget& budget);

}  // namespace exactreal
