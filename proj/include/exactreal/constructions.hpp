#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "exactreal/real.hpp"

namespace exactreal {

// Square root of a certified-positive real. Positivity is certified up
// front along the budget schedule (SignUnknown on failure); each
// approximation then brackets the root with exact rational squaring
// against approx(a, .) until the bracket is no wider than eps.
Real sqrt_pos(const Real& a, const Budget& budget);

// Sum of 1/k!; the tail after n terms is below 2/(n+1)!.
Real e_const();

// Sum of 10^(-k!) for k >= start; the tail after n terms is below
// 2 * 10^(-(n+1)!).
Real liouville(std::uint64_t start = 0);

/*
 * Desk-scale irrationality-measure check: with p/q the partial sum through
 * term n over q = 10^(n!), decide |L - p/q| < 1/q^n by exact rational
 * arithmetic (the tail is bracketed between 10^(-(n+1)!) and twice that).
 * gap is the certified margin 1/q^n minus the tail's upper bound.
 */
struct LiouvilleReport {
  unsigned n = 0;
  Integer p, q;
  Rational gap;
  bool holds = false;
  std::string json() const;
};

// 1 <= n <= cap; beyond the cap throws DeskScaleExceeded.
LiouvilleReport liouville_check(unsigned n, unsigned cap = 4);

struct DiagCertificate {
  std::uint64_t index = 0;
  Interval trap;     // I_n, one of the middle fifths of I_(n-1)
  Interval avoided;  // A_n, sampled at a tenth of I_(n-1)'s radius
  std::string json() const;
};

/*
 * Fifths diagonalization against a sequence of reals: starting from I_0,
 * trap n is the leftmost middle fifth of trap n-1 disjoint from the
 * sampled interval A_n of seq(n), so |I_n| = |I_0| / 5^n and value()
 * differs from every seq(n) with certificate(n) as evidence. Traps extend
 * lazily and atomically under concurrent use.
 */
class Diagonalization {
 public:
  Diagonalization(RealSequence seq, Interval start);

  Real value() const;
  DiagCertificate certificate(std::uint64_t n) const;  // n >= 1
  Interval trap(std::uint64_t n) const;                // n = 0 gives the start interval

 private:
  struct State;
  std::shared_ptr<State> state_;
};

// Least upper bound of finitely many reals: max of centers at eps, radius
// exactly eps (max is 1-Lipschitz).
Real sup_finite(const std::vector<Real>& as);

// One sift step of the completeness argument at precision eps: the first
// candidate window p +/- eps (p the center of approx(a_i, eps/2)) whose
// upper flank certifiably dominates every member. Throws BudgetExhausted
// when no candidate certifies.
Interval completeness_sift(const std::vector<Real>& as, const Rational& eps, const Budget& budget);

}  // namespace exactreal
