#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exactreal/real.hpp"

namespace exactreal {

// Index from which all sequence terms stay within a requested distance of
// the limit. The caller asserts the contract; it is not checked.
using Modulus = std::function<std::uint64_t(const Rational&)>;

// The limit of a Cauchy sequence: approx(eps) takes the term at
// modulus(eps/2) to precision eps/2 and enlarges by eps/2.
Real real_of_cauchy(RealSequence seq, Modulus modulus);

enum class ConvergenceVerdict { Converged, DivergedAtBudget, Unknown };

// One scanned candidate window q_eps of b: from = the least index whose
// whole tail up to `to` answered Yes (0 when there is none), result = Yes
// for a stable tail, No when the window is certified out at the horizon,
// Unknown otherwise.
struct MemberScan {
  Rational center;
  Rational radius;
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  Ternary result = Ternary::Unknown;
};

struct ConvergenceEvidence {
  ConvergenceVerdict verdict = ConvergenceVerdict::Unknown;
  std::uint64_t n0 = 0;  // meaningful only when Converged
  std::vector<MemberScan> checks;
  std::string json() const;
};

/*
 * Semi-decided convergence of seq towards b: sample windows q_eps of b for
 * eps = 1, 1/2, ... (down to the budget, and never below 4/horizon so a
 * window's stable tail can still fit before the horizon), then scan each
 * window across n = 1..horizon with member under the budget. Converged
 * when every window has a stable tail; DivergedAtBudget when some window
 * is certified out at the horizon; Unknown otherwise.
 */
ConvergenceEvidence check_convergence(const RealSequence& seq, const Real& b, std::uint64_t horizon,
                                      const Budget& budget);

// Membership of the window q_eps in the filter generated by the tails of
// seq, decided up to the horizon: Yes for a stable tail, No when certified
// out at the horizon, Unknown otherwise.
Ternary hat_member(const RealSequence& seq, const Rational& q, const Rational& eps,
                   std::uint64_t horizon, const Budget& budget);

}  // namespace exactreal
