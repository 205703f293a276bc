#include "exactreal/constructions.hpp"

#include <json.hpp>

#include <mutex>
#include <stdexcept>
#include <utility>

namespace exactreal {

Real sqrt_pos(const Real& a, const Budget& budget) {
  Comparison c = compare(embed(0), a, budget);
  if (c.verdict != Order::Less) throw SignUnknown("sqrt_pos: positivity not certified within budget");
  const Rational m = bound(a);  // a < m and m > 1, so m itself bounds the root
  return Real([a, m](const Rational& eps) {
    Rational lo(0), hi = m;
    while (hi - lo > eps) {
      const Rational w = hi - lo;
      // Two probes per round: once a's interval is narrower than the gap
      // between the probe squares it can contain at most one of them, so at
      // least one probe decides a side. Plain midpoint bisection could hang
      // on a probe whose square equals a exactly.
      const Rational m1 = lo + w / 3, m2 = lo + w * 2 / 3;
      const Rational s1 = m1 * m1, s2 = m2 * m2;
      Interval ia = a.approx((s2 - s1) / 4);
      const Rational alo = ia.lo(), ahi = ia.hi();
      Rational nlo = lo, nhi = hi;
      if (s2 <= alo) nlo = m2;
      else if (s1 <= alo) nlo = m1;
      if (s1 >= ahi) nhi = m1;
      else if (s2 >= ahi) nhi = m2;
      if (nlo == lo && nhi == hi) throw InternalInvariant("sqrt_pos: bracket failed to shrink");
      lo = nlo;
      hi = nhi;
    }
    return Interval::from_endpoints(lo, hi);
  });
}

Real e_const() {
  return Real([](const Rational& eps) {
    std::uint64_t n = 0;
    Integer next_fact = 1;  // (n+1)!
    while (Rational(2) / Rational(next_fact) > eps) {
      ++n;
      next_fact *= static_cast<unsigned long>(n + 1);
    }
    Rational sum(0);
    Integer kfact = 1;
    for (std::uint64_t k = 0; k <= n; ++k) {
      if (k > 0) kfact *= static_cast<unsigned long>(k);
      sum += Rational(Integer(1), kfact);
    }
    return Interval(sum, Rational(2) / Rational(next_fact));
  });
}

namespace {

// 10^(-(n)!) with the factorial exponent; guards against factorials past
// unsigned-long range, which no desk-scale precision can reach.
Rational pow10_neg_factorial(std::uint64_t n) {
  Integer f = 1;
  for (std::uint64_t k = 2; k <= n; ++k) f *= static_cast<unsigned long>(k);
  if (!f.fits_ulong_p()) throw DeskScaleExceeded("liouville: factorial exponent out of range");
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, f.get_ui());
  return Rational(Integer(1), p);
}

}  // namespace

Real liouville(std::uint64_t start) {
  return Real([start](const Rational& eps) {
    std::uint64_t n = start;
    while (Rational(2) * pow10_neg_factorial(n + 1) > eps) ++n;
    Rational sum(0);
    for (std::uint64_t k = start; k <= n; ++k) sum += pow10_neg_factorial(k);
    return Interval(sum, Rational(2) * pow10_neg_factorial(n + 1));
  });
}

LiouvilleReport liouville_check(unsigned n, unsigned cap) {
  if (n < 1) throw std::domain_error("liouville_check: n must be at least 1");
  if (n > cap) throw DeskScaleExceeded("liouville_check: n exceeds the desk-scale cap");
  // p and q are kept as written over q = 10^(n!), not canonicalized: at
  // n = 1 the two leading 1/10 terms give p/q = 2/10, which lowest terms
  // would collapse to 1/5 and break the stated denominator.
  Integer f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  if (!f.fits_ulong_p()) throw DeskScaleExceeded("liouville_check: factorial exponent out of range");
  const unsigned long nfact = f.get_ui();
  LiouvilleReport report;
  report.n = n;
  mpz_ui_pow_ui(report.q.get_mpz_t(), 10, nfact);
  Integer kfact = 1;
  for (unsigned k = 0; k <= n; ++k) {
    if (k >= 2) kfact *= k;
    Integer term;
    mpz_ui_pow_ui(term.get_mpz_t(), 10, nfact - kfact.get_ui());
    report.p += term;
  }
  const Rational tail_hi = Rational(2) * pow10_neg_factorial(n + 1);
  Rational target(1);
  for (unsigned k = 0; k < n; ++k) target /= Rational(report.q);
  report.holds = tail_hi <= target;
  report.gap = target - tail_hi;
  return report;
}

std::string LiouvilleReport::json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["p"] = p.get_str();
  j["q"] = q.get_str();
  j["holds"] = holds;
  return j.dump();
}

namespace {

nlohmann::ordered_json interval_json(const Interval& i) {
  nlohmann::ordered_json j;
  j["center"] = i.center().str();
  j["radius"] = i.radius().str();
  return j;
}

}  // namespace

std::string DiagCertificate::json() const {
  nlohmann::ordered_json j;
  j["index"] = index;
  j["trap"] = interval_json(trap);
  j["avoided"] = interval_json(avoided);
  return j.dump();
}

struct Diagonalization::State {
  RealSequence seq;
  std::vector<Interval> traps;  // traps[0] = start
  std::vector<DiagCertificate> certs;
  std::mutex mu;

  void extend(std::uint64_t upto) {
    while (traps.size() <= upto) {
      const std::uint64_t n = traps.size();
      const Interval prev = traps.back();
      Interval avoided = seq(n).approx(prev.radius() / 10);
      auto fifths = iv_fifths(prev);
      const Interval* chosen = nullptr;
      for (int k = 1; k <= 3; ++k) {
        if (!iv_intersects(fifths[k], avoided)) {
          chosen = &fifths[k];
          break;
        }
      }
      // avoided spans at most half a fifth, so it cannot meet all three
      // middle fifths.
      if (!chosen) throw InternalInvariant("diagonalize: no disjoint middle fifth");
      traps.push_back(*chosen);
      certs.push_back(DiagCertificate{n, *chosen, avoided});
    }
  }
};

Diagonalization::Diagonalization(RealSequence seq, Interval start) : state_(std::make_shared<State>()) {
  state_->seq = std::move(seq);
  state_->traps.push_back(std::move(start));
}

Real Diagonalization::value() const {
  auto st = state_;
  return Real([st](const Rational& eps) {
    std::lock_guard<std::mutex> lock(st->mu);
    for (std::uint64_t n = 0;; ++n) {
      st->extend(n);
      if (st->traps[n].radius() <= eps) return st->traps[n];
    }
  });
}

DiagCertificate Diagonalization::certificate(std::uint64_t n) const {
  if (n < 1) throw std::domain_error("Diagonalization: certificates start at index 1");
  std::lock_guard<std::mutex> lock(state_->mu);
  state_->extend(n);
  return state_->certs[n - 1];
}

Interval Diagonalization::trap(std::uint64_t n) const {
  std::lock_guard<std::mutex> lock(state_->mu);
  state_->extend(n);
  return state_->traps[n];
}

Real sup_finite(const std::vector<Real>& as) {
  if (as.empty()) throw std::invalid_argument("sup_finite: empty list");
  return Real([as](const Rational& eps) {
    Rational c = as.front().approx(eps).center();
    for (std::size_t i = 1; i < as.size(); ++i) c = max(c, as[i].approx(eps).center());
    return Interval(c, eps);
  });
}

Interval completeness_sift(const std::vector<Real>& as, const Rational& eps, const Budget& budget) {
  if (as.empty()) throw std::invalid_argument("completeness_sift: empty list");
  if (eps.sign() <= 0) throw std::domain_error("completeness_sift: eps must be positive");
  for (const Real& a : as) {
    const Rational p = a.approx(eps / 2).center();
    Real flank = embed(p + eps);
    bool dominates = true;
    for (const Real& other : as) {
      if (compare(other, flank, budget).verdict != Order::Less) {
        dominates = false;
        break;
      }
    }
    if (dominates) return Interval(p, eps);
  }
  throw BudgetExhausted("completeness_sift: no candidate certified within budget");
}

}  // namespace exactreal
