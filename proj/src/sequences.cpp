#include "exactreal/sequences.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace exactreal {

Real real_of_cauchy(RealSequence seq, Modulus modulus) {
  return Real([seq = std::move(seq), modulus = std::move(modulus)](const Rational& eps) {
    const Rational half = eps / 2;
    return iv_enlarge(seq(modulus(half)).approx(half), half);
  });
}

namespace {

struct ScanOutcome {
  std::uint64_t from = 0;
  Ternary result = Ternary::Unknown;
};

ScanOutcome scan_window(const RealSequence& seq, const Rational& q, const Rational& eps,
                        std::uint64_t horizon, const Budget& budget) {
  std::vector<Ternary> verdicts;
  verdicts.reserve(horizon);
  for (std::uint64_t n = 1; n <= horizon; ++n)
    verdicts.push_back(member(q, eps, seq(n), budget));
  ScanOutcome out;
  if (verdicts.back() == Ternary::No) {
    out.result = Ternary::No;
    return out;
  }
  std::uint64_t n0 = 0;
  for (std::uint64_t n = horizon; n >= 1; --n) {
    if (verdicts[n - 1] != Ternary::Yes) break;
    n0 = n;
  }
  if (n0 != 0) {
    out.from = n0;
    out.result = Ternary::Yes;
  }
  return out;
}

}  // namespace

ConvergenceEvidence check_convergence(const RealSequence& seq, const Real& b, std::uint64_t horizon,
                                      const Budget& budget) {
  if (horizon < 1) throw std::domain_error("check_convergence: horizon must be at least 1");
  ConvergenceEvidence ev;
  const Rational sample_floor = Rational(4) / Rational(Integer(horizon));
  Rational eps(1);
  bool all_stable = true;
  bool any_no = false;
  for (std::uint64_t step = 0; budget.allows(step, eps); ++step, eps /= 2) {
    if (step > 0 && eps < sample_floor) break;
    const Rational q = b.approx(eps).center();
    ScanOutcome out = scan_window(seq, q, eps, horizon, budget);
    ev.checks.push_back(MemberScan{q, eps, out.from, horizon, out.result});
    if (out.result == Ternary::No) any_no = true;
    if (out.result != Ternary::Yes) all_stable = false;
  }
  if (any_no) {
    ev.verdict = ConvergenceVerdict::DivergedAtBudget;
  } else if (all_stable && !ev.checks.empty()) {
    ev.verdict = ConvergenceVerdict::Converged;
    for (const MemberScan& s : ev.checks) ev.n0 = std::max(ev.n0, s.from);
  } else {
    ev.verdict = ConvergenceVerdict::Unknown;
  }
  return ev;
}

Ternary hat_member(const RealSequence& seq, const Rational& q, const Rational& eps,
                   std::uint64_t horizon, const Budget& budget) {
  if (horizon < 1) throw std::domain_error("hat_member: horizon must be at least 1");
  if (eps.sign() <= 0) throw std::domain_error("hat_member: eps must be positive");
  return scan_window(seq, q, eps, horizon, budget).result;
}

namespace {

const char* verdict_name(ConvergenceVerdict v) {
  switch (v) {
    case ConvergenceVerdict::Converged: return "converged";
    case ConvergenceVerdict::DivergedAtBudget: return "diverged-at-budget";
    default: return "unknown";
  }
}

const char* ternary_name(Ternary t) {
  switch (t) {
    case Ternary::Yes: return "yes";
    case Ternary::No: return "no";
    default: return "unknown";
  }
}

}  // namespace

std::string ConvergenceEvidence::json() const {
  nlohmann::ordered_json j;
  j["verdict"] = verdict_name(verdict);
  if (verdict == ConvergenceVerdict::Converged)
    j["n0"] = n0;
  else
    j["n0"] = nullptr;
  auto arr = nlohmann::ordered_json::array();
  for (const MemberScan& s : checks) {
    nlohmann::ordered_json c;
    c["center"] = s.center.str();
    c["radius"] = s.radius.str();
    c["from"] = s.from;
    c["to"] = s.to;
    c["result"] = ternary_name(s.result);
    arr.push_back(c);
  }
  j["checks"] = arr;
  return j.dump();
}

}  // namespace exactreal
