#include "exactreal/real.hpp"

#include <mutex>
#include <stdexcept>

namespace exactreal {

Budget Budget::by_epsilon(Rational min_epsilon) {
  if (min_epsilon.sign() <= 0) throw std::invalid_argument("Budget: min_epsilon must be positive");
  Budget b;
  b.min_epsilon_ = std::move(min_epsilon);
  return b;
}

Budget Budget::by_steps(std::uint64_t max_steps) {
  if (max_steps == 0) throw std::invalid_argument("Budget: max_steps must be at least 1");
  Budget b;
  b.max_steps_ = max_steps;
  return b;
}

Budget Budget::bounded(Rational min_epsilon, std::uint64_t max_steps) {
  Budget b = by_epsilon(std::move(min_epsilon));
  b.max_steps_ = by_steps(max_steps).max_steps_;
  return b;
}

bool Budget::allows(std::uint64_t step, const Rational& eps) const {
  if (max_steps_ && step >= *max_steps_) return false;
  if (step > 0 && min_epsilon_ && eps < *min_epsilon_) return false;
  return true;
}

struct Real::State {
  std::function<Interval(const Rational&)> fn;
  std::optional<Interval> cache;
  std::mutex mu;
};

Real::Real(std::function<Interval(const Rational&)> oracle) : state_(std::make_shared<State>()) {
  state_->fn = std::move(oracle);
}

Interval Real::approx(const Rational& eps) const {
  if (eps.sign() <= 0) throw std::domain_error("approx: eps must be positive");
  {
    std::lock_guard<std::mutex> lock(state_->mu);
    if (state_->cache && state_->cache->radius() <= eps) return *state_->cache;
  }
  Interval raw = state_->fn(eps);
  if (raw.radius() > eps) throw InternalInvariant("approx: oracle exceeded the requested radius");
  std::lock_guard<std::mutex> lock(state_->mu);
  if (!state_->cache) {
    state_->cache = raw;
    return raw;
  }
  if (!iv_intersects(*state_->cache, raw))
    throw InternalInvariant("approx: oracle answer does not intersect earlier answers");
  Interval merged = iv_intersection(*state_->cache, raw);
  state_->cache = merged;
  return merged;
}

Real embed(const Rational& q) {
  return Real([q](const Rational& eps) { return Interval(q, eps); });
}

Real add(const Real& a, const Real& b) {
  return Real([a, b](const Rational& eps) {
    const Rational half = eps / 2;
    return iv_sum(a.approx(half), b.approx(half));
  });
}

Real neg(const Real& a) {
  return Real([a](const Rational& eps) { return iv_neg(a.approx(eps)); });
}

Real sub(const Real& a, const Real& b) { return add(a, neg(b)); }

namespace {

// Largest power of two below x (within a factor of four). Precisions handed
// down a tree stay one-limb rationals; otherwise the endpoints of each answer
// feed back into the next query and the representations compound per query.
Rational dyadic_below(const Rational& x) {
  const long nb = static_cast<long>(mpz_sizeinbase(x.num().get_mpz_t(), 2));
  const long db = static_cast<long>(mpz_sizeinbase(x.den().get_mpz_t(), 2));
  const long e = nb - db - 1;
  Integer p = 1;
  p <<= static_cast<unsigned long>(e >= 0 ? e : -e);
  return e >= 0 ? Rational(p) : Rational(Integer(1), p);
}

}  // namespace

Real mul(const Real& a, const Real& b) {
  return Real([a, b](const Rational& eps) {
    // The integer ceiling keeps m small however fat the cached endpoints get;
    // delta keeps both factors strictly below m in magnitude and the exact
    // product hull within radius eps * m / (m + eps) < eps.
    const Integer mc = max(bound(a), bound(b)).floor() + 1;
    const Rational m(mc);
    const Rational delta = dyadic_below((eps / 2) / (m + eps));
    return iv_mul(a.approx(delta), b.approx(delta));
  });
}

Real recip(const Real& a, const Budget& budget) {
  std::optional<Rational> eta;
  Rational eps(1);
  for (std::uint64_t step = 0; budget.allows(step, eps); ++step, eps /= 2) {
    Interval w = a.approx(eps);
    if (abs(w.center()) > w.radius()) {
      eta = abs(w.center()) - w.radius();
      break;
    }
  }
  if (!eta) throw SignUnknown("recip: sign not certified within budget");
  // A dyadic margin below the certified one still works: every later answer
  // of a sits inside the witness (the cache only tightens), so its endpoints
  // stay at least eta away from zero and the reciprocal has length
  // <= 2 * delta / eta^2 <= eps.
  const Rational eta_v = dyadic_below(*eta);
  return Real([a, eta_v](const Rational& eps2) {
    const Rational delta = dyadic_below(min(eta_v / 2, eta_v * eta_v * eps2 / 2));
    return iv_recip(a.approx(delta));
  });
}

Real div(const Real& a, const Real& b, const Budget& budget) { return mul(a, recip(b, budget)); }

Rational bound(const Real& a) {
  Interval i = a.approx(1);
  return abs(i.center()) + i.radius() + 1;
}

Integer archimedean_bound(const Real& a) {
  Interval i = a.approx(1);
  const Rational s = i.center() + i.radius();
  Integer n = s.floor() + 1;
  // Keep n at least 1/4 above s so the eps = 1/4 comparison against the
  // cached (hence within-s) approximations certifies.
  if (s - Rational(s.floor()) > Rational(3, 4)) n += 1;
  return n;
}

Comparison compare(const Real& a, const Real& b, const Budget& budget) {
  Rational eps(1);
  Rational eps_final = eps;
  for (std::uint64_t step = 0; budget.allows(step, eps); ++step, eps /= 2) {
    Interval ia = a.approx(eps);
    Interval ib = b.approx(eps);
    eps_final = eps;
    if (iv_lt_forall(ia, ib)) return {Order::Less, std::nullopt, std::make_pair(ia, ib)};
    if (iv_lt_forall(ib, ia)) return {Order::Greater, std::nullopt, std::make_pair(ia, ib)};
  }
  return {Order::Indeterminate, eps_final * 4, std::nullopt};
}

Rational distance_bound(const Real& a, const Real& b, const Rational& eps) {
  Interval ia = a.approx(eps);
  Interval ib = b.approx(eps);
  return abs(ia.center() - ib.center()) + ia.radius() + ib.radius();
}

Ternary member(const Rational& q, const Rational& eps, const Real& a, const Budget& budget) {
  if (eps.sign() <= 0) throw std::domain_error("member: eps must be positive");
  Comparison lo = compare(embed(q - eps), a, budget);
  if (lo.verdict == Order::Greater) return Ternary::No;
  Comparison hi = compare(a, embed(q + eps), budget);
  if (hi.verdict == Order::Greater) return Ternary::No;
  if (lo.verdict == Order::Less && hi.verdict == Order::Less) return Ternary::Yes;
  return Ternary::Unknown;
}

Rational rational_between(const Real& a, const Real& b, const Budget& budget) {
  Comparison c = compare(a, b, budget);
  if (c.verdict != Order::Less) throw NotSeparated("rational_between: not separated within budget");
  return (c.witness->first.hi() + c.witness->second.lo()) / 2;
}

namespace {

Integer pow10z(int k) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
  return p;
}

// Round to `digits` fractional digits, ties away from the floor, and print.
// A rounded value of zero never carries a sign.
std::string render_fixed(const Rational& x, int digits) {
  const Rational scaled = x * Rational::pow10(digits) + Rational(1, 2);
  Integer n = scaled.floor();
  const bool negative = n < 0;
  Integer mag = abs(n);
  Integer ip, fp;
  mpz_fdiv_qr(ip.get_mpz_t(), fp.get_mpz_t(), mag.get_mpz_t(), pow10z(digits).get_mpz_t());
  std::string out = negative ? "-" : "";
  out += ip.get_str();
  if (digits > 0) {
    std::string frac = fp.get_str();
    out += '.';
    out += std::string(static_cast<std::size_t>(digits) - frac.size(), '0');
    out += frac;
  }
  return out;
}

}  // namespace

std::string to_decimal(const Real& a, int digits, const Budget& budget) {
  if (digits < 0) throw std::domain_error("to_decimal: digits must be non-negative");
  Rational r = Rational::pow10(-(digits + 2));
  std::uint64_t step = 0;
  for (;;) {
    Interval i = a.approx(r);
    std::string lo = render_fixed(i.lo(), digits);
    std::string hi = render_fixed(i.hi(), digits);
    if (lo == hi) return lo;
    ++step;
    r /= 2;
    if (!budget.allows(step, r)) return render_fixed(i.center(), digits) + "?";
  }
}

}  // namespace exactreal
