#pragma once

// Independent reference values for the test suite: a deterministic RNG,
// a classical digit-by-digit integer square root, and exact series sums.
// Nothing here calls into the library's approximation machinery.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "exactreal/rational.hpp"
#include "exactreal/real.hpp"

namespace oracles {

using exactreal::Integer;
using exactreal::Rational;

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

// Classical base-10 long square root: floor(sqrt(x)) one digit at a time.
inline Integer isqrt_digitwise(const Integer& x) {
  if (x < 0) throw std::domain_error("isqrt of a negative");
  if (x == 0) return 0;
  std::string s = x.get_str();
  if (s.size() % 2 == 1) s.insert(s.begin(), '0');
  Integer root = 0, rem = 0;
  for (std::size_t i = 0; i < s.size(); i += 2) {
    rem = rem * 100 + (s[i] - '0') * 10 + (s[i + 1] - '0');
    int d = 9;
    while (d > 0 && (root * 20 + d) * d > rem) --d;
    rem -= (root * 20 + d) * d;
    root = root * 10 + d;
  }
  if (!(root * root <= x && x < (root + 1) * (root + 1)))
    throw std::logic_error("isqrt_digitwise self-check failed");
  return root;
}

// floor(sqrt(v) * 10^digits) / 10^digits, exact.
inline Rational sqrt_oracle(long v, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return Rational(isqrt_digitwise(Integer(v) * scale * scale), scale);
}

// Partial sum of 1/k! with the tail certified below 10^-tail_pow.
inline Rational e_oracle(int tail_pow) {
  const Rational bound = Rational::pow10(-tail_pow);
  Rational sum = 1;
  Integer fact = 1;
  for (unsigned long k = 1;; ++k) {
    fact *= k;
    sum += Rational(Integer(1), fact);
    if (Rational(Integer(2), fact * static_cast<long>(k + 1)) <= bound) return sum;
  }
}

// Partial sum of 10^-k! for k = 0..terms.
inline Rational liouville_oracle(unsigned terms) {
  Rational sum = 0;
  Integer fact = 1;
  for (unsigned long k = 0; k <= terms; ++k) {
    if (k > 1) fact *= k;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, mpz_get_ui(fact.get_mpz_t()));
    sum += Rational(Integer(1), p);
  }
  return sum;
}

// Exact value of a printed decimal such as "-1.250".
inline Rational dec_value(const std::string& s) {
  auto v = Rational::parse(s);
  if (!v) throw std::invalid_argument("dec_value: not a decimal: " + s);
  return *v;
}

inline Rational rand_rational(Rng& rng) {
  const long num = rng.range(-100000, 100000);
  const long den = rng.range(1, 1000);
  return Rational(num, den);
}

// A random Real built from embed/neg/add/sub/mul over rationals, paired
// with its exact value so identities can be checked without tolerance.
struct Sample {
  exactreal::Real real;
  Rational exact;
};

inline Sample gen_sample(Rng& rng, unsigned depth) {
  if (depth == 0 || rng.below(3) == 0) {
    Rational q = rand_rational(rng);
    return {exactreal::embed(q), q};
  }
  Sample a = gen_sample(rng, depth - 1);
  switch (rng.below(4)) {
    case 0:
      return {exactreal::neg(a.real), -a.exact};
    case 1: {
      Sample b = gen_sample(rng, depth - 1);
      return {exactreal::add(a.real, b.real), a.exact + b.exact};
    }
    case 2: {
      Sample b = gen_sample(rng, depth - 1);
      return {exactreal::sub(a.real, b.real), a.exact - b.exact};
    }
    default: {
      Sample b = gen_sample(rng, depth - 1);
      return {exactreal::mul(a.real, b.real), a.exact * b.exact};
    }
  }
}

}  // namespace oracles
