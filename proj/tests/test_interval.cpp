#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "exactreal/errors.hpp"
#include "exactreal/interval.hpp"

using namespace exactreal;

namespace {
Interval iv(long cn, long cd, long rn, long rd) {
  return Interval(Rational(cn, cd), Rational(rn, rd));
}
}  // namespace

TEST_CASE("interval construction") {
  Interval i(Rational(1, 2), Rational(1, 4));
  CHECK(i.lo() == Rational(1, 4));
  CHECK(i.hi() == Rational(3, 4));
  CHECK(i.length() == Rational(1, 2));
  CHECK_THROWS_AS(Interval(Rational(1), Rational(0)), std::domain_error);
  CHECK_THROWS_AS(Interval(Rational(1), Rational(-1)), std::domain_error);

  Interval f = Interval::from_endpoints(Rational(1), Rational(4));
  CHECK(f.center() == Rational(5, 2));
  CHECK(f.radius() == Rational(3, 2));
  CHECK_THROWS_AS(Interval::from_endpoints(Rational(2), Rational(2)), std::domain_error);
}

TEST_CASE("contains is strict at the endpoints") {
  Interval i(Rational(0), Rational(1));
  CHECK(i.contains(Rational(0)));
  CHECK(i.contains(Rational(99, 100)));
  CHECK(!i.contains(Rational(1)));
  CHECK(!i.contains(Rational(-1)));
}

TEST_CASE("sum adds centers and radii") {
  Interval s = iv_sum(iv(1, 2, 1, 4), iv(1, 3, 1, 6));
  CHECK(s.center() == Rational(5, 6));
  CHECK(s.radius() == Rational(5, 12));
}

TEST_CASE("negation mirrors the center") {
  Interval n = iv_neg(iv(2, 3, 1, 5));
  CHECK(n.center() == Rational(-2, 3));
  CHECK(n.radius() == Rational(1, 5));
}

TEST_CASE("product takes the exact endpoint hull") {
  Interval p = iv_mul(iv(3, 1, 1, 1), iv(5, 1, 1, 1));
  CHECK(p.lo() == Rational(8));
  CHECK(p.hi() == Rational(24));

  Interval q = iv_mul(iv(-3, 1, 1, 1), iv(5, 1, 1, 1));
  CHECK(q.lo() == Rational(-24));
  CHECK(q.hi() == Rational(-8));

  Interval z = iv_mul(Interval(Rational(0), Rational(2)), Interval(Rational(0), Rational(3)));
  CHECK(z.lo() == Rational(-6));
  CHECK(z.hi() == Rational(6));

  // straddling zero on both sides: hull of {4, -2, -12, 6}
  Interval m = iv_mul(Interval(Rational(1), Rational(2)), Interval(Rational(-1), Rational(3)));
  CHECK(m.lo() == Rational(-12));
  CHECK(m.hi() == Rational(6));
}

TEST_CASE("reciprocal needs zero outside the closure") {
  Interval r = iv_recip(iv(3, 1, 1, 1));
  CHECK(r.lo() == Rational(1, 4));
  CHECK(r.hi() == Rational(1, 2));
  CHECK(r.length() == Rational(2, 8));  // 2 eps / (q^2 - eps^2) with q = 3, eps = 1

  Interval n = iv_recip(iv(-3, 1, 1, 1));
  CHECK(n.lo() == Rational(-1, 2));
  CHECK(n.hi() == Rational(-1, 4));

  CHECK_THROWS_AS(iv_recip(Interval(Rational(0), Rational(1))), ContainsZero);
  CHECK_THROWS_AS(iv_recip(Interval(Rational(1), Rational(1))), ContainsZero);
  CHECK_THROWS_AS(iv_recip(Interval(Rational(1), Rational(2))), ContainsZero);
}

TEST_CASE("enlargement composes additively") {
  Interval base(Rational(1, 3), Rational(1, 2));
  Interval once = iv_enlarge(base, Rational(1, 4));
  CHECK(once.center() == base.center());
  CHECK(once.radius() == Rational(3, 4));

  // roundification identity: q_eps = (q_{eps/2})_{eps/2}
  Interval whole = iv_enlarge(Interval(Rational(7), Rational(1, 8)), Rational(1, 8));
  Interval halves =
      iv_enlarge(iv_enlarge(Interval(Rational(7), Rational(1, 8)), Rational(1, 16)), Rational(1, 16));
  CHECK(whole.center() == halves.center());
  CHECK(whole.radius() == halves.radius());

  CHECK_THROWS_AS(iv_enlarge(base, Rational(0)), NonPositiveEnlargement);
  CHECK_THROWS_AS(iv_enlarge(base, Rational(-1)), NonPositiveEnlargement);
}

TEST_CASE("order predicates") {
  Interval a(Rational(0), Rational(1));
  Interval b(Rational(3), Rational(1));
  Interval touching(Rational(2), Rational(1));

  CHECK(iv_lt_forall(a, b));
  CHECK(!iv_lt_forall(b, a));
  CHECK(iv_lt_forall(a, touching));  // sup a = inf = 1, the <= reading
  CHECK(!iv_lt_forall(touching, a));

  CHECK(iv_le_exists(a, b));
  CHECK(iv_le_exists(a, a));
  CHECK(!iv_le_exists(b, a));
  CHECK(iv_le_exists(a, touching));
}

TEST_CASE("intersection is strict for touching opens") {
  Interval a(Rational(0), Rational(1));
  Interval touching(Rational(2), Rational(1));
  Interval overlapping(Rational(3, 2), Rational(1));

  CHECK(!iv_intersects(a, touching));
  CHECK(iv_intersects(a, overlapping));
  CHECK(iv_intersects(a, a));

  Interval cut = iv_intersection(Interval(Rational(0), Rational(2)), Interval(Rational(1), Rational(2)));
  CHECK(cut.lo() == Rational(-1));
  CHECK(cut.hi() == Rational(2));
  CHECK_THROWS_AS(iv_intersection(a, touching), std::domain_error);
}

TEST_CASE("containment and margins") {
  Interval outer(Rational(0), Rational(2));
  Interval inner(Rational(1, 2), Rational(1));

  CHECK(iv_subset(inner, outer));
  CHECK(iv_subset(outer, outer));
  CHECK(!iv_subset(outer, inner));
  CHECK(iv_deep_subset(inner, outer));
  CHECK(!iv_deep_subset(outer, outer));
  CHECK(iv_deep_margin(inner, outer) == Rational(1, 2));
  CHECK_THROWS_AS(iv_deep_margin(outer, outer), std::domain_error);

  // flush against one end: subset but not deep
  Interval flush = Interval::from_endpoints(Rational(-2), Rational(0));
  CHECK(iv_subset(flush, outer));
  CHECK(!iv_deep_subset(flush, outer));
}

TEST_CASE("fifths partition with deeply contained middles") {
  auto f = iv_fifths(Interval(Rational(0), Rational(1)));
  CHECK(f[0].center() == Rational(-4, 5));
  CHECK(f[1].center() == Rational(-2, 5));
  CHECK(f[2].center() == Rational(0));
  CHECK(f[3].center() == Rational(2, 5));
  CHECK(f[4].center() == Rational(4, 5));
  for (const Interval& piece : f) CHECK(piece.radius() == Rational(1, 5));

  Interval parent(Rational(-3, 7), Rational(5, 11));
  auto g = iv_fifths(parent);
  CHECK(g[0].lo() == parent.lo());
  CHECK(g[4].hi() == parent.hi());
  for (int k = 0; k < 4; ++k) CHECK(g[k].hi() == g[k + 1].lo());
  for (int k = 1; k <= 3; ++k) {
    CHECK(iv_deep_subset(g[k], parent));
    CHECK(iv_deep_margin(g[k], parent) >= parent.radius() * Rational(2, 5));
  }
}
