#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "exactreal/constructions.hpp"
#include "exactreal/expr.hpp"
#include "exactreal/sequences.hpp"

using namespace exactreal;

namespace {

struct Exit {
  int code;
};

void caret(const std::string& text, std::size_t begin, std::size_t width) {
  std::cerr << "  " << text << "\n  " << std::string(begin, ' ')
            << std::string(width == 0 ? 1 : width, '^') << "\n";
}

ExprPtr parse_or_fail(const std::string& text) {
  try {
    return parse_expression(text);
  } catch (const ParseError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    caret(text, ex.diagnostic.position, 1);
    throw Exit{1};
  }
}

[[noreturn]] void report_sign_unknown(const SignUnknown& ex, const std::string& text) {
  std::cerr << "error: " << ex.what() << "\n";
  if (ex.has_span && ex.span_begin < text.size())
    caret(text, ex.span_begin, ex.span_end - ex.span_begin);
  throw Exit{2};
}

Budget make_budget(const std::string& eps_text, std::uint64_t steps, const Rational& fallback) {
  std::optional<Rational> eps;
  if (!eps_text.empty()) {
    auto parsed = Rational::parse(eps_text);
    if (!parsed || parsed->sign() <= 0) {
      std::cerr << "error: --budget-eps wants a positive rational, got \"" << eps_text << "\"\n";
      throw Exit{1};
    }
    eps = *parsed;
  }
  if (eps && steps) return Budget::bounded(*eps, steps);
  if (steps) return Budget::by_steps(steps);
  return Budget::by_epsilon(eps ? *eps : fallback);
}

int run_eval(const std::string& text, int digits, const std::string& eps_text,
             std::uint64_t steps, bool json_out) {
  ExprPtr ast = parse_or_fail(text);
  Budget budget = make_budget(eps_text, steps, Rational::pow10(-(digits + 10)));
  try {
    EvalResult r = eval(ast, digits, budget);
    if (json_out) {
      nlohmann::ordered_json j;
      j["decimal"] = r.decimal;
      j["center"] = r.interval.center().str();
      j["radius"] = r.interval.radius().str();
      std::cout << j.dump() << "\n";
    } else {
      std::cout << r.decimal << "\n";
    }
  } catch (const SignUnknown& ex) {
    report_sign_unknown(ex, text);
  }
  return 0;
}

int run_compare(const std::string& left, const std::string& right, const std::string& eps_text,
                std::uint64_t steps) {
  ExprPtr la = parse_or_fail(left);
  ExprPtr ra = parse_or_fail(right);
  Budget budget = make_budget(eps_text, steps, Rational::pow10(-40));
  Real lv = embed(0), rv = embed(0);
  try {
    lv = realize(la, budget);
  } catch (const SignUnknown& ex) {
    report_sign_unknown(ex, left);
  }
  try {
    rv = realize(ra, budget);
  } catch (const SignUnknown& ex) {
    report_sign_unknown(ex, right);
  }
  Comparison c = compare(lv, rv, budget);
  switch (c.verdict) {
    case Order::Less:
      std::cout << "less\n";
      return 0;
    case Order::Greater:
      std::cout << "greater\n";
      return 0;
    case Order::Indeterminate:
      std::cout << "indeterminate gap<=" << c.gap_bound->str() << "\n";
      return 3;
  }
  return 0;
}

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

// Closed under evaluation without sign obligations: no division, no
// negative exponent, square roots of positive integers only.
ExprPtr gen_expr(SplitMix64& rng, unsigned depth) {
  if (depth == 0 || rng.below(4) == 0) {
    switch (rng.below(5)) {
      case 0:
        return make_const("e");
      case 1:
        return make_const("liouville");
      case 2:
        return make_unary(ExprKind::Sqrt,
                          make_literal(Rational(static_cast<long>(1 + rng.below(50)))));
      default: {
        const long num = static_cast<long>(rng.below(199)) - 99;
        const long den = static_cast<long>(1 + rng.below(9));
        return make_literal(Rational(num, den));
      }
    }
  }
  switch (rng.below(4)) {
    case 0:
      return make_unary(ExprKind::Neg, gen_expr(rng, depth - 1));
    case 1:
      return make_binary(ExprKind::Add, gen_expr(rng, depth - 1), gen_expr(rng, depth - 1));
    case 2:
      return make_binary(ExprKind::Sub, gen_expr(rng, depth - 1), gen_expr(rng, depth - 1));
    default:
      return make_binary(ExprKind::Mul, gen_expr(rng, depth - 1), gen_expr(rng, depth - 1));
  }
}

int run_diag(std::uint64_t count, std::uint64_t seed) {
  SplitMix64 rng(seed);
  auto exprs = std::make_shared<std::vector<ExprPtr>>();
  for (std::uint64_t i = 0; i < count; ++i)
    exprs->push_back(gen_expr(rng, 1 + static_cast<unsigned>(rng.below(3))));
  const Budget budget = Budget::by_epsilon(Rational::pow10(-30));
  RealSequence seq = [exprs, budget](std::uint64_t n) {
    return realize((*exprs)[(n - 1) % exprs->size()], budget);
  };
  Diagonalization diag(seq, Interval(Rational(0), Rational(1)));
  for (std::uint64_t n = 1; n <= count; ++n) std::cout << diag.certificate(n).json() << "\n";
  return 0;
}

int run_liouville(unsigned n) {
  std::cout << liouville_check(n).json() << "\n";
  return 0;
}

RealSequence make_sequence(const std::string& name) {
  if (name == "1/n")
    return [](std::uint64_t n) { return embed(Rational(1, static_cast<long>(n))); };
  if (name == "(-1)^n")
    return [](std::uint64_t n) { return embed(Rational(n % 2 == 0 ? 1 : -1)); };
  if (name == "factorial") {
    struct Sums {
      std::vector<Rational> partial{Rational(1)};
      Integer fact = 1;
    };
    auto st = std::make_shared<Sums>();
    return [st](std::uint64_t n) {
      while (st->partial.size() <= n) {
        st->fact *= static_cast<unsigned long>(st->partial.size());
        st->partial.push_back(st->partial.back() + Rational(Integer(1), st->fact));
      }
      return embed(st->partial[n]);
    };
  }
  std::cerr << "error: unknown sequence \"" << name
            << "\" (supported: \"1/n\", \"(-1)^n\", \"factorial\")\n";
  throw Exit{1};
}

int run_limit(const std::string& seq_name, const std::string& candidate, std::uint64_t horizon,
              const std::string& eps_text, std::uint64_t steps) {
  if (horizon == 0) {
    std::cerr << "error: --horizon must be at least 1\n";
    throw Exit{1};
  }
  RealSequence seq = make_sequence(seq_name);
  ExprPtr ast = parse_or_fail(candidate);
  Budget budget = make_budget(eps_text, steps, Rational(1, 64));
  Real target = embed(0);
  try {
    target = realize(ast, budget);
  } catch (const SignUnknown& ex) {
    report_sign_unknown(ex, candidate);
  }
  std::cout << check_convergence(seq, target, horizon, budget).json() << "\n";
  return 0;
}

int run_selftest() {
  int failures = 0;
  auto check = [&failures](bool ok, const char* name) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };

  {
    Interval s = iv_sum(Interval(Rational(1, 2), Rational(1, 4)),
                        Interval(Rational(1, 3), Rational(1, 6)));
    check(s.center() == Rational(5, 6) && s.radius() == Rational(5, 12), "interval sum");
  }
  {
    Interval p = iv_mul(Interval(Rational(3), Rational(1)), Interval(Rational(5), Rational(1)));
    check(p.lo() == Rational(8) && p.hi() == Rational(24), "interval product hull");
  }
  {
    Interval r = iv_recip(Interval(Rational(3), Rational(1)));
    check(r.lo() == Rational(1, 4) && r.hi() == Rational(1, 2), "interval reciprocal");
  }
  {
    Interval i = embed(Rational(1, 3)).approx(Rational(1, 100));
    check(i.radius() <= Rational(1, 100) && i.contains(Rational(1, 3)), "embedding window");
  }
  {
    Comparison c = compare(embed(1), embed(2), Budget::by_epsilon(Rational::pow10(-6)));
    check(c.verdict == Order::Less, "comparison resolves");
  }
  {
    Comparison c = compare(embed(1), embed(1), Budget::by_steps(12));
    check(c.verdict == Order::Indeterminate && c.gap_bound && *c.gap_bound == Rational(1, 512),
          "comparison stays honest on equality");
  }
  {
    const Budget b = Budget::by_epsilon(Rational::pow10(-13));
    check(to_decimal(div(embed(1), embed(3), b), 3, b) == "0.333", "long division digits");
  }
  {
    const Budget b = Budget::by_epsilon(Rational::pow10(-30));
    const std::string s = to_decimal(sqrt_pos(embed(2), b), 10, b);
    check(s == "1.4142135623" || s == "1.4142135624", "square root digits");
  }
  {
    const Budget b = Budget::by_epsilon(Rational::pow10(-30));
    const std::string s = to_decimal(e_const(), 10, b);
    check(s == "2.7182818284" || s == "2.7182818285", "e digits");
  }
  {
    const Budget b = Budget::by_epsilon(Rational::pow10(-30));
    check(to_decimal(liouville(), 7, b) == "0.2100010", "liouville digits");
  }
  {
    LiouvilleReport r = liouville_check(2);
    check(r.holds && r.q == 100, "liouville inequality at n = 2");
  }
  {
    Diagonalization d([](std::uint64_t) { return embed(0); },
                      Interval(Rational(0), Rational(1)));
    DiagCertificate c = d.certificate(1);
    check(c.trap.center() == Rational(-2, 5) && c.trap.radius() == Rational(1, 5) &&
              c.avoided.center() == Rational(0) && c.avoided.radius() == Rational(1, 10) &&
              !iv_intersects(c.trap, c.avoided),
          "first diagonal trap");
  }
  {
    bool ok = true;
    for (const char* text : {"1/3 + sqrt(2)", "(1 + 2) * 3", "-(2 * 3)^2", "1 / (3)", "2^10",
                             "sqrt(1/2) * e - liouville"}) {
      ExprPtr ast = parse_expression(text);
      ok = ok && same_ast(ast, parse_expression(unparse(ast)));
    }
    check(ok, "unparse round trip");
  }
  {
    check(archimedean_bound(embed(Rational(5, 2))) == 4 && archimedean_bound(embed(0)) == 2 &&
              archimedean_bound(embed(-10)) == -8,
          "archimedean bounds");
  }

  if (failures > 0) {
    std::cerr << "selftest: " << failures << " check(s) failed\n";
    return 1;
  }
  std::cout << "selftest: ok\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact real calculator: every value is a certified rational interval oracle"};
  app.require_subcommand(1);

  std::string eval_text;
  int eval_digits = 10;
  std::string eval_eps;
  std::uint64_t eval_steps = 0;
  bool eval_json = false;
  CLI::App* cmd_eval = app.add_subcommand("eval", "evaluate an expression to decimal digits");
  cmd_eval->add_option("expr", eval_text, "expression, e.g. \"1/3 + sqrt(2)\"")->required();
  cmd_eval->add_option("--digits", eval_digits, "fractional digits to print")
      ->check(CLI::Range(0, 100000));
  cmd_eval->add_option("--budget-eps", eval_eps, "refinement floor, a positive rational");
  cmd_eval->add_option("--budget-steps", eval_steps, "refinement step cap");
  cmd_eval->add_flag("--json", eval_json, "print {decimal, center, radius}");

  std::string cmp_left, cmp_right, cmp_eps;
  std::uint64_t cmp_steps = 0;
  CLI::App* cmd_compare = app.add_subcommand("compare", "order two expressions within a budget");
  cmd_compare->add_option("left", cmp_left, "left expression")->required();
  cmd_compare->add_option("right", cmp_right, "right expression")->required();
  cmd_compare->add_option("--budget-eps", cmp_eps, "refinement floor, a positive rational");
  cmd_compare->add_option("--budget-steps", cmp_steps, "refinement step cap");

  std::uint64_t diag_count = 5;
  std::uint64_t diag_seed = 1;
  CLI::App* cmd_diag =
      app.add_subcommand("diag", "diagonalize against generated expressions, print certificates");
  cmd_diag->add_option("--count", diag_count, "number of expressions and certificates")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{10000}));
  cmd_diag->add_option("--seed", diag_seed, "generator seed");

  unsigned liou_n = 1;
  CLI::App* cmd_liouville =
      app.add_subcommand("liouville", "check the irrationality-measure inequality");
  cmd_liouville->add_option("--check", liou_n, "term index n (1..4)")->required();

  std::string limit_seq, limit_candidate, limit_eps;
  std::uint64_t limit_horizon = 100;
  std::uint64_t limit_steps = 0;
  CLI::App* cmd_limit =
      app.add_subcommand("limit", "gather convergence evidence for a built-in sequence");
  cmd_limit->add_option("sequence", limit_seq, "one of: \"1/n\", \"(-1)^n\", \"factorial\"")
      ->required();
  cmd_limit->add_option("candidate", limit_candidate, "candidate limit expression")->required();
  cmd_limit->add_option("--horizon", limit_horizon, "last index scanned");
  cmd_limit->add_option("--budget-eps", limit_eps, "refinement floor, a positive rational");
  cmd_limit->add_option("--budget-steps", limit_steps, "refinement step cap");

  CLI::App* cmd_selftest = app.add_subcommand("selftest", "run the invariant checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 1;
  }

  try {
    if (cmd_eval->parsed())
      return run_eval(eval_text, eval_digits, eval_eps, eval_steps, eval_json);
    if (cmd_compare->parsed()) return run_compare(cmp_left, cmp_right, cmp_eps, cmp_steps);
    if (cmd_diag->parsed()) return run_diag(diag_count, diag_seed);
    if (cmd_liouville->parsed()) return run_liouville(liou_n);
    if (cmd_limit->parsed())
      return run_limit(limit_seq, limit_candidate, limit_horizon, limit_eps, limit_steps);
    if (cmd_selftest->parsed()) return run_selftest();
  } catch (const Exit& e) {
    return e.code;
  } catch (const InternalInvariant& ex) {
    std::cerr << "internal invariant violation: " << ex.what() << "\n";
    return 4;
  } catch (const SignUnknown& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const Error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
