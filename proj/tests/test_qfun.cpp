#include <doctest.h>

#include "gen.hpp"
#include "oracle.hpp"
#include "props.hpp"
#include "qseries/error.hpp"
#include "qseries/identities.hpp"
#include "qseries/qfun.hpp"

using namespace qseries;

namespace {

const Monomial kA = Monomial::var_a();

Monomial q_pow(int e, const Rat& c = Rat(1)) { return Monomial::q_power(e, c); }

// Compares a series free of a, b with an oracle through q^n.
void check_against(const Series& s, const oracle::Q& want, int lo, int n) {
  REQUIRE(s.window().q.hi >= n);
  for (int e = lo; e <= n; ++e) {
    INFO("q^" << e);
    CHECK(s.coeff_at(e, 0, 0) == want.at(e));
  }
}

}  // namespace

TEST_CASE("tau") {
  const EvalContext ctx;
  CHECK(tau(0, ctx).coeff_at(0, 0, 0) == 1);
  CHECK(tau(3, ctx).coeff_at(3, 0, 0) == -1);
  CHECK(tau(-2, ctx).coeff_at(3, 0, 0) == 1);
  CHECK(tau(-2, ctx).size() == 1);
}

TEST_CASE("poch_finite") {
  const EvalContext ctx = EvalContext::symbolic(10, 4);
  const Series s = poch_finite(q_pow(1), 1, ctx);
  CHECK(s.size() == 2);
  CHECK(s.coeff_at(1, 0, 0) == -1);
  CHECK(poch_finite(q_pow(-2), 3, ctx).is_zero());

  const Series pa = poch_finite(kA, 2, ctx);
  CHECK(pa.size() == 4);
  CHECK(pa.coeff_at(0, 0, 0) == 1);
  CHECK(pa.coeff_at(0, 1, 0) == -1);
  CHECK(pa.coeff_at(1, 1, 0) == -1);
  CHECK(pa.coeff_at(1, 2, 0) == 1);

  // negative index: (x; q)_{-1} = 1 / (1 - x/q)
  const EvalContext spec = EvalContext::specialized(Rat(2), Rat(3), 10);
  const Series neg = poch_finite(q_pow(2), -1, spec);
  check_against(neg, oracle::geometric(1, 1, 10), 0, 10);
  CHECK_THROWS_AS(poch_finite(q_pow(1), -1, spec), Error);
}

TEST_CASE("poch_inf against factor multiplication and the pentagonal numbers") {
  EvalContext ctx;
  ctx.order = 60;
  const Series p = poch_inf(q_pow(1), ctx);
  check_against(p, oracle::poch_inf(1, 1, 1, 60), 0, 60);
  check_against(p, oracle::pentagonal(60), 0, 60);

  const Series sample = poch_inf(q_pow(1), ctx.with_order(7));
  for (auto [e, c] : std::initializer_list<std::pair<int, int>>{{0, 1}, {1, -1}, {2, -1}, {5, 1}, {7, 1}}) {
    CHECK(sample.coeff_at(e, 0, 0) == c);
  }

  // base q^3 with a rational coefficient
  const EvalContext spec = EvalContext::specialized(Rat(2), Rat(3), 40);
  check_against(poch_inf(q_pow(2, Rat(-5, 3)), spec, BaseExp(3)), oracle::poch_inf(Rat(-5, 3), 2, 3, 40), 0, 40);

  EvalContext sym = EvalContext::symbolic(2, 2, 0);
  const Series pa = poch_inf(kA, sym);
  oracle::T want = oracle::tone();
  for (int k = 0; k <= 2; ++k) want = oracle::mul(want, oracle::tbinomial(1, k, 1, 0), 2, 2);
  for (int q = 0; q <= 2; ++q) {
    for (int a = 0; a <= 2; ++a) CHECK(pa.coeff_at(q, a, 0) == want.at(q, a, 0));
  }

  const Series zero = poch_inf(Monomial(), ctx);
  CHECK(zero.size() == 1);
  CHECK(zero.coeff_at(0, 0, 0) == 1);
}

TEST_CASE("partial_theta") {
  const Series th = partial_theta(kA, EvalContext::symbolic(12, 6));
  CHECK(th.size() == 7);
  CHECK(th.coeff_at(0, 0, 0) == 1);
  CHECK(th.coeff_at(0, 1, 0) == -1);
  CHECK(th.coeff_at(1, 2, 0) == 1);
  CHECK(th.coeff_at(3, 3, 0) == -1);
  CHECK(th.coeff_at(6, 4, 0) == 1);

  EvalContext ctx;
  ctx.order = 100;
  const Series p = psi(ctx);
  for (int e = 0; e <= 100; ++e) CHECK(p.coeff_at(e, 0, 0) == (oracle::is_triangular(e) ? 1 : 0));

  const Series z = partial_theta(Monomial(), ctx);
  CHECK(z.size() == 1);
}

TEST_CASE("complete theta and the triple product") {
  const EvalContext ctx = EvalContext::specialized(Rat(2), Rat(3), 10);
  CHECK(complete_theta(q_pow(1), ctx).is_zero());
  CHECK(triple_product_rhs(q_pow(1), ctx).is_zero());

  const Monomial x = Monomial::constant(Rat(3, 5));
  CHECK(equal_on_window(complete_theta(x, ctx), triple_product_rhs(x, ctx)));

  // x = -1: direct summation on both sides
  const int n = 10;
  oracle::Q lhs;
  for (int k = -20; k <= 20; ++k) {
    const int e = k * (k - 1) / 2;
    if (e <= n) lhs.c[e] += 1;
  }
  oracle::Q rhs = oracle::mul(oracle::poch_inf(1, 1, 1, n), oracle::poch_inf(-1, 0, 1, n), n);
  rhs = oracle::mul(rhs, oracle::poch_inf(-1, 1, 1, n), n);
  check_against(complete_theta(Monomial::constant(Rat(-1)), ctx), lhs, 0, n);
  check_against(triple_product_rhs(Monomial::constant(Rat(-1)), ctx), rhs, 0, n);

  CHECK_THROWS_AS(complete_theta(Monomial(), ctx), Error);
  CHECK_THROWS_AS(complete_theta(kA, EvalContext::symbolic()), Error);
}

TEST_CASE("partial theta plus the negative tail is the complete theta") {
  gen::Gen g(5);
  for (int i = 0; i < 20; ++i) {
    EvalContext ctx;
    ctx.order = 25;
    const Monomial x = Monomial::constant(g.rat());
    Series tail = constant(Rat(0), ctx);
    for (int k = 1; k * (k + 1) / 2 <= ctx.work_order(); ++k) {
      tail = tail + tau(-k, ctx) * eval_monomial(x.pow(-k), ctx);
    }
    CHECK(equal_on_window(partial_theta(x, ctx) + tail, complete_theta(x, ctx)));
  }
}

TEST_CASE("phi21") {
  const EvalContext ctx = EvalContext::symbolic(15, 5);
  const Series one = phi21(q_pow(0), Monomial::constant(Rat(7)), Monomial::constant(Rat(3)), q_pow(1), ctx);
  CHECK(one.size() == 1);
  CHECK(one.coeff_at(0, 0, 0) == 1);
  CHECK(phi21_term_count(q_pow(-3), kA, Monomial::constant(Rat(3)), q_pow(1), ctx) == 4);

  // V_{1,2}: (1 - ab q) phi = 1 - ab q + b (1 - q^2)
  const Monomial ab{Rat(1), 0, 1, 1};
  const Series v = phi21(q_pow(-1), q_pow(-2), ab.times_q(1), Monomial::var_b().times_q(3), ctx);
  const Series lhs = v * one_minus(ab.times_q(1), ctx);
  oracle::T want = oracle::add(oracle::tbinomial(1, 1, 1, 1), oracle::term(1, 0, 0, 1));
  want = oracle::add(want, oracle::term(-1, 2, 0, 1));
  for (int q = 0; q <= 15; ++q) {
    for (int a = 0; a <= 5; ++a) {
      for (int b = 0; b <= 5; ++b) CHECK(lhs.coeff_at(q, a, b) == want.at(q, a, b));
    }
  }

  CHECK_THROWS_AS(phi21(kA, kA, q_pow(1, Rat(2)), q_pow(0), ctx), Error);
}

TEST_CASE("phi21: Gauss sum for psi(q)") {
  // 2phi1(-q, -q^2; q^4; q^2, q) = (-q^3, -q^2; q^2)_inf / (q^4, q; q^2)_inf
  const int n = 30;
  const EvalContext ctx = EvalContext::specialized(Rat(2), Rat(3), n);
  const Series s =
      phi21(q_pow(1, Rat(-1)), q_pow(2, Rat(-1)), q_pow(4), q_pow(1), ctx, BaseExp(2));

  oracle::Q brute;
  oracle::Q ratio = oracle::one();
  for (int k = 0; k <= n; ++k) {
    oracle::Q shifted;
    for (const auto& [e, c] : ratio.c) {
      if (e + k <= n) shifted.c[e + k] = c;
    }
    for (const auto& [e, c] : shifted.c) brute.c[e] += c;
    ratio = oracle::mul(ratio, oracle::binomial(-1, 1 + 2 * k), n);
    ratio = oracle::mul(ratio, oracle::binomial(-1, 2 + 2 * k), n);
    ratio = oracle::mul(ratio, oracle::geometric(1, 4 + 2 * k, n), n);
    ratio = oracle::mul(ratio, oracle::geometric(1, 2 + 2 * k, n), n);
  }
  oracle::Q prod = oracle::mul(oracle::poch_inf(-1, 3, 2, n), oracle::poch_inf(-1, 2, 2, n), n);
  for (int k = 0; 4 + 2 * k <= n; ++k) prod = oracle::mul(prod, oracle::geometric(1, 4 + 2 * k, n), n);
  for (int k = 0; 1 + 2 * k <= n; ++k) prod = oracle::mul(prod, oracle::geometric(1, 1 + 2 * k, n), n);

  for (int e = 0; e <= n; ++e) CHECK(brute.at(e) == prod.at(e));
  check_against(s, prod, 0, n);
}

TEST_CASE("rewriting rule for (x; q)_{n-i}") {
  gen::Gen g(21);
  const EvalContext ctx = EvalContext::specialized(Rat(2), Rat(3), 20);
  for (int trial = 0; trial < 10; ++trial) {
    const Rat xv = g.generic();
    const Monomial x = Monomial::constant(xv);
    for (int n = 0; n <= 6; ++n) {
      for (int i = 0; i <= n; ++i) {
        const Series lhs = poch_finite(x, n - i, ctx);
        Series rhs = divide_poch(poch_finite(x, n, ctx), q_pow(1 - n) / x, i, ctx);
        rhs = times_monomial(rhs, q_pow(i - n * i, Rat(i % 2 == 0 ? 1 : -1)) * x.pow(-i), ctx);
        rhs = times_monomial(rhs, q_pow(i * (i - 1) / 2), ctx);
        INFO("x = " << xv.get_str() << ", n = " << n << ", i = " << i);
        CHECK(equal_on_window(lhs, rhs));
      }
    }
  }
}

TEST_CASE("property: Pochhammer recurrence and splitting, 100 cases") {
  const auto r = props::pochhammer_laws(100, 13);
  INFO(r.first_failure);
  CHECK(r.cases == 100);
  CHECK(r.failures == 0);
}

TEST_CASE("theta expansion through the infinite products, symbolic") {
  const auto rep = verify(Registry::standard(), "theta_expansion", {}, EvalContext::symbolic(30, 10));
  CHECK(rep.verdict == Verdict::Pass);
}
