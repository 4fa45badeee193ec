#include <doctest.h>

#include <algorithm>

#include "oracle.hpp"
#include "qseries/error.hpp"
#include "qseries/identities.hpp"
#include "qseries/kernels.hpp"
#include "qseries/qfun.hpp"

using namespace qseries;

namespace {

const Monomial kA = Monomial::var_a();
const Monomial kB = Monomial::var_b();
const Monomial kAB{Rat(1), 0, 1, 1};

Monomial q_pow(int e, const Rat& c = Rat(1)) { return Monomial::q_power(e, c); }

// Every coefficient of s with q <= qmax inside its window matches the oracle.
void check_tri(const Series& s, const oracle::T& want, int qmax) {
  const Window& w = s.window();
  REQUIRE(w.q.hi >= qmax);
  for (int q = w.q.lo; q <= qmax; ++q) {
    for (int a = w.a.lo; a <= w.a.hi; ++a) {
      for (int b = w.b.lo; b <= w.b.hi; ++b) {
        INFO("q^" << q << " a^" << a << " b^" << b);
        CHECK(s.coeff_at(q, a, b) == want.at(q, a, b));
      }
    }
  }
}

bool is_one(const Series& s) {
  return s.size() == 1 && s.terms().begin()->first == Exponent{0, 0, 0} && s.terms().begin()->second == 1;
}

}  // namespace

TEST_CASE("U_m special values") {
  const EvalContext ctx = EvalContext::symbolic(30, 10);
  CHECK(is_one(u_series(1, ctx)));
  const Series u2 = u_series(2, ctx);
  CHECK(u2.size() == 2);
  CHECK(u2.coeff_at(0, 0, 0) == 1);
  CHECK(u2.coeff_at(1, 0, 1) == 1);
  CHECK(equal_on_window(u_series(0, ctx), partial_theta(kB, ctx)));
  for (int m = 0; m <= 4; ++m) {
    INFO("m = " << m);
    CHECK(equal_on_window(u_series(m, ctx), u_series_generic(m, ctx)));
    CHECK(u_term_count(m) == m);
  }
}

TEST_CASE("V_{m,n} closed forms") {
  const int order = 20, cap = 6;
  const EvalContext ctx = EvalContext::symbolic(order, cap);
  for (int n = 0; n <= 5; ++n) {
    INFO("n = " << n);
    CHECK(is_one(v_series(0, n, ctx)));

    // (1 - ab q^{n-1}) V_{1,n} = 1 - ab q^{n-1} + b (1 - q^n)
    const oracle::T d1 = oracle::tbinomial(1, n - 1, 1, 1);
    const oracle::T d2 = oracle::tbinomial(1, n, 1, 1);
    oracle::T want1 = oracle::add(d1, oracle::add(oracle::term(1, 0, 0, 1), oracle::term(-1, n, 0, 1)));
    check_tri(v_series(1, n, ctx) * one_minus(kAB.times_q(n - 1), ctx), want1, order);

    // (1 - ab q^{n-1})(1 - ab q^n) V_{2,n}
    //   = (1 - ab q^{n-1})(1 - ab q^n) + b (1 + q)(1 - q^n)(1 - ab q^n) + b^2 q^2 (1 - q^{n-1})(1 - q^n)
    const int big = order + 10;
    oracle::T want2 = oracle::mul(d1, d2, big, cap);
    oracle::T mid = oracle::add(oracle::term(1, 0, 0, 1), oracle::term(1, 1, 0, 1));
    mid = oracle::mul(mid, oracle::tbinomial(1, n, 0, 0), big, cap);
    want2 = oracle::add(want2, oracle::mul(mid, d2, big, cap));
    oracle::T last = oracle::mul(oracle::tbinomial(1, n - 1, 0, 0), oracle::tbinomial(1, n, 0, 0), big, cap);
    want2 = oracle::add(want2, oracle::mul(oracle::term(1, 2, 0, 2), last, big, cap));
    const Series lhs2 = v_series(2, n, ctx) * one_minus(kAB.times_q(n - 1), ctx) * one_minus(kAB.times_q(n), ctx);
    check_tri(lhs2, want2, order);

    for (int m = 0; m <= 3; ++m) {
      CHECK(phi21_term_count(q_pow(-m), q_pow(-n), kAB.times_q(n - 1), kB.times_q(m + n), ctx) == std::min(m, n) + 1);
    }
  }
}

TEST_CASE("f(b, c)") {
  const EvalContext sym = EvalContext::symbolic(30, 10);
  CHECK(equal_on_window(f_series(kB, kB, sym), partial_theta(kB, sym)));

  const EvalContext spec = EvalContext::specialized(Rat(2), Rat(2, 3), 20);
  const Monomial c = Monomial::constant(Rat(3, 7));
  Series prod = constant(Rat(0), spec);
  for (int n = 0; n * n <= spec.work_order(); ++n) {
    Series t = eval_monomial(kB.pow(n).times_q(n * n), spec);
    prod = prod + divide_poch(divide_poch(t, q_pow(1), n, spec), c, n, spec);
  }
  prod = prod * poch_inf(kB, spec);
  CHECK(equal_on_window(f_series(kB, c, spec), prod));

  CHECK(is_one(f_series(Monomial(), c, spec)));
}

TEST_CASE("g_n") {
  const EvalContext spec = EvalContext::specialized(Rat(2), Rat(3), 10);
  const Monomial c = Monomial::constant(Rat(5));
  CHECK(is_one(g_series(0, c, spec)));
  // 1 + (1 - q^{-1})(1 - 1/2) / ((1 - q)(1 - 5)) * 6q = 7/4
  const Series g1 = g_series(1, c, spec);
  CHECK(g1.size() == 1);
  CHECK(g1.coeff_at(0, 0, 0) == Rat(7, 4));

  // Heine: g_2(a, b, bq) (bq; q)_2 = (abq; q)_2 V_{1,2}
  EvalContext sym = EvalContext::symbolic(20, 6);
  sym.laurent_floor = -2;
  const Series lhs = times_poch(g_series(2, kB.times_q(1), sym), kB.times_q(1), 2, sym);
  const Series rhs = times_poch(v_series(1, 2, sym), kAB.times_q(1), 2, sym);
  CHECK(equal_on_window(lhs, rhs));
}

TEST_CASE("L(a, b)") {
  EvalContext b0;
  b0.b = Binding::rational(Rat(0));
  b0.degree_cap = 10;
  CHECK(equal_on_window(l_series(b0), partial_theta(kA, b0)));

  const EvalContext sym = EvalContext::symbolic(30, 8);
  const Series l = l_series(sym);
  for (int i = 0; i <= 8; ++i) {
    for (int j = 0; i + j <= 8; ++j) {
      const int k = i + j;
      for (int q = 0; q <= 30; ++q) {
        INFO("a^" << i << " b^" << j << " q^" << q);
        CHECK(l.coeff_at(q, i, j) == (q == k * (k - 1) / 2 ? (k % 2 == 0 ? 1 : -1) : 0));
      }
    }
  }

  const EvalContext ab = EvalContext::specialized(Rat(2, 3), Rat(3, 7), 20);
  const EvalContext ba = EvalContext::specialized(Rat(3, 7), Rat(2, 3), 20);
  CHECK(equal_on_window(l_series(ab), l_series(ba)));
}

TEST_CASE("P(a, b)") {
  EvalContext b0 = EvalContext::specialized(Rat(5, 4), Rat(0), 20);
  CHECK(equal_on_window(p_series(b0), partial_theta(kA, b0)));

  const EvalContext ab = EvalContext::specialized(Rat(2, 3), Rat(3, 7), 20);
  const EvalContext ba = EvalContext::specialized(Rat(3, 7), Rat(2, 3), 20);
  CHECK(equal_on_window(p_series(ab), p_series(ba)));

  // psi(q) = (1 + q) P(q^2, -q^2) = (q^4; q^4)_inf (-q; q^2)_inf
  const int n = 40;
  EvalContext ctx;
  ctx.order = n;
  const Series lhs = p_series(q_pow(2), q_pow(2, Rat(-1)), ctx) * (constant(Rat(1), ctx) + eval_monomial(q_pow(1), ctx));
  const oracle::Q want = oracle::mul(oracle::poch_inf(1, 4, 4, n), oracle::poch_inf(-1, 1, 2, n), n);
  REQUIRE(lhs.window().q.hi >= n);
  for (int e = 0; e <= n; ++e) CHECK(lhs.coeff_at(e, 0, 0) == want.at(e));
}

TEST_CASE("t(a, b; n) and the contiguous relation") {
  const EvalContext ctx = EvalContext::specialized(Rat(2, 3), Rat(3, 5), 20);
  CHECK(is_one(t_summand(0, ctx)));

  Series sum = constant(Rat(0), ctx);
  for (int n = 0; n <= ctx.work_order() + 2; ++n) sum = sum + t_summand(n, ctx);
  sum = times_poch_inf(times_poch_inf(times_poch_inf(sum, q_pow(1), ctx), kA, ctx), kB, ctx);
  CHECK(equal_on_window(sum, l_series(ctx)));

  const Series den = one_minus(kA, ctx) * one_minus(kA.times_q(1), ctx) * one_minus(kB, ctx) * one_minus(kB.times_q(1), ctx);
  for (int n = 0; n <= 2; ++n) {
    const Series shifted = t_summand(kA.times_q(2), kB.times_q(2), n, ctx);
    const Series first = divide(eval_monomial(kAB.times_q(1), ctx), den);
    Series second = eval_monomial(q_pow(2), ctx) - eval_monomial(kAB.times_q(1), ctx);
    second = second * one_minus(kAB.times_q(2 * n + 2), ctx);
    second = divide(second, den * one_minus(q_pow(n + 1), ctx) * one_minus(q_pow(n + 2), ctx));
    INFO("n = " << n);
    CHECK(equal_on_window(t_summand(n + 2, ctx), (first + second) * shifted));
  }
}

TEST_CASE("product expansions with an extra parameter at random points") {
  const Registry& reg = Registry::standard();
  EvalContext settings;
  settings.order = 20;
  for (const char* name : {"f_theta_product", "corollary_main", "corollary_main_added", "transform_known"}) {
    const auto& d = reg.find(name);
    for (int i = 0; i < 3; ++i) {
      INFO(name << " point " << i);
      CHECK(verify(d, {{}, sample_point(d, 99, i)}, settings).verdict == Verdict::Pass);
    }
  }
}
