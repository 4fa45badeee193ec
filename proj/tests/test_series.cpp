#include <doctest.h>

#include "oracle.hpp"
#include "props.hpp"
#include "qseries/context.hpp"
#include "qseries/error.hpp"
#include "qseries/qfun.hpp"
#include "qseries/series.hpp"

using namespace qseries;

namespace {

Window qbox(int lo, int hi) { return {{lo, hi}, {0, 0}, {0, 0}}; }

Series q_poly(std::initializer_list<std::pair<int, int>> terms, const Window& w) {
  Series::Terms t;
  for (auto [e, c] : terms) t[{e, 0, 0}] = Rat(c);
  return Series(w, std::move(t));
}

void require_kind(ErrorKind kind, const std::function<void()>& f) {
  try {
    f();
    FAIL("no error raised");
  } catch (const Error& e) {
    CHECK(e.kind() == kind);
  }
}

}  // namespace

TEST_CASE("mul: small products and shifts") {
  const Window w = qbox(0, 6);
  const Series p = q_poly({{0, 1}, {1, 1}}, w) * q_poly({{0, 1}, {1, -1}}, w);
  CHECK(equal_on_window(p, q_poly({{0, 1}, {2, -1}}, w)));

  const Series inv_q = Series::monomial(Rat(1), {-1, 0, 0}, qbox(-1, 6));
  const Series s = inv_q * q_poly({{1, 1}, {2, 1}}, w);
  CHECK(s.coeff_at(0, 0, 0) == 1);
  CHECK(s.coeff_at(1, 0, 0) == 1);
  CHECK(s.size() == 2);
  CHECK(s.window().q.lo == -1);
  CHECK(s.window().q.hi == 5);
}

TEST_CASE("mul: (a; q)_4 at cap 2 against direct factor multiplication") {
  EvalContext ctx = EvalContext::symbolic(3, 2, 0);
  const Series got = poch_finite(Monomial::var_a(), 4, ctx);
  oracle::T want = oracle::tone();
  for (int k = 0; k < 4; ++k) want = oracle::mul(want, oracle::tbinomial(1, k, 1, 0), 3, 2);
  for (int q = 0; q <= 3; ++q) {
    for (int a = 0; a <= 2; ++a) CHECK(got.coeff_at(q, a, 0) == want.at(q, a, 0));
  }
  CHECK(got.coeff_at(3, 2, 0) == 2);
}

TEST_CASE("invert: geometric series and Laurent units") {
  const Series g = invert(q_poly({{0, 1}, {1, -1}}, qbox(0, 8)));
  for (int e = 0; e <= 8; ++e) CHECK(g.coeff_at(e, 0, 0) == 1);

  // -3 q^{-1} (1 - q/3)
  Series::Terms t;
  t[{-1, 0, 0}] = Rat(-3);
  t[{0, 0, 0}] = Rat(1);
  const Series s(qbox(-1, 8), t);
  const Series back = invert(s) * s;
  for (int e = back.window().q.lo; e <= back.window().q.hi; ++e) CHECK(back.coeff_at(e, 0, 0) == (e == 0 ? 1 : 0));

  EvalContext ctx = EvalContext::symbolic(6, 4, 0);
  const Series ia = invert(one_minus(Monomial::var_a(), ctx));
  for (int a = 0; a <= 4; ++a) CHECK(ia.coeff_at(0, a, 0) == 1);
  CHECK(ia.size() == 5);

  require_kind(ErrorKind::NotInvertible, [] { invert(Series(qbox(0, 4))); });
  require_kind(ErrorKind::NotInvertible, [&] { invert(eval_monomial(Monomial::var_a(), ctx)); });
}

TEST_CASE("eval_monomial folds bindings") {
  const Monomial ab_q{Rat(1), -1, 1, 1};
  const Series sym = eval_monomial(ab_q, EvalContext::symbolic());
  CHECK(sym.size() == 1);
  CHECK(sym.coeff_at(-1, 1, 1) == 1);

  const EvalContext spec = EvalContext::specialized(Rat(2, 3), Rat(3, 5));
  CHECK(eval_monomial(ab_q, spec).coeff_at(-1, 0, 0) == Rat(2, 5));
  CHECK(eval_monomial(Monomial(Rat(1), 1, -1, 0), spec).coeff_at(1, 0, 0) == Rat(3, 2));

  const EvalContext zero_a = EvalContext::specialized(Rat(0), Rat(1, 2));
  require_kind(ErrorKind::PoleAtZero, [&] { eval_monomial(Monomial(Rat(1), 1, -1, 0), zero_a); });
}

TEST_CASE("coeff_at") {
  CHECK(q_poly({{0, 1}, {1, -1}}, qbox(0, 3)).coeff_at(1, 0, 0) == -1);
  const Series th = partial_theta(Monomial::var_a(), EvalContext::symbolic(10, 5));
  CHECK(th.coeff_at(3, 3, 0) == -1);
  CHECK(th.coeff_at(2, 3, 0) == 0);
  require_kind(ErrorKind::OutOfWindow, [&] { th.coeff_at(0, 6, 0); });
  require_kind(ErrorKind::OutOfWindow, [&] { th.coeff_at(100, 0, 0); });
}

TEST_CASE("add keeps the lower floor and the lower ceiling") {
  const Series x = q_poly({{0, 1}}, qbox(0, 5));
  const Series y = q_poly({{-2, 1}}, qbox(-2, 9));
  const Series s = x + y;
  CHECK(s.window().q.lo == -2);
  CHECK(s.window().q.hi == 5);
  CHECK((x - x).is_zero());
  CHECK((x - x).window() == x.window());
}

TEST_CASE("property: ring axioms, 200 random cases") {
  const auto r = props::ring_axioms(200, 11);
  INFO(r.first_failure);
  CHECK(r.cases == 200);
  CHECK(r.failures == 0);
}

TEST_CASE("property: invert round trip, 100 random units") {
  const auto r = props::invert_round_trip(100, 12);
  INFO(r.first_failure);
  CHECK(r.cases == 100);
  CHECK(r.failures == 0);
}
