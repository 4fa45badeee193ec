#include <doctest.h>

#include "qseries/bailey.hpp"
#include "qseries/error.hpp"
#include "qseries/identities.hpp"
#include "qseries/qfun.hpp"

using namespace qseries;

namespace {

const Monomial kQ = Monomial::q_power(1);

std::vector<EvalContext> points(bool b_zero) {
  const Registry& reg = Registry::standard();
  const auto& d = reg.find(b_zero ? "bailey_transform_t0_1" : "bailey_transform_unit");
  std::vector<EvalContext> out;
  for (int i = 0; i < 3; ++i) {
    const Point p = sample_point(d, 3, i);
    out.push_back(EvalContext::specialized(p.a.value(), b_zero ? Rat(0) : p.b.value(), 20));
  }
  return out;
}

}  // namespace

TEST_CASE("sequence bounds and caching") {
  int calls = 0;
  SeriesSequence s([&](int n) { ++calls; return constant(Rat(n), EvalContext{}); }, 4);
  CHECK(s.at(3).coeff_at(0, 0, 0) == 3);
  CHECK(s.materialized() == 4);
  s.at(2);
  CHECK(calls == 4);
  CHECK_THROWS_AS(s.at(5), Error);
  CHECK_THROWS_AS(s.at(-1), Error);
}

TEST_CASE("unit pair: beta is the Kronecker delta") {
  for (const auto& ctx : points(false)) {
    const BaileyPair pair = unit_pair(ctx);
    for (int n = 0; n <= 6; ++n) {
      const Series beta = beta_entry(pair, n, ctx);
      CHECK(equal_on_window(beta, constant(Rat(n == 0 ? 1 : 0), ctx)));
    }
  }
  // formal a, b as well
  const EvalContext sym = EvalContext::symbolic(12, 6);
  const BaileyPair pair = unit_pair(sym);
  for (int n = 0; n <= 4; ++n) CHECK(equal_on_window(beta_entry(pair, n, sym), constant(Rat(n == 0 ? 1 : 0), sym)));
}

TEST_CASE("t = 0 pairs: derived beta matches the stated beta") {
  for (const auto& ctx : points(true)) {
    for (const Rat& xv : {Rat(3, 4), Rat(-5, 2)}) {
      const Monomial x = Monomial::constant(xv);
      for (const BaileyPair& pair : {t0_pair_one(x, ctx), t0_pair_two(x, ctx)}) {
        const BaileyPair derived = beta_from_alpha(pair, 6, ctx);
        for (int n = 0; n <= 6; ++n) {
          INFO(pair.name << " n = " << n);
          CHECK(equal_on_window(derived.beta->at(n), pair.beta->at(n)));
        }
      }
    }
  }
}

TEST_CASE("L-transform: both sides agree for every pair") {
  for (const auto& ctx : points(false)) {
    const auto [lhs, rhs] = warnaar_l_transform_sides(unit_pair(ctx), ctx);
    CHECK(equal_on_window(lhs, rhs));
    // the unit pair collapses the right side to (q, aq, bq; q)_inf
    const Monomial a = Monomial::var_a(), b = Monomial::var_b();
    const Series prod = poch_inf(kQ, ctx) * poch_inf(a.times_q(1), ctx) * poch_inf(b.times_q(1), ctx);
    CHECK(equal_on_window(rhs, prod));
  }
  for (const auto& ctx : points(true)) {
    const Monomial x = Monomial::constant(Rat(2, 5));
    for (const BaileyPair& pair : {t0_pair_one(x, ctx), t0_pair_two(x, ctx)}) {
      const auto [lhs, rhs] = warnaar_l_transform_sides(pair, ctx);
      INFO(pair.name);
      CHECK(equal_on_window(lhs, rhs));
      CHECK(lhs.window().q.hi >= 20);
    }
  }
}

TEST_CASE("L-transform rejects a pair relative to the wrong t") {
  const EvalContext ctx = EvalContext::specialized(Rat(2, 3), Rat(3, 7), 10);
  CHECK_THROWS_AS(warnaar_l_transform_sides(t0_pair_one(Monomial::constant(Rat(2)), ctx), ctx), Error);
}
