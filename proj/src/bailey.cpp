#include "qseries/bailey.hpp"

#include "qseries/error.hpp"
#include "qseries/kernels.hpp"

namespace qseries {

namespace {

const Monomial kQ = Monomial::q_power(1);
const Monomial kAB{Rat(1), 0, 1, 1};

Series one(const EvalContext& ctx) { return constant(Rat(1), ctx); }

}  // namespace

const Series& SeriesSequence::at(int n) const {
  if (n < 0 || n > bound_) {
    throw Error(ErrorKind::InvalidArgument,
                "sequence index " + std::to_string(n) + " outside 0.." + std::to_string(bound_));
  }
  while (static_cast<int>(cache_.size()) <= n) cache_.push_back(gen_(static_cast<int>(cache_.size())));
  return cache_[static_cast<std::size_t>(n)];
}

BaileyPair unit_pair(const EvalContext& ctx, int bound) {
  auto alpha = [ctx](int n) {
    if (n == 0) return one(ctx);
    // (ab/q; q)_n / (1 - ab/q) = (ab; q)_{n-1}
    Series s = poch_finite(kAB, n - 1, ctx);
    s = times_one_minus(s, kAB.times_q(2 * n - 1), ctx);
    s = times_monomial(s, Monomial::q_power(n * (n - 1) / 2, n % 2 == 0 ? Rat(1) : Rat(-1)), ctx);
    return divide_poch(s, kQ, n, ctx);
  };
  auto beta = [ctx](int n) { return constant(Rat(n == 0 ? 1 : 0), ctx); };
  return {"unit", kAB.times_q(-1), SeriesSequence(alpha, bound), SeriesSequence(beta, bound),
          GrowthBound::quadratic(1, -1), 0};
}

BaileyPair t0_pair_one(const Monomial& x, const EvalContext& ctx, int bound) {
  auto alpha = [x, ctx](int n) {
    Series s = times_monomial(one(ctx), (-x).pow(n).times_q(n * (n - 1) / 2), ctx);
    return divide_poch(s, kQ, n, ctx);
  };
  auto beta = [x, ctx](int n) { return divide_poch(poch_finite(x, n, ctx), kQ, n, ctx); };
  const Monomial rx = resolve(x, ctx);
  return {"t0_one", Monomial{}, SeriesSequence(alpha, bound), SeriesSequence(beta, bound),
          GrowthBound::quadratic(1, 2 * rx.e_q() - 1), poch_valuation_floor(rx)};
}

BaileyPair t0_pair_two(const Monomial& x, const EvalContext& ctx, int bound) {
  auto alpha = [x, ctx](int n) {
    Series s = times_monomial(one(ctx), x.pow(n).times_q(n * n), ctx);
    s = divide_poch(s, kQ, n, ctx);
    return divide_poch(s, x.times_q(1), n, ctx);
  };
  auto beta = [x, ctx](int n) { return divide_poch(divide_poch(one(ctx), kQ, n, ctx), x.times_q(1), n, ctx); };
  const Monomial rx = resolve(x, ctx);
  return {"t0_two", Monomial{}, SeriesSequence(alpha, bound), SeriesSequence(beta, bound),
          GrowthBound::quadratic(2, 2 * rx.e_q()), 0};
}

Series beta_entry(const BaileyPair& pair, int n, const EvalContext& ctx) {
  Series acc = constant(Rat(0), ctx);
  for (int k = 0; k <= n; ++k) {
    Series s = divide_poch(pair.alpha.at(k), kQ, n - k, ctx);
    acc = clip(acc + divide_poch(s, pair.t.times_q(1), n + k, ctx), ctx);
  }
  return acc;
}

BaileyPair beta_from_alpha(const BaileyPair& pair, int n_max, const EvalContext& ctx) {
  BaileyPair out = pair;
  std::vector<Series> values;
  for (int n = 0; n <= n_max; ++n) values.push_back(beta_entry(pair, n, ctx));
  out.beta = SeriesSequence([values](int n) { return values[static_cast<std::size_t>(n)]; }, n_max);
  for (int n = 0; n <= n_max; ++n) out.beta->at(n);
  return out;
}

std::pair<Series, Series> warnaar_l_transform_sides(const BaileyPair& pair, const EvalContext& ctx) {
  if (!(resolve(pair.t, ctx) == resolve(kAB.times_q(-1), ctx))) {
    throw Error(ErrorKind::InvalidArgument, "pair '" + pair.name + "' is not relative to ab/q at this point");
  }
  if (!pair.beta) throw Error(ErrorKind::InvalidArgument, "pair '" + pair.name + "' has no beta");
  const Monomial a = Monomial::var_a();
  const Monomial b = Monomial::var_b();

  GrowthBound lhs_bound = pair.alpha_bound;
  lhs_bound.lin2 += 2;
  Series lhs = certified_sum(ctx, lhs_bound, [&](int n) {
                 const Series& alpha = pair.alpha.at(n);
                 if (alpha.is_zero()) return alpha;
                 Series l = l_series(a.times_q(n + 1), b.times_q(n + 1), ctx);
                 return times_monomial(clip(l * alpha, ctx), Monomial::q_power(n), ctx);
               }).value;

  Series rhs = tail_weighted_sum({a.times_q(1), b.times_q(1)}, GrowthBound::linear(1, pair.beta_floor),
                                 [&](int n, const Series& tail) {
                                   const Series& beta = pair.beta->at(n);
                                   if (beta.is_zero()) return Series(tail.window());
                                   Series t = times_poch(tail, kAB, 2 * n, ctx);
                                   t = times_monomial(t, Monomial::q_power(n), ctx);
                                   return clip(t * beta, ctx);
                                 },
                                 ctx);
  rhs = times_poch_inf(rhs, kQ, ctx);
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace qseries
