#include <utility>

#include "qseries/bailey.hpp"
#include "qseries/error.hpp"
#include "qseries/identities.hpp"
#include "qseries/kernels.hpp"
#include "qseries/qfun.hpp"

namespace qseries {

namespace {

const Monomial kQ = Monomial::q_power(1);
const Monomial kA = Monomial::var_a();
const Monomial kB = Monomial::var_b();
const Monomial kAB = kA * kB;

Monomial q_pow(int e, const Rat& c = Rat(1)) { return Monomial::q_power(e, c); }
Monomial rat(const Rat& c) { return Monomial::constant(c); }
Rat sign(int n) { return n % 2 == 0 ? Rat(1) : Rat(-1); }

Series zero(const EvalContext& ctx) { return constant(Rat(0), ctx); }
Series one(const EvalContext& ctx) { return constant(Rat(1), ctx); }
Series mono(const Monomial& m, const EvalContext& ctx) { return eval_monomial(m, ctx); }
Series theta(const Monomial& x, const EvalContext& ctx) { return partial_theta(x, ctx); }
Series times(const Series& s, const Monomial& m, const EvalContext& ctx) { return times_monomial(s, m, ctx); }
Series prod(const Series& x, const Series& y, const EvalContext& ctx) { return clip(x * y, ctx); }
Series quot(const Series& x, const Series& y, const EvalContext& ctx) { return clip(divide(x, y), ctx); }

const Rat& extra(const Instance& in, const std::string& key) {
  auto it = in.point.extras.find(key);
  if (it == in.point.extras.end()) throw Error(ErrorKind::InvalidArgument, "missing parameter " + key);
  return it->second;
}

int int_param(const Instance& in, const std::string& key) {
  auto it = in.ints.find(key);
  if (it == in.ints.end()) throw Error(ErrorKind::InvalidArgument, "missing parameter " + key);
  return it->second;
}

const Rat& bound_value(const Binding& b, const char* name) {
  if (b.is_formal()) throw Error(ErrorKind::InvalidArgument, std::string(name) + " must be bound to a rational");
  return b.value();
}

// 1 / (a - b) at a specialized point.
Rat inverse_gap(const EvalContext& ctx) {
  return Rat(1) / (bound_value(ctx.a, "a") - bound_value(ctx.b, "b"));
}

// sum_n term(n) for monomial terms, cut off by `bound`.
Series monomial_sum(const EvalContext& ctx, const GrowthBound& bound, const std::function<Monomial(int)>& term) {
  return certified_sum(ctx, bound, [&](int n) { return mono(term(n), ctx); }).value;
}

std::optional<std::string> distinct_ab(const Point& p) {
  if (!p.a.is_formal() && !p.b.is_formal() && p.a.value() == p.b.value()) return "a = b";
  return std::nullopt;
}

std::optional<std::string> ab_not_one(const Point& p) {
  if (!p.a.is_formal() && !p.b.is_formal() && p.a.value() * p.b.value() == 1) return "ab = 1";
  return std::nullopt;
}

std::optional<std::string> no_pole(const Point&) { return std::nullopt; }

IdentityDescriptor entry(std::string name, std::string formula, Engine engine, bool uses_a, bool uses_b) {
  IdentityDescriptor d;
  d.name = std::move(name);
  d.formula = std::move(formula);
  d.engine = engine;
  d.uses_a = uses_a;
  d.uses_b = uses_b;
  d.pole = no_pole;
  return d;
}

// ---------------------------------------------------------------------------
// Ramanujan's entries

Series ramanujan_661_rhs(const EvalContext& ctx) {
  const Monomial q_a = kQ / kA;
  Series first = certified_sum(ctx, GrowthBound::linear(1), [&](int n) {
                   Series t = times(poch_finite(q_pow(n + 1), n, ctx), q_pow(n), ctx);
                   t = divide_poch(t, kA, n + 1, ctx);
                   return divide_poch(t, q_a, n, ctx);
                 }).value;
  Series second = certified_sum(ctx, GrowthBound::quadratic(6, 4), [&](int n) {
                    Series t = mono(kA.pow(3 * n + 1).times_q(n * (3 * n + 2)), ctx);
                    return times_one_minus(t, kA.times_q(2 * n + 1), ctx);
                  }).value;
  second = quot(quot(second, poch_inf(kA, ctx), ctx), poch_inf(q_a, ctx), ctx);
  return first - second;
}

Series ramanujan_639_rhs(const EvalContext& ctx) {
  const Monomial q_a = kQ / kA;
  const BaseExp q2(2);
  Series first = certified_sum(ctx, GrowthBound::linear(1), [&](int n) {
                   Series t = times(poch_finite(kQ, n, ctx, q2), q_pow(n), ctx);
                   t = divide_poch(t, kA, n + 1, ctx);
                   return divide_poch(t, q_a, n, ctx);
                 }).value;
  Series second = monomial_sum(ctx, GrowthBound::quadratic(2, 2),
                               [&](int n) { return kA.pow(2 * n + 1).times_q(n * (n + 1)) * rat(sign(n + 1)); });
  second = quot(second, poch_inf(q_pow(1, Rat(-1)), ctx), ctx);
  second = quot(quot(second, poch_inf(kA, ctx), ctx), poch_inf(q_a, ctx), ctx);
  return first + second;
}

Series ramanujan_6311_rhs(const EvalContext& ctx) {
  const Monomial q2_a = q_pow(2) / kA;
  const BaseExp q2(2);
  Series first = certified_sum(ctx, GrowthBound::linear(2), [&](int n) {
                   Series t = times(poch_finite(kQ, n, ctx, q2), q_pow(2 * n), ctx);
                   t = divide_poch(t, kA, n + 1, ctx, q2);
                   return divide_poch(t, q2_a, n, ctx, q2);
                 }).value;
  Series second = certified_sum(ctx, GrowthBound::quadratic(6, 4), [&](int n) {
                    Series t = mono(kA.pow(3 * n + 1).times_q(n * (3 * n + 2)) * rat(sign(n + 1)), ctx);
                    return times_one_minus(t, -kA.times_q(2 * n + 1), ctx);
                  }).value;
  second = quot(second, poch_inf(q_pow(1, Rat(-1)), ctx), ctx);
  second = quot(quot(second, poch_inf(kA, ctx, q2), ctx), poch_inf(q2_a, ctx, q2), ctx);
  return first + second;
}

Series andrews_yee_rhs(const EvalContext& ctx) {
  return certified_sum(ctx, GrowthBound::quadratic(1, 1), [&](int n) {
           if (n == 0) return one(ctx);
           Series t = poch_finite(q_pow(1, Rat(-1)), n - 1, ctx);
           t = times(t, kA.pow(n).times_q(n * (n + 1) / 2), ctx);
           return divide_poch(t, -kA.times_q(2), n, ctx, BaseExp(2));
         }).value;
}

// ---------------------------------------------------------------------------
// Theta expansions through L, P and the unit-pair sums

Series alladi_berkovich_lhs(const EvalContext& ctx) {
  const Series a = mono(kA, ctx);
  const Series b = mono(kB, ctx);
  const Series ca = quot(a, a - one(ctx), ctx);
  const Series cb = quot(b, b - one(ctx), ctx);
  const Series cab = quot(one(ctx) - mono(kAB, ctx), prod(one(ctx) - a, one(ctx) - b, ctx), ctx);
  auto weight = [&](int n) {
    Series w = mono(q_pow(n * (n - 1) / 2 + 2 * n, sign(n)), ctx);
    w = times_poch(w, kAB, n, ctx);
    return divide_poch(w, kQ, n, ctx);
  };
  const GrowthBound bound = GrowthBound::quadratic(1, 3);
  Series first = certified_sum(ctx, bound, [&](int n) {
                   Series inner = prod(ca, theta(kA.times_q(1 + n), ctx), ctx) +
                                  prod(cb, theta(kB.times_q(1 + n), ctx), ctx);
                   return prod(weight(n), inner, ctx);
                 }).value;
  Series second = certified_sum(ctx, bound, [&](int n) {
                    return prod(weight(n), theta(q_pow(1 + n), ctx), ctx);
                  }).value;
  return clip(first + prod(cab, second, ctx), ctx);
}

Series theta_pair_rhs(const EvalContext& ctx) {
  return poch_inf(kA.times_q(1), ctx) * poch_inf(kB.times_q(1), ctx) * poch_inf(kQ, ctx);
}

Series unit_pair_theta_lhs(const EvalContext& ctx) {
  const Rat inv = inverse_gap(ctx);
  const Rat a = bound_value(ctx.a, "a");
  const Rat b = bound_value(ctx.b, "b");
  const BaileyPair pair = unit_pair(ctx);
  GrowthBound bound = pair.alpha_bound;
  bound.lin2 += 2;
  return certified_sum(ctx, bound, [&](int n) {
           const Series& alpha = pair.alpha.at(n);
           Series inner = (a * inv) * theta(kA.times_q(n + 1), ctx) - (b * inv) * theta(kB.times_q(n + 1), ctx);
           return times(prod(alpha, inner, ctx), q_pow(n), ctx);
         }).value;
}

// sum_n theta(q, a q^{n+1}) q^n alpha_n against (q, aq; q)_inf sum_n q^n beta_n / (aq; q)_n.
std::pair<Series, Series> t0_theta_sides(const BaileyPair& pair, const EvalContext& ctx) {
  GrowthBound bound = pair.alpha_bound;
  bound.lin2 += 2;
  Series lhs = certified_sum(ctx, bound, [&](int n) {
                 return times(prod(pair.alpha.at(n), theta(kA.times_q(n + 1), ctx), ctx), q_pow(n), ctx);
               }).value;
  Series rhs = tail_weighted_sum({kA.times_q(1)}, GrowthBound::linear(1, pair.beta_floor),
                                 [&](int n, const Series& tail) {
                                   return times(prod(tail, pair.beta->at(n), ctx), q_pow(n), ctx);
                                 },
                                 ctx);
  return {std::move(lhs), times_poch_inf(rhs, kQ, ctx)};
}

// ---------------------------------------------------------------------------
// Transformations with extra parameters

Series transform_known_lhs(const Instance& in, const EvalContext& ctx) {
  const Monomial A = rat(extra(in, "A"));
  const Monomial B = rat(extra(in, "B"));
  const Monomial c = rat(extra(in, "c"));
  const Monomial t = kA;
  const Monomial z = t.times_q(1) / (A * B);
  Series ratio = one(ctx);
  Series sum = certified_sum(ctx, GrowthBound::linear(1), [&](int n) {
                 if (n > 0) {
                   ratio = times_one_minus(ratio, A.times_q(n - 1), ctx);
                   ratio = times_one_minus(ratio, B.times_q(n - 1), ctx);
                   ratio = divide_poch(ratio, q_pow(n), 1, ctx);
                   ratio = divide_poch(ratio, c.times_q(n - 1), 1, ctx);
                 }
                 return times(ratio, z.pow(n), ctx);
               }).value;
  sum = times_poch_inf(times_poch_inf(sum, t, ctx), z, ctx);
  sum = quot(sum, poch_inf(t.times_q(1) / A, ctx), ctx);
  return quot(sum, poch_inf(t.times_q(1) / B, ctx), ctx);
}

Series transform_known_rhs(const Instance& in, const EvalContext& ctx) {
  const Monomial A = rat(extra(in, "A"));
  const Monomial B = rat(extra(in, "B"));
  const Monomial c = rat(extra(in, "c"));
  const Monomial t = kA;
  const Monomial tq_c = t.times_q(1) / c;
  const Monomial w = c * t / (A * B);
  return certified_sum(ctx, GrowthBound::quadratic(2, 0), [&](int n) {
           Series s = poch_finite(t, n, ctx);
           s = times_poch(s, A, n, ctx);
           s = times_poch(s, B, n, ctx);
           s = times_poch(s, tq_c, n, ctx);
           s = divide_poch(s, kQ, n, ctx);
           s = divide_poch(s, t.times_q(1) / A, n, ctx);
           s = divide_poch(s, t.times_q(1) / B, n, ctx);
           s = divide_poch(s, c, n, ctx);
           s = times_one_minus(s, t.times_q(2 * n), ctx);
           return times(s, w.pow(n).times_q(n * n), ctx);
         }).value;
}

// (x; q)_inf sum_n q^{n^2} x^n / (q, c; q)_n
Series quadratic_product_sum(const Monomial& x, const Monomial& c, const EvalContext& ctx) {
  Series sum = certified_sum(ctx, GrowthBound::quadratic(2, 2 * resolve(x, ctx).e_q()), [&](int n) {
                 Series s = mono(x.pow(n).times_q(n * n), ctx);
                 s = divide_poch(s, kQ, n, ctx);
                 return divide_poch(s, c, n, ctx);
               }).value;
  return times_poch_inf(sum, x, ctx);
}

Series f_theta_product_rhs(const Instance& in, const EvalContext& ctx) {
  const Monomial c = rat(extra(in, "c"));
  Series s = tail_weighted_sum({kQ, kA}, GrowthBound::linear(1),
                               [&](int n, const Series& tail) {
                                 return times(prod(tail, g_series(n, c, ctx), ctx), q_pow(n), ctx);
                               },
                               ctx);
  return times_poch_inf(s, kB, ctx);
}

// ---------------------------------------------------------------------------

Series coeff_table(const EvalContext& ctx) {
  const Window w = ctx.window();
  Series::Terms terms;
  for (int i = 0; i <= w.a.hi; ++i) {
    for (int j = 0; j <= w.b.hi; ++j) {
      const int n = i + j;
      const int e = n * (n - 1) / 2;
      if (e <= w.q.hi) terms[{e, i, j}] = sign(n);
    }
  }
  return Series(w, std::move(terms));
}

Series generalized_warnaar_lhs(const Instance& in, const EvalContext& ctx) {
  const int r = int_param(in, "r");
  const int s = int_param(in, "s");
  Series acc = zero(ctx);
  for (int i = 0; i < r; ++i) acc = acc + times(theta(kB.times_q(i), ctx), kA.pow(i).times_q(i * (i - 1) / 2) * rat(sign(i)), ctx);
  for (int i = 0; i < s; ++i) acc = acc + times(theta(kA.times_q(i), ctx), kB.pow(i).times_q(i * (i - 1) / 2) * rat(sign(i)), ctx);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < s; ++j) acc = acc - mono((kA.pow(i) * kB.pow(j)).times_q((i + j) * (i + j - 1) / 2) * rat(sign(i + j)), ctx);
  }
  return clip(acc, ctx);
}

Series generalized_warnaar_rhs(const Instance& in, const EvalContext& ctx) {
  const int r = int_param(in, "r");
  const int s = int_param(in, "s");
  const int k = r + s;
  const Monomial scale = (kA.pow(r) * kB.pow(s)).times_q(k * (k - 1) / 2) * rat(sign(k));
  return clip(l_series(ctx) - times(l_shifted(k, ctx), scale, ctx), ctx);
}

std::vector<IdentityDescriptor> standard_entries() {
  std::vector<IdentityDescriptor> out;
  const Engine sym = Engine::SymbolicOK;
  const Engine spec = Engine::SpecializeOnly;

  {
    auto d = entry("jacobi_triple", "sum_{n in Z} tau(n) x^n = (q, x, q/x; q)_inf", spec, false, false);
    d.extras = {"x"};
    d.lhs = [](const Instance& in, const EvalContext& ctx) { return complete_theta(rat(extra(in, "x")), ctx); };
    d.rhs = [](const Instance& in, const EvalContext& ctx) { return triple_product_rhs(rat(extra(in, "x")), ctx); };
    out.push_back(std::move(d));
  }
  {
    auto d = entry("ramanujan_661",
                   "sum q^{n(n+1)} a^n = sum (q^{n+1};q)_n q^n / ((a;q)_{n+1} (q/a;q)_n)"
                   " - sum a^{3n+1} q^{n(3n+2)} (1 - a q^{2n+1}) / (a, q/a; q)_inf",
                   spec, true, false);
    d.lhs = [](const Instance&, const EvalContext& ctx) {
      return monomial_sum(ctx, GrowthBound::quadratic(2, 2), [](int n) { return kA.pow(n).times_q(n * (n + 1)); });
    };
    d.rhs = [](const Instance&, const EvalContext& ctx) { return ramanujan_661_rhs(ctx); };
    out.push_back(std::move(d));
  }
  auto triangular_a = [](const Instance&, const EvalContext& ctx) {
    return monomial_sum(ctx, GrowthBound::quadratic(1, 1), [](int n) { return kA.pow(n).times_q(n * (n + 1) / 2); });
  };
  {
    auto d = entry("ramanujan_639",
                   "sum q^{n(n+1)/2} a^n = sum (q;q^2)_n q^n / ((a;q)_{n+1} (q/a;q)_n)"
                   " + sum (-1)^{n+1} a^{2n+1} q^{n(n+1)} / (-q, a, q/a; q)_inf",
                   spec, true, false);
    d.lhs = triangular_a;
    d.rhs = [](const Instance&, const EvalContext& ctx) { return ramanujan_639_rhs(ctx); };
    out.push_back(std::move(d));
  }
  {
    auto d = entry("ramanujan_6311",
                   "sum q^{n(n+1)/2} a^n = sum (q;q^2)_n q^{2n} / ((a;q^2)_{n+1} (q^2/a;q^2)_n)"
                   " + sum (-1)^{n+1} a^{3n+1} q^{n(3n+2)} (1 + a q^{2n+1}) / ((-q;q)_inf (a, q^2/a; q^2)_inf)",
                   spec, true, false);
    d.lhs = triangular_a;
    d.rhs = [](const Instance&, const EvalContext& ctx) { return ramanujan_6311_rhs(ctx); };
    out.push_back(std::move(d));
  }
  {
    auto d = entry("andrews_yee", "sum q^{n^2} a^n = 1 + sum_{n>=1} (-q;q)_{n-1} a^n q^{n(n+1)/2} / (-a q^2; q^2)_n",
                   sym, true, false);
    d.lhs = [](const Instance&, const EvalContext& ctx) {
      return monomial_sum(ctx, GrowthBound::quadratic(2, 0), [](int n) { return kA.pow(n).times_q(n * n); });
    };
    d.rhs = [](const Instance&, const EvalContext& ctx) { return andrews_yee_rhs(ctx); };
    out.push_back(std::move(d));
  }
  {
    auto d = entry("warnaar_sum",
                   "theta(a) + theta(b) - 1 = (q, a, b; q)_inf sum (ab/q;q)_{2n} q^n / (q, a, b, ab; q)_n", sym,
                   true, true);
    d.pole = ab_not_one;
    d.lhs = [](const Instance&, const EvalContext& ctx) {
      return clip(theta(kA, ctx) + theta(kB, ctx) - one(ctx), ctx);
    };
    d.rhs = [](const Instance&, const EvalContext& ctx) { return pair_kernel(kA, kB, kAB.times_q(-1), 1, ctx); };
    out.push_back(std::move(d));
  }
  {
    auto d = entry("andrews_warnaar_product",
                   "theta(a) theta(b) = (q, a, b; q)_inf sum (ab/q;q)_{2n} q^n / (q, a, b, ab/q; q)_n", sym, true,
                   true);
    d.lhs = [](const Instance&, const EvalContext& ctx) { return prod(theta(kA, ctx), theta(kB, ctx), ctx); };
    d.rhs = [](const Instance&, const EvalContext& ctx) { return pair_kernel(kA, kB, kAB.times_q(-1), 0, ctx); };
    out.push_back(std::move(d));
  }
  {
    auto d = entry("schilling_warnaar",
                   "(theta(a) - theta(b)) / (a - b) = -(q, aq, bq; q)_inf sum (ab;q)_{2n} q^n / (q, aq, bq, ab; q)_n",
                   spec, true, true);
    d.pole = distinct_ab;
    d.lhs = [](const Instance&, const EvalContext& ctx) {
      return inverse_gap(ctx) * (theta(kA, ctx) - theta(kB, ctx));
    };
    d.rhs = [](const Instance&, const EvalContext& ctx) {
      return -pair_kernel(kA.times_q(1), kB.times_q(1), kAB, 0, ctx);
    };
    out.push_back(std::move(d));
  }
  {
    auto d = entry("alladi_berkovich",
                   "sum tau(n) q^{2n} [a/(a-1) theta(a q^{1+n}) + b/(b-1) theta(b q^{1+n})] (ab;q)_n/(q;q)_n"
                   " + (1-ab)/((1-a)(1-b)) sum tau(n) q^{2n} theta(q^{1+n}) (ab;q)_n/(q;q)_n = (aq, bq, q; q)_inf",
                   sym, true, true);
    d.pole = ab_not_one;
    d.lhs = [](const Instance&, const EvalContext& ctx) { return alladi_berkovich_lhs(ctx); };
    d.rhs = [](const Instance&, const EvalContext& ctx) { return clip(theta_pair_rhs(ctx), ctx); };
    out.push_back(std::move(d));
  }
  {
    auto d = entry("main_theorem",
                   "U_m(b) theta(a) = (q, a, b; q)_inf sum (ab q^{n-1};q)_n q^n V_{m,n}(a,b) / ((q, a; q)_n (b;q)_{m+n})",
                   sym, true, true);
    d.int_params = {{"m", 0, 4}};
    d.pole = ab_not_one;
    d.lhs = [](const Instance& in, const EvalContext& ctx) {
      return prod(u_series(int_param(in, "m"), ctx), theta(kA, ctx), ctx);
    };
    d.rhs = [](const Instance& in, const EvalContext& ctx) { return main_expansion(int_param(in, "m"), ctx); };
    out.push_back(std::move(d));
  }
  {
    auto d = entry("bivariate_rep", "theta(a) = L(a, b) + b L(aq, bq)", sym, true, true);
    d.lhs = [](const Instance&, const EvalContext& ctx) { return theta(kA, ctx); };
    d.rhs = [](const Instance&, const EvalContext& ctx) {
      return clip(l_series(ctx) + times(l_shifted(1, ctx), kB, ctx), ctx);
    };
    out.push_back(std::move(d));
  }
  {
    auto d = entry("swapped_rep", "theta(b) = L(a, b) + a L(aq, bq)", sym, true, true);
    d.lhs = [](const Instance&, const EvalContext& ctx) { return theta(kB, ctx); };
    d.rhs = [](const Instance&, const EvalContext& ctx) {
      return clip(l_series(ctx) + times(l_shifted(1, ctx), kA, ctx), ctx);
    };
    out.push_back(std::move(d));
  }
  {
    auto d = entry("trivariate_rep", "(q + b) theta(a) = q P(a, b) + b (1 + q) P(aq, bq) + b^2 q P(aq^2, bq^2)", sym,
                   true, true);
    d.notes = "Both sides multiplied through by q + b.";
    d.lhs = [](const Instance&, const EvalContext& ctx) {
      return clip(times(theta(kA, ctx), kQ, ctx) + times(theta(kA, ctx), kB, ctx), ctx);
    };
    d.rhs = [](const Instance&, const EvalContext& ctx) {
      const Series p1 = p_series(kA.times_q(1), kB.times_q(1), ctx);
      Series s = times(p_series(ctx), kQ, ctx);
      s = s + times(p1, kB, ctx) + times(p1, kB.times_q(1), ctx);
      s = s + times(p_series(kA.times_q(2), kB.times_q(2), ctx), kB.pow(2).times_q(1), ctx);
      return clip(s, ctx);
    };
    out.push_back(std::move(d));
  }
  {
    auto d = entry("transform_known",
                   "(t, tq/(AB); q)_inf / (tq/A, tq/B; q)_inf sum (A, B; q)_n / (q, c; q)_n (tq/(AB))^n"
                   " = sum (t, A, B, tq/c; q)_n / (q, tq/A, tq/B, c; q)_n (1 - t q^{2n}) (ct/(AB))^n q^{n^2}",
                   sym, true, false);
    d.notes = "t is carried by the variable a.";
    d.extras = {"A", "B", "c"};
    d.lhs = transform_known_lhs;
    d.rhs = transform_known_rhs;
    out.push_back(std::move(d));
  }
  {
    auto d = entry("corollary_main",
                   "(t;q)_inf sum q^{n^2} t^n / (q, c; q)_n = sum (t, tq/c; q)_n / (q, c; q)_n (1 - t q^{2n}) (ct)^n q^{2n^2-n}",
                   sym, true, false);
    d.notes = "t is carried by the variable a.";
    d.extras = {"c"};
    d.lhs = [](const Instance& in, const EvalContext& ctx) {
      return quadratic_product_sum(kA, rat(extra(in, "c")), ctx);
    };
    d.rhs = [](const Instance& in, const EvalContext& ctx) { return f_series(kA, rat(extra(in, "c")), ctx); };
    out.push_back(std::move(d));
  }
  {
    auto d = entry("corollary_main_added", "(t;q)_inf sum q^{n^2} t^n / (q, t; q)_n = sum tau(n) t^n", sym, true, false);
    d.notes = "t is carried by the variable a.";
    d.lhs = [](const Instance&, const EvalContext& ctx) { return quadratic_product_sum(kA, kA, ctx); };
    d.rhs = [](const Instance&, const EvalContext& ctx) { return theta(kA, ctx); };
    out.push_back(std::move(d));
  }
  {
    auto d = entry("f_product_form", "f(b, c) = (b;q)_inf sum q^{n^2} b^n / (q, c; q)_n", sym, false, true);
    d.extras = {"c"};
    d.lhs = [](const Instance& in, const EvalContext& ctx) { return f_series(kB, rat(extra(in, "c")), ctx); };
    d.rhs = [](const Instance& in, const EvalContext& ctx) {
      return quadratic_product_sum(kB, rat(extra(in, "c")), ctx);
    };
    out.push_back(std::move(d));
  }
  {
    auto d = entry("f_theta_product", "f(b, c) theta(a) = (q, a, b; q)_inf sum q^n g_n(a, b, c) / (q, a; q)_n", spec,
                   true, true);
    d.extras = {"c"};
    d.lhs = [](const Instance& in, const EvalContext& ctx) {
      return prod(f_series(kB, rat(extra(in, "c")), ctx), theta(kA, ctx), ctx);
    };
    d.rhs = f_theta_product_rhs;
    out.push_back(std::move(d));
  }
  {
    auto d = entry("theta_expansion", "sum tau(n) a^n = (q, a; q)_inf sum q^n / (q, a; q)_n", sym, true, false);
    d.lhs = [](const Instance&, const EvalContext& ctx) { return theta(kA, ctx); };
    d.rhs = [](const Instance&, const EvalContext& ctx) {
      return tail_weighted_sum({kQ, kA}, GrowthBound::linear(1),
                        [&ctx](int n, const Series& tail) { return times(tail, q_pow(n), ctx); }, ctx);
    };
    out.push_back(std::move(d));
  }
  {
    auto d = entry("corollary_b5", "a/(a-b) theta(a) - b/(a-b) theta(b) = L(a, b)", spec, true, true);
    d.pole = distinct_ab;
    d.lhs = [](const Instance&, const EvalContext& ctx) {
      const Rat inv = inverse_gap(ctx);
      return clip((ctx.a.value() * inv) * theta(kA, ctx) - (ctx.b.value() * inv) * theta(kB, ctx), ctx);
    };
    d.rhs = [](const Instance&, const EvalContext& ctx) { return l_series(ctx); };
    out.push_back(std::move(d));
  }
  {
    auto d = entry("corollary_b6",
                   "a^2 (b+q)/(a-b) theta(a) - b^2 (a+q)/(a-b) theta(b) = q (a+b) P(a, b) + ab (q+1) P(aq, bq)",
                   spec, true, true);
    d.notes = "The two-line display is read as a single equation between its two lines.";
    d.pole = distinct_ab;
    d.lhs = [](const Instance&, const EvalContext& ctx) {
      const Rat inv = inverse_gap(ctx);
      const Rat& a = ctx.a.value();
      const Rat& b = ctx.b.value();
      const Series left = times(theta(kA, ctx), rat(a * a * inv), ctx);
      const Series right = times(theta(kB, ctx), rat(b * b * inv), ctx);
      return clip(times(left, kB, ctx) + times(left, kQ, ctx) - times(right, kA, ctx) - times(right, kQ, ctx), ctx);
    };
    d.rhs = [](const Instance&, const EvalContext& ctx) {
      const Series p0 = p_series(ctx);
      const Series p1 = p_series(kA.times_q(1), kB.times_q(1), ctx);
      return clip(times(p0, kA.times_q(1), ctx) + times(p0, kB.times_q(1), ctx) + times(p1, kAB.times_q(1), ctx) +
                      times(p1, kAB, ctx),
                  ctx);
    };
    out.push_back(std::move(d));
  }
  {
    auto d = entry("corollary_b7", "(q + a) theta(-a) - (q - a) theta(a) = 2a (1 + q) P(aq, -aq)", sym, true, false);
    d.lhs = [](const Instance&, const EvalContext& ctx) {
      const Series neg = theta(-kA, ctx);
      const Series pos = theta(kA, ctx);
      return clip(times(neg, kQ, ctx) + times(neg, kA, ctx) - times(pos, kQ, ctx) + times(pos, kA, ctx), ctx);
    };
    d.rhs = [](const Instance&, const EvalContext& ctx) {
      const Series p = p_series(kA.times_q(1), -kA.times_q(1), ctx);
      return clip(times(p, kA * rat(Rat(2)), ctx) + times(p, kA.times_q(1) * rat(Rat(2)), ctx), ctx);
    };
    out.push_back(std::move(d));
  }
  {
    auto d = entry("psi_product", "psi(q) = theta(q, -q) = (q^4; q^4)_inf (-q; q^2)_inf", sym, false, false);
    d.lhs = [](const Instance&, const EvalContext& ctx) { return psi(ctx); };
    d.rhs = [](const Instance&, const EvalContext& ctx) {
      return times_poch_inf(poch_inf(q_pow(4), ctx, BaseExp(4)), q_pow(1, Rat(-1)), ctx, BaseExp(2));
    };
    out.push_back(std::move(d));
  }
  {
    auto d = entry("coeff_theorem", "L(a, b) = sum_{i,j>=0} tau(i+j) a^i b^j", sym, true, true);
    d.symbolic_only = true;
    d.lhs = [](const Instance&, const EvalContext& ctx) { return l_series(ctx); };
    d.rhs = [](const Instance&, const EvalContext& ctx) { return coeff_table(ctx); };
    out.push_back(std::move(d));
  }
  {
    auto d = entry("generalized_warnaar",
                   "sum_{i<r} tau(i) a^i theta(b q^i) + sum_{i<s} tau(i) b^i theta(a q^i) - sum_{i<r,j<s} tau(i+j) a^i b^j"
                   " = L(a, b) - a^r b^s tau(r+s) L(a q^{r+s}, b q^{r+s})",
                   sym, true, true);
    d.int_params = {{"r", 0, 3}, {"s", 0, 3}};
    d.lhs = generalized_warnaar_lhs;
    d.rhs = generalized_warnaar_rhs;
    out.push_back(std::move(d));
  }
  {
    auto d = entry("mamade_contiguous",
                   "(L(a, b) - abq L(aq^2, bq^2)) / (q, a, b; q)_inf = sum (ab/q;q)_{2n} q^n / (q, a, b, ab; q)_n", sym,
                   true, true);
    d.pole = ab_not_one;
    d.lhs = [](const Instance&, const EvalContext& ctx) {
      Series s = l_series(ctx) - times(l_shifted(2, ctx), kAB.times_q(1), ctx);
      s = quot(s, poch_inf(kQ, ctx), ctx);
      s = quot(s, poch_inf(kA, ctx), ctx);
      return quot(s, poch_inf(kB, ctx), ctx);
    };
    d.rhs = [](const Instance&, const EvalContext& ctx) {
      return certified_sum(ctx, GrowthBound::linear(1, -1), [&](int n) {
               Series s = times(poch_finite(kAB.times_q(-1), 2 * n, ctx), q_pow(n), ctx);
               s = divide_poch(s, kQ, n, ctx);
               s = divide_poch(s, kA, n, ctx);
               s = divide_poch(s, kB, n, ctx);
               return divide_poch(s, kAB, n, ctx);
             }).value;
    };
    out.push_back(std::move(d));
  }
  {
    auto d = entry("bailey_transform_unit",
                   "sum q^n tau(n) [a/(a-b) theta(a q^{1+n}) + b/(b-a) theta(b q^{1+n})] (ab/q;q)_n/(q;q)_n"
                   " (1 - ab q^{2n-1})/(1 - ab/q) = (aq, bq, q; q)_inf",
                   spec, true, true);
    d.pole = distinct_ab;
    d.lhs = [](const Instance&, const EvalContext& ctx) { return unit_pair_theta_lhs(ctx); };
    d.rhs = [](const Instance&, const EvalContext& ctx) { return clip(theta_pair_rhs(ctx), ctx); };
    out.push_back(std::move(d));
  }
  {
    auto d = entry("bailey_transform_t0_1",
                   "sum theta(a q^{n+1}) (-1)^n x^n q^{(n^2+n)/2} / (q;q)_n = (q, aq; q)_inf sum (x;q)_n q^n / (q, aq; q)_n",
                   sym, true, true);
    d.fixed_b = Rat(0);
    d.extras = {"x"};
    d.lhs = [](const Instance& in, const EvalContext& ctx) {
      return t0_theta_sides(t0_pair_one(rat(extra(in, "x")), ctx), ctx).first;
    };
    d.rhs = [](const Instance& in, const EvalContext& ctx) {
      return t0_theta_sides(t0_pair_one(rat(extra(in, "x")), ctx), ctx).second;
    };
    out.push_back(std::move(d));
  }
  {
    auto d = entry("bailey_transform_t0_2",
                   "sum theta(a q^{n+1}) x^n q^{n^2+n} / (q, xq; q)_n = (q, aq; q)_inf sum q^n / (q, aq, xq; q)_n", sym,
                   true, true);
    d.fixed_b = Rat(0);
    d.extras = {"x"};
    d.lhs = [](const Instance& in, const EvalContext& ctx) {
      return t0_theta_sides(t0_pair_two(rat(extra(in, "x")), ctx), ctx).first;
    };
    d.rhs = [](const Instance& in, const EvalContext& ctx) {
      return t0_theta_sides(t0_pair_two(rat(extra(in, "x")), ctx), ctx).second;
    };
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

const Registry& Registry::standard() {
  static const Registry reg(standard_entries());
  return reg;
}

}  // namespace qseries
