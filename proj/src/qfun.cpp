#include "qseries/qfun.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "qseries/error.hpp"

namespace qseries {

namespace {

using TermList = std::vector<std::pair<Exponent, Rat>>;

// Assembles an explicitly enumerated sum. `q_floor` must bound the q-order of
// every summand, enumerated or not; a and b floors come from the summands
// that land at q-order <= work_order.
Series build(const TermList& items, long long q_floor, const EvalContext& ctx) {
  Window w = ctx.window();
  w.q.lo = static_cast<int>(std::min<long long>(q_floor, w.q.hi));
  for (const auto& [e, c] : items) {
    if (e.q > w.q.hi) continue;
    w.a.lo = std::min(w.a.lo, e.a);
    w.b.lo = std::min(w.b.lo, e.b);
  }
  if (w.a.lo < ctx.laurent_floor || w.b.lo < ctx.laurent_floor) {
    throw Error(ErrorKind::PoleAtZero, "negative formal exponent below laurent floor " +
                                           std::to_string(ctx.laurent_floor));
  }
  Series::Terms terms;
  for (const auto& [e, c] : items) {
    if (w.contains(e)) terms[e] += c;
  }
  return Series(w, std::move(terms));
}

Rat rat_pow(const Rat& x, long long n) {
  Rat out(1);
  const Rat base = n >= 0 ? x : Rat(1 / x);
  for (long long i = 0; i < std::abs(n); ++i) out *= base;
  return out;
}

long long floor_div(long long a, long long b) {
  long long d = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
  return d;
}

// (-1)^n c^n q^{n(n-1)/2 + e n} a^{i n} b^{j n}
std::pair<Exponent, Rat> theta_term(const Monomial& x, long long n) {
  const long long e_q = n * (n - 1) / 2 + static_cast<long long>(x.e_q()) * n;
  Rat c = rat_pow(x.coef(), n);
  if (n % 2 != 0) c = -c;
  return {Exponent{static_cast<int>(e_q), static_cast<int>(x.e_a() * n), static_cast<int>(x.e_b() * n)}, c};
}

std::optional<int> terminating_length(const Monomial& p, BaseExp base) {
  if (p.coef() == 1 && p.e_a() == 0 && p.e_b() == 0 && p.e_q() <= 0 && (-p.e_q()) % base.r() == 0) {
    return -p.e_q() / base.r();
  }
  return std::nullopt;
}

std::optional<int> terminating_length(const Monomial& A, const Monomial& B, BaseExp base) {
  auto la = terminating_length(A, base);
  auto lb = terminating_length(B, base);
  if (la && lb) return std::min(*la, *lb);
  return la ? la : lb;
}

bool formal_part(const Monomial& resolved) { return resolved.e_a() != 0 || resolved.e_b() != 0; }

Monomial require_bilateral_argument(const Monomial& x, const EvalContext& ctx) {
  const Monomial r = resolve(x, ctx);
  if (r.is_zero()) throw Error(ErrorKind::PoleAtZero, "theta argument resolves to zero");
  if (formal_part(r)) {
    throw Error(ErrorKind::NotInvertible, "bilateral theta needs its argument bound to a rational times a q-power");
  }
  return r;
}

}  // namespace

Series times_resolved(const Series& s, const Monomial& resolved, const EvalContext& ctx) {
  if (resolved.is_zero()) return Series(s.window());
  return clip(resolved.coef() * s.shifted({resolved.e_q(), resolved.e_a(), resolved.e_b()}), ctx);
}

Series times_monomial(const Series& s, const Monomial& x, const EvalContext& ctx) {
  return times_resolved(s, resolve(x, ctx), ctx);
}

BaseExp::BaseExp(int r) : r_(r) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "factorial base power must be >= 1");
}

long long GrowthBound::tail_min(long long n) const {
  if (quad2 == 0) return at(n);
  // Convex: the minimum over n' >= n sits at the integer nearest the vertex.
  const long long v = floor_div(-lin2, 2 * quad2);
  long long best = at(n);
  for (long long c : {v, v + 1}) {
    if (c >= n) best = std::min(best, at(c));
  }
  return best;
}

CertifiedSum certified_sum(const EvalContext& ctx, const GrowthBound& bound, const std::function<Series(int)>& term) {
  if (!bound.grows()) throw Error(ErrorKind::NonTruncatable, "summands do not grow in q-order");
  const long long limit = ctx.work_order();
  Series acc = constant(Rat(0), ctx);
  int n = 0;
  while (bound.tail_min(n) <= limit) {
    acc = clip(acc + term(n), ctx);
    ++n;
  }
  return {std::move(acc), n, bound.tail_min(n)};
}

long long poch_valuation_floor(const Monomial& resolved, BaseExp base) {
  if (resolved.is_zero()) return 0;
  long long total = 0;
  for (long long e = resolved.e_q(); e < 0; e += base.r()) total += e;
  return total;
}

Series one_minus(const Monomial& x, const EvalContext& ctx) {
  return constant(Rat(1), ctx) - eval_monomial(x, ctx);
}

Series times_one_minus(const Series& s, const Monomial& x, const EvalContext& ctx) {
  const Monomial r = resolve(x, ctx);
  if (r.is_zero()) return s;
  return clip(s - times_resolved(s, r, ctx), ctx);
}

Series tau(int n, const EvalContext& ctx) {
  const auto [e, c] = theta_term(Monomial::q_power(0), n);
  return Series::monomial(c, e, ctx.window());
}

Series times_poch(const Series& s, const Monomial& x, int n, const EvalContext& ctx, BaseExp base) {
  Series out = s;
  for (int k = 0; k < n && !out.is_zero(); ++k) out = times_one_minus(out, x.times_q(base.r() * k), ctx);
  return out;
}

Series times_poch_inf(const Series& s, const Monomial& x, const EvalContext& ctx, BaseExp base) {
  const Monomial r = resolve(x, ctx);
  if (r.is_zero()) return s;
  Series out = s;
  for (int k = 0; r.e_q() + base.r() * k <= ctx.work_order() && !out.is_zero(); ++k) {
    out = times_one_minus(out, r.times_q(base.r() * k), ctx);
  }
  return out;
}

Series divide_poch(const Series& s, const Monomial& x, int n, const EvalContext& ctx, BaseExp base) {
  Series out = s;
  for (int k = 0; k < n; ++k) out = clip(divide(out, one_minus(x.times_q(base.r() * k), ctx)), ctx);
  return out;
}

long long poch_finite_valuation(const Monomial& resolved, int n, BaseExp base) {
  if (resolved.is_zero()) return 0;
  long long total = 0;
  for (int k = 0; k < n; ++k) total += std::min<long long>(0, resolved.e_q() + static_cast<long long>(base.r()) * k);
  return total;
}

Series poch_finite(const Monomial& x, int n, const EvalContext& ctx, BaseExp base) {
  if (n >= 0) {
    // Negative q-shifts lower the ceiling; start high enough that it ends at
    // the working order.
    EvalContext wide = ctx;
    wide.slack -= static_cast<int>(poch_finite_valuation(resolve(x, ctx), n, base));
    return clip(times_poch(constant(Rat(1), wide), x, n, wide, base), ctx);
  }
  Series out = constant(Rat(1), ctx);
  for (int j = 1; j <= -n; ++j) out = clip(divide(out, one_minus(x.times_q(-base.r() * j), ctx)), ctx);
  return out;
}

Series poch_inf(const Monomial& x, const EvalContext& ctx, BaseExp base) {
  return times_poch_inf(constant(Rat(1), ctx), x, ctx, base);
}

Series poch_double_ratio(const Monomial& x, int n, const EvalContext& ctx) {
  return poch_finite(x.times_q(n), n, ctx);
}

Series partial_theta(const Monomial& x, const EvalContext& ctx) {
  const Monomial r = resolve(x, ctx);
  if (r.is_zero()) return constant(Rat(1), ctx);
  const long long e = r.e_q();
  const long long limit = ctx.work_order();
  const long long rising_from = std::max<long long>(0, 1 - e);
  TermList items;
  long long floor = 0;
  for (long long n = 0;; ++n) {
    auto item = theta_term(r, n);
    floor = std::min<long long>(floor, item.first.q);
    if (n >= rising_from && item.first.q > limit) break;
    if ((r.e_a() > 0 && item.first.a > ctx.degree_cap) || (r.e_b() > 0 && item.first.b > ctx.degree_cap)) break;
    items.push_back(std::move(item));
  }
  return build(items, floor, ctx);
}

Series complete_theta(const Monomial& x, const EvalContext& ctx) {
  const Monomial r = require_bilateral_argument(x, ctx);
  const long long e = r.e_q();
  const long long limit = ctx.work_order();
  TermList items;
  for (long long n = 1 - e;; ++n) {
    auto item = theta_term(r, n);
    if (item.first.q > limit) break;
    items.push_back(std::move(item));
  }
  for (long long n = -e;; --n) {
    auto item = theta_term(r, n);
    if (item.first.q > limit) break;
    items.push_back(std::move(item));
  }
  const long long floor = theta_term(r, -e).first.q;
  return build(items, floor, ctx);
}

Series triple_product_rhs(const Monomial& x, const EvalContext& ctx) {
  const Monomial r = require_bilateral_argument(x, ctx);
  const Monomial q = Monomial::q_power(1);
  return clip(poch_inf(q, ctx) * poch_inf(r, ctx) * poch_inf(q / r, ctx), ctx);
}

Series psi(const EvalContext& ctx) { return partial_theta(Monomial::q_power(1, Rat(-1)), ctx); }

int phi21_term_count(const Monomial& A, const Monomial& B, const Monomial& C, const Monomial& z,
                     const EvalContext& ctx, BaseExp base) {
  (void)C;
  if (auto m = terminating_length(A, B, base)) return *m + 1;
  const Monomial rz = resolve(z, ctx);
  if (rz.is_zero()) return 1;
  if (rz.e_q() < 1) throw Error(ErrorKind::NonTruncatable, "2phi1 argument has non-positive q-order");
  const auto bound = GrowthBound::linear(rz.e_q(), poch_valuation_floor(resolve(A, ctx), base) +
                                                       poch_valuation_floor(resolve(B, ctx), base));
  int n = 0;
  while (bound.tail_min(n) <= ctx.work_order()) ++n;
  return n;
}

Series phi21(const Monomial& A, const Monomial& B, const Monomial& C, const Monomial& z, const EvalContext& ctx,
             BaseExp base) {
  const Monomial rz = resolve(z, ctx);
  const int r = base.r();
  // term_{n+1} = term_n (1 - A q^{rn})(1 - B q^{rn}) z / ((1 - C q^{rn})(1 - q^{r(n+1)}))
  auto advance = [&](const Series& term, int n) {
    Series next = times_one_minus(term, A.times_q(r * n), ctx);
    next = times_one_minus(next, B.times_q(r * n), ctx);
    if (next.is_zero()) return next;
    next = times_resolved(next, rz, ctx);
    next = clip(divide(next, one_minus(C.times_q(r * n), ctx)), ctx);
    return clip(divide(next, one_minus(Monomial::q_power(r * (n + 1)), ctx)), ctx);
  };

  if (auto m = terminating_length(A, B, base)) {
    Series term = constant(Rat(1), ctx);
    Series acc = term;
    for (int n = 0; n < *m && !term.is_zero(); ++n) {
      term = advance(term, n);
      acc = clip(acc + term, ctx);
    }
    return acc;
  }
  if (rz.is_zero()) return constant(Rat(1), ctx);
  if (rz.e_q() < 1) throw Error(ErrorKind::NonTruncatable, "2phi1 argument has non-positive q-order");
  const auto bound = GrowthBound::linear(rz.e_q(), poch_valuation_floor(resolve(A, ctx), base) +
                                                       poch_valuation_floor(resolve(B, ctx), base));
  Series term = constant(Rat(1), ctx);
  return certified_sum(ctx, bound, [&](int n) {
           if (n > 0) term = advance(term, n - 1);
           return term;
         }).value;
}

}  // namespace qseries
