#include "qseries/kernels.hpp"

#include <algorithm>

#include "qseries/error.hpp"

namespace qseries {

namespace {

const Monomial kQ = Monomial::q_power(1);

// Smallest value of f(n) over n = 0..last.
long long min_over(long long last, const std::function<long long(long long)>& f) {
  long long best = 0;
  for (long long n = 0; n <= last; ++n) best = std::min(best, f(n));
  return best;
}

Series one(const EvalContext& ctx) { return constant(Rat(1), ctx); }

}  // namespace

std::vector<Series> poch_inf_tails(const std::vector<Monomial>& xs, int count, const EvalContext& ctx) {
  std::vector<Monomial> live;
  long long top = count - 1;
  for (const auto& x : xs) {
    const Monomial r = resolve(x, ctx);
    if (r.is_zero()) continue;
    live.push_back(r);
    top = std::max<long long>(top, ctx.work_order() - r.e_q());
  }
  std::vector<Series> out(static_cast<std::size_t>(std::max(count, 0)), one(ctx));
  Series cur = one(ctx);
  for (long long n = top; n >= 0; --n) {
    for (const auto& r : live) {
      if (r.e_q() + n <= ctx.work_order()) cur = times_one_minus(cur, r.times_q(static_cast<int>(n)), ctx);
    }
    if (n < count) out[static_cast<std::size_t>(n)] = cur;
  }
  return out;
}

Series tail_weighted_sum(const std::vector<Monomial>& tails, const GrowthBound& bound,
                         const std::function<Series(int, const Series&)>& weight, const EvalContext& ctx) {
  GrowthBound full = bound;
  for (const auto& x : tails) full.offset += poch_valuation_floor(resolve(x, ctx));
  if (!full.grows()) throw Error(ErrorKind::NonTruncatable, "summands do not grow in q-order");
  int count = 0;
  while (full.tail_min(count) <= ctx.work_order()) ++count;
  const auto tail = poch_inf_tails(tails, count, ctx);
  Series acc = constant(Rat(0), ctx);
  for (int n = 0; n < count; ++n) acc = clip(acc + weight(n, tail[static_cast<std::size_t>(n)]), ctx);
  return acc;
}

Series u_series(int m, const EvalContext& ctx, const Monomial& b) {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "U_m needs m >= 0");
  if (m == 0) return partial_theta(b, ctx);
  // (q^{1-m}; q)_k q^{mk} = (-1)^k q^{k(k+1)/2} (q^{m-k}; q)_k keeps every
  // exponent non-negative.
  Series acc = constant(Rat(0), ctx);
  for (int k = 0; k < m; ++k) {
    Series term = poch_finite(Monomial::q_power(m - k), k, ctx);
    const Rat sign = k % 2 == 0 ? Rat(1) : Rat(-1);
    term = times_monomial(term, Monomial::q_power(k * (k + 1) / 2 + 2 * k * k - k, sign) * b.pow(2 * k), ctx);
    term = times_one_minus(term, b.times_q(2 * k), ctx);
    term = divide_poch(term, kQ, k, ctx);
    term = divide_poch(term, b.times_q(k), m, ctx);
    acc = clip(acc + term, ctx);
  }
  return acc;
}

Series u_series_generic(int m, const EvalContext& ctx, const Monomial& b) {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "U_m needs m >= 0");
  auto term = [&](int k) {
    Series t = poch_finite(Monomial::q_power(1 - m), k, ctx);
    if (t.is_zero()) return t;
    t = times_monomial(t, Monomial::q_power(2 * k * k - k + m * k) * b.pow(2 * k), ctx);
    t = times_one_minus(t, b.times_q(2 * k), ctx);
    t = divide_poch(t, kQ, k, ctx);
    return divide_poch(t, b.times_q(k), m, ctx);
  };
  if (m >= 1) {
    Series acc = constant(Rat(0), ctx);
    for (int k = 0;; ++k) {
      Series t = term(k);
      if (t.is_zero() && k >= 1) break;
      acc = clip(acc + t, ctx);
    }
    return acc;
  }
  const Monomial rb = resolve(b, ctx);
  if (rb.is_zero()) return one(ctx);
  const long long e = rb.e_q();
  return certified_sum(ctx, GrowthBound::quadratic(4, 4 * e - 2, std::min<long long>(0, e)), term).value;
}

int u_term_count(int m) { return m; }

Series v_series(int m, int n, const EvalContext& ctx) {
  if (m < 0 || n < 0) throw Error(ErrorKind::InvalidArgument, "V_{m,n} needs m, n >= 0");
  const Monomial ab{Rat(1), 0, 1, 1};
  return phi21(Monomial::q_power(-m), Monomial::q_power(-n), ab.times_q(n - 1), Monomial::var_b().times_q(m + n), ctx);
}

Series f_series(const Monomial& b, const Monomial& c, const EvalContext& ctx) {
  const Monomial rb = resolve(b, ctx);
  if (rb.is_zero()) return one(ctx);
  const Monomial rc = resolve(c, ctx);
  const Monomial bq_c = b.times_q(1) / c;
  const Monomial bc = b * c;
  const long long eb = rb.e_q();
  const long long ec = rc.e_q();
  const GrowthBound bound = GrowthBound::quadratic(
      4, 2 * (eb + ec) - 2,
      poch_valuation_floor(rb) + poch_valuation_floor(resolve(bq_c, ctx)) + std::min<long long>(0, eb));
  // ratio = (b, bq/c; q)_n / (q, c; q)_n, advanced one factor at a time.
  Series ratio = one(ctx);
  return certified_sum(ctx, bound, [&](int n) {
           if (n > 0) {
             ratio = times_one_minus(ratio, b.times_q(n - 1), ctx);
             ratio = times_one_minus(ratio, bq_c.times_q(n - 1), ctx);
             ratio = divide_poch(ratio, kQ.times_q(n - 1), 1, ctx);
             ratio = divide_poch(ratio, c.times_q(n - 1), 1, ctx);
           }
           Series t = times_one_minus(ratio, b.times_q(2 * n), ctx);
           return times_monomial(t, bc.pow(n) * Monomial::q_power(2 * n * n - n), ctx);
         })
      .value;
}

Series g_series(int n, const Monomial& c, const EvalContext& ctx) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "g_n needs n >= 0");
  return phi21(Monomial::q_power(-n), Monomial(Rat(1), 1 - n, -1, 0), c, Monomial(Rat(1), 2 * n - 1, 1, 1), ctx);
}

Series pair_kernel(const Monomial& x, const Monomial& y, const Monomial& z, int shift, const EvalContext& ctx) {
  if (shift != 0 && shift != 1) throw Error(ErrorKind::InvalidArgument, "pair kernel shift must be 0 or 1");
  const Monomial rz = resolve(z, ctx);
  const long long ez = rz.e_q();
  // q-order floor of the Pochhammer ratio at index n.
  auto ratio_floor = [&](long long n) -> long long {
    if (rz.is_zero()) return 0;
    if (shift == 0) return poch_finite_valuation(rz.times_q(static_cast<int>(n)), static_cast<int>(n));
    if (n == 0) return 0;
    return std::min<long long>(0, ez) +
           poch_finite_valuation(rz.times_q(static_cast<int>(n + 1)), static_cast<int>(n - 1));
  };
  const GrowthBound bound = GrowthBound::linear(1, min_over(std::max<long long>(0, 2 - ez), ratio_floor));
  return tail_weighted_sum({kQ, x, y}, bound,
                           [&](int n, const Series& tail) {
                             Series t = tail;
                             if (shift == 0) {
                               t = times_poch(t, z.times_q(n), n, ctx);
                             } else if (n > 0) {
                               t = times_poch(t, z.times_q(n + 1), n - 1, ctx);
                               t = times_one_minus(t, z, ctx);
                             }
                             return times_monomial(t, Monomial::q_power(n), ctx);
                           },
                           ctx);
}

Series l_series(const Monomial& x, const Monomial& y, const EvalContext& ctx) {
  return pair_kernel(x, y, (x * y).times_q(-2), 0, ctx);
}

Series l_series(const EvalContext& ctx) { return l_series(Monomial::var_a(), Monomial::var_b(), ctx); }

Series l_shifted(int i, const EvalContext& ctx) {
  return l_series(Monomial::var_a().times_q(i), Monomial::var_b().times_q(i), ctx);
}

Series p_series(const Monomial& x, const Monomial& y, const EvalContext& ctx) {
  return pair_kernel(x, y, (x * y).times_q(-3), 0, ctx);
}

Series p_series(const EvalContext& ctx) { return p_series(Monomial::var_a(), Monomial::var_b(), ctx); }

Series t_summand(const Monomial& x, const Monomial& y, int n, const EvalContext& ctx) {
  Series t = poch_finite((x * y).times_q(n - 2), n, ctx);
  t = times_monomial(t, Monomial::q_power(n), ctx);
  t = divide_poch(t, kQ, n, ctx);
  t = divide_poch(t, x, n, ctx);
  return divide_poch(t, y, n, ctx);
}

Series t_summand(int n, const EvalContext& ctx) { return t_summand(Monomial::var_a(), Monomial::var_b(), n, ctx); }

Series main_expansion(int m, const EvalContext& ctx) {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, "U_m needs m >= 0");
  const Monomial a = Monomial::var_a();
  const Monomial b = Monomial::var_b();
  const Monomial ab = a * b;
  // (ab q^{n-1}; q)_n V_{m,n} expanded term by term with the q^{-m}, q^{-n}
  // factors folded against the argument's q^{m+n}:
  // sum_k b^k q^{k(k-1)} (q^{m-k+1}, q^{n-k+1}; q)_k / (q; q)_k (ab q^{n-1+k}; q)_{n-k}.
  return tail_weighted_sum({kQ, a, b.times_q(m)}, GrowthBound::linear(1),
                           [&](int n, const Series& tail) {
                             Series acc = constant(Rat(0), ctx);
                             for (int k = 0; k <= std::min(m, n); ++k) {
                               Series t = times_poch(tail, ab.times_q(n - 1 + k), n - k, ctx);
                               t = times_poch(t, Monomial::q_power(m - k + 1), k, ctx);
                               t = times_poch(t, Monomial::q_power(n - k + 1), k, ctx);
                               t = divide_poch(t, kQ, k, ctx);
                               t = times_monomial(t, b.pow(k).times_q(k * (k - 1)), ctx);
                               acc = clip(acc + t, ctx);
                             }
                             return times_monomial(acc, Monomial::q_power(n), ctx);
                           },
                           ctx);
}

}  // namespace qseries
