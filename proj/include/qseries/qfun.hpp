#pragma once

#include <functional>

#include "qseries/context.hpp"
#include "qseries/series.hpp"

namespace qseries {

/// Power r of the factorial base q^r.
class BaseExp {
 public:
  constexpr BaseExp() = default;
  /// Throws InvalidArgument unless r >= 1.
  explicit BaseExp(int r);
  constexpr int r() const noexcept { return r_; }

 private:
  int r_ = 1;
};

/// Lower bound (quad2*n^2 + lin2*n)/2 + offset on the q-valuation of the n-th
/// summand of an infinite sum. Halved coefficients keep n(n-1)/2 integral.
struct GrowthBound {
  long long quad2 = 0;
  long long lin2 = 0;
  long long offset = 0;

  static GrowthBound linear(long long slope, long long offset = 0) { return {0, 2 * slope, offset}; }
  static GrowthBound quadratic(long long quad2, long long lin2, long long offset = 0) { return {quad2, lin2, offset}; }

  long long at(long long n) const { return (quad2 * n * n + lin2 * n) / 2 + offset; }
  /// min over all n' >= n of at(n').
  long long tail_min(long long n) const;
  /// True when at(n) is unbounded above, so a cutoff exists for every order.
  bool grows() const { return quad2 > 0 || (quad2 == 0 && lin2 > 0); }
};

/// Result of summing until the growth bound clears the working order.
/// `cutoff_order` is the certified minimum q-order of every omitted summand.
struct CertifiedSum {
  Series value;
  int terms = 0;
  long long cutoff_order = 0;
};

/// Sums term(0), term(1), ... while bound.tail_min(n) <= ctx.work_order().
/// `term` is called with strictly increasing n, so it may carry state.
/// Throws NonTruncatable if the bound does not grow.
CertifiedSum certified_sum(const EvalContext& ctx, const GrowthBound& bound, const std::function<Series(int)>& term);

/// Lowest q-valuation (x; q^r)_n can reach over all n >= 0, for a resolved x.
long long poch_valuation_floor(const Monomial& resolved, BaseExp base = {});

/// 1 - x.
Series one_minus(const Monomial& x, const EvalContext& ctx);

/// s * (1 - x), computed by shifting.
Series times_one_minus(const Series& s, const Monomial& x, const EvalContext& ctx);

/// s * x, exact: the window moves with the shift and is then clipped.
Series times_monomial(const Series& s, const Monomial& x, const EvalContext& ctx);
/// As times_monomial, for an x already passed through resolve().
Series times_resolved(const Series& s, const Monomial& resolved, const EvalContext& ctx);

/// s * (x; q^r)_n for n >= 0, by shifting.
Series times_poch(const Series& s, const Monomial& x, int n, const EvalContext& ctx, BaseExp base = {});

/// s * (x; q^r)_inf, by shifting.
Series times_poch_inf(const Series& s, const Monomial& x, const EvalContext& ctx, BaseExp base = {});

/// s / (x; q^r)_n for n >= 0.
Series divide_poch(const Series& s, const Monomial& x, int n, const EvalContext& ctx, BaseExp base = {});

/// sum_{k<n} min(0, e + r k) for the q-exponent e of a resolved x: the lowest
/// q-order a term of (x; q^r)_n can have.
long long poch_finite_valuation(const Monomial& resolved, int n, BaseExp base = {});

/// tau(n) = (-1)^n q^{n(n-1)/2}, any integer n.
Series tau(int n, const EvalContext& ctx);

/// (x; q^r)_n. For n < 0 this is 1 / prod_{j=1}^{-n} (1 - x q^{-rj}), which
/// throws NotInvertible when a factor vanishes.
Series poch_finite(const Monomial& x, int n, const EvalContext& ctx, BaseExp base = {});

/// (x; q^r)_inf truncated to the context window.
Series poch_inf(const Monomial& x, const EvalContext& ctx, BaseExp base = {});

/// (x; q)_{2n} / (x; q)_n = (x q^n; q)_n.
Series poch_double_ratio(const Monomial& x, int n, const EvalContext& ctx);

/// Partial theta function sum_{n>=0} tau(n) x^n.
Series partial_theta(const Monomial& x, const EvalContext& ctx);

/// Bilateral sum_{n in Z} tau(n) x^n. x must resolve to a nonzero rational
/// multiple of a q-power (PoleAtZero for zero, NotInvertible if formal).
Series complete_theta(const Monomial& x, const EvalContext& ctx);

/// (q, x, q/x; q)_inf, same restrictions on x as complete_theta.
Series triple_product_rhs(const Monomial& x, const EvalContext& ctx);

/// Ramanujan's psi(q), taken as the partial theta function at x = -q.
Series psi(const EvalContext& ctx);

/// Heine series 2phi1(A, B; C; q^r, z) with base q^r.
///
/// Terminating when A or B is literally q^{-m} with m a non-negative multiple
/// of r (coefficient 1, no a or b); the sum is then exact through n = m/r.
/// Otherwise z must resolve to positive q-order so the summands' q-order
/// grows, else NonTruncatable.
Series phi21(const Monomial& A, const Monomial& B, const Monomial& C, const Monomial& z, const EvalContext& ctx,
             BaseExp base = {});

/// Number of summands phi21() adds for these arguments.
int phi21_term_count(const Monomial& A, const Monomial& B, const Monomial& C, const Monomial& z,
                     const EvalContext& ctx, BaseExp base = {});

}  // namespace qseries
