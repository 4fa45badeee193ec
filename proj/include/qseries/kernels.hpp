#pragma once

#include <functional>
#include <vector>

#include "qseries/context.hpp"
#include "qseries/qfun.hpp"
#include "qseries/series.hpp"

namespace qseries {

/// Products T_n = prod_x (x q^n; q)_inf for n = 0..count-1, built from the top
/// index down so each step costs one binomial per argument.
std::vector<Series> poch_inf_tails(const std::vector<Monomial>& xs, int count, const EvalContext& ctx);

/// sum_n weight(n, T_n) with T_n as in poch_inf_tails(tails, ...), summed while
/// bound.tail_min(n) <= work_order. `bound` covers weight(n, 1) only; the
/// tails' own valuation floors are added here. weight() receives T_n and
/// returns its product with the n-th coefficient.
Series tail_weighted_sum(const std::vector<Monomial>& tails, const GrowthBound& bound,
                         const std::function<Series(int, const Series&)>& weight, const EvalContext& ctx);

/// U_m(b), with b the context variable unless given. m = 0 is the partial
/// theta function; m >= 1 is the m-term terminating sum.
Series u_series(int m, const EvalContext& ctx, const Monomial& b = Monomial::var_b());

/// U_m(b) summed straight from its defining series, including m = 0.
Series u_series_generic(int m, const EvalContext& ctx, const Monomial& b = Monomial::var_b());

/// Summands u_series(m) adds (m for m >= 1).
int u_term_count(int m);

/// V_{m,n}(a,b) as the terminating 2phi1.
Series v_series(int m, int n, const EvalContext& ctx);

/// f(b, c) from its defining series.
Series f_series(const Monomial& b, const Monomial& c, const EvalContext& ctx);

/// g_n(a, b, c) as a terminating 2phi1. Needs a bound to a nonzero rational
/// (or a Laurent floor of at most -n).
Series g_series(int n, const Monomial& c, const EvalContext& ctx);

/// L(x, y). The ratio (xy/q^2; q)_{2n} / (xy/q^2; q)_n is taken as
/// (xy q^{n-2}; q)_n and the infinite products absorb the denominators, so no
/// division happens.
Series l_series(const Monomial& x, const Monomial& y, const EvalContext& ctx);
Series l_series(const EvalContext& ctx);

/// L(a q^i, b q^i).
Series l_shifted(int i, const EvalContext& ctx);

/// P(x, y), as L with xy/q^3.
Series p_series(const Monomial& x, const Monomial& y, const EvalContext& ctx);
Series p_series(const EvalContext& ctx);

/// (q, x, y; q)_inf sum_n (z; q)_{2n} q^n / (q, x, y, z q^shift; q)_n, for
/// shift in {0, 1}. L and P are z = xy/q^2, xy/q^3 with shift 0.
Series pair_kernel(const Monomial& x, const Monomial& y, const Monomial& z, int shift, const EvalContext& ctx);

/// The summand t(x, y; n) = (xy/q^2; q)_{2n} q^n / (q, x, y, xy/q^2; q)_n.
Series t_summand(const Monomial& x, const Monomial& y, int n, const EvalContext& ctx);
Series t_summand(int n, const EvalContext& ctx);

/// Right-hand side of the U_m theta expansion:
/// (q, a, b; q)_inf sum_n (ab q^{n-1}; q)_n q^n V_{m,n} / ((q, a; q)_n (b; q)_{m+n}).
Series main_expansion(int m, const EvalContext& ctx);

}  // namespace qseries
