#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qseries/context.hpp"
#include "qseries/qfun.hpp"
#include "qseries/series.hpp"

namespace qseries {

/// Lazily materialized sequence n -> Series with an explicit upper index.
/// Entries are computed once and cached; not safe for concurrent first access.
class SeriesSequence {
 public:
  using Generator = std::function<Series(int)>;

  SeriesSequence(Generator gen, int bound) : gen_(std::move(gen)), bound_(bound) {}

  /// Throws InvalidArgument for n < 0 or n > bound().
  const Series& at(int n) const;
  int bound() const noexcept { return bound_; }
  int materialized() const noexcept { return static_cast<int>(cache_.size()); }

 private:
  Generator gen_;
  int bound_;
  mutable std::vector<Series> cache_;
};

/// (alpha_n(t), beta_n(t)) relative to t, with q-order bounds that let
/// infinite sums over the pair be cut off with a certificate.
struct BaileyPair {
  std::string name;
  Monomial t;
  SeriesSequence alpha;
  std::optional<SeriesSequence> beta;
  /// q-order of alpha_n is at least alpha_bound.at(n).
  GrowthBound alpha_bound;
  /// q-order of every beta_n is at least this.
  long long beta_floor = 0;
};

/// Materialization bound used by the factories below.
inline constexpr int kDefaultPairBound = 96;

/// alpha_n = tau(n) (1 - ab q^{2n-1}) / (1 - ab/q) (ab/q; q)_n / (q; q)_n
/// relative to ab/q, with beta_n = [n == 0]. The factor (1 - ab/q) is
/// cancelled symbolically, so formal a, b are fine.
BaileyPair unit_pair(const EvalContext& ctx, int bound = kDefaultPairBound);

/// Relative to 0: alpha_n = (-1)^n x^n q^{(n^2-n)/2} / (q; q)_n,
/// beta_n = (x; q)_n / (q; q)_n.
BaileyPair t0_pair_one(const Monomial& x, const EvalContext& ctx, int bound = kDefaultPairBound);

/// Relative to 0: alpha_n = x^n q^{n^2} / (q, xq; q)_n, beta_n = 1 / (q, xq; q)_n.
BaileyPair t0_pair_two(const Monomial& x, const EvalContext& ctx, int bound = kDefaultPairBound);

/// beta_n = sum_{k<=n} alpha_k / ((q; q)_{n-k} (tq; q)_{n+k}) for one n.
Series beta_entry(const BaileyPair& pair, int n, const EvalContext& ctx);

/// Copy of `pair` whose beta is derived from alpha, materialized through n_max.
BaileyPair beta_from_alpha(const BaileyPair& pair, int n_max, const EvalContext& ctx);

/// Both sides of the L-transform for a pair relative to ab/q:
///   sum_n L(a q^{n+1}, b q^{n+1}) q^n alpha_n
///   (q, aq, bq; q)_inf sum_n (ab; q)_{2n} q^n beta_n / (aq, bq; q)_n.
/// The pair's t must resolve to ab/q under ctx (InvalidArgument otherwise),
/// and its beta must be present.
std::pair<Series, Series> warnaar_l_transform_sides(const BaileyPair& pair, const EvalContext& ctx);

}  // namespace qseries
