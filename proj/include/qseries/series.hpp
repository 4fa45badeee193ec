#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "qseries/rational.hpp"

namespace qseries {

/// Exponent triple of q^q a^a b^b. Ordered lexicographically by (q, a, b),
/// which is also the order used for every report and coefficient table.
struct Exponent {
  int q = 0;
  int a = 0;
  int b = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;

  Exponent operator+(const Exponent& o) const { return {q + o.q, a + o.a, b + o.b}; }
  Exponent operator-(const Exponent& o) const { return {q - o.q, a - o.a, b - o.b}; }
};

std::string to_string(const Exponent& e);

/// Closed exponent interval for one variable.
struct Range {
  int lo = 0;
  int hi = 0;

  bool contains(int e) const { return lo <= e && e <= hi; }
  bool empty() const { return hi < lo; }
  int extent() const { return empty() ? 0 : hi - lo + 1; }

  friend bool operator==(const Range&, const Range&) = default;
};

/// Truncation box of a Series.
///
/// `hi` is an exactness ceiling: every coefficient with all three exponents
/// inside the box is known exactly. `lo` is a support floor: the series has no
/// terms with q-exponent below q.lo at all, and none with a (resp. b) exponent
/// below a.lo (resp. b.lo) among terms whose q-exponent is at most q.hi. The
/// floors are what make truncated multiplication decidable: a product is exact
/// at w whenever every split w = u + v with u, v above the floors has both
/// factors inside their boxes.
struct Window {
  Range q;
  Range a;
  Range b;

  bool contains(const Exponent& e) const { return q.contains(e.q) && a.contains(e.a) && b.contains(e.b); }
  bool empty() const { return q.empty() || a.empty() || b.empty(); }

  friend bool operator==(const Window&, const Window&) = default;
};

std::string to_string(const Window& w);

/// Window of a product of series exact on `x` and `y`.
Window product_window(const Window& x, const Window& y);

/// Box-truncated formal Laurent series in q, a, b over exact rationals.
///
/// Storage is sparse and canonical: only nonzero coefficients inside the
/// window are kept. Values are immutable once built; all arithmetic returns
/// new series.
class Series {
 public:
  using Terms = std::map<Exponent, Rat>;

  /// Zero series on `window`. Throws EmptyWindow if the window is empty.
  explicit Series(const Window& window);

  /// Series with the given terms. Zero coefficients are dropped; terms
  /// outside `window` raise OutOfWindow.
  Series(const Window& window, Terms terms);

  /// c * q^e.q a^e.a b^e.b known up to the ceiling of `bounds`. The floor is
  /// min(bounds.lo, e) per variable, so negative exponents are admitted.
  static Series monomial(const Rat& c, const Exponent& e, const Window& bounds);

  const Window& window() const noexcept { return window_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Exact coefficient at an in-window triple; OutOfWindow otherwise.
  Rat coeff_at(const Exponent& e) const;
  Rat coeff_at(int e_q, int e_a, int e_b) const { return coeff_at(Exponent{e_q, e_a, e_b}); }

  /// Lowers every ceiling to at most `ceiling`'s (floors are kept, clamped so
  /// the window stays non-empty). Terms above the new ceiling are dropped.
  Series clipped(const Window& ceiling) const;

  /// Multiplication by the exact monomial q^s.q a^s.a b^s.b.
  Series shifted(const Exponent& s) const;

  Series operator-() const;

  friend Series operator+(const Series& x, const Series& y);
  friend Series operator-(const Series& x, const Series& y);
  friend Series operator*(const Series& x, const Series& y);
  friend Series operator*(const Rat& c, const Series& x);

 private:
  Window window_;
  Terms terms_;
};

/// Coefficientwise sum. Floors combine by min, ceilings by min.
Series add(const Series& x, const Series& y);

/// Truncated Cauchy product on product_window(x, y).
Series mul(const Series& x, const Series& y);

/// x / y. The divisor must be a Laurent unit: among its terms free of a and b,
/// the one of lowest q-order c*q^d must be such that every other stored term
/// lies at non-negative offset from (d, 0, 0) in all three exponents.
/// Throws NotInvertible otherwise.
Series divide(const Series& x, const Series& y);

/// 1 / s, with the same unit condition as divide().
Series invert(const Series& s);

/// Region on which two series can be compared: floors by min (below a floor a
/// coefficient is known to vanish), ceilings by min.
Window comparison_window(const Series& x, const Series& y);

struct Difference {
  Exponent at;
  Rat lhs;
  Rat rhs;
};

/// First triple in (q, a, b) order inside `region` where the coefficients
/// differ, or nullopt if they agree everywhere there. `region` must lie within
/// comparison_window(x, y) except below the floors.
std::optional<Difference> first_difference(const Series& x, const Series& y, const Window& region);

/// Coefficients agree everywhere in comparison_window(x, y).
bool equal_on_window(const Series& x, const Series& y);

/// Human-readable rendering, e.g. "1 - q + 2*q^3*a^2 [q 0..5, a 0..2, b 0..0]".
std::string to_string(const Series& s);

}  // namespace qseries
