#include "qseries/series.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <vector>

#include "qseries/error.hpp"

namespace qseries {

namespace {

// Dense boxes above this many cells fall back to map accumulation.
constexpr std::size_t kDenseLimit = std::size_t{1} << 22;

void require_nonempty(const Window& w, const char* where) {
  if (w.empty()) throw Error(ErrorKind::EmptyWindow, std::string(where) + ": window " + to_string(w) + " is empty");
}

Range clamp_floor(Range r) {
  r.lo = std::min(r.lo, r.hi);
  return r;
}

// Row-major view of a window in (q, a, b) order, so index order equals
// Exponent order.
class Box {
 public:
  explicit Box(const Window& w) : w_(w), na_(w.a.extent()), nb_(w.b.extent()) {}

  std::size_t size() const {
    return static_cast<std::size_t>(w_.q.extent()) * static_cast<std::size_t>(na_) * static_cast<std::size_t>(nb_);
  }
  std::size_t index(const Exponent& e) const {
    return (static_cast<std::size_t>(e.q - w_.q.lo) * na_ + static_cast<std::size_t>(e.a - w_.a.lo)) * nb_ +
           static_cast<std::size_t>(e.b - w_.b.lo);
  }
  Exponent exponent(std::size_t i) const {
    const int b = static_cast<int>(i % nb_);
    i /= nb_;
    const int a = static_cast<int>(i % na_);
    i /= na_;
    return {static_cast<int>(i) + w_.q.lo, a + w_.a.lo, b + w_.b.lo};
  }

  Series::Terms collect(const std::vector<Rat>& cells) const {
    Series::Terms out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (sgn(cells[i]) != 0) out.emplace_hint(out.end(), exponent(i), cells[i]);
    }
    return out;
  }

 private:
  Window w_;
  int na_;
  int nb_;
};

}  // namespace

std::string to_string(const Exponent& e) {
  return "(" + std::to_string(e.q) + ", " + std::to_string(e.a) + ", " + std::to_string(e.b) + ")";
}

std::string to_string(const Window& w) {
  std::ostringstream os;
  os << "[q " << w.q.lo << ".." << w.q.hi << ", a " << w.a.lo << ".." << w.a.hi << ", b " << w.b.lo << ".."
     << w.b.hi << "]";
  return os.str();
}

Window product_window(const Window& x, const Window& y) {
  auto one = [](const Range& r, const Range& s) {
    return Range{r.lo + s.lo, std::min(r.hi + s.lo, s.hi + r.lo)};
  };
  return {one(x.q, y.q), one(x.a, y.a), one(x.b, y.b)};
}

Series::Series(const Window& window) : window_(window) { require_nonempty(window_, "Series"); }

Series::Series(const Window& window, Terms terms) : window_(window), terms_(std::move(terms)) {
  require_nonempty(window_, "Series");
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (!window_.contains(it->first)) {
      throw Error(ErrorKind::OutOfWindow, "term " + to_string(it->first) + " outside " + to_string(window_));
    }
    it = sgn(it->second) == 0 ? terms_.erase(it) : std::next(it);
  }
}

Series Series::monomial(const Rat& c, const Exponent& e, const Window& bounds) {
  auto floor = [](const Range& r, int v) { return Range{std::min({r.lo, v, r.hi}), r.hi}; };
  Window w{floor(bounds.q, e.q), floor(bounds.a, e.a), floor(bounds.b, e.b)};
  Series s(w);
  if (sgn(c) != 0 && w.contains(e)) s.terms_.emplace(e, c);
  return s;
}

Rat Series::coeff_at(const Exponent& e) const {
  if (!window_.contains(e)) {
    throw Error(ErrorKind::OutOfWindow, "coefficient " + to_string(e) + " requested outside " + to_string(window_));
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Series Series::clipped(const Window& ceiling) const {
  Window w = window_;
  w.q.hi = std::min(w.q.hi, ceiling.q.hi);
  w.a.hi = std::min(w.a.hi, ceiling.a.hi);
  w.b.hi = std::min(w.b.hi, ceiling.b.hi);
  w = {clamp_floor(w.q), clamp_floor(w.a), clamp_floor(w.b)};
  if (w == window_) return *this;
  Series out(w);
  for (const auto& [e, c] : terms_) {
    if (w.contains(e)) out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

Series Series::shifted(const Exponent& s) const {
  Window w{{window_.q.lo + s.q, window_.q.hi + s.q},
           {window_.a.lo + s.a, window_.a.hi + s.a},
           {window_.b.lo + s.b, window_.b.hi + s.b}};
  Series out(w);
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + s, c);
  return out;
}

Series Series::operator-() const {
  Series out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Series operator+(const Series& x, const Series& y) { return add(x, y); }
Series operator-(const Series& x, const Series& y) { return add(x, -y); }
Series operator*(const Series& x, const Series& y) { return mul(x, y); }

Series operator*(const Rat& c, const Series& x) {
  if (sgn(c) == 0) return Series(x.window());
  Series out = x;
  for (auto& [e, v] : out.terms_) v *= c;
  return out;
}

Series add(const Series& x, const Series& y) {
  const Window& wx = x.window();
  const Window& wy = y.window();
  auto one = [](const Range& r, const Range& s) { return Range{std::min(r.lo, s.lo), std::min(r.hi, s.hi)}; };
  Window w{one(wx.q, wy.q), one(wx.a, wy.a), one(wx.b, wy.b)};
  require_nonempty(w, "add");
  Series::Terms terms;
  auto ix = x.terms().begin();
  auto iy = y.terms().begin();
  const auto ex = x.terms().end();
  const auto ey = y.terms().end();
  while (ix != ex || iy != ey) {
    if (iy == ey || (ix != ex && ix->first < iy->first)) {
      if (w.contains(ix->first)) terms.emplace_hint(terms.end(), *ix);
      ++ix;
    } else if (ix == ex || iy->first < ix->first) {
      if (w.contains(iy->first)) terms.emplace_hint(terms.end(), *iy);
      ++iy;
    } else {
      if (w.contains(ix->first)) {
        Rat s = ix->second + iy->second;
        if (sgn(s) != 0) terms.emplace_hint(terms.end(), ix->first, std::move(s));
      }
      ++ix;
      ++iy;
    }
  }
  return Series(w, std::move(terms));
}

Series mul(const Series& x, const Series& y) {
  const Window w = product_window(x.window(), y.window());
  require_nonempty(w, "mul");
  if (x.is_zero() || y.is_zero()) return Series(w);

  const Box box(w);
  if (box.size() <= kDenseLimit) {
    std::vector<Rat> cells(box.size());
    Rat prod;
    for (const auto& [ex, cx] : x.terms()) {
      if (ex.q + w.q.lo - x.window().q.lo > w.q.hi) break;
      for (const auto& [ey, cy] : y.terms()) {
        const Exponent e = ex + ey;
        if (e.q > w.q.hi) break;
        if (!w.contains(e)) continue;
        mpq_mul(prod.get_mpq_t(), cx.get_mpq_t(), cy.get_mpq_t());
        Rat& cell = cells[box.index(e)];
        mpq_add(cell.get_mpq_t(), cell.get_mpq_t(), prod.get_mpq_t());
      }
    }
    return Series(w, box.collect(cells));
  }

  Series::Terms acc;
  for (const auto& [ex, cx] : x.terms()) {
    for (const auto& [ey, cy] : y.terms()) {
      const Exponent e = ex + ey;
      if (e.q > w.q.hi) break;
      if (w.contains(e)) acc[e] += cx * cy;
    }
  }
  return Series(w, std::move(acc));
}

Series divide(const Series& x, const Series& y) {
  // Leading unit: lowest q-order among a,b-free terms.
  std::optional<Exponent> lead;
  for (const auto& [e, c] : y.terms()) {
    if (e.a == 0 && e.b == 0) {
      lead = e;
      break;
    }
  }
  if (!lead) {
    throw Error(ErrorKind::NotInvertible, "divisor has no a,b-free term: " + to_string(y));
  }
  const Rat c0 = y.terms().at(*lead);

  struct Step {
    Exponent offset;
    Rat coef;
  };
  std::vector<Step> rest;
  for (const auto& [e, c] : y.terms()) {
    if (e == *lead) continue;
    const Exponent v = e - *lead;
    if (v.q < 0 || v.a < 0 || v.b < 0) {
      throw Error(ErrorKind::NotInvertible,
                  "divisor term " + to_string(e) + " lies below its leading unit at " + to_string(*lead));
    }
    rest.push_back({v, c / c0});
  }

  // Window of 1/y: floor (-d, 0, 0); the unit part is exact up to y's
  // ceilings measured from the leading term.
  const int d = lead->q;
  const Window& wy = y.window();
  const Window inverse{{-d, wy.q.hi - 2 * d}, {0, wy.a.hi}, {0, wy.b.hi}};
  const Window w = product_window(x.window(), inverse);
  require_nonempty(w, "divide");
  if (x.is_zero()) return Series(w);

  const Box box(w);
  if (box.size() > kDenseLimit) {
    throw Error(ErrorKind::InvalidArgument, "divide: window " + to_string(w) + " too large");
  }
  std::vector<Rat> cells(box.size());
  for (const auto& [e, c] : x.terms()) {
    const Exponent t{e.q - d, e.a, e.b};
    if (w.contains(t)) cells[box.index(t)] = c / c0;
  }
  Rat prod;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Exponent at = box.exponent(i);
    Rat& cell = cells[i];
    for (const auto& step : rest) {
      const Exponent from = at - step.offset;
      if (from.q < w.q.lo || from.a < w.a.lo || from.b < w.b.lo) continue;
      const Rat& prev = cells[box.index(from)];
      if (sgn(prev) == 0) continue;
      mpq_mul(prod.get_mpq_t(), step.coef.get_mpq_t(), prev.get_mpq_t());
      mpq_sub(cell.get_mpq_t(), cell.get_mpq_t(), prod.get_mpq_t());
    }
  }
  return Series(w, box.collect(cells));
}

Series invert(const Series& s) {
  const Window& ws = s.window();
  // The numerator 1 is exact everywhere; its ceiling only has to clear the
  // inverse's own ceiling.
  const Window unit_window{{0, std::max(ws.q.hi - ws.q.lo, 0)}, {0, std::max(ws.a.hi, 0)}, {0, std::max(ws.b.hi, 0)}};
  return divide(Series(unit_window, {{Exponent{}, Rat(1)}}), s);
}

Window comparison_window(const Series& x, const Series& y) {
  const Window& wx = x.window();
  const Window& wy = y.window();
  auto one = [](const Range& r, const Range& s) { return Range{std::min(r.lo, s.lo), std::min(r.hi, s.hi)}; };
  return {one(wx.q, wy.q), one(wx.a, wy.a), one(wx.b, wy.b)};
}

std::optional<Difference> first_difference(const Series& x, const Series& y, const Window& region) {
  static const Rat zero(0);
  auto ix = x.terms().begin();
  auto iy = y.terms().begin();
  const auto ex = x.terms().end();
  const auto ey = y.terms().end();
  while (ix != ex || iy != ey) {
    Exponent at;
    const Rat* cx = &zero;
    const Rat* cy = &zero;
    if (iy == ey || (ix != ex && ix->first < iy->first)) {
      at = ix->first;
      cx = &ix->second;
      ++ix;
    } else if (ix == ex || iy->first < ix->first) {
      at = iy->first;
      cy = &iy->second;
      ++iy;
    } else {
      at = ix->first;
      cx = &ix->second;
      cy = &iy->second;
      ++ix;
      ++iy;
    }
    if (at.q > region.q.hi) break;
    if (region.contains(at) && *cx != *cy) return Difference{at, *cx, *cy};
  }
  return std::nullopt;
}

bool equal_on_window(const Series& x, const Series& y) {
  return !first_difference(x, y, comparison_window(x, y)).has_value();
}

std::string to_string(const Series& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    const bool unit_term = e.q != 0 || e.a != 0 || e.b != 0;
    Rat mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (!unit_term || mag != 1) {
      os << mag.get_str();
      need_star = true;
    }
    auto power = [&](const char* name, int k) {
      if (k == 0) return;
      if (need_star) os << "*";
      os << name;
      if (k != 1) os << "^" << k;
      need_star = true;
    };
    power("q", e.q);
    power("a", e.a);
    power("b", e.b);
  }
  if (first) os << "0";
  os << " " << to_string(s.window());
  return os.str();
}

}  // namespace qseries
