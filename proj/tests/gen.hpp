#pragma once

// Hand-rolled generators for the property tests.

#include <cstdint>
#include <random>

#include "qseries/context.hpp"
#include "qseries/series.hpp"

namespace gen {

using qseries::Rat;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int range(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return rng_() & 1u; }

  // small nonzero rational
  Rat rat() {
    Rat r(range(1, 9) * (coin() ? 1 : -1), range(1, 7));
    r.canonicalize();
    return r;
  }

  // rational outside {0, 1}
  Rat generic() {
    for (;;) {
      Rat r = rat();
      if (r != 1) return r;
    }
  }

  qseries::Window window() {
    qseries::Window w;
    w.q.lo = range(-2, 0);
    w.q.hi = w.q.lo + range(3, 10);
    w.a.lo = 0;
    w.a.hi = range(0, 3);
    w.b.lo = 0;
    w.b.hi = range(0, 2);
    return w;
  }

  qseries::Series series(const qseries::Window& w) {
    qseries::Series::Terms terms;
    const int count = range(0, 8);
    for (int i = 0; i < count; ++i) {
      terms[{range(w.q.lo, w.q.hi), range(w.a.lo, w.a.hi), range(w.b.lo, w.b.hi)}] = rat();
    }
    return qseries::Series(w, std::move(terms));
  }

  qseries::Series series() { return series(window()); }

  // c q^d (1 + r) with every term of r strictly above (d, 0, 0)
  qseries::Series unit(const qseries::Window& w) {
    const int d = range(w.q.lo, std::min(w.q.lo + 2, w.q.hi));
    qseries::Series::Terms terms;
    terms[{d, 0, 0}] = rat();
    const int count = range(0, 6);
    for (int i = 0; i < count; ++i) {
      qseries::Exponent e{range(d, w.q.hi), range(0, w.a.hi), range(0, w.b.hi)};
      if (e == qseries::Exponent{d, 0, 0}) continue;
      terms[e] = rat();
    }
    return qseries::Series(w, std::move(terms));
  }

  qseries::EvalContext context(int order) {
    qseries::EvalContext ctx;
    ctx.order = order;
    ctx.degree_cap = range(2, 4);
    if (coin()) ctx.a = qseries::Binding::rational(generic());
    if (coin()) ctx.b = qseries::Binding::rational(generic());
    return ctx;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
