#include "qseries/context.hpp"

#include <sstream>

#include "qseries/error.hpp"

namespace qseries {

Monomial::Monomial(Rat coef, int e_q, int e_a, int e_b)
    : coef_(std::move(coef)), e_q_(e_q), e_a_(e_a), e_b_(e_b) {
  if (sgn(coef_) == 0) e_q_ = e_a_ = e_b_ = 0;
}

Monomial Monomial::pow(int n) const {
  if (n < 0) return Monomial::constant(Rat(1)) / pow(-n);
  Rat c(1);
  for (int i = 0; i < n; ++i) c *= coef_;
  return {c, e_q_ * n, e_a_ * n, e_b_ * n};
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  return {x.coef_ * y.coef_, x.e_q_ + y.e_q_, x.e_a_ + y.e_a_, x.e_b_ + y.e_b_};
}

Monomial operator/(const Monomial& x, const Monomial& y) {
  if (y.is_zero()) throw Error(ErrorKind::PoleAtZero, "division by the zero monomial");
  return {x.coef_ / y.coef_, x.e_q_ - y.e_q_, x.e_a_ - y.e_a_, x.e_b_ - y.e_b_};
}

std::string to_string(const Monomial& m) {
  std::ostringstream os;
  os << m.coef().get_str();
  if (m.e_q() != 0) os << "*q^" << m.e_q();
  if (m.e_a() != 0) os << "*a^" << m.e_a();
  if (m.e_b() != 0) os << "*b^" << m.e_b();
  return os.str();
}

EvalContext EvalContext::specialized(const Rat& a, const Rat& b, int order, int slack) {
  EvalContext ctx;
  ctx.a = Binding::rational(a);
  ctx.b = Binding::rational(b);
  ctx.order = order;
  ctx.slack = slack;
  return ctx;
}

EvalContext EvalContext::symbolic(int order, int degree_cap, int slack) {
  EvalContext ctx;
  ctx.order = order;
  ctx.degree_cap = degree_cap;
  ctx.slack = slack;
  return ctx;
}

Window EvalContext::window() const {
  const Range a_range = a.is_formal() ? Range{0, degree_cap} : Range{0, 0};
  const Range b_range = b.is_formal() ? Range{0, degree_cap} : Range{0, 0};
  return {{0, work_order()}, a_range, b_range};
}

void EvalContext::validate() const {
  if (order < 1) throw Error(ErrorKind::InvalidArgument, "order must be >= 1");
  if (slack < 0) throw Error(ErrorKind::InvalidArgument, "slack must be >= 0");
  if (degree_cap < 1) throw Error(ErrorKind::InvalidArgument, "degree cap must be >= 1");
  if (laurent_floor > 0) throw Error(ErrorKind::InvalidArgument, "laurent floor must be <= 0");
}

EvalContext EvalContext::with_a(const Binding& v) const {
  EvalContext c = *this;
  c.a = v;
  return c;
}

EvalContext EvalContext::with_b(const Binding& v) const {
  EvalContext c = *this;
  c.b = v;
  return c;
}

EvalContext EvalContext::with_order(int n) const {
  EvalContext c = *this;
  c.order = n;
  return c;
}

Monomial resolve(const Monomial& m, const EvalContext& ctx) {
  if (m.is_zero()) return m;
  Rat coef = m.coef();
  int e_a = m.e_a();
  int e_b = m.e_b();
  auto fold = [&](const Binding& binding, int& e, const char* name) {
    if (e == 0) return;
    if (binding.is_formal()) {
      if (e < ctx.laurent_floor) {
        throw Error(ErrorKind::PoleAtZero, std::string("formal ") + name + "^" + std::to_string(e) +
                                               " below laurent floor " + std::to_string(ctx.laurent_floor));
      }
      return;
    }
    const Rat& v = binding.value();
    if (sgn(v) == 0) {
      if (e < 0) throw Error(ErrorKind::PoleAtZero, std::string(name) + "^" + std::to_string(e) + " at " + name + " = 0");
      coef = 0;
    } else {
      Rat p(1);
      for (int i = 0; i < std::abs(e); ++i) p *= v;
      coef = e > 0 ? Rat(coef * p) : Rat(coef / p);
    }
    e = 0;
  };
  fold(ctx.a, e_a, "a");
  fold(ctx.b, e_b, "b");
  return {coef, m.e_q(), e_a, e_b};
}

Series eval_monomial(const Monomial& m, const EvalContext& ctx) {
  const Monomial r = resolve(m, ctx);
  return Series::monomial(r.coef(), {r.e_q(), r.e_a(), r.e_b()}, ctx.window());
}

Series constant(const Rat& c, const EvalContext& ctx) {
  return Series::monomial(c, Exponent{}, ctx.window());
}

Series clip(const Series& s, const EvalContext& ctx) { return s.clipped(ctx.window()); }

}  // namespace qseries
