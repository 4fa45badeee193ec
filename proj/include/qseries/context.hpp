#pragma once

#include <optional>
#include <string>

#include "qseries/rational.hpp"
#include "qseries/series.hpp"

namespace qseries {

/// c * q^q * a^a * b^b, the argument shape of every factorial and theta call.
/// The zero monomial is canonical: coefficient 0 with all exponents 0.
class Monomial {
 public:
  Monomial() = default;
  Monomial(Rat coef, int e_q, int e_a = 0, int e_b = 0);

  static Monomial constant(const Rat& c) { return {c, 0}; }
  static Monomial q_power(int e, const Rat& c = Rat(1)) { return {c, e}; }
  static Monomial var_a() { return {Rat(1), 0, 1, 0}; }
  static Monomial var_b() { return {Rat(1), 0, 0, 1}; }

  const Rat& coef() const noexcept { return coef_; }
  int e_q() const noexcept { return e_q_; }
  int e_a() const noexcept { return e_a_; }
  int e_b() const noexcept { return e_b_; }
  bool is_zero() const noexcept { return sgn(coef_) == 0; }

  /// Multiplies by q^k.
  Monomial times_q(int k) const { return *this * q_power(k); }
  Monomial pow(int n) const;

  friend Monomial operator*(const Monomial& x, const Monomial& y);
  /// Throws PoleAtZero when dividing by the zero monomial.
  friend Monomial operator/(const Monomial& x, const Monomial& y);
  friend Monomial operator-(const Monomial& x) { return {-x.coef_, x.e_q_, x.e_a_, x.e_b_}; }
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  Rat coef_{0};
  int e_q_ = 0;
  int e_a_ = 0;
  int e_b_ = 0;
};

std::string to_string(const Monomial& m);

/// Binding of a symbolic variable: either left formal, or specialized to an
/// exact rational.
class Binding {
 public:
  static Binding formal() { return Binding{}; }
  static Binding rational(const Rat& v) { return Binding{v}; }

  bool is_formal() const noexcept { return !value_.has_value(); }
  /// Precondition: !is_formal().
  const Rat& value() const { return *value_; }

  friend bool operator==(const Binding&, const Binding&) = default;

 private:
  Binding() = default;
  explicit Binding(const Rat& v) : value_(v) {}
  std::optional<Rat> value_;
};

/// Engine selection and truncation orders for one computation.
///
/// Internal computations run up to q-order `order + slack`; callers report on
/// [floor, order]. When a or b is formal its exponents are kept up to
/// `degree_cap`, and may go down to `laurent_floor` in monomial arguments.
struct EvalContext {
  Binding a = Binding::formal();
  Binding b = Binding::formal();
  int order = 30;
  int slack = 8;
  int degree_cap = 10;
  int laurent_floor = 0;

  static EvalContext specialized(const Rat& a, const Rat& b, int order = 30, int slack = 8);
  static EvalContext symbolic(int order = 30, int degree_cap = 10, int slack = 8);

  int work_order() const noexcept { return order + slack; }

  /// Window of a constant under this context: q in [0, work_order]; a, b in
  /// [0, degree_cap] when formal and [0, 0] when bound.
  Window window() const;

  /// Throws InvalidArgument on order < 1, slack < 0, degree_cap < 1 or
  /// laurent_floor > 0.
  void validate() const;

  EvalContext with_a(const Binding& v) const;
  EvalContext with_b(const Binding& v) const;
  EvalContext with_order(int n) const;
};

/// Folds rational bindings of a and b into the coefficient. Formal variables
/// keep their exponents. Throws PoleAtZero when a negative exponent meets a
/// zero binding, or a formal exponent goes below laurent_floor.
Monomial resolve(const Monomial& m, const EvalContext& ctx);

/// The resolved monomial as a one-term Series on ctx.window().
Series eval_monomial(const Monomial& m, const EvalContext& ctx);

/// Constant series c.
Series constant(const Rat& c, const EvalContext& ctx);

/// Restricts s to the context's ceilings.
Series clip(const Series& s, const EvalContext& ctx);

}  // namespace qseries
