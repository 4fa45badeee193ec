#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qseries/context.hpp"
#include "qseries/series.hpp"

namespace qseries {

enum class Engine { SymbolicOK, SpecializeOnly };

std::string to_string(Engine e);

/// Values for one identity run: integer parameters, bindings of a and b, and
/// any extra rational parameters (x, c, A, B).
struct Point {
  Binding a = Binding::formal();
  Binding b = Binding::formal();
  std::map<std::string, Rat> extras;

  bool is_symbolic() const { return a.is_formal() && b.is_formal(); }
};

struct Instance {
  std::map<std::string, int> ints;
  Point point;
};

/// Builds one side of an identity. `ctx` carries the a, b bindings and
/// orders; extras and integer parameters come from the instance.
using SideBuilder = std::function<Series(const Instance&, const EvalContext&)>;

struct IntParam {
  std::string name;
  int lo = 0;
  int hi = 0;
};

struct IdentityDescriptor {
  std::string name;
  /// Short statement of the identity checked, LHS = RHS.
  std::string formula;
  std::string notes;
  Engine engine = Engine::SpecializeOnly;
  bool uses_a = false;
  bool uses_b = false;
  /// Fixed rational value for b (the t = 0 Bailey pairs need b = 0).
  std::optional<Rat> fixed_b;
  std::vector<std::string> extras;
  std::vector<IntParam> int_params;
  /// Runs only with formal a and b, once per integer parameter combination.
  bool symbolic_only = false;
  /// Returns a reason when the point is excluded; a and b values of 0 or 1
  /// are always excluded for used variables without a fixed value.
  std::function<std::optional<std::string>(const Point&)> pole;
  SideBuilder lhs;
  SideBuilder rhs;

  /// True when no rational value needs sampling.
  bool sampled() const { return !symbolic_only && (uses_a || (uses_b && !fixed_b) || !extras.empty()); }
};

class Registry {
 public:
  explicit Registry(std::vector<IdentityDescriptor> entries);

  /// The standard registry.
  static const Registry& standard();

  const std::vector<IdentityDescriptor>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  /// Throws UnknownIdentity.
  const IdentityDescriptor& find(const std::string& name) const;
  bool contains(const std::string& name) const;

 private:
  std::vector<IdentityDescriptor> entries_;
};

/// Excluded-point check: the descriptor's pole set plus the 0/1 rule.
std::optional<std::string> pole_reason(const IdentityDescriptor& d, const Point& p);

/// All integer parameter combinations of a descriptor, in lexicographic order.
std::vector<std::map<std::string, int>> int_combinations(const IdentityDescriptor& d);

/// Random point number `index` for a descriptor: values p/p' with
/// 2 <= p, p' <= 50 and p != p', redrawn while they hit the pole set. Fully
/// determined by (seed, name, index).
Point sample_point(const IdentityDescriptor& d, std::uint64_t seed, int index);

/// Point with formal a and b and extras taken from sample_point(.., 0).
Point symbolic_point(const IdentityDescriptor& d, std::uint64_t seed);

enum class Verdict { Pass, Fail, Insufficient };

std::string to_string(Verdict v);

struct VerificationReport {
  std::string name;
  Instance instance;
  int order = 0;
  /// Compared q-range: [lowest floor, order] on pass or fail; on
  /// insufficient, hi is the highest exact q-order achieved.
  Range window;
  Verdict verdict = Verdict::Pass;
  std::optional<Difference> first_diff;
  long long elapsed_ms = 0;
};

/// Builds both sides at order + slack and compares them on q in
/// [lowest floor, order] and the shared a, b range. Throws
/// PoleAtRequestedPoint if the point is excluded.
VerificationReport verify(const IdentityDescriptor& d, const Instance& inst, const EvalContext& settings);

/// Looks the name up first (UnknownIdentity).
VerificationReport verify(const Registry& reg, const std::string& name, const Instance& inst,
                          const EvalContext& settings);

/// Context for an instance: orders and cap from `settings`, a and b from the
/// point.
EvalContext context_for(const Point& p, const EvalContext& settings);

/// One coefficient row of an expansion.
struct CoefficientRow {
  Exponent at;
  Rat value;
};

/// Named series for expand(): kernels, special functions, and identity
/// sides written "<identity>.lhs" / "<identity>.rhs".
std::vector<std::string> expand_targets(const Registry& reg);

/// Evaluates a target. Integer parameters (m, n, r, s) and extras come from
/// the instance; a and b from its point. Throws UnknownIdentity.
Series expand_series(const Registry& reg, const std::string& target, const Instance& inst,
                     const EvalContext& settings);

/// Rows for q in [floor, order]: every q when the series has no a or b
/// dependence, otherwise the nonzero coefficients only.
std::vector<CoefficientRow> expand(const Registry& reg, const std::string& target, const Instance& inst,
                                   const EvalContext& settings);

}  // namespace qseries
