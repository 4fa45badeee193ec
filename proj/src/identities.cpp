#include "qseries/identities.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "qseries/error.hpp"
#include "qseries/kernels.hpp"
#include "qseries/qfun.hpp"

namespace qseries {

std::string to_string(Engine e) { return e == Engine::SymbolicOK ? "SymbolicOK" : "SpecializeOnly"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Insufficient: return "insufficient";
  }
  return "?";
}

Registry::Registry(std::vector<IdentityDescriptor> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (entries_[i].name == entries_[j].name) {
        throw Error(ErrorKind::InvalidArgument, "duplicate identity '" + entries_[i].name + "'");
      }
    }
  }
}

const IdentityDescriptor& Registry::find(const std::string& name) const {
  for (const auto& d : entries_) {
    if (d.name == name) return d;
  }
  throw Error(ErrorKind::UnknownIdentity, "unknown identity '" + name + "'");
}

bool Registry::contains(const std::string& name) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const auto& d) { return d.name == name; });
}

std::optional<std::string> pole_reason(const IdentityDescriptor& d, const Point& p) {
  auto degenerate = [](const Binding& v, const char* name) -> std::optional<std::string> {
    if (v.is_formal()) return std::nullopt;
    if (v.value() == 0 || v.value() == 1) return std::string(name) + " = " + v.value().get_str();
    return std::nullopt;
  };
  if (d.uses_a) {
    if (auto r = degenerate(p.a, "a")) return r;
  }
  if (d.uses_b) {
    if (d.fixed_b) {
      if (p.b.is_formal() || p.b.value() != *d.fixed_b) return "b must be " + d.fixed_b->get_str();
    } else if (auto r = degenerate(p.b, "b")) {
      return r;
    }
  }
  for (const auto& key : d.extras) {
    auto it = p.extras.find(key);
    if (it == p.extras.end()) return "missing " + key;
    if (it->second == 0 || it->second == 1) return key + " = " + it->second.get_str();
  }
  return d.pole ? d.pole(p) : std::nullopt;
}

std::vector<std::map<std::string, int>> int_combinations(const IdentityDescriptor& d) {
  std::vector<std::map<std::string, int>> out{{}};
  for (const auto& p : d.int_params) {
    std::vector<std::map<std::string, int>> next;
    for (const auto& base : out) {
      for (int v = p.lo; v <= p.hi; ++v) {
        auto m = base;
        m[p.name] = v;
        next.push_back(std::move(m));
      }
    }
    out = std::move(next);
  }
  return out;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// splitmix64 finalizer
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

Rat draw(std::mt19937_64& rng) {
  for (;;) {
    const long p = 2 + static_cast<long>(rng() % 49);
    const long p2 = 2 + static_cast<long>(rng() % 49);
    if (p == p2) continue;
    Rat r(p, p2);
    r.canonicalize();
    return r;
  }
}

}  // namespace

Point sample_point(const IdentityDescriptor& d, std::uint64_t seed, int index) {
  std::mt19937_64 rng(mix(mix(seed) ^ fnv1a(d.name)) ^ mix(static_cast<std::uint64_t>(index) + 1));
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Point p;
    if (d.uses_a) p.a = Binding::rational(draw(rng));
    if (d.fixed_b) {
      p.b = Binding::rational(*d.fixed_b);
    } else if (d.uses_b) {
      p.b = Binding::rational(draw(rng));
    }
    for (const auto& key : d.extras) p.extras[key] = draw(rng);
    if (!pole_reason(d, p)) return p;
  }
  throw Error(ErrorKind::InvalidArgument, "no admissible point found for '" + d.name + "'");
}

Point symbolic_point(const IdentityDescriptor& d, std::uint64_t seed) {
  Point p;
  if (!d.extras.empty()) p.extras = sample_point(d, seed, 0).extras;
  if (d.fixed_b) p.b = Binding::rational(*d.fixed_b);
  return p;
}

EvalContext context_for(const Point& p, const EvalContext& settings) {
  EvalContext ctx = settings;
  ctx.a = p.a;
  ctx.b = p.b;
  return ctx;
}

VerificationReport verify(const IdentityDescriptor& d, const Instance& inst, const EvalContext& settings) {
  if (auto why = pole_reason(d, inst.point)) {
    throw Error(ErrorKind::PoleAtRequestedPoint, d.name + ": excluded point (" + *why + ")");
  }
  const auto start = std::chrono::steady_clock::now();
  const EvalContext ctx = context_for(inst.point, settings);
  ctx.validate();

  VerificationReport rep;
  rep.name = d.name;
  rep.instance = inst;
  rep.order = ctx.order;
  const Series lhs = d.lhs(inst, ctx);
  const Series rhs = d.rhs(inst, ctx);
  Window region = comparison_window(lhs, rhs);
  rep.window = {region.q.lo, std::min(region.q.hi, ctx.order)};
  if (region.q.hi < ctx.order) {
    rep.verdict = Verdict::Insufficient;
  } else {
    region.q.hi = ctx.order;
    rep.first_diff = first_difference(lhs, rhs, region);
    rep.verdict = rep.first_diff ? Verdict::Fail : Verdict::Pass;
  }
  rep.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

VerificationReport verify(const Registry& reg, const std::string& name, const Instance& inst,
                          const EvalContext& settings) {
  return verify(reg.find(name), inst, settings);
}

namespace {

const char* const kKernelTargets[] = {"theta", "L", "P", "psi", "poch_inf_q", "poch_inf_a",
                                      "U",     "V", "f", "g",   "t"};

int need_int(const Instance& in, const std::string& key, const std::string& target) {
  auto it = in.ints.find(key);
  if (it == in.ints.end()) throw Error(ErrorKind::InvalidArgument, target + " needs " + key + "=<int>");
  return it->second;
}

Monomial need_extra(const Instance& in, const std::string& key, const std::string& target) {
  auto it = in.point.extras.find(key);
  if (it == in.point.extras.end()) throw Error(ErrorKind::InvalidArgument, target + " needs " + key + "=<rational>");
  return Monomial::constant(it->second);
}

}  // namespace

std::vector<std::string> expand_targets(const Registry& reg) {
  std::vector<std::string> out(std::begin(kKernelTargets), std::end(kKernelTargets));
  for (const auto& d : reg.entries()) {
    out.push_back(d.name + ".lhs");
    out.push_back(d.name + ".rhs");
  }
  return out;
}

Series expand_series(const Registry& reg, const std::string& target, const Instance& inst,
                     const EvalContext& settings) {
  const EvalContext ctx = context_for(inst.point, settings);
  ctx.validate();
  const Monomial a = Monomial::var_a();
  const Monomial b = Monomial::var_b();
  if (target == "theta") return partial_theta(a, ctx);
  if (target == "L") return l_series(ctx);
  if (target == "P") return p_series(ctx);
  if (target == "psi") return psi(ctx);
  if (target == "poch_inf_q") return poch_inf(Monomial::q_power(1), ctx);
  if (target == "poch_inf_a") return poch_inf(a, ctx);
  if (target == "U") return u_series(need_int(inst, "m", target), ctx);
  if (target == "V") return v_series(need_int(inst, "m", target), need_int(inst, "n", target), ctx);
  if (target == "f") return f_series(b, need_extra(inst, "c", target), ctx);
  if (target == "g") return g_series(need_int(inst, "n", target), need_extra(inst, "c", target), ctx);
  if (target == "t") return t_summand(need_int(inst, "n", target), ctx);

  const auto dot = target.rfind('.');
  if (dot != std::string::npos) {
    const std::string side = target.substr(dot + 1);
    if (side == "lhs" || side == "rhs") {
      const auto& d = reg.find(target.substr(0, dot));
      Instance full = inst;
      for (const auto& p : d.int_params) {
        if (!full.ints.count(p.name)) full.ints[p.name] = p.lo;
      }
      if (d.fixed_b && full.point.b.is_formal()) full.point.b = Binding::rational(*d.fixed_b);
      const EvalContext dctx = context_for(full.point, settings);
      return side == "lhs" ? d.lhs(full, dctx) : d.rhs(full, dctx);
    }
  }
  throw Error(ErrorKind::UnknownIdentity, "unknown expansion target '" + target + "'");
}

std::vector<CoefficientRow> expand(const Registry& reg, const std::string& target, const Instance& inst,
                                   const EvalContext& settings) {
  const Series s = expand_series(reg, target, inst, settings);
  const int n = settings.order;
  if (s.window().q.hi < n) {
    throw Error(ErrorKind::InsufficientWindow, target + " is exact only through q^" + std::to_string(s.window().q.hi));
  }
  const bool flat = std::all_of(s.terms().begin(), s.terms().end(),
                                [](const auto& t) { return t.first.a == 0 && t.first.b == 0; });
  std::vector<CoefficientRow> rows;
  if (flat) {
    for (int q = s.window().q.lo; q <= n; ++q) {
      auto it = s.terms().find(Exponent{q, 0, 0});
      rows.push_back({Exponent{q, 0, 0}, it == s.terms().end() ? Rat(0) : it->second});
    }
  } else {
    for (const auto& [e, c] : s.terms()) {
      if (e.q <= n) rows.push_back({e, c});
    }
  }
  return rows;
}

}  // namespace qseries
