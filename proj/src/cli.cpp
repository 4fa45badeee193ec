#include "qseries/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <variant>

#include "qseries/error.hpp"

namespace qseries {

using Json = nlohmann::ordered_json;

std::string rat_string(const Rat& r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); }

namespace {

struct Task {
  const IdentityDescriptor* desc;
  Instance inst;
};

struct Failure {
  ErrorKind kind;
  std::string message;
};

using Outcome = std::variant<VerificationReport, Failure>;

Rat parse_rat(const std::string& key, const std::string& text) {
  Rat r;
  if (r.set_str(text, 10) != 0) throw Error(ErrorKind::InvalidArgument, "--set " + key + ": not a rational: " + text);
  if (r.get_den() == 0) throw Error(ErrorKind::InvalidArgument, "--set " + key + ": zero denominator");
  r.canonicalize();
  return r;
}

int parse_int(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw Error(ErrorKind::InvalidArgument, "--set " + key + ": not an integer: " + text);
  return v;
}

Binding parse_binding(const std::string& key, const std::string& text) {
  return text == "formal" ? Binding::formal() : Binding::rational(parse_rat(key, text));
}

bool is_int_key(const std::string& key) { return key == "m" || key == "n" || key == "r" || key == "s"; }

// Applies --set overrides to an instance.
void apply_sets(const std::map<std::string, std::string>& sets, Instance& inst) {
  for (const auto& [key, value] : sets) {
    if (key == "a") {
      inst.point.a = parse_binding(key, value);
    } else if (key == "b") {
      inst.point.b = parse_binding(key, value);
    } else if (is_int_key(key)) {
      inst.ints[key] = parse_int(key, value);
    } else {
      inst.point.extras[key] = parse_rat(key, value);
    }
  }
}

void check_sets_for(const IdentityDescriptor& d, const std::map<std::string, std::string>& sets) {
  for (const auto& [key, value] : sets) {
    if (key == "a" || key == "b") continue;
    bool known = std::find(d.extras.begin(), d.extras.end(), key) != d.extras.end();
    for (const auto& p : d.int_params) known = known || p.name == key;
    if (!known) throw Error(ErrorKind::InvalidArgument, d.name + " has no parameter '" + key + "'");
  }
}

EvalContext settings_of(const RunConfig& c) {
  EvalContext s;
  s.order = c.order;
  s.slack = c.slack;
  s.degree_cap = c.degree_cap;
  s.validate();
  return s;
}

std::vector<Task> plan(const RunConfig& c, const Registry& reg) {
  std::vector<const IdentityDescriptor*> chosen;
  if (c.names.empty()) throw Error(ErrorKind::InvalidArgument, "verify needs identity names or 'all'");
  for (const auto& name : c.names) {
    if (name == "all") {
      for (const auto& d : reg.entries()) chosen.push_back(&d);
    } else {
      chosen.push_back(&reg.find(name));
    }
  }
  std::vector<Task> tasks;
  for (const auto* d : chosen) {
    if (!c.sets.empty()) check_sets_for(*d, c.sets);
    for (const auto& ints : int_combinations(*d)) {
      bool skip = false;
      for (const auto& [k, v] : ints) {
        auto it = c.sets.find(k);
        if (it != c.sets.end() && parse_int(k, it->second) != v) skip = true;
      }
      if (skip) continue;
      auto push = [&](Point p) {
        Instance inst{ints, std::move(p)};
        apply_sets(c.sets, inst);
        tasks.push_back({d, std::move(inst)});
      };
      if (!d->sampled()) {
        push(symbolic_point(*d, c.seed));
        continue;
      }
      for (int i = 0; i < c.points; ++i) push(sample_point(*d, c.seed, i));
      if (c.symbolic && d->engine == Engine::SymbolicOK) push(symbolic_point(*d, c.seed));
    }
  }
  return tasks;
}

std::vector<Outcome> execute(const std::vector<Task>& tasks, const EvalContext& settings, int jobs) {
  std::vector<Outcome> out(tasks.size(), Failure{ErrorKind::InvalidArgument, "not run"});
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        out[i] = verify(*tasks[i].desc, tasks[i].inst, settings);
      } catch (const Error& e) {
        out[i] = Failure{e.kind(), e.what()};
      } catch (const std::exception& e) {
        out[i] = Failure{ErrorKind::InvalidArgument, e.what()};
      }
    }
  };
  int n = jobs > 0 ? jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  n = std::min<int>(n, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::string binding_string(const Binding& b) { return b.is_formal() ? "formal" : rat_string(b.value()); }

Json point_json(const Point& p) {
  if (p.is_symbolic() && p.extras.empty()) return "symbolic";
  Json j = Json::object();
  j["a"] = binding_string(p.a);
  j["b"] = binding_string(p.b);
  for (const auto& [k, v] : p.extras) j[k] = rat_string(v);
  return j;
}

std::string point_text(const Point& p) {
  if (p.is_symbolic() && p.extras.empty()) return "symbolic";
  std::string s = "a=" + binding_string(p.a) + " b=" + binding_string(p.b);
  for (const auto& [k, v] : p.extras) s += " " + k + "=" + rat_string(v);
  return s;
}

std::string params_text(const std::map<std::string, int>& ints) {
  std::string s;
  for (const auto& [k, v] : ints) s += (s.empty() ? "" : ";") + k + "=" + std::to_string(v);
  return s;
}

std::string triple_text(const Exponent& e) {
  return "q^" + std::to_string(e.q) + " a^" + std::to_string(e.a) + " b^" + std::to_string(e.b);
}

struct Tally {
  int pass = 0, fail = 0, insufficient = 0, errors = 0;
};

Tally tally(const std::vector<Outcome>& results) {
  Tally t;
  for (const auto& r : results) {
    if (const auto* f = std::get_if<Failure>(&r)) {
      (f->kind == ErrorKind::InsufficientWindow ? t.insufficient : t.errors)++;
      continue;
    }
    switch (std::get<VerificationReport>(r).verdict) {
      case Verdict::Pass: ++t.pass; break;
      case Verdict::Fail: ++t.fail; break;
      case Verdict::Insufficient: ++t.insufficient; break;
    }
  }
  return t;
}

void write_verify(const RunConfig& c, const std::vector<Task>& tasks, const std::vector<Outcome>& results,
                  long long wall_ms, std::ostream& out, std::ostream& err) {
  const Tally t = tally(results);
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (const auto* f = std::get_if<Failure>(&results[i])) {
      err << tasks[i].desc->name << " [" << point_text(tasks[i].inst.point) << "]: " << f->message << "\n";
    }
  }
  if (c.output == OutputFormat::Json) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto* r = std::get_if<VerificationReport>(&results[i]);
      if (!r) continue;
      Json j;
      j["identity"] = r->name;
      Json params = Json::object();
      for (const auto& [k, v] : r->instance.ints) params[k] = v;
      j["params"] = params;
      j["point"] = point_json(r->instance.point);
      j["order"] = r->order;
      j["window"] = {{"q_lo", r->window.lo}, {"q_hi", r->window.hi}};
      j["verdict"] = to_string(r->verdict);
      if (r->first_diff) {
        const auto& d = *r->first_diff;
        j["first_diff"] = {{"e_q", d.at.q},
                           {"e_a", d.at.a},
                           {"e_b", d.at.b},
                           {"lhs", rat_string(d.lhs)},
                           {"rhs", rat_string(d.rhs)}};
      } else {
        j["first_diff"] = nullptr;
      }
      j["elapsed_ms"] = c.timing ? r->elapsed_ms : 0;
      arr.push_back(std::move(j));
    }
    Json doc;
    doc["results"] = std::move(arr);
    doc["summary"] = {{"seed", c.seed},       {"order", c.order},        {"points", c.points},
                      {"total", results.size()}, {"pass", t.pass},       {"fail", t.fail},
                      {"insufficient", t.insufficient}, {"errors", t.errors}, {"wall_ms", c.timing ? wall_ms : 0}};
    out << doc.dump(2) << "\n";
    return;
  }
  if (c.output == OutputFormat::Csv) {
    out << "identity,params,point,order,q_lo,q_hi,verdict,diff_e_q,diff_e_a,diff_e_b,diff_lhs,diff_rhs,elapsed_ms\n";
    for (const auto& res : results) {
      const auto* r = std::get_if<VerificationReport>(&res);
      if (!r) continue;
      out << r->name << "," << params_text(r->instance.ints) << "," << point_text(r->instance.point) << ","
          << r->order << "," << r->window.lo << "," << r->window.hi << "," << to_string(r->verdict) << ",";
      if (r->first_diff) {
        const auto& d = *r->first_diff;
        out << d.at.q << "," << d.at.a << "," << d.at.b << "," << rat_string(d.lhs) << "," << rat_string(d.rhs);
      } else {
        out << ",,,,";
      }
      out << "," << (c.timing ? r->elapsed_ms : 0) << "\n";
    }
    return;
  }
  for (const auto& res : results) {
    const auto* r = std::get_if<VerificationReport>(&res);
    if (!r) continue;
    std::string label = r->name;
    if (!r->instance.ints.empty()) label += " (" + params_text(r->instance.ints) + ")";
    out << (r->verdict == Verdict::Pass ? "PASS" : r->verdict == Verdict::Fail ? "FAIL" : "INSUFFICIENT") << "  "
        << label << "  [" << point_text(r->instance.point) << "]  q " << r->window.lo << ".." << r->window.hi;
    if (c.timing) out << "  " << r->elapsed_ms << " ms";
    out << "\n";
    if (r->first_diff) {
      const auto& d = *r->first_diff;
      out << "      first difference at " << triple_text(d.at) << ": lhs " << rat_string(d.lhs) << ", rhs "
          << rat_string(d.rhs) << "\n";
    }
    if (r->verdict == Verdict::Insufficient) {
      out << "      exact only through q^" << r->window.hi << "; raise --order or --slack\n";
    }
  }
  out << results.size() << " checks: " << t.pass << " pass, " << t.fail << " fail, " << t.insufficient
      << " insufficient";
  if (t.errors) out << ", " << t.errors << " errors";
  if (c.timing) out << " (" << wall_ms << " ms)";
  out << "\n";
}

int verify_exit(const std::vector<Outcome>& results) {
  const Tally t = tally(results);
  if (t.errors) return exit_code::kUsage;
  if (t.fail) return exit_code::kFail;
  if (t.insufficient) return exit_code::kInsufficient;
  return exit_code::kPass;
}

int run_verify(const RunConfig& c, const Registry& reg, std::ostream& out, std::ostream& err) {
  const EvalContext settings = settings_of(c);
  const auto tasks = plan(c, reg);
  const auto start = std::chrono::steady_clock::now();
  const auto results = execute(tasks, settings, c.jobs);
  const long long wall =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  write_verify(c, tasks, results, wall, out, err);
  return verify_exit(results);
}

int run_expand(const RunConfig& c, const Registry& reg, std::ostream& out) {
  if (c.names.size() != 1) throw Error(ErrorKind::InvalidArgument, "expand takes exactly one target");
  const std::string& target = c.names.front();
  Instance inst;
  apply_sets(c.sets, inst);
  const auto rows = expand(reg, target, inst, settings_of(c));
  if (c.output == OutputFormat::Json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"e_q", r.at.q}, {"e_a", r.at.a}, {"e_b", r.at.b}, {"coeff", rat_string(r.value)}});
    }
    Json doc;
    doc["target"] = target;
    doc["order"] = c.order;
    doc["point"] = point_json(inst.point);
    doc["rows"] = std::move(arr);
    out << doc.dump(2) << "\n";
  } else if (c.output == OutputFormat::Csv) {
    out << "e_q,e_a,e_b,coeff\n";
    for (const auto& r : rows) out << r.at.q << "," << r.at.a << "," << r.at.b << "," << rat_string(r.value) << "\n";
  } else {
    out << target << " [" << point_text(inst.point) << "] through q^" << c.order << "\n";
    for (const auto& r : rows) out << "  " << triple_text(r.at) << "  " << r.value.get_str() << "\n";
  }
  return exit_code::kPass;
}

int run_list(const RunConfig& c, const Registry& reg, std::ostream& out) {
  auto vars = [](const IdentityDescriptor& d) {
    std::string s;
    auto add = [&](const std::string& v) { s += (s.empty() ? "" : ",") + v; };
    if (d.uses_a) add("a");
    if (d.uses_b) add(d.fixed_b ? "b=" + d.fixed_b->get_str() : "b");
    for (const auto& e : d.extras) add(e);
    for (const auto& p : d.int_params) add(p.name + "=" + std::to_string(p.lo) + ".." + std::to_string(p.hi));
    return s;
  };
  if (c.output == OutputFormat::Json) {
    Json arr = Json::array();
    for (const auto& d : reg.entries()) {
      arr.push_back({{"identity", d.name},
                     {"engine", to_string(d.engine)},
                     {"parameters", vars(d)},
                     {"symbolic_only", d.symbolic_only},
                     {"formula", d.formula},
                     {"notes", d.notes}});
    }
    out << arr.dump(2) << "\n";
  } else if (c.output == OutputFormat::Csv) {
    out << "identity,engine,parameters,formula\n";
    for (const auto& d : reg.entries()) {
      out << d.name << "," << to_string(d.engine) << ",\"" << vars(d) << "\",\"" << d.formula << "\"\n";
    }
  } else {
    for (const auto& d : reg.entries()) {
      out << d.name << "  " << to_string(d.engine) << "  {" << vars(d) << "}\n    " << d.formula << "\n";
      if (!d.notes.empty()) out << "    note: " << d.notes << "\n";
    }
  }
  return exit_code::kPass;
}

// One sequential pass over every entry at its first point, timed per entry.
int run_bench(const RunConfig& c, const Registry& reg, std::ostream& out) {
  const EvalContext settings = settings_of(c);
  Json arr = Json::array();
  long long total = 0;
  for (const auto& d : reg.entries()) {
    const auto ints = int_combinations(d).front();
    Instance inst{ints, d.sampled() ? sample_point(d, c.seed, 0) : symbolic_point(d, c.seed)};
    const auto rep = verify(d, inst, settings);
    total += rep.elapsed_ms;
    if (c.output == OutputFormat::Human) {
      out << d.name << "  " << rep.elapsed_ms << " ms  " << to_string(rep.verdict) << "\n";
    } else if (c.output == OutputFormat::Csv) {
      if (arr.empty()) out << "identity,elapsed_ms,verdict\n";
      out << d.name << "," << rep.elapsed_ms << "," << to_string(rep.verdict) << "\n";
      arr.push_back(nullptr);
    } else {
      arr.push_back({{"identity", d.name}, {"elapsed_ms", rep.elapsed_ms}, {"verdict", to_string(rep.verdict)}});
    }
  }
  if (c.output == OutputFormat::Json) {
    out << Json{{"order", c.order}, {"results", arr}, {"total_ms", total}}.dump(2) << "\n";
  } else if (c.output == OutputFormat::Human) {
    out << "total " << total << " ms\n";
  }
  return exit_code::kPass;
}

int dispatch(const RunConfig& c, const Registry& reg, std::ostream& out, std::ostream& err) {
  switch (c.command) {
    case Command::List: return run_list(c, reg, out);
    case Command::Verify: return run_verify(c, reg, out, err);
    case Command::Expand: return run_expand(c, reg, out);
    case Command::Bench: return run_bench(c, reg, out);
  }
  return exit_code::kUsage;
}

}  // namespace

int run(const RunConfig& config, const Registry& reg, std::ostream& out, std::ostream& err) {
  try {
    if (config.order < 1) throw Error(ErrorKind::InvalidArgument, "--order must be >= 1");
    if (config.points < 1) throw Error(ErrorKind::InvalidArgument, "--points must be >= 1");
    if (config.output_file) {
      std::ostringstream buf;
      const int code = dispatch(config, reg, buf, err);
      std::ofstream file(*config.output_file);
      if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open " + *config.output_file);
      file << buf.str();
      return code;
    }
    return dispatch(config, reg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InsufficientWindow ? exit_code::kInsufficient : exit_code::kUsage;
  }
}

int cli_main(int argc, const char* const* argv, const Registry& reg, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Exact q-series expansion and identity verification"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output = "human";
  std::vector<std::string> sets;
  std::string output_file;
  app.add_option("--order", c.order, "q-order N to compare through")->capture_default_str();
  app.add_option("--points", c.points, "random points per identity")->capture_default_str();
  app.add_option("--seed", c.seed, "seed for point sampling")->capture_default_str();
  app.add_option("--degree-cap", c.degree_cap, "a, b degree cap for formal runs")->capture_default_str();
  app.add_option("--slack", c.slack, "extra working q-order")->capture_default_str();
  app.add_option("--output", output, "human, json or csv")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--jobs", c.jobs, "worker threads (0 = all cores)")->capture_default_str();
  app.add_flag("--no-timing", "report elapsed times as 0");
  app.add_flag("--symbolic", c.symbolic, "also run SymbolicOK identities with formal a, b");
  app.add_option("--set", sets, "name=value override (a, b, c, x, A, B, m, n, r, s)");
  app.add_option("--output-file", output_file, "write the report here instead of stdout");

  auto* list = app.add_subcommand("list", "list registered identities");
  auto* ver = app.add_subcommand("verify", "verify identities (names or 'all')");
  ver->add_option("names", c.names)->required();
  auto* exp = app.add_subcommand("expand", "print coefficients of a series");
  exp->add_option("target", c.names)->required()->expected(1);
  auto* bench = app.add_subcommand("bench", "time one check per identity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kPass : exit_code::kUsage;
  }
  if (list->parsed()) c.command = Command::List;
  if (ver->parsed()) c.command = Command::Verify;
  if (exp->parsed()) c.command = Command::Expand;
  if (bench->parsed()) c.command = Command::Bench;
  c.output = output == "json" ? OutputFormat::Json : output == "csv" ? OutputFormat::Csv : OutputFormat::Human;
  c.timing = app.count("--no-timing") == 0;
  if (!output_file.empty()) c.output_file = output_file;
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) {
      err << "error: --set expects name=value, got '" << s << "'\n";
      return exit_code::kUsage;
    }
    c.sets[s.substr(0, eq)] = s.substr(eq + 1);
  }
  return run(c, reg, out, err);
}

}  // namespace qseries
