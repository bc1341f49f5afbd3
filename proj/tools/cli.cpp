#include "cli.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "linksplit/bounds.hpp"

namespace linksplit::cli {

namespace {

using nlohmann::json;

struct UsageError : Error {
  using Error::Error;
};

struct RunConfig {
  std::string command;
  std::string field = "f2";
  std::string weights = "auto";
  std::string format = "text";
  std::string input;
  std::string name;
  std::string results;
  int threads = 0;
  bool oracle = false;
  bool assume_nonsplit = false;
  std::size_t oracle_cap = kDefaultOracleCap;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw MalformedPD("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// A PD file, or one entry of a link table (chosen by --name when it has several).
LinkDiagram load_diagram(const RunConfig& cfg) {
  const std::string text = read_input(cfg.input);
  if (text.find('\t') == std::string::npos) return parse_pd(text);
  const auto table = parse_link_table(text);
  if (cfg.name.empty()) {
    if (table.size() == 1) return parse_pd(table.front().pd);
    throw UsageError("input is a link table with several entries; pick one with --name");
  }
  for (const auto& e : table)
    if (e.name == cfg.name) return parse_pd(e.pd);
  throw UsageError("no link named '" + cfg.name + "' in " + cfg.input);
}

template <Field F>
std::vector<F> parse_weights(const std::string& spec, int m) {
  if (spec == "auto") {
    if (F::cardinality() != 0 && static_cast<std::size_t>(m) > F::cardinality())
      throw UsageError("field too small for distinct weights: " + std::to_string(m) + " components");
    return default_weights<F>(m);
  }
  std::vector<F> w;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      w.push_back(F::parse(item));
    } catch (const Error& e) {
      throw UsageError(std::string("bad weight: ") + e.what());
    }
  }
  if (static_cast<int>(w.size()) != m)
    throw UsageError("expected " + std::to_string(m) + " weights, got " + std::to_string(w.size()));
  return w;
}

json poincare_json(const PoincarePolynomial& p) {
  json terms = json::array();
  for (const auto& [key, rank] : p.terms) terms.push_back({key.first, key.second, rank});
  return {{"poincare", terms}, {"rank", p.rank()}};
}

template <Field F>
int cmd_kh(const RunConfig& cfg, std::ostream& out) {
  const auto d = load_diagram(cfg);
  const auto kh = khovanov<F>(d);
  if (cfg.format == "json") out << poincare_json(kh).dump() << '\n';
  else out << kh.to_string() << '\n';
  return kOk;
}

template <Field F>
int cmd_ss(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto d = load_diagram(cfg);
  const auto c = build(d, parse_weights<F>(cfg.weights, d.num_components()));
  const auto s = pages_by_cancellation(c);
  if (cfg.oracle) {
    const auto direct = pages_direct(c, cfg.oracle_cap);
    if (direct.pages != s.pages) {
      err << "linksplit: cancellation pages disagree with the direct computation\n";
      return kInvariant;
    }
  }
  const int b = collapse_page(s);
  if (cfg.format == "json") {
    json pages = json::array();
    for (const auto& p : s.pages) pages.push_back(json::parse(page_to_json(p, s.m)));
    out << json{{"pages", pages}, {"b", b}}.dump() << '\n';
  } else if (cfg.format == "tsv") {
    for (const auto& p : s.pages) out << 'E' << p.index << '\t' << p.rank() << '\t' << p.poincare(s.m).to_string() << '\n';
    out << "b\t" << b << '\n';
  } else {
    for (const auto& p : s.pages)
      out << 'E' << p.index << "  rank " << p.rank() << "  " << p.poincare(s.m).to_string() << '\n';
    out << "collapse page b = " << b << '\n';
  }
  return kOk;
}

void print_report(const SplitReport& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << report_to_json(r) << '\n';
    return;
  }
  if (format == "tsv") {
    out << r.b_lk_prime << '\t' << r.b << '\t' << r.u << '\t' << r.sp_min << '\t' << r.sp_max << '\n';
    return;
  }
  for (const auto& e : r.lk) out << "lk(" << e.i << ',' << e.j << ") = " << e.value << '\n';
  out << "b'_lk = " << r.b_lk_prime << "\nb = " << r.b << "\nu = " << r.u << '\n';
  if (r.sp_min == r.sp_max) out << "sp = " << r.sp_min << '\n';
  else out << "sp in [" << r.sp_min << ", " << r.sp_max << "]\n";
}

template <Field F>
int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  const auto d = load_diagram(cfg);
  const auto r = sp_report<F>(d, parse_weights<F>(cfg.weights, d.num_components()), cfg.assume_nonsplit);
  print_report(r, cfg.format, out);
  return kOk;
}

template <Field F>
int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const auto d = load_diagram(cfg);
  std::vector<std::pair<std::string, bool>> checks;
  SignAssignment s;
  bool signs_ok = true;
  try {
    s = sign_assignment(d);
  } catch (const InconsistentSigns&) {
    signs_ok = false;
  }
  checks.emplace_back("sign assignment", signs_ok && is_sign_assignment(d, s));
  if (signs_ok) {
    bool graded = true;
    std::optional<FilteredComplex<F>> c;
    try {
      c = build(d, parse_weights<F>(cfg.weights, d.num_components()), s);
    } catch (const InvariantViolation&) {
      graded = false;
    }
    checks.emplace_back("grading invariants", graded);
    if (c) checks.emplace_back("d^2 = 0", verify_d_squared(*c).ok);
  }
  checks.emplace_back("Euler characteristic = state sum", khovanov<F>(d).euler_characteristic() == jones_statesum(d));
  bool all = true;
  if (cfg.format == "json") {
    json j = json::object();
    for (const auto& [name, ok] : checks) j[name] = ok;
    out << j.dump() << '\n';
  }
  for (const auto& [name, ok] : checks) {
    if (cfg.format != "json") out << (ok ? "ok    " : "FAIL  ") << name << '\n';
    all = all && ok;
  }
  return all ? kOk : kInvariant;
}

struct BatchRow {
  std::string name;
  bool ok = false;
  SplitReport report;
  std::string error;
};

std::string batch_key(const std::string& name, const RunConfig& cfg) {
  return name + '\t' + cfg.field + '\t' + cfg.weights + (cfg.assume_nonsplit ? "\tnonsplit" : "");
}

template <Field F>
int cmd_batch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto table = parse_link_table(read_input(cfg.input));
  // Results file lines: key columns, then the report JSON.
  std::map<std::string, SplitReport> done;
  if (!cfg.results.empty()) {
    std::ifstream in(cfg.results);
    std::string line;
    while (std::getline(in, line)) {
      const auto cut = line.rfind('\t');
      if (cut == std::string::npos) continue;
      try {
        done[line.substr(0, cut)] = report_from_json(line.substr(cut + 1));
      } catch (const Error&) {
        err << "linksplit: ignoring unreadable results line\n";
      }
    }
  }
  std::vector<BatchRow> rows(table.size());
  std::mutex results_mutex;
  std::ofstream results;
  if (!cfg.results.empty()) results.open(cfg.results, std::ios::app);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < table.size(); k = next++) {
      auto& row = rows[k];
      row.name = table[k].name;
      const std::string key = batch_key(row.name, cfg);
      if (auto it = done.find(key); it != done.end()) {
        row.ok = true;
        row.report = it->second;
        continue;
      }
      try {
        const auto d = parse_pd(table[k].pd);
        row.report = sp_report<F>(d, parse_weights<F>(cfg.weights, d.num_components()), cfg.assume_nonsplit);
        row.ok = true;
        if (results.is_open()) {
          std::lock_guard lock(results_mutex);
          results << key << '\t' << report_to_json(row.report) << '\n' << std::flush;
        }
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  };
  const int threads = std::max(1, cfg.threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  if (cfg.format != "json") out << "name\tb_lk_prime\tb\tu\n";
  for (const auto& row : rows) {
    if (!row.ok) {
      err << "linksplit: " << row.name << ": " << row.error << '\n';
      continue;
    }
    if (cfg.format == "json") {
      json j = json::parse(report_to_json(row.report));
      j["name"] = row.name;
      out << j.dump() << '\n';
    } else {
      out << row.name << '\t' << row.report.b_lk_prime << '\t' << row.report.b << '\t' << row.report.u << '\n';
    }
  }
  return kOk;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const FieldSpec spec = [&] {
    try {
      return FieldSpec::parse(cfg.field);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }();
  return visit_field(spec, [&]<Field F>() -> int {
    if (cfg.command == "kh") return cmd_kh<F>(cfg, out);
    if (cfg.command == "ss") return cmd_ss<F>(cfg, out, err);
    if (cfg.command == "bounds") return cmd_bounds<F>(cfg, out);
    if (cfg.command == "check") return cmd_check<F>(cfg, out);
    return cmd_batch<F>(cfg, out, err);
  });
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Khovanov homology and the link splitting spectral sequence", "linksplit"};
  app.require_subcommand(1);
  RunConfig cfg;
  if (const char* env = std::getenv("LINKSPLIT_THREADS")) cfg.threads = std::atoi(env);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", cfg.field, "f2, gf2k:K (K = 2, 3, 4, 8, 16) or q")->capture_default_str();
    sub->add_option("--weights", cfg.weights, "comma-separated component weights, or auto")->capture_default_str();
    sub->add_option("--format", cfg.format, "text, json or tsv")
        ->check(CLI::IsMember({"text", "json", "tsv"}))
        ->capture_default_str();
    sub->add_option("--threads", cfg.threads, "worker threads (default LINKSPLIT_THREADS or 1)");
    sub->add_flag("--oracle", cfg.oracle, "cross-check pages against the direct computation");
    sub->add_option("--oracle-cap", cfg.oracle_cap, "largest complex for the direct computation")
        ->capture_default_str();
    sub->add_flag("--assume-nonsplit", cfg.assume_nonsplit, "treat the link as known to be non-split");
    sub->add_option("--name", cfg.name, "entry to use when the input is a link table");
    sub->add_option("input", cfg.input, "PD file, link table, or - for stdin")->required();
  };
  const std::pair<const char*, const char*> commands[] = {
      {"kh", "Khovanov homology"},
      {"ss", "spectral sequence pages and collapse page"},
      {"bounds", "splitting number bounds"},
      {"check", "structural self-checks"},
      {"batch", "splitting bounds for every entry of a link table"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub);
    if (std::string(name) == "batch")
      sub->add_option("--results", cfg.results, "append-only results file used to resume");
    sub->callback([&cfg, n = std::string(name)] { cfg.command = n; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kUsage;
  }
  try {
    return dispatch(cfg, out, err);
  } catch (const UsageError& e) {
    err << "linksplit: " << e.what() << '\n';
    return kUsage;
  } catch (const WeightFieldMismatch& e) {
    err << "linksplit: " << e.what() << '\n';
    return kUsage;
  } catch (const MalformedPD& e) {
    err << "linksplit: " << e.what() << '\n';
    return kParse;
  } catch (const ArcMultiplicity& e) {
    err << "linksplit: " << e.what() << '\n';
    return kParse;
  } catch (const TraceFailure& e) {
    err << "linksplit: " << e.what() << '\n';
    return kParse;
  } catch (const InvariantViolation& e) {
    err << "linksplit: " << e.what() << '\n';
    return kInvariant;
  } catch (const InconsistentSigns& e) {
    err << "linksplit: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::exception& e) {
    err << "linksplit: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace linksplit::cli
