#include "cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "halfperm/diagrams/contractions.hpp"
#include "halfperm/diagrams/enumerate.hpp"
#include "halfperm/diagrams/figures.hpp"
#include "halfperm/diagrams/recursion_maps.hpp"
#include "halfperm/diagrams/serialize.hpp"
#include "halfperm/diagrams/verify.hpp"
#include "halfperm/poly/golden.hpp"
#include "halfperm/poly/identities.hpp"
#include "halfperm/rmt/report.hpp"
#include "halfperm/wick/verify.hpp"

namespace halfperm::cli {

namespace {

using nlohmann::json;

struct Output {
  std::string format = "text";
  std::string path;
};

void add_output_flags(CLI::App* cmd, Output& o) {
  cmd->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", o.path, "write the report here instead of stdout");
}

void emit(const Output& o, const std::string& content, std::ostream& out) {
  if (o.path.empty()) out << content;
  else write_atomically(o.path, content);
}

std::string render(double v) { return std::isfinite(v) ? json(v).dump() : "null"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

json argv_json(const std::vector<std::string>& args) { return json(args); }

// ---- tables -------------------------------------------------------------

struct TablesArgs {
  std::string table;
  int rows = 5;
  bool check = false;
  Output output;
};

int cmd_tables(const TablesArgs& a, const std::vector<std::string>& args, std::ostream& out) {
  std::string name = a.table;
  const bool inverse = name.size() > 8 && name.ends_with("-inverse");
  if (inverse) name.resize(name.size() - 8);
  const Family f = parse_family(name);
  if (a.rows < 1 || a.rows > kDefaultTableSize)
    throw std::invalid_argument("--rows must lie in [1, " + std::to_string(kDefaultTableSize) + "]");
  const TransitionMatrix forward = transition_matrix(f, a.rows);
  const TransitionMatrix m = inverse ? invert_unitriangular(forward) : forward;

  std::vector<Check> checks;
  if (a.check) {
    if (inverse) checks = check_golden_inverse(f, std::min(a.rows, 5));
    else if (f == Family::GammaTilde) checks = check_golden_forward(std::min(a.rows, 4));
    else throw std::invalid_argument("no printed fixture for table " + a.table + "; --check needs an inverse table or gamma-tilde");
  }
  const bool pass = all_pass(checks);

  std::string body;
  if (a.output.format == "json") {
    json rows = json::array();
    for (int n = 0; n < m.size(); ++n) {
      json row = json::array();
      for (int k = 0; k <= n; ++k) row.push_back(m(n, k).to_string());
      rows.push_back(row);
    }
    json j{{"command", "tables"}, {"argv", argv_json(args)}, {"table", a.table}, {"rows", rows}};
    if (a.check) {
      json cj = json::array();
      for (const auto& c : checks) cj.push_back({{"identity", c.identity}, {"instance", c.instance}, {"pass", c.pass}, {"detail", c.detail}});
      j["checks"] = cj;
      j["pass"] = pass;
    }
    body = j.dump(2) + "\n";
  } else if (a.output.format == "csv") {
    body = m.to_csv();
  } else {
    body = a.table + "\n" + m.to_text();
    if (a.check) {
      long failed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; });
      for (const auto& c : checks)
        if (!c.pass) body += "FAIL " + c.identity + " " + c.instance + ": " + c.detail + "\n";
      body += std::string(pass ? "PASS" : "FAIL") + " golden rows: " + std::to_string(checks.size() - failed) + "/" +
              std::to_string(checks.size()) + " entries match\n";
    }
  }
  emit(a.output, body, out);
  return pass ? kExitPass : kExitFail;
}

// ---- enumerate ----------------------------------------------------------

struct EnumerateArgs {
  std::string kind;
  int n = -1;
  int k = -1;
  int m = -1;
  int cap = kDefaultEnumerationCap;
  long limit = -1;
  Output output;
};

template <typename T>
std::string diagram_text(const T& d) {
  return d.to_string();
}

int cmd_enumerate(const EnumerateArgs& a, const std::vector<std::string>& args, std::ostream& out) {
  auto need = [](int v, const char* flag) {
    if (v < 0) throw std::invalid_argument(std::string("missing ") + flag);
  };
  std::vector<std::string> text;
  json items = json::array();
  PolyC weight;
  json params;
  auto collect = [&](const auto& diagrams, Weight w) {
    for (const auto& d : diagrams) {
      if (a.limit >= 0 && static_cast<long>(text.size()) >= a.limit) break;
      text.push_back(diagram_text(d));
      items.push_back(to_json(d));
    }
    weight = weighted_count(diagrams, w);
    return static_cast<long>(diagrams.size());
  };
  long count = 0;
  std::string weight_kind;
  if (a.kind == "nc") {
    need(a.n, "--n");
    params = {{"n", a.n}};
    count = collect(enum_nc(a.n, a.cap), Weight::AllBlocks);
    weight_kind = "all blocks";
  } else if (a.kind == "ncc" || a.kind == "ncl") {
    need(a.n, "--n");
    need(a.k, "--k");
    params = {{"n", a.n}, {"k", a.k}};
    count = a.kind == "ncc" ? collect(enum_ncc(a.n, a.k, a.cap), Weight::ClosedBlocks)
                            : collect(enum_ncl(a.n, a.k, a.cap), Weight::ClosedBlocks);
    weight_kind = "closed blocks";
  } else if (a.kind == "snc") {
    need(a.m, "--m");
    need(a.n, "--n");
    params = {{"m", a.m}, {"n", a.n}};
    count = collect(enum_snc(a.m, a.n, a.cap), Weight::AllBlocks);
    weight_kind = "all blocks";
  } else {
    throw std::invalid_argument("unknown kind " + a.kind);
  }

  std::string body;
  if (a.output.format == "json") {
    json j{{"command", "enumerate"}, {"argv", argv_json(args)}, {"kind", a.kind}, {"params", params},
           {"count", count}, {"weight", weight.to_string()}, {"weight_kind", weight_kind}, {"diagrams", items}};
    body = j.dump(2) + "\n";
  } else if (a.output.format == "csv") {
    std::ostringstream os;
    os << "index,diagram\n";
    for (size_t i = 0; i < text.size(); ++i) os << i << ',' << csv_field(text[i]) << '\n';
    body = os.str();
  } else {
    std::ostringstream os;
    for (const auto& t : text) os << t << '\n';
    os << count << (count == 1 ? " diagram" : " diagrams") << ", weight (" << weight_kind << ") " << weight.to_string() << '\n';
    body = os.str();
  }
  emit(a.output, body, out);
  return kExitPass;
}

// ---- verify -------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  int max_n = -1;
  int order = 12;
  int depth = 5;
  Output output;
};

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"tables",  "recursions", "bijections", "cut-reassemble", "lineardecomp",
                                              "series",  "oracles",    "figures",    "contractions",   "wick",
                                              "all"};
  return names;
}

std::vector<Check> run_suite(const VerifyArgs& a, const std::string& suite) {
  auto n_or = [&](int fallback) { return a.max_n >= 0 ? a.max_n : fallback; };
  std::vector<Check> out;
  if (suite == "tables") {
    out = check_golden_tables();
  } else if (suite == "recursions") {
    const int n = n_or(10);
    out = check_polynomial_identities(n + 2);
    append(out, check_circular_recursion(n));
    append(out, check_linear_recursion(n));
  } else if (suite == "bijections") {
    const int n = n_or(8);
    out = check_dot_bijections(n);
    append(out, check_kreweras(n));
    append(out, check_split_bijection(std::min(n, 6)));
  } else if (suite == "cut-reassemble") {
    out = check_cut_reassemble(n_or(10));
  } else if (suite == "lineardecomp") {
    out = check_lineardecomp(n_or(10));
    append(out, check_decomposition_theorem(std::min(n_or(10), 8)));
  } else if (suite == "series") {
    out = check_series_identities(a.order);
  } else if (suite == "oracles") {
    out = a.max_n >= 0 ? check_oracles(a.max_n, a.max_n) : check_oracles();
  } else if (suite == "figures") {
    out = check_figure_fixtures();
  } else if (suite == "contractions") {
    out = check_lemma17();
    append(out, check_lemma18());
    append(out, check_covariance_contractions());
    append(out, check_spoke_weights(n_or(5)));
  } else if (suite == "wick") {
    WickConfig cfg;
    cfg.depth = a.depth;
    cfg.max_word = std::min(cfg.max_word, a.depth - 1);
    out = wick_suite(cfg);
  } else if (suite == "all") {
    for (const auto& s : suite_names())
      if (s != "all") append(out, run_suite(a, s));
  } else {
    throw std::invalid_argument("unknown suite " + suite);
  }
  return out;
}

int cmd_verify(const VerifyArgs& a, const std::vector<std::string>& args, std::ostream& out) {
  if (a.depth < 4 || a.depth > 6) throw std::invalid_argument("--depth must lie in [4, 6]; the worked examples use four-letter words");
  const std::vector<Check> checks = run_suite(a, a.suite);
  const bool pass = all_pass(checks);
  double max_residual = std::nan("");
  for (const auto& c : checks)
    if (!std::isnan(c.residual)) max_residual = std::isnan(max_residual) ? c.residual : std::max(max_residual, c.residual);
  const long failures = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; });

  std::string body;
  if (a.output.format == "json") {
    json cj = json::array();
    for (const auto& c : checks)
      cj.push_back({{"identity", c.identity},
                    {"instance", c.instance},
                    {"pass", c.pass},
                    {"detail", c.detail},
                    {"residual", std::isnan(c.residual) ? json(nullptr) : json(c.residual)}});
    json j{{"command", "verify"}, {"argv", argv_json(args)}, {"suite", a.suite},     {"checks", cj},
           {"count", checks.size()}, {"failures", failures},  {"max_residual", std::isnan(max_residual) ? json(nullptr) : json(max_residual)},
           {"pass", pass}};
    body = j.dump(2) + "\n";
  } else if (a.output.format == "csv") {
    std::ostringstream os;
    os << "identity,instance,pass,residual,detail\n";
    for (const auto& c : checks)
      os << csv_field(c.identity) << ',' << csv_field(c.instance) << ',' << (c.pass ? "true" : "false") << ','
         << (std::isnan(c.residual) ? "" : render(c.residual)) << ',' << csv_field(c.detail) << '\n';
    body = os.str();
  } else {
    // One line per identity, in first-seen order.
    std::vector<std::string> order;
    std::map<std::string, std::pair<long, long>> tally;
    std::map<std::string, double> worst;
    for (const auto& c : checks) {
      if (!tally.count(c.identity)) order.push_back(c.identity);
      auto& t = tally[c.identity];
      ++t.first;
      t.second += c.pass;
      if (!std::isnan(c.residual)) worst[c.identity] = std::max(worst[c.identity], c.residual);
    }
    std::ostringstream os;
    for (const auto& id : order) {
      const auto [n, ok] = tally[id];
      os << (n == ok ? "PASS " : "FAIL ") << id << "  " << ok << "/" << n;
      if (worst.count(id)) os << "  max residual " << render(worst[id]);
      os << '\n';
    }
    for (const auto& c : checks)
      if (!c.pass) os << "  failed " << c.identity << " [" << c.instance << "] " << c.detail << '\n';
    os << (pass ? "PASS" : "FAIL") << " suite " << a.suite << ": " << checks.size() - failures << "/" << checks.size()
       << " checks";
    if (!std::isnan(max_residual)) os << ", max residual " << render(max_residual);
    os << '\n';
    body = os.str();
  }
  emit(a.output, body, out);
  return pass ? kExitPass : kExitFail;
}

// ---- mc -----------------------------------------------------------------

struct McArgs {
  std::string experiment;
  int N = 200;
  std::string c = "1";
  int M = -1;
  int p = -1;
  long samples = 20000;
  std::uint64_t seed = 1;
  int max_degree = 3;
  std::string mixed;
  int m = 1;
  int n = 1;
  std::string sizes = "8,16,32";
  int degree = 3;
  int threads = 0;
  Output output;
};

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("not an integer: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

// "m1,m2:i1,i2;m1,m2,m3:i1,i2,i3"
std::vector<TraceStatistic> parse_mixed(const std::string& s) {
  std::vector<TraceStatistic> out;
  std::stringstream ss(s);
  std::string word;
  while (std::getline(ss, word, ';')) {
    const auto colon = word.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("mixed word needs degrees:indices, got " + word);
    out.push_back(TraceStatistic::mixed(parse_int_list(word.substr(0, colon)), parse_int_list(word.substr(colon + 1))));
  }
  return out;
}

int cmd_mc(const McArgs& a, const std::vector<std::string>& args, std::ostream& out) {
  const int default_p = a.experiment == "diagonalize" ? 2 : 1;
  const int p = a.p > 0 ? a.p : default_p;
  const EnsembleConfig cfg = a.M > 0 ? EnsembleConfig::with_rows(a.N, a.M, p, a.samples, a.seed)
                                     : EnsembleConfig::with_ratio(a.N, parse_rational(a.c), p, a.samples, a.seed);
  MomentReport r;
  if (a.experiment == "diagonalize") {
    DiagonalizationOptions opt;
    opt.max_degree = a.max_degree;
    opt.threads = a.threads;
    if (!a.mixed.empty()) {
      opt.mixed = parse_mixed(a.mixed);
      opt.all_mixed = false;
    }
    r = experiment_diagonalization(cfg, opt);
  } else if (a.experiment == "raw-cov") {
    r = experiment_raw_covariance(cfg, a.m, a.n, a.threads);
  } else if (a.experiment == "convergence") {
    r = experiment_convergence(parse_rational(a.c), parse_int_list(a.sizes), a.samples, a.degree, a.seed, a.threads);
  } else {
    throw std::invalid_argument("unknown experiment " + a.experiment);
  }
  std::string body;
  if (a.output.format == "json") {
    json j = report_to_json(r);
    j["command"] = "mc";
    j["argv"] = argv_json(args);
    body = j.dump(2) + "\n";
  } else if (a.output.format == "csv") {
    body = report_csv(r);
  } else {
    body = report_text(r);
  }
  emit(a.output, body, out);
  return r.pass() ? kExitPass : kExitFail;
}

}  // namespace

void write_atomically(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << content;
    f.flush();
    if (!f) {
      std::filesystem::remove(tmp);
      throw std::runtime_error("write to " + tmp.string() + " failed");
    }
  }
  std::filesystem::rename(tmp, target);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Half-permutation combinatorics, Wick products and Wishart fluctuation checks"};
  app.require_subcommand(1);

  TablesArgs tables;
  auto* t = app.add_subcommand("tables", "print a transition matrix or its inverse");
  t->add_option("table", tables.table, "gamma-tilde, gamma, pi, optionally with -inverse")->required();
  t->add_option("--rows", tables.rows, "number of rows");
  t->add_flag("--check", tables.check, "compare with the printed rows");
  add_output_flags(t, tables.output);

  EnumerateArgs en;
  auto* e = app.add_subcommand("enumerate", "list diagrams with their weighted count");
  e->add_option("kind", en.kind, "nc, ncc, ncl or snc")->required()->check(CLI::IsMember({"nc", "ncc", "ncl", "snc"}));
  e->add_option("--n", en.n, "points (inner circle for snc)");
  e->add_option("--k", en.k, "open blocks");
  e->add_option("--m", en.m, "outer circle points for snc");
  e->add_option("--cap", en.cap, "enumeration size cap");
  e->add_option("--limit", en.limit, "list at most this many diagrams; counts cover all");
  add_output_flags(e, en.output);

  VerifyArgs ve;
  auto* v = app.add_subcommand("verify", "run a property suite");
  v->add_option("suite", ve.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  v->add_option("--max-n", ve.max_n, "size cap for the suite");
  v->add_option("--order", ve.order, "series order");
  v->add_option("--depth", ve.depth, "Fock space depth for wick");
  add_output_flags(v, ve.output);

  McArgs mc;
  auto* m = app.add_subcommand("mc", "Monte Carlo experiment on Wishart matrices");
  m->add_option("experiment", mc.experiment, "diagonalize, raw-cov or convergence")
      ->required()
      ->check(CLI::IsMember({"diagonalize", "raw-cov", "convergence"}));
  m->add_option("--N", mc.N, "matrix dimension");
  m->add_option("--c", mc.c, "ratio c; M = round(cN)");
  m->add_option("--M", mc.M, "row count; sets c = M/N");
  m->add_option("--p", mc.p, "number of independent matrices");
  m->add_option("--samples", mc.samples, "draws (per smallest size for convergence)");
  m->add_option("--seed", mc.seed, "RNG seed");
  m->add_option("--max-degree", mc.max_degree, "largest degree for diagonalize");
  m->add_option("--mixed", mc.mixed, "mixed words, e.g. \"1,1:1,2;1,2:1,2\"");
  m->add_option("--m", mc.m, "raw-cov degree m");
  m->add_option("--n", mc.n, "raw-cov degree n");
  m->add_option("--sizes", mc.sizes, "convergence sizes, e.g. 8,16,32");
  m->add_option("--degree", mc.degree, "convergence Gamma degree");
  m->add_option("--threads", mc.threads, "worker threads; default HALFPERM_THREADS or all cores");
  add_output_flags(m, mc.output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*t) return cmd_tables(tables, args, out);
    if (*e) return cmd_enumerate(en, args, out);
    if (*v) return cmd_verify(ve, args, out);
    if (*m) return cmd_mc(mc, args, out);
  } catch (const CapExceeded& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace halfperm::cli
