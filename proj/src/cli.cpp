#include "rtw/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "rtw/be_construct.hpp"
#include "rtw/binomial.hpp"
#include "rtw/bounds.hpp"
#include "rtw/certify.hpp"
#include "rtw/densify.hpp"
#include "rtw/drc.hpp"
#include "rtw/error.hpp"
#include "rtw/graph_io.hpp"
#include "rtw/parallel.hpp"

namespace rtw {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    hex += kHex[digest[i] >> 4];
    hex += kHex[digest[i] & 15];
  }
  return hex;
}

namespace {

std::string shortest(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

double rational_value(const Rational& r) { return r.convert_to<double>(); }

/// Outputs and inputs of one invocation, flushed to --out with a manifest.
struct Run {
  Run(std::ostream& o, std::ostream& e, std::vector<std::string> a)
      : out(o), err(e), argv(std::move(a)) {}

  std::ostream& out;
  std::ostream& err;
  std::vector<std::string> argv;
  std::uint64_t seed = 1;
  std::string out_dir;
  bool csv = false;
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::map<std::string, std::string> files;   // name -> content
  std::map<std::string, std::string> inputs;  // path -> digest

  GraphDocument load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    inputs[path] = sha256_hex(buf.str());
    return read_graph_file(path);
  }

  void emit(const std::string& name, std::string content) { files[name] = std::move(content); }

  void flush() {
    if (out_dir.empty()) return;
    std::filesystem::create_directories(out_dir);
    nlohmann::json outputs = nlohmann::json::object();
    for (const auto& [name, content] : files) {
      write_text_file((std::filesystem::path(out_dir) / name).string(), content);
      outputs[name] = sha256_hex(content);
    }
    nlohmann::json manifest{{"tool", "rtw"},      {"version", kToolVersion},
                            {"command", command}, {"argv", argv},
                            {"seed", seed},       {"params", params},
                            {"inputs", inputs},   {"outputs", outputs},
                            {"threads_env", "RT_WORKBENCH_THREADS"}};
    write_text_file((std::filesystem::path(out_dir) / "manifest.json").string(),
                    manifest.dump(2) + "\n");
  }
};

template <class T>
T parse_number(const std::string& text) {
  T value{};
  const char* first = text.data();
  const char* last = first + text.size();
  const auto r = std::from_chars(first, last, value);
  if (r.ec != std::errc() || r.ptr != last) throw InputError("not a number: '" + text + "'");
  return value;
}

/// "a,b,c" or "start:stop:step" (inclusive).
template <class T>
std::vector<T> parse_list(const std::string& text, const std::string& what) {
  std::vector<T> values;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string piece; std::getline(ss, piece, ':');) parts.push_back(piece);
    if (parts.size() != 3) throw InputError(what + ": range must be start:stop:step");
    const T start = parse_number<T>(parts[0]);
    const T stop = parse_number<T>(parts[1]);
    const T step = parse_number<T>(parts[2]);
    if (!(step > T{0})) throw InputError(what + ": range step must be positive");
    for (std::size_t i = 0;; ++i) {
      T v = start + static_cast<T>(i) * step;
      if constexpr (std::is_floating_point_v<T>) {
        // Drop accumulated binary noise so 0.1:0.5:0.1 yields 0.3, not 0.30000000000000004.
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", v);
        v = std::stod(buf);
        if (v > stop + 1e-9 * std::abs(step)) break;
      } else {
        if (v > stop) break;
      }
      values.push_back(v);
    }
  } else {
    std::stringstream ss(text);
    for (std::string piece; std::getline(ss, piece, ',');)
      if (!piece.empty()) values.push_back(parse_number<T>(piece));
  }
  if (values.empty()) throw InputError(what + ": empty range");
  return values;
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  std::size_t n = 0, h = 0;
  double epsilon = 0;
  bool paired = false;
};

int cmd_construct(Run& run, const ConstructArgs& a) {
  const BEParams p = BEParams::make(a.n, a.h, a.epsilon, run.seed, a.paired);
  const BEGraph be = build_be_graph(p);
  const BESummary s = summarize(be);
  nlohmann::json record = construction_record(be, s);
  run.params = params_to_json(p);
  run.emit("graph.json", dump_canonical(graph_to_json(be.nice.graph(), &be.nice.x())) + "\n");
  record.erase("graph");
  record["graph_file"] = "graph.json";
  run.emit("construction.json", record.dump(2) + "\n");
  if (run.csv) {
    run.out << "n,h,epsilon,mu,seed,edges,min_degree,density_xy,density_xx,density_yy,"
               "cap_prediction\n"
            << p.n << ',' << p.h << ',' << shortest(p.epsilon) << ',' << shortest(p.mu) << ','
            << p.seed << ',' << s.edges << ',' << s.min_degree << ',' << shortest(s.density_xy)
            << ',' << shortest(s.density_xx) << ',' << shortest(s.density_yy) << ','
            << shortest(s.cap_prediction) << '\n';
  } else {
    run.out << record.dump(2) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- densify

int cmd_densify(Run& run, const std::string& path, std::size_t d, std::size_t trials) {
  GraphDocument doc = run.load_graph(path);
  if (!doc.left) throw InputError("densify needs a graph with a 'left' side");
  const NiceGraph nice(doc.graph, *doc.left, path);
  const auto [out, rec] = densify(nice, DensifyParams{d, trials, run.seed});
  run.params = {{"graph", path}, {"d", d}, {"trials", trials}};
  nlohmann::json record{{"d", d},
                        {"n", nice.graph().n()},
                        {"u1", rec.layers.u1.to_vector()},
                        {"u2", rec.layers.u2.to_vector()},
                        {"e_before", rec.e_before},
                        {"e_g0", rec.layers.e_g0},
                        {"e_after", rec.e_after},
                        {"lemma_rhs", rational_value(rec.lemma_rhs)},
                        {"lemma_rhs_exact", rational_text(rec.lemma_rhs)},
                        {"averaging_floor", rational_value(rec.averaging_floor)},
                        {"averaging_floor_exact", rational_text(rec.averaging_floor)},
                        {"meets_averaging_floor",
                         Rational(rec.layers.e_g0) >= rec.averaging_floor},
                        {"graph_file", "graph.json"}};
  run.emit("graph.json", dump_canonical(graph_to_json(out.graph(), &out.x())) + "\n");
  run.emit("densify.json", record.dump(2) + "\n");
  run.out << record.dump(2) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- certify

struct CertifyArgs {
  std::string graph;
  bool k4 = false, triangles = false, mis_exact = false;
  std::uint64_t mis_budget = 10000000;
  std::optional<std::size_t> codegree;
  std::optional<double> min_degree;
};

int cmd_certify(Run& run, const CertifyArgs& a) {
  const GraphDocument doc = run.load_graph(a.graph);
  const BitGraph& g = doc.graph;
  run.params = {{"graph", a.graph}, {"k4", a.k4}, {"triangles", a.triangles},
                {"mis_exact", a.mis_exact}, {"mis_budget", a.mis_budget}};
  if (a.codegree) run.params["codegree"] = *a.codegree;
  if (a.min_degree) run.params["min_degree"] = *a.min_degree;

  bool violation = false, budget = false;
  nlohmann::json checks = nlohmann::json::array();
  auto record = [&](const std::string& name, const Certificate& c) {
    violation |= c.is_witness();
    checks.push_back({{"check", name},
                      {"status", c.is_witness() ? "violation" : "pass"},
                      {"certificate", certificate_to_json(c)},
                      {"revalidated", revalidate(g, c)}});
  };
  if (a.k4) record("k4", find_k4(g));
  if (a.triangles) {
    if (!doc.left) throw InputError("--triangles needs a graph with a 'left' side");
    const VertexSet right = doc.left->complement();
    record("triangle_left", find_triangle_in(g, *doc.left));
    record("triangle_right", find_triangle_in(g, right));
  }
  if (a.codegree) record("codegree", check_codegree_bound(g, *a.codegree));
  if (a.min_degree) {
    const std::size_t md = g.min_degree();
    const bool ok = static_cast<double>(md) >= *a.min_degree;
    violation |= !ok;
    nlohmann::json entry{{"check", "min_degree"},
                         {"status", ok ? "pass" : "violation"},
                         {"min_degree", md},
                         {"required", *a.min_degree}};
    if (!ok)
      for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) == md) {
          entry["vertex"] = v;
          break;
        }
    checks.push_back(std::move(entry));
  }
  if (a.mis_exact) {
    const MisResult r = exact_mis(g, a.mis_budget);
    budget |= !r.exact;
    nlohmann::json entry{{"check", "mis_exact"},
                         {"status", r.exact ? "pass" : "budget"},
                         {"alpha", r.alpha},
                         {"witness", r.witness},
                         {"nodes", r.nodes}};
    if (!r.exact) {
      const MisBounds b = mis_bounds(g);
      entry["lower_bound"] = std::max(b.lower, r.alpha);
      entry["upper_bound"] = b.upper;
    }
    checks.push_back(std::move(entry));
  }
  const int code = violation ? kExitViolation : budget ? kExitBudget : kExitOk;
  const nlohmann::json result{{"graph", a.graph}, {"checks", checks}, {"exit", code}};
  run.emit("certify.json", result.dump(2) + "\n");
  run.out << result.dump(2) << '\n';
  return code;
}

// ---------------------------------------------------------------- mis, maxcut, oddgirth

int cmd_mis(Run& run, const std::string& path, std::uint64_t budget) {
  const GraphDocument doc = run.load_graph(path);
  const MisResult r = exact_mis(doc.graph, budget);
  run.params = {{"graph", path}, {"budget", budget}};
  nlohmann::json result{{"exact", r.exact}, {"alpha", r.alpha}, {"witness", r.witness},
                        {"nodes", r.nodes}};
  if (!r.exact) {
    const MisBounds b = mis_bounds(doc.graph);
    result["lower_bound"] = std::max(b.lower, r.alpha);
    result["upper_bound"] = b.upper;
  }
  run.emit("mis.json", result.dump(2) + "\n");
  run.out << result.dump(2) << '\n';
  return r.exact ? kExitOk : kExitBudget;
}

int cmd_maxcut(Run& run, const std::string& path) {
  const GraphDocument doc = run.load_graph(path);
  const MaxCutResult r = local_max_cut(doc.graph, run.seed);
  run.params = {{"graph", path}};
  const nlohmann::json result{{"crossing", r.crossing},
                              {"edges", doc.graph.edge_count()},
                              {"locally_optimal", r.locally_optimal},
                              {"left", r.cut.left.to_vector()}};
  run.emit("maxcut.json", result.dump(2) + "\n");
  run.out << result.dump(2) << '\n';
  return kExitOk;
}

int cmd_oddgirth(Run& run, const std::string& path) {
  const GraphDocument doc = run.load_graph(path);
  const std::size_t girth = odd_girth(doc.graph);
  run.params = {{"graph", path}};
  nlohmann::json result{{"n", doc.graph.n()}};
  if (girth == kInfiniteGirth) {
    result["odd_girth"] = nullptr;
    result["bipartite"] = true;
  } else {
    result["odd_girth"] = girth;
    result["bipartite"] = false;
    if (girth >= 5) result["shearer_bound"] = shearer_bound(doc.graph.n(), girth);
  }
  run.emit("oddgirth.json", result.dump(2) + "\n");
  run.out << result.dump(2) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- drc

struct DrcArgs {
  std::string graph;
  std::size_t t = 30;
  double epsilon = 0.05, gamma = 0.02, C = 1.0;
  std::size_t seeds = 10;
  std::string pair = "auto";
};

int cmd_drc(Run& run, const DrcArgs& a) {
  const GraphDocument doc = run.load_graph(a.graph);
  const BitGraph& g = doc.graph;
  run.params = {{"graph", a.graph}, {"t", a.t},         {"epsilon", a.epsilon},
                {"gamma", a.gamma}, {"cee", a.C},       {"seeds", a.seeds},
                {"pair", a.pair}};
  run.err << "paper constants at this n: "
          << DRCParams::paper_constants(std::max<std::size_t>(g.n(), 16)).dump() << '\n';
  VertexSet A, B;
  std::string source = a.pair;
  if (a.pair == "auto") source = doc.left ? "halves" : "search";
  if (source == "halves") {
    if (!doc.left) throw InputError("--pair halves needs a graph with a 'left' side");
    A = *doc.left;
    B = doc.left->complement();
  } else if (source == "search") {
    const HalfDensitySearch s = find_half_density_pair(g, a.gamma, run.seed);
    if (!s.pair) {
      run.out << nlohmann::json{{"kind", "Fail"},
                                {"stage", "half_density_pair"},
                                {"a_size", s.a_size},
                                {"b_size", s.b_size},
                                {"survivors", s.survivors}}
                     .dump()
              << '\n';
      return kExitOk;
    }
    A = s.pair->A;
    B = s.pair->B;
  } else {
    throw InputError("--pair must be auto, halves or search");
  }
  if (a.seeds < 1) throw InputError("--seeds must be at least 1");
  std::vector<std::string> lines(a.seeds);
  parallel_for(a.seeds, [&](std::size_t i) {
    const std::uint64_t seed = run.seed + i;
    const DRCOutcome o = drc_round(g, A, B, DRCParams::make(a.t, a.epsilon, a.gamma, a.C, seed));
    nlohmann::json j = outcome_to_json(o, seed);
    j["revalidated"] = revalidate(g, o);
    lines[i] = j.dump();
  });
  std::string stream;
  for (const auto& l : lines) stream += l + "\n";
  run.emit("outcomes.jsonl", stream);
  run.out << stream;
  return kExitOk;
}

// ---------------------------------------------------------------- dispersion

int cmd_dispersion(Run& run, double C, double epsilon, std::uint64_t n, std::optional<std::uint64_t> t) {
  const DispersionReport d = check_dispersion_lemma(C, epsilon, n);
  run.params = {{"cee", C}, {"epsilon", epsilon}, {"n", n}};
  nlohmann::json result{{"C", C},
                        {"epsilon", epsilon},
                        {"n", n},
                        {"K", 4 * C * C + 20 * C + 16},
                        {"log_lhs", static_cast<double>(d.log_lhs)},
                        {"log_rhs", static_cast<double>(d.log_rhs)},
                        {"holds", d.holds}};
  bool ok = d.holds;
  if (t) {
    run.params["t"] = *t;
    const ChernoffReport c = check_chernoff_prune(*t, epsilon);
    result["chernoff"] = {{"t", *t}, {"bound", c.bound}, {"exact_tail", c.exact_tail},
                          {"holds", c.holds}};
    ok &= c.holds;
  }
  run.emit("dispersion.json", result.dump(2) + "\n");
  run.out << result.dump(2) << '\n';
  return ok ? kExitOk : kExitViolation;
}

// ---------------------------------------------------------------- bounds

int cmd_bounds(Run& run, std::uint64_t n, std::uint64_t m, std::uint64_t alpha,
               std::optional<double> delta) {
  run.params = {{"n", n}, {"m", m}, {"alpha", alpha}};
  if (delta) run.params["delta"] = *delta;
  std::optional<long double> override_delta;
  if (delta) override_delta = *delta;
  std::vector<BoundReport> reports{window_summary({n, m, alpha, override_delta, std::nullopt})};
  if (n >= 16) reports.push_back(corollary_89_params(n));
  if (n >= 16 && n % 2 == 0) {
    reports.push_back(assemble_theorem_17(n, override_delta));
    if (3 * m <= n) reports.push_back(assemble_theorem_14(n, m, override_delta));
  }
  std::string text;
  if (run.csv) {
    text = reports_to_csv(reports);
    run.emit("bounds.csv", text);
  } else {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    text = arr.dump(2) + "\n";
    run.emit("bounds.json", text);
  }
  run.out << text;
  return kExitOk;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  std::string n = "200", h = "16", epsilon = "0.3", d = "0";
  std::size_t trials = 4;
  std::size_t mis_max_n = 40;
};

struct SweepCell {
  std::size_t n, h, d;
  double epsilon;
};

const char* const kSweepHeader =
    "cell,n,h,epsilon,d,seed,e_before,min_degree,density_xy,cap_prediction,nice_before,"
    "e_g0,e_after,lemma_rhs,lemma_rhs_exact,averaging_floor,meets_averaging_floor,nice_after,"
    "mis_before,mis_after,independence_bound,min_degree_bound";

std::string sweep_row(std::size_t index, const SweepCell& c, std::uint64_t seed,
                      std::size_t trials, std::size_t mis_max_n) {
  const BEGraph be = build_be_graph(BEParams::make(c.n, c.h, c.epsilon, seed));
  const BESummary s = summarize(be);
  const bool nice_before = !verify_nice(be.nice).is_witness();
  const auto [out, rec] = densify(be.nice, DensifyParams{c.d, trials, seed});
  const bool nice_after = !verify_nice(out).is_witness();
  const BETheory theory = be_theoretical_bounds(c.n, c.h, c.epsilon);
  std::string mis_before, mis_after;
  if (c.n <= mis_max_n) {
    mis_before = std::to_string(exact_mis(be.nice.graph()).alpha);
    mis_after = std::to_string(exact_mis(out.graph()).alpha);
  }
  std::ostringstream row;
  row << index << ',' << c.n << ',' << c.h << ',' << shortest(c.epsilon) << ',' << c.d << ','
      << seed << ',' << rec.e_before << ',' << s.min_degree << ',' << shortest(s.density_xy) << ','
      << shortest(s.cap_prediction) << ',' << (nice_before ? 1 : 0) << ',' << rec.layers.e_g0 << ','
      << rec.e_after << ',' << shortest(rational_value(rec.lemma_rhs)) << ','
      << rational_text(rec.lemma_rhs) << ',' << shortest(rational_value(rec.averaging_floor)) << ','
      << (Rational(rec.layers.e_g0) >= rec.averaging_floor ? 1 : 0) << ','
      << (nice_after ? 1 : 0) << ',' << mis_before << ',' << mis_after << ','
      << shortest(theory.independence_bound) << ',' << shortest(theory.min_degree_bound);
  return row.str();
}

int cmd_sweep(Run& run, const SweepArgs& a) {
  const auto ns = parse_list<std::size_t>(a.n, "--n");
  const auto hs = parse_list<std::size_t>(a.h, "--h");
  const auto eps = parse_list<double>(a.epsilon, "--epsilon");
  const auto ds = parse_list<std::size_t>(a.d, "--d");
  std::vector<SweepCell> cells;
  for (auto n : ns)
    for (auto h : hs)
      for (auto e : eps)
        for (auto d : ds) {
          BEParams::make(n, h, e, run.seed);  // validate every cell before running any
          if (2 * d > n) throw InputError("--d " + std::to_string(d) + " exceeds n/2 for n=" +
                                          std::to_string(n));
          cells.push_back({n, h, d, e});
        }
  run.params = {{"n", a.n}, {"h", a.h}, {"epsilon", a.epsilon}, {"d", a.d},
                {"trials", a.trials}, {"mis_max_n", a.mis_max_n}};
  std::vector<std::string> rows(cells.size());
  parallel_for(cells.size(), [&](std::size_t i) {
    rows[i] = sweep_row(i, cells[i], run.seed, a.trials, a.mis_max_n);
  });
  std::string csv = std::string(kSweepHeader) + "\n";
  for (const auto& r : rows) csv += r + "\n";
  run.emit("sweep.csv", csv);
  run.out << csv;
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramsey-Turan workbench: sphere constructions, layer splicing, certification", "rtw"};
  app.set_help_flag("--help", "Print help and exit");  // -h would collide with --h
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("rtw ") + kToolVersion);

  Run run(out, err, args);
  app.add_option("--seed", run.seed, "Seed for every random stream")->capture_default_str();
  app.add_option("--out", run.out_dir, "Directory for output files and manifest.json");
  auto* json_flag = app.add_flag("--json", "JSON output (default)");
  auto* csv_flag = app.add_flag("--csv", run.csv, "CSV output where a command supports it");
  json_flag->excludes(csv_flag);

  std::function<int()> action;

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a sphere graph BE(n, h, epsilon)");
  construct->add_option("--n", ca.n, "Vertex count (even)")->required();
  construct->add_option("--h", ca.h, "Sphere dimension")->required();
  construct->add_option("--epsilon", ca.epsilon, "Distance slack in (0,1)")->required();
  construct->add_flag("--paired", ca.paired, "Use one point per index for both sides");
  construct->callback([&] { action = [&] { return cmd_construct(run, ca); }; });

  std::string densify_graph;
  std::size_t densify_d = 0, densify_trials = 8;
  auto* dens = app.add_subcommand("densify", "Splice a complete bipartite layer into a nice graph");
  dens->add_option("--graph", densify_graph, "Graph JSON with a left side")->required();
  dens->add_option("--d", densify_d, "Layer size per side")->required();
  dens->add_option("--trials", densify_trials, "Random starts for the layer search")
      ->capture_default_str();
  dens->callback([&] {
    action = [&] { return cmd_densify(run, densify_graph, densify_d, densify_trials); };
  });

  CertifyArgs cert;
  auto* certify = app.add_subcommand("certify", "Run exact certifiers on a graph");
  certify->add_option("--graph", cert.graph, "Graph JSON")->required();
  certify->add_flag("--k4", cert.k4, "Search for a K4");
  certify->add_flag("--triangles", cert.triangles, "Search for a triangle inside either side");
  certify->add_flag("--mis-exact", cert.mis_exact, "Exact independence number");
  certify->add_option("--mis-budget", cert.mis_budget, "Node budget for --mis-exact")
      ->capture_default_str();
  certify->add_option("--codegree", cert.codegree, "Codegree bound alpha for adjacent pairs");
  certify->add_option("--min-degree", cert.min_degree, "Required minimum degree");
  certify->callback([&] { action = [&] { return cmd_certify(run, cert); }; });

  std::string mis_graph;
  std::uint64_t mis_budget = 10000000;
  auto* mis = app.add_subcommand("mis", "Exact maximum independent set");
  mis->add_option("--graph", mis_graph, "Graph JSON")->required();
  mis->add_option("--budget", mis_budget, "Search node budget")->capture_default_str();
  mis->callback([&] { action = [&] { return cmd_mis(run, mis_graph, mis_budget); }; });

  std::string cut_graph;
  auto* maxcut = app.add_subcommand("maxcut", "Locally optimal max-cut from a seeded start");
  maxcut->add_option("--graph", cut_graph, "Graph JSON")->required();
  maxcut->callback([&] { action = [&] { return cmd_maxcut(run, cut_graph); }; });

  std::string girth_graph;
  auto* girth = app.add_subcommand("oddgirth", "Odd girth and the Shearer bound");
  girth->add_option("--graph", girth_graph, "Graph JSON")->required();
  girth->callback([&] { action = [&] { return cmd_oddgirth(run, girth_graph); }; });

  DrcArgs drc;
  auto* drc_cmd = app.add_subcommand("drc", "Dependent random choice rounds, one JSON line per seed");
  drc_cmd->add_option("--graph", drc.graph, "Graph JSON")->required();
  drc_cmd->add_option("--t", drc.t, "Sample size")->capture_default_str();
  drc_cmd->add_option("--epsilon", drc.epsilon, "Threshold slack")->capture_default_str();
  drc_cmd->add_option("--gamma", drc.gamma, "Independence fraction")->capture_default_str();
  drc_cmd->add_option("--cee", drc.C, "Degree-slack constant C")->capture_default_str();
  drc_cmd->add_option("--seeds", drc.seeds, "Rounds, seeded seed..seed+k-1")->capture_default_str();
  drc_cmd->add_option("--pair", drc.pair, "auto | halves | search")->capture_default_str();
  drc_cmd->callback([&] { action = [&] { return cmd_drc(run, drc); }; });

  double disp_c = 1.0, disp_eps = 0.01;
  std::uint64_t disp_n = 10000;
  std::optional<std::uint64_t> disp_t;
  auto* disp = app.add_subcommand("dispersion", "Exact binomial tail against the dispersion bound");
  disp->add_option("--cee", disp_c, "Constant C")->capture_default_str();
  disp->add_option("--epsilon", disp_eps, "Deviation epsilon")->capture_default_str();
  disp->add_option("--n", disp_n, "Trials")->capture_default_str();
  disp->add_option("--t", disp_t, "Also check the Chernoff prune bound at sample size t");
  disp->callback([&] {
    action = [&] { return cmd_dispersion(run, disp_c, disp_eps, disp_n, disp_t); };
  });

  std::uint64_t b_n = 0, b_m = 0, b_alpha = 0;
  std::optional<double> b_delta;
  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds across the critical window");
  bounds->add_option("--n", b_n, "Vertex count")->required();
  bounds->add_option("--m", b_m, "Independence parameter")->capture_default_str();
  bounds->add_option("--alpha", b_alpha, "Target independent-set size")->capture_default_str();
  bounds->add_option("--delta", b_delta, "Override the construction level delta");
  bounds->callback([&] { action = [&] { return cmd_bounds(run, b_n, b_m, b_alpha, b_delta); }; });

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "Construct, densify and certify over a parameter grid");
  sweep->add_option("--n", sw.n, "List a,b,c or range start:stop:step")->capture_default_str();
  sweep->add_option("--h", sw.h, "List or range")->capture_default_str();
  sweep->add_option("--epsilon", sw.epsilon, "List or range")->capture_default_str();
  sweep->add_option("--d", sw.d, "Layer sizes, list or range")->capture_default_str();
  sweep->add_option("--trials", sw.trials, "Layer search starts")->capture_default_str();
  sweep->add_option("--mis-max-n", sw.mis_max_n, "Exact MIS columns only up to this n")
      ->capture_default_str();
  sweep->callback([&] { action = [&] { return cmd_sweep(run, sw); }; });

  // Global flags are accepted after the subcommand as well.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "rtw: " << e.what() << '\n';
    return kExitInput;
  }
  for (auto* sub : app.get_subcommands()) run.command = sub->get_name();

  try {
    const int code = action();
    run.flush();
    return code;
  } catch (const InputError& e) {
    err << "rtw: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "rtw: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace rtw
