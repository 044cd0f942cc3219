#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rtw/cli.hpp"
#include "rtw/densify.hpp"
#include "rtw/graph_io.hpp"
#include "support.hpp"

using namespace rtw;
using namespace testing_support;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("rtw_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string save_graph(const fs::path& dir, const std::string& name, const BitGraph& g,
                       const VertexSet* left = nullptr) {
  const fs::path p = dir / name;
  write_text_file(p.string(), dump_canonical(graph_to_json(g, left)));
  return p.string();
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(line);
  for (std::string piece; std::getline(ss, piece, sep);) parts.push_back(piece);
  if (sep == ',' && !line.empty() && line.back() == sep) parts.emplace_back();
  return parts;
}

}  // namespace

TEST_CASE("sha256 of known strings") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("argument errors exit 1") {
  CHECK(call({"construct", "--n", "201", "--h", "4", "--epsilon", "0.3"}).code == kExitInput);
  CHECK(call({"construct", "--n", "200", "--h", "4"}).code == kExitInput);
  CHECK(call({"frobnicate"}).code == kExitInput);
  CHECK(call({}).code == kExitInput);
  CHECK(call({"certify", "--graph", "/nonexistent/graph.json", "--k4"}).code == kExitInput);
  CHECK(call({"sweep", "--epsilon", "0.5:0.1:0.1"}).code == kExitInput);
  const fs::path dir = scratch("malformed");
  write_text_file((dir / "truncated.json").string(), "{\"n\": 3, \"edges\": [[0,");
  write_text_file((dir / "range.json").string(), "{\"n\": 3, \"edges\": [[0,5]]}");
  CHECK(call({"certify", "--graph", (dir / "truncated.json").string(), "--k4"}).code == kExitInput);
  CHECK(call({"certify", "--graph", (dir / "range.json").string(), "--k4"}).code == kExitInput);
  const Outcome help = call({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("construct") != std::string::npos);
}

TEST_CASE("certify exit codes") {
  const fs::path dir = scratch("certify");
  BitGraph planted = cycle(9);
  planted.add_edge(0, 2);
  planted.add_edge(0, 3);
  planted.add_edge(1, 3);
  const std::string k4 = save_graph(dir, "k4.json", planted);
  const Outcome v = call({"certify", "--graph", k4, "--k4"});
  CHECK(v.code == kExitViolation);
  const auto j = nlohmann::json::parse(v.out);
  CHECK(j["checks"][0]["certificate"]["vertices"] == nlohmann::json({0, 1, 2, 3}));
  CHECK(j["checks"][0]["revalidated"] == true);

  const std::string c5 = save_graph(dir, "c5.json", cycle(5));
  CHECK(call({"certify", "--graph", c5, "--k4", "--mis-exact"}).code == kExitOk);
  CHECK(call({"certify", "--graph", c5, "--min-degree", "3"}).code == kExitViolation);
  // No side recorded in the file.
  CHECK(call({"certify", "--graph", c5, "--triangles"}).code == kExitInput);

  const std::string big = save_graph(dir, "big.json", random_graph(300, 0.5, 7));
  CHECK(call({"certify", "--graph", big, "--mis-exact", "--mis-budget", "50"}).code == kExitBudget);
  CHECK(call({"mis", "--graph", big, "--budget", "50"}).code == kExitBudget);
  // A violation outranks an exhausted budget.
  BitGraph both = random_graph(300, 0.5, 7);
  const std::string both_path = save_graph(dir, "both.json", both);
  CHECK(call({"certify", "--graph", both_path, "--k4", "--mis-exact", "--mis-budget", "50"}).code ==
        kExitViolation);
}

TEST_CASE("construct output and manifest are reproducible") {
  const fs::path a = scratch("det_a"), b = scratch("det_b");
  const std::vector<std::string> tail{"construct", "--n", "120", "--h", "8", "--epsilon", "0.2"};
  auto with_out = [&](const fs::path& dir) {
    std::vector<std::string> args{"--seed", "11", "--out", dir.string()};
    args.insert(args.end(), tail.begin(), tail.end());
    return args;
  };
  REQUIRE(call(with_out(a)).code == kExitOk);
  REQUIRE(call(with_out(b)).code == kExitOk);
  for (const char* f : {"graph.json", "construction.json"}) CHECK(slurp(a / f) == slurp(b / f));
  const auto manifest = nlohmann::json::parse(slurp(a / "manifest.json"));
  CHECK(manifest["command"] == "construct");
  CHECK(manifest["seed"] == 11);
  for (const auto& [name, digest] : manifest["outputs"].items())
    CHECK(digest == sha256_hex(slurp(a / name)));

  // The written graph is nice and feeds the next stage.
  const GraphDocument doc = read_graph_file((a / "graph.json").string());
  REQUIRE(doc.left.has_value());
  CHECK(doc.graph.n() == 120);
  const Outcome cert =
      call({"certify", "--graph", (a / "graph.json").string(), "--k4", "--triangles"});
  CHECK(cert.code == kExitOk);

  const fs::path c = scratch("det_c");
  REQUIRE(call({"--out", c.string(), "densify", "--graph", (a / "graph.json").string(), "--d", "6"})
              .code == kExitOk);
  const auto dm = nlohmann::json::parse(slurp(c / "manifest.json"));
  CHECK(dm["inputs"][(a / "graph.json").string()] == sha256_hex(slurp(a / "graph.json")));
  const auto rec = nlohmann::json::parse(slurp(c / "densify.json"));
  CHECK(rec["e_after"].get<std::uint64_t>() >= rec["e_before"].get<std::uint64_t>());
  CHECK(call({"certify", "--graph", (c / "graph.json").string(), "--k4", "--triangles"}).code ==
        kExitOk);
}

TEST_CASE("sweep rows match the exact lemma arithmetic") {
  const Outcome s = call({"sweep", "--n", "40", "--h", "4", "--epsilon", "0.1:0.5:0.1", "--d", "3"});
  REQUIRE(s.code == kExitOk);
  const auto lines = split(s.out, '\n');
  REQUIRE(lines.size() == 6);
  const auto header = split(lines[0], ',');
  auto column = [&](const std::string& name) {
    const auto it = std::find(header.begin(), header.end(), name);
    REQUIRE(it != header.end());
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::vector<std::string> eps{"0.1", "0.2", "0.3", "0.4", "0.5"};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto row = split(lines[i], ',');
    REQUIRE(row.size() == header.size());
    CHECK(row[column("epsilon")] == eps[i - 1]);
    const std::uint64_t e_before = std::stoull(row[column("e_before")]);
    const Rational expected = eval_lemma_hybrid(e_before, 40, 3);
    CHECK(Rational(row[column("lemma_rhs_exact")]) == expected);
    CHECK(std::stoull(row[column("e_after")]) >= std::stoull(row[column("e_before")]));
    CHECK(row[column("nice_before")] == "1");
    CHECK(row[column("nice_after")] == "1");
    CHECK(std::stoul(row[column("mis_after")]) <= std::stoul(row[column("mis_before")]) + 3);
  }
}

TEST_CASE("sweep over epsilon at n = 2000") {
  const Outcome s =
      call({"sweep", "--n", "2000", "--h", "16", "--epsilon", "0.1:0.5:0.1", "--d", "100"});
  REQUIRE(s.code == kExitOk);
  const auto lines = split(s.out, '\n');
  REQUIRE(lines.size() == 6);
  const auto header = split(lines[0], ',');
  const auto at = [&](const std::vector<std::string>& row, const std::string& name) {
    return row[static_cast<std::size_t>(std::find(header.begin(), header.end(), name) - header.begin())];
  };
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto row = split(lines[i], ',');
    REQUIRE(row.size() == header.size());
    CHECK(Rational(at(row, "lemma_rhs_exact")) ==
          eval_lemma_hybrid(std::stoull(at(row, "e_before")), 2000, 100));
    CHECK(at(row, "nice_after") == "1");
    CHECK(at(row, "meets_averaging_floor") == "1");
    CHECK(at(row, "mis_before").empty());
  }
}

TEST_CASE("sweep output does not depend on the worker count") {
  const std::vector<std::string> args{"sweep", "--n", "60,80", "--h", "4,8", "--epsilon", "0.2",
                                      "--d", "0,2"};
  setenv("RT_WORKBENCH_THREADS", "1", 1);
  const Outcome one = call(args);
  setenv("RT_WORKBENCH_THREADS", "4", 1);
  const Outcome four = call(args);
  unsetenv("RT_WORKBENCH_THREADS");
  CHECK(one.code == kExitOk);
  CHECK(one.out == four.out);
}

TEST_CASE("drc lines are ordered by seed and revalidate") {
  const fs::path dir = scratch("drc");
  const VertexSet left = VertexSet::from_range(60, 0, 30);
  const std::string kb = save_graph(dir, "kb.json", complete_bipartite(30, 30), &left);
  const Outcome o = call({"--seed", "5", "drc", "--graph", kb, "--seeds", "4", "--t", "20",
                          "--epsilon", "0.1"});
  REQUIRE(o.code == kExitOk);
  const auto lines = split(o.out, '\n');
  REQUIRE(lines.size() >= 4);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto j = nlohmann::json::parse(lines[i]);
    CHECK(j["seed"] == 5 + i);
    CHECK(j["kind"] == "IndependentSet");
    CHECK(j["revalidated"] == true);
  }
  CHECK(o.err.find("paper constants") != std::string::npos);
}

TEST_CASE("bounds and dispersion") {
  const Outcome b = call({"bounds", "--n", "1000000", "--m", "10000", "--alpha", "100", "--delta",
                          "0.001"});
  REQUIRE(b.code == kExitOk);
  const auto reports = nlohmann::json::parse(b.out);
  REQUIRE(reports.size() == 4);
  CHECK(reports[3]["report"] == "assemble_theorem_14");
  CHECK(call({"--csv", "bounds", "--n", "1000"}).out.rfind("report,name,formula", 0) == 0);
  CHECK(call({"dispersion", "--cee", "1", "--epsilon", "0.01", "--n", "10000"}).code == kExitOk);
  CHECK(call({"dispersion", "--cee", "100", "--epsilon", "0.01", "--n", "100"}).code == kExitInput);
}
