#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "rigidity/generators.hpp"
#include "rigidity/graph_io.hpp"

using namespace rigidity;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string edges_of(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / "rigidity_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("rank and stress") {
  const auto r = run({"rank"}, edges_of(complete_graph(5)));
  CHECK(r.code == 0);
  CHECK(r.out.rfind("rank 7\nstress 3\noracle_agreement true", 0) == 0);

  const auto s = run({"stress", "--rational"}, edges_of(complete_graph(5)));
  CHECK(s.code == 0);
  CHECK(s.out.rfind("stress 3\nrank 7\n", 0) == 0);

  const auto j = run({"rank", "--format", "json"}, edges_of(clique_chain(5, 3)));
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["rank"] == 24);
  CHECK(parsed["stress"] == 6);
}

TEST_CASE("verify a single graph") {
  const auto r = run({"verify", "--theorem", "1"}, edges_of(clique_chain(5, 3)));
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rank"] == 24);
  CHECK(j["theorem_bound"] == "23");
  CHECK(j["gap"] == "1");
  CHECK(j["satisfied"] == true);
  CHECK(j["runtime_ms"].is_null());

  const auto csv = run({"verify", "--theorem", "2", "--format", "csv"}, edges_of(complete_graph(6)));
  CHECK(csv.code == 0);
  CHECK(csv.out.find("stdin,6,15,9,6,5,9,true,true,\n") != std::string::npos);

  const auto lemma = run({"verify", "--lemma", "4", "--format", "text"}, edges_of(complete_graph(4)));
  CHECK(lemma.code == 0);
  CHECK(lemma.out.find("lemma4") != std::string::npos);

  CHECK(run({"verify", "--theorem", "1"}, edges_of(complete_graph(6))).code == 2);
  CHECK(run({"verify", "--theorem", "3"}, edges_of(complete_graph(5))).code == 2);
  CHECK(run({"verify", "--theorem", "1", "--lemma", "4"}, edges_of(complete_graph(5))).code == 2);
}

TEST_CASE("verify is reproducible byte for byte") {
  const std::vector<std::string> args{"verify", "--family", "random-regular", "--count", "6",
                                      "--size", "10:24", "--seed", "9", "--format", "csv"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 7);

  const auto chains = run({"verify", "--family", "k5chain", "--count", "3", "--size", "2:4"});
  CHECK(chains.code == 0);
  std::istringstream lines(chains.out);
  std::string line;
  while (std::getline(lines, line)) CHECK(nlohmann::json::parse(line)["gap"] == "1");

  CHECK(run({"verify", "--family", "random-regular", "--degree", "5", "--theorem", "1"}).code == 2);
  CHECK(run({"verify", "--family", "nope"}).code == 2);
}

TEST_CASE("malformed input and usage errors") {
  const auto loop = run({"rank"}, "0 1\n1 1\n");
  CHECK(loop.code == 2);
  CHECK(loop.err.find("parse error") != std::string::npos);
  CHECK(run({"rank", "--bogus"}, edges_of(complete_graph(3))).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"rank", "/definitely/not/here.edges"}).code == 2);
  CHECK(run({"rank", "--trials", "0"}, edges_of(complete_graph(3))).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("generate") {
  const auto one = run({"generate", "--family", "k5chain", "--size", "3"});
  CHECK(one.code == 0);
  std::istringstream in(one.out);
  CHECK(read_edge_list(in) == clique_chain(5, 3));

  const auto rr = run({"generate", "--family", "random-regular", "--degree", "5", "--size", "12", "--seed", "4"});
  CHECK(rr.code == 0);
  std::istringstream rin(rr.out);
  Graph g = read_edge_list(rin);
  CHECK(g.vertex_count() == 12);
  CHECK(g.edge_count() == 30);

  const auto dir = scratch_dir();
  const auto many = run({"generate", "--family", "complete", "--count", "3", "--size", "4:6",
                         "--out", dir.string()});
  CHECK(many.code == 0);
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) files += entry.path().extension() == ".edges";
  CHECK(files == 3);

  CHECK(run({"generate"}).code == 2);
  CHECK(run({"generate", "--family", "random-regular", "--degree", "3", "--size", "7"}).code == 2);
}

TEST_CASE("reduce") {
  const auto bridge = run({"reduce", "--op", "remove-bridge", "--edge", "2-3"},
                          "0 1\n1 2\n0 2\n2 3\n3 4\n4 5\n3 5\n");
  CHECK(bridge.code == 0);
  const auto trace = nlohmann::json::parse(bridge.out);
  REQUIRE(trace["steps"].size() == 1);
  CHECK(trace["steps"][0]["kind"] == "remove-bridge");
  CHECK(trace["steps"][0]["stress_before"] == 0);
  CHECK(trace["final_graph"]["edges"].size() == 6);

  const auto k5 = run({"reduce", "--op", "delete-vertex", "--vertex", "0"}, edges_of(complete_graph(5)));
  CHECK(k5.code == 0);
  const auto step = nlohmann::json::parse(k5.out)["steps"][0];
  CHECK(step["relation"]["kind"] == "le_plus");
  CHECK(step["relation"]["offset"] == 2);
  CHECK(step["stress_before"] == 3);
  CHECK(step["stress_after"] == 1);

  const auto split = run({"reduce", "--op", "disconnect-split", "--edge", "1-5", "--edge", "6-10"},
                         edges_of(clique_chain(5, 3)));
  CHECK(split.code == 0);
  CHECK(nlohmann::json::parse(split.out)["accumulated_relation"]["kind"] == "equal");

  const auto peel = run({"reduce", "--op", "peel-closure", "--vertex", "0"}, "0 1\n1 2\n2 3\n3 4\n4 0\n");
  CHECK(peel.code == 0);
  CHECK(nlohmann::json::parse(peel.out)["final_graph"]["edges"].empty());

  const auto ext = run({"reduce", "--op", "inverse-one-extension", "--vertex", "0", "--pair", "1-2"},
                       "0 1\n0 2\n0 3\n1 3\n2 3\n");
  CHECK(ext.code == 0);

  CHECK(run({"reduce", "--op", "remove-bridge", "--edge", "0-1"}, edges_of(complete_graph(4))).code == 2);
  CHECK(run({"reduce", "--op", "warp", "--vertex", "0"}, edges_of(complete_graph(4))).code == 2);
  CHECK(run({"reduce", "--vertex", "0"}, edges_of(complete_graph(4))).code == 2);
  CHECK(run({"reduce", "--op", "delete-vertex"}, edges_of(complete_graph(4))).code == 2);
}

TEST_CASE("certify") {
  const Edge e(0, 1);
  const auto ok = run({"certify", "--max-degree", "4"}, edges_of(complete_graph(5).without_edges(std::span(&e, 1))));
  CHECK(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  CHECK(j.contains("trace"));

  const Graph r5 = random_regular(12, 5, 1);
  const Edge first = r5.edges().front();
  const auto five = run({"certify", "--max-degree", "5"}, edges_of(r5.without_edges(std::span(&first, 1))));
  CHECK_MESSAGE(five.code == 0, five.err);

  CHECK(run({"certify", "--max-degree", "4"}, edges_of(complete_graph(5))).code == 2);
  CHECK(run({"certify", "--max-degree", "7"}, edges_of(complete_graph(4))).code == 2);
}

TEST_CASE("selfcheck") {
  const auto text = run({"selfcheck", "--count", "60", "--max-vertices", "10"});
  CHECK(text.code == 0);
  CHECK(text.out == "selfcheck: 60 graphs, 0 oracle mismatches\n");
  const auto json = run({"selfcheck", "--count", "20", "--format", "json", "--seed", "3"});
  CHECK(nlohmann::json::parse(json.out)["mismatches"] == 0);
}

TEST_CASE("export") {
  const auto dot = run({"export"}, "0 1\n1 2\n");
  CHECK(dot.code == 0);
  CHECK(dot.out.find("0 -- 1") != std::string::npos);
  const auto svg = run({"export", "--format", "svg"}, edges_of(complete_graph(4)));
  CHECK(svg.code == 0);
  CHECK(svg.out.find("<svg") != std::string::npos);
  CHECK(std::count(svg.out.begin(), svg.out.end(), '\n') > 6);
  CHECK(run({"export", "--format", "png"}, "0 1\n").code == 2);
}
