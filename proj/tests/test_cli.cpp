#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "basekit/cli.hpp"
#include "basekit/fixtures.hpp"
#include "basekit/io.hpp"

using namespace basekit;

namespace {

std::filesystem::path temp_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "basekit-cli-tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string fixture_file(const std::string& name) {
  const auto path = temp_dir() / (name + ".json");
  std::ofstream f(path);
  f << group_to_json(fixture_group(name)).dump(2) << "\n";
  return path.string();
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("greedy command: single run and backtrack maximum") {
  const auto c5 = run({"--format", "json", "greedy", fixture_file("c5")});
  REQUIRE(c5.code == 0);
  CHECK(c5.json()["results"]["trace"]["base"] == Json::array({0}));

  const auto s4 = run({"--format", "json", "greedy", fixture_file("s4"), "--max"});
  REQUIRE(s4.code == 0);
  CHECK(s4.json()["results"]["greedy_size_max"] == 3);

  const auto m12 = run({"--format", "json", "greedy", fixture_file("m12"), "--max"});
  REQUIRE(m12.code == 0);
  CHECK(m12.json()["results"]["greedy_size_max"] == 5);
}

TEST_CASE("greedy command: budget exhaustion is a nonzero exit") {
  const auto r = run({"--budget", "1", "greedy", fixture_file("s6"), "--max"});
  CHECK(r.code != 0);
  CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("bounds command: live stabilizer path") {
  const auto r = run({"--format", "json", "bounds", fixture_file("s4"),
                      "--stabilizer", "0", "--c", "3"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["results"]["qhat"] == Json{{"num", "7"}, {"den", "8"}});
  CHECK(j["results"]["certificate"]["verdict"] == "established");
  CHECK(j["results"]["certificate"]["conclusion"] == "b(G) <= 3");

  const auto reg = run({"--format", "json", "bounds", fixture_file("c6"),
                        "--stabilizer", "0"});
  REQUIRE(reg.code == 0);
  CHECK(reg.json()["results"]["qhat"] == Json{{"num", "0"}, {"den", "1"}});
}

TEST_CASE("bounds command: ingested class data matches the live path") {
  const Group g = fixture_group("s4");
  const ClassData d = class_data_from_groups(g, g.point_stabilizer(3));
  const auto path = temp_dir() / "s4_s3_classes.json";
  {
    std::ofstream f(path);
    f << class_data_to_json(d).dump(2) << "\n";
  }
  const auto r = run({"--format", "json", "bounds", "--class-data", path.string(),
                      "--c", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.json()["results"]["qhat"] == Json{{"num", "7"}, {"den", "8"}});

  // Uncertified data is refused in certificate mode.
  Json uncertified = class_data_to_json(d);
  uncertified["complete"] = false;
  const auto bad_path = temp_dir() / "uncertified.json";
  {
    std::ofstream f(bad_path);
    f << uncertified.dump(2) << "\n";
  }
  const auto bad = run({"bounds", "--class-data", bad_path.string()});
  CHECK(bad.code != 0);
  CHECK(bad.err.find("certified") != std::string::npos);
}

TEST_CASE("bounds command: subgroup file path") {
  const Group g = fixture_group("s4");
  const auto sub_path = temp_dir() / "s3_sub.json";
  {
    std::ofstream f(sub_path);
    f << group_to_json(g.point_stabilizer(3)).dump(2) << "\n";
  }
  const auto r = run({"--format", "json", "bounds", fixture_file("s4"),
                      "--subgroup-file", sub_path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.json()["results"]["qhat"] == Json{{"num", "7"}, {"den", "8"}});
}

TEST_CASE("bounds command: exactly one input mode") {
  CHECK(run({"bounds", fixture_file("s4")}).code != 0);
  CHECK(run({"bounds", fixture_file("s4"), "--stabilizer", "0", "--class-data",
             "x.json"}).code != 0);
}

TEST_CASE("certify command") {
  const auto pk = run({"--format", "json", "certify", "--prop-key", "3", "4", "7/8"});
  REQUIRE(pk.code == 0);
  CHECK(pk.json()["results"]["certificate"]["verdict"] == "established");

  const auto ci = run({"--format", "json", "certify", "--cor-int", "5", "4", "24",
                       "1/2"});
  REQUIRE(ci.code == 0);
  // t = 16/120 < 1 and (1 - t)^2 = (13/15)^2 >= 1/2: not established.
  CHECK(ci.json()["results"]["certificate"]["verdict"] == "not-established");

  const auto g4 = run({"--format", "json", "certify", "--greedy4", "13571955000",
                       "11174042880", "3523215360", "3/10"});
  REQUIRE(g4.code == 0);
  const Json j = g4.json();
  CHECK(j["results"]["certificate"]["verdict"] == "established");
  CHECK(j["results"]["breakdown"]["p"]["num"] != "0");

  CHECK(run({"certify", "--prop-key", "3", "4", "x"}).code != 0);
  CHECK(run({"certify", "--prop-key", "3", "4", "7/8", "--cor-int", "1", "2", "3",
             "1/2"}).code != 0);
  CHECK(run({"certify"}).code != 0);
}

TEST_CASE("rank command") {
  const auto arith = run({"--format", "json", "rank", "--index", "148642560",
                          "--rank", "14"});
  REQUIRE(arith.code == 0);
  CHECK(arith.json()["results"]["subdegree_lower_bound"] ==
        Json{{"num", "11434043"}, {"den", "1"}});

  const auto n2 = run({"--format", "json", "rank", "--index", "100", "--rank", "2"});
  CHECK(n2.json()["results"]["subdegree_lower_bound"]["num"] == "99");

  const auto live = run({"--format", "json", "rank", fixture_file("s4"),
                         "--stabilizer", "0"});
  REQUIRE(live.code == 0);
  CHECK(live.json()["results"]["profile"]["rank"] == 2);
  CHECK(live.json()["results"]["profile"]["largest_subdegree"] == 3);

  CHECK(run({"rank"}).code != 0);
}

TEST_CASE("search command") {
  const auto g_file = fixture_file("s4");
  const Group g = fixture_group("s4");
  const auto h_path = temp_dir() / "s4_stab3.json";
  {
    std::ofstream f(h_path);
    f << group_to_json(g.point_stabilizer(3)).dump(2) << "\n";
  }
  const auto r = run({"--format", "json", "--seed", "5", "search", g_file,
                      h_path.string(), "--threshold", "3", "--max-iters", "100"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["results"]["outcome"]["success"] == true);
  CHECK(j["results"]["outcome"]["intersection_order"] == "2");
  CHECK(j["seed"] == 5);

  // Threshold |H| + 1: immediate success; failure is still exit 0.
  const auto quick = run({"--format", "json", "search", g_file, h_path.string(),
                          "--threshold", "7"});
  CHECK(quick.code == 0);
  CHECK(quick.json()["results"]["outcome"]["iterations_used"] == 1);

  const auto fail = run({"--format", "json", "search", g_file, h_path.string(),
                         "--threshold", "1", "--max-iters", "5"});
  CHECK(fail.code == 0);
  CHECK(fail.json()["results"]["outcome"]["success"] == false);
}

TEST_CASE("reports are byte-identical for the same seed and inputs") {
  const auto file = fixture_file("s4_pairs");
  const std::vector<std::string> args = {"--format", "json", "--seed", "9",
                                         "greedy", file, "--policy", "random"};
  CHECK(run(args).out == run(args).out);

  const std::vector<std::string> sargs = {"--format", "json", "--seed", "4",
                                          "search", file, file,
                                          "--threshold", "1", "--max-iters", "7"};
  CHECK(run(sargs).out == run(sargs).out);
}

TEST_CASE("text and json modes carry the same numbers") {
  const auto file = fixture_file("s4");
  const auto text = run({"bounds", file, "--stabilizer", "0"});
  const auto json = run({"--format", "json", "bounds", file, "--stabilizer", "0"});
  REQUIRE(text.code == 0);
  CHECK(text.out.find("\"7\"") != std::string::npos);  // qhat numerator
  CHECK(text.out.find("\"8\"") != std::string::npos);
  CHECK(json.json()["results"]["qhat"]["num"] == "7");
}

TEST_CASE("json reports round-trip and carry the version") {
  const auto r = run({"--format", "json", "greedy", fixture_file("c6")});
  const Json j = r.json();
  CHECK(j["version"] == kToolVersion);
  CHECK(Json::parse(j.dump()) == j);
}

TEST_CASE("errors exit nonzero") {
  CHECK(run({"greedy", "/nonexistent/file.json"}).code != 0);
  CHECK(run({"unknown-command"}).code != 0);
  CHECK(run({}).code != 0);
  const auto garbled = temp_dir() / "garbled.json";
  {
    std::ofstream f(garbled);
    f << "{not json";
  }
  CHECK(run({"greedy", garbled.string()}).code != 0);
}

TEST_CASE("fixture command dumps loadable groups") {
  const auto listed = run({"--format", "json", "fixture", "--list"});
  REQUIRE(listed.code == 0);
  CHECK(listed.json()["results"]["names"].size() == fixture_names().size());

  const auto dumped = run({"fixture", "m11"});
  REQUIRE(dumped.code == 0);
  const Group g = group_from_json(Json::parse(dumped.out));
  CHECK(g.order() == 7920);

  CHECK(run({"fixture", "bogus"}).code != 0);
}
