#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <unistd.h>

#include "civar/construct.hpp"
#include "cli.hpp"
#include "corpus.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Workspace {
  fs::path dir;
  Workspace() {
    dir = fs::temp_directory_path() / ("civar_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    write("ring1.json", R"({"p": 101, "vars": ["x", "y"], "ci": ["x^2", "y^2"]})");
    write("ring4.json", R"({"vars": ["x", "y"], "ci": ["x^2"]})");
    write("ring3.json", R"({"vars": ["x", "y", "z"], "ci": ["x^2", "y^2", "z^2"]})");
    write("mod_k", "gens: [0]\nrelations: [[x, y]]\n");
    write("mod_k3", "gens: [0]\nrelations: [[x, y, z]]\n");
    write("mod_free", "gens: [0]\nrelations: []\n");
    auto r1 = corpus::r1();
    auto k = civar::residue_field(r1);
    auto m1 = civar::cut_variety(k, corpus::hpoly(r1, "chi1"));
    auto m2 = civar::cut_variety(k, corpus::hpoly(r1, "chi2"));
    write("mod_m1m2", civar::format_module(civar::direct_sum(m1, m2)));
  }
  ~Workspace() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  void write(const std::string& name, const std::string& text) const { std::ofstream(dir / name) << text; }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = civar::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code) {
  args.push_back("--format");
  args.push_back("json");
  Run r = run(args);
  CHECK(r.code == expected_code);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("variety of k over R1 is the whole space") {
  Workspace ws;
  json rep = run_json({"variety", ws.path("ring1.json"), ws.path("mod_k")}, 0);
  CHECK(rep["status"] == "ok");
  CHECK(rep["variety"]["dimension"] == 2);
  CHECK(rep["variety"]["generators"] == json::array({"0"}));
  CHECK(rep["exit_code"] == 0);
}

TEST_CASE("cut by chi1 gives the line chi1 = 0") {
  Workspace ws;
  const std::string out = ws.path("k_cut");
  json rep = run_json({"cut", ws.path("ring1.json"), ws.path("mod_k"), "--eta", "chi1", "--verify",
                       "--out", out},
                      0);
  CHECK(rep["variety"]["generators"] == json::array({"chi1"}));
  CHECK(rep["variety"]["dimension"] == 1);
  CHECK(rep["theorem_check"]["equality"] == true);

  SUBCASE("the written module file parses back to the same variety") {
    json again = run_json({"variety", ws.path("ring1.json"), out}, 0);
    CHECK(again["variety"]["generators"] == json::array({"chi1"}));
  }
}

TEST_CASE("check-carlson verdicts") {
  Workspace ws;
  json pass = run_json({"check-carlson", ws.path("ring1.json"), ws.path("mod_m1m2"), "--a1", "chi2",
                        "--a2", "chi1"},
                       0);
  CHECK(pass["verdict"] == "pass");
  CHECK(pass["summands"].size() == 2);

  json premise = run_json({"check-carlson", ws.path("ring1.json"), ws.path("mod_m1m2"), "--a1", "chi1",
                           "--a2", "chi1"},
                          1);
  CHECK(premise["status"] == "error");
  CHECK(premise["reason"] == "premise");
}

TEST_CASE("reports are byte-identical across runs") {
  Workspace ws;
  for (const char* format : {"text", "json"}) {
    std::vector<std::string> args{"decompose", ws.path("ring1.json"), ws.path("mod_m1m2"), "--format",
                                  format};
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  std::vector<std::string> args{"operators", ws.path("ring1.json"), ws.path("mod_k"), "--verify"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("exit codes and reasons") {
  Workspace ws;
  SUBCASE("usage") {
    Run r = run({"nonsense"});
    CHECK(r.code == 1);
    CHECK(run({"variety", ws.path("ring1.json"), ws.path("mod_k"), "--steps", "0"}).code == 1);
  }
  SUBCASE("help") { CHECK(run({"--help"}).code == 0); }
  SUBCASE("missing file") {
    json rep = run_json({"variety", ws.path("ring1.json"), ws.path("absent")}, 1);
    CHECK(rep["reason"] == "io");
  }
  SUBCASE("bad ring") {
    ws.write("bad.json", R"({"vars": ["x", "y"], "ci": ["x^2", "x*y"]})");
    json rep = run_json({"validate", ws.path("bad.json")}, 1);
    CHECK(rep["reason"] == "not_complete_intersection");
    ws.write("broken.json", "{");
    CHECK(run_json({"validate", ws.path("broken.json")}, 1)["reason"] == "syntax");
    ws.write("shape.json", R"({"vars": "x"})");
    CHECK(run_json({"validate", ws.path("shape.json")}, 1)["reason"] == "ring_file");
  }
  SUBCASE("module syntax") {
    ws.write("bad_mod", "gens: [0]\nrelations: [[x +]]\n");
    CHECK(run_json({"resolve", ws.path("ring1.json"), ws.path("bad_mod")}, 1)["reason"] == "syntax");
  }
  SUBCASE("budget") {
    json rep = run_json({"variety", ws.path("ring3.json"), ws.path("mod_k3"), "--steps", "2",
                         "--max-steps", "2", "--degree-cap", "1"},
                        2);
    CHECK(rep["reason"] == "not_stabilized");
  }
  SUBCASE("infinite length module cannot be decomposed") {
    json rep = run_json({"decompose", ws.path("ring4.json"), ws.path("mod_free")}, 1);
    CHECK(rep["reason"] == "infinite_length");
  }
}

TEST_CASE("realize and validate") {
  Workspace ws;
  json rep = run_json({"realize", ws.path("ring1.json"), "--eta", "chi1+chi2", "--verify"}, 0);
  CHECK(rep["variety"]["generators"] == json::array({"chi1 + chi2"}));
  CHECK(rep["mcm"] == true);

  json v = run_json({"validate", ws.path("ring1.json"), ws.path("mod_m1m2")}, 0);
  CHECK(v["ring"]["codim"] == 2);
  CHECK(v["module"]["minimal_generators"] == 4);

  json res = run_json({"resolve", ws.path("ring4.json"), ws.path("mod_k"), "--steps", "4", "--verify"}, 0);
  CHECK(res["betti"] == json::array({1, 2, 2, 2, 2}));
  CHECK(res["complex_verified"] == true);
}
