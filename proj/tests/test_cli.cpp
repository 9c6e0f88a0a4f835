#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "zzm/cli.hpp"
#include "zzm/motive_json.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result zzm_run(std::vector<std::string> args) {
  args.insert(args.begin(), "zzm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = zzm::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("zzm_test_" + name)).string();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("check reports the genus line") {
  auto r = zzm_run({"check", "z21+z41+z61"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1+1+1=3") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(zzm_run({"check", "z21+z41+z61+z62"}).code == 0);
}

TEST_CASE("matchings") {
  auto r = zzm_run({"matchings", "z21+z41+z61+z62"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["matchings"].empty());
  CHECK(j["complete"] == false);

  j = json::parse(zzm_run({"matchings", "z21+z41"}).out);
  CHECK(j["count"] == 4);
  CHECK(j["complete"] == true);
  for (const auto& t : j["theta"]) CHECK(t == json::array({1, 4}));
}

TEST_CASE("potential matches the reference permutations") {
  auto r = zzm_run({"potential", "z21+z41"});
  REQUIRE(r.code == 0);
  auto S = zzm::read_motive(r.out);
  zzm::Superpotential T;
  T.sigma0 = zzm::Permutation::from_cycles(4, {{1, 2, 3, 4}});
  T.sigma1 = zzm::Permutation::from_cycles(4, {{1, 4, 3, 2}});
  T.finalize();
  CHECK(zzm::isomorphic(S, T).has_value());
}

TEST_CASE("motive file input and lambda") {
  auto path = temp_path("f3.json");
  REQUIRE(zzm_run({"potential", "z21+z41+z61", "-o", path}).code == 0);
  auto m = json::parse(zzm_run({"matchings", path}).out);
  CHECK(m["count"] == 3);
  CHECK(zzm_run({"check", path}).code == 0);
  CHECK(zzm_run({"potential", path, "--lambda", "2,0,0,1"}).code == 1);

  auto big = json::parse(zzm_run({"potential", "z21+z41+z61", "--lambda", "2,0,0,1"}).out);
  CHECK(big["edges"].size() == 6);
  auto bad = zzm_run({"potential", "z21+z41+z61", "--lambda", "2,0,x,1"});
  CHECK(bad.code == 1);
  CHECK(json::parse(bad.err)["error"]["kind"] == "syntax");

  // broken geometry is an invariant violation: exit 2 under check only
  auto j = json::parse(zzm::write_motive(zzm::read_motive(zzm_run({"potential", "z21+z41+z61"}).out)));
  j["edges"][0]["vec"] = json::array({json::array({1, 1}), json::array({0, 1})});
  write(path, j.dump());
  CHECK(zzm_run({"check", path}).code == 2);
  auto e = zzm_run({"matchings", path});
  CHECK(e.code == 1);
  CHECK(json::parse(e.err)["error"]["kind"] == "invariant");
  CHECK(zzm_run({"matchings", temp_path("missing.json")}).code == 1);
  std::filesystem::remove(path);
}

TEST_CASE("errors are JSON") {
  auto r = zzm_run({"check", "z21+z4?"});
  CHECK(r.code == 1);
  auto j = json::parse(r.err);
  CHECK(j["error"]["kind"] == "syntax");
  CHECK(j["error"].contains("position"));

  r = zzm_run({"quad", "z21+z41+z61"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.err)["error"]["kind"] == "precondition");

  CHECK(zzm_run({"potential", "z21+z41", "--format", "svg"}).code == 1);
  CHECK(zzm_run({"frobnicate", "z21"}).code == 1);
  CHECK(zzm_run({"draw", "z21+z41", "--window", "21x20"}).code == 1);
  CHECK(zzm_run({"draw", "z21+z41", "--window", "3by3"}).code == 1);
}

TEST_CASE("matching cap from the environment") {
  setenv("ZZM_MAX_MATCHINGS", "2", 1);
  auto r = zzm_run({"matchings", "z21+z41"});
  unsetenv("ZZM_MAX_MATCHINGS");
  CHECK(r.code == 1);
  CHECK(json::parse(r.err)["error"]["kind"] == "limit");
  CHECK(zzm_run({"matchings", "z21+z41"}).code == 0);
}

TEST_CASE("draw") {
  auto r = zzm_run({"draw", "z21+z41", "--window", "3x3"});
  REQUIRE(r.code == 0);
  CHECK(count(r.out, "<polygon class=\"black\"") == 9);
  CHECK(count(r.out, "<polygon class=\"white\"") == 9);
  r = zzm_run({"draw", "z21+z41+z61", "--quiver", "--labels", "--stroke-width", "2", "--black", "#202020"});
  REQUIRE(r.code == 0);
  CHECK(count(r.out, "class=\"arrow\"") == 3);
  CHECK(r.out.find("#202020") != std::string::npos);
  CHECK(r.out.find("<text") != std::string::npos);
}

TEST_CASE("weight realization verbs") {
  auto q = zzm_run({"quad", "z21+z41+z61", "--search"});
  REQUIRE(q.code == 0);
  auto j = json::parse(q.out);
  CHECK(j["quadrangles"].size() == 3);
  CHECK(j["area"] == json::array({2, 1}));

  auto wpath = temp_path("w.json");
  write(wpath, j["weights"].dump());
  CHECK(zzm_run({"quad", "z21+z41+z61", "--weights", wpath}).out == q.out);
  CHECK(zzm_run({"quad", "z21+z41+z61", "--weights", wpath, "--search"}).code == 1);
  write(wpath, R"({"nu1":[1,1,1],"nu2":[1,1,1],"nu3":[1,1,1]})");
  auto bad = zzm_run({"quad", "z21+z41+z61", "--weights", wpath});
  CHECK(bad.code == 1);
  CHECK(json::parse(bad.err)["error"]["kind"] == "precondition");
  write(wpath, R"({"nu1":[1,1],"nu2":[1,1,1],"nu3":[1,1,1]})");
  CHECK(zzm_run({"quad", "z21+z41+z61", "--weights", wpath}).code == 1);
  std::filesystem::remove(wpath);

  auto svg = zzm_run({"quad", "z21+z41+z61", "--search", "--format", "svg"});
  CHECK(count(svg.out, "class=\"diagonal\"") == 6);

  auto n = json::parse(zzm_run({"newton", "z21+z41+z61", "--search"}).out);
  CHECK(n["points"].size() == 3);
  CHECK(n["dimension"] == 2);
  CHECK(n["hull"].size() == 3);
  auto nsvg = zzm_run({"newton", "z21+z41+z61", "--search", "--format", "svg"});
  CHECK(count(nsvg.out, "<polygon class=\"newton\"") == 1);

  auto jt = zzm_run({"jacobi", "z21+z41", "--search"});
  CHECK(jt.code == 0);
  CHECK(jt.out.find("relations: hold") != std::string::npos);
  auto jj = json::parse(zzm_run({"jacobi", "z21+z41+z61", "--search", "--format", "json"}).out);
  CHECK(jj["relations_hold"] == true);
  CHECK(jj["potential"] == "X1*X2*X3 - X1*X3*X2");
}

TEST_CASE("forms") {
  auto j = json::parse(zzm_run({"forms", "z21+z41"}).out);
  CHECK(j["well_defined"] == true);
  CHECK(j["identities"] == true);
  CHECK(j["kernel"] == true);
  CHECK(zzm_run({"forms", "z21+z41+z61+z62"}).code == 1);
}

TEST_CASE("deterministic") {
  for (std::vector<std::string> args : {std::vector<std::string>{"potential", "z21+z41+z61+z62"},
                                        std::vector<std::string>{"draw", "z21+z41", "--window", "2x2"},
                                        std::vector<std::string>{"matchings", "z21+z41"}})
    CHECK(zzm_run(args).out == zzm_run(args).out);
}
