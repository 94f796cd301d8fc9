#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qi/cli.hpp"
#include "qi/error.hpp"
#include "qi/json_io.hpp"
#include "qi/trace_algebra.hpp"
#include "settings.hpp"

using namespace qi;

namespace {

const std::string kData = QI_DATA_DIR;

struct Result {
  int code;
  std::string out, err;
  json parsed() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::string temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("qi_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

bool has_id(const json& descriptors, const std::string& id) {
  for (const auto& d : descriptors)
    if (d["id"] == id) return true;
  return false;
}

}  // namespace

TEST_CASE("validate") {
  auto r = run({"validate", "--setting", data("ex2_setting.json")});
  CHECK(r.code == 0);
  CHECK(r.parsed()["valid"] == true);

  const auto odd_sp = temp_file("odd_sp.json", R"({"vertices":[{"id":1,"dim":3,"group":"Sp"}],"arrows":[]})");
  r = run({"validate", "--setting", odd_sp});
  CHECK(r.code == 2);
  CHECK(r.parsed()["valid"] == false);

  const auto unknown = temp_file("unknown.json", R"({"vertices":[{"id":1,"dim":2,"group":"GL","color":1}],"arrows":[]})");
  CHECK(run({"validate", "--setting", unknown}).code == 1);
  const auto bad_group = temp_file("bad_group.json", R"({"vertices":[{"id":1,"dim":2,"group":"U"}],"arrows":[]})");
  CHECK(run({"validate", "--setting", bad_group}).code == 1);
  const auto broken = temp_file("broken.json", "{\"vertices\": [");
  CHECK(run({"validate", "--setting", broken}).code == 1);
  CHECK(run({"validate", "--setting", "/nonexistent/file.json"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({}).code == 1);
}

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "--setting", data("gl2_two_loops.json"), "--max-path-len", "3"});
  REQUIRE(r.code == 0);
  const json j = r.parsed();
  CHECK(j["family"] == "quiver");
  CHECK(j["count"] == 18);
  for (const char* id : {"sigma1(X1)", "sigma1(X2)", "sigma1(X1 X2)", "sigma2(X1)", "sigma2(X2)"})
    CHECK(has_id(j["descriptors"], id));
  CHECK(run({"enumerate", "--setting", data("gl2_two_loops.json")}).code == 1);

  r = run({"enumerate", "--setting", data("ex2_setting.json"), "--max-path-len", "2", "--max-weight", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.parsed()["family"] == "general");
  CHECK(r.parsed()["max_weight"] == 2);
  CHECK(run({"enumerate", "--setting", data("ex2_setting.json"), "--max-path-len", "2"}).code == 1);

  const auto acyclic = temp_file(
      "acyclic.json",
      R"({"vertices":[{"id":1,"dim":2,"group":"GL"},{"id":2,"dim":3,"group":"GL"}],"arrows":[{"id":"a","head":2,"tail":1}]})");
  r = run({"enumerate", "--setting", acyclic, "--max-path-len", "4"});
  CHECK(r.code == 0);
  CHECK(r.parsed()["count"] == 0);
}

TEST_CASE("eval and compare") {
  const std::vector<std::string> args{"eval", "--setting", data("gl2_two_loops.json"), "--rep", data("two_loops_rep.json"),
                                      "--max-path-len", "2"};
  auto r = run(args);
  REQUIRE(r.code == 0);
  const json values = r.parsed()["values"];
  CHECK(values[0]["id"] == "sigma1(X1)");
  CHECK(values[0]["value"] == "5");
  CHECK(run(args).out == r.out);

  r = run({"compare", "--setting", data("gl2_loop.json"), "--rep", data("nilpotent.json"), "--rep2", data("zero.json"),
           "--max-path-len", "4"});
  REQUIRE(r.code == 0);
  CHECK(r.parsed()["verdict"] == "equal");
  CHECK(r.parsed()["caveats"].size() == 2);

  r = run({"compare", "--setting", data("gl2_two_loops.json"), "--rep", data("two_loops_rep.json"), "--rep2",
           data("two_loops_rep_conjugate.json"), "--max-path-len", "3", "--field", "fp:101"});
  REQUIRE(r.code == 0);
  CHECK(r.parsed()["verdict"] == "equal");

  const auto other = temp_file("other_rep.json", R"({"X": [["2", "0"], ["0", "0"]]})");
  r = run({"compare", "--setting", data("gl2_loop.json"), "--rep", data("zero.json"), "--rep2", other,
           "--max-path-len", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.parsed()["verdict"] == "distinguished");
  CHECK(r.parsed()["distinguished_by"] == "sigma1(X)");

  const auto wrong_shape = temp_file("wrong_shape.json", R"({"X": [["1"]]})");
  CHECK(run({"eval", "--setting", data("gl2_loop.json"), "--rep", wrong_shape, "--max-path-len", "1"}).code == 1);
  const auto extra = temp_file("extra.json", R"({"X": [["1","0"],["0","1"]], "Y": [["1"]]})");
  CHECK(run({"eval", "--setting", data("gl2_loop.json"), "--rep", extra, "--max-path-len", "1"}).code == 1);
}

TEST_CASE("check-identities") {
  auto r = run({"check-identities", "--family", "sigma-tr", "--n", "2", "--trials", "100", "--seed", "7"});
  REQUIRE(r.code == 0);
  const json j = r.parsed();
  CHECK(j["ok"] == true);
  bool found = false;
  for (const auto& c : j["cases"])
    if (c["name"] == "sigma_1,1 vanishes at n=2") {
      found = true;
      CHECK(c["passed"] == 100);
    }
  CHECK(found);
  CHECK(run({"check-identities", "--family", "sigma-tr", "--n", "2", "--trials", "100", "--seed", "7"}).out == r.out);
  CHECK(run({"check-identities", "--family", "pf-square", "--n", "3"}).code == 2);
  CHECK(run({"check-identities", "--family", "nope"}).code == 1);
  CHECK(run({"check-identities", "--family", "power", "--trials", "5", "--field", "fp:9"}).code == 2);
  CHECK(run({"check-identities", "--family", "power", "--trials", "5", "--field", "reals"}).code == 1);
  CHECK(run({"check-identities", "--family", "power", "--trials", "5", "--field", "fp:10007"}).code == 0);
}

TEST_CASE("bpf-eval") {
  const std::vector<std::string> base{"bpf-eval", "--tableau", data("pfaffian_tableau.json"), "--rep",
                                      data("pfaffian_matrices.json")};
  auto r = run(base);
  REQUIRE(r.code == 0);
  CHECK(r.parsed()["value"] == "32");
  auto args = base;
  args.insert(args.end(), {"--field", "fp:7"});
  CHECK(run(args).parsed()["value"] == "4");

  const auto odd = temp_file("odd_tableau.json", R"({"columns":[3],"arrows":[{"tail":[1,1],"head":[1,2],"slot":1}]})");
  CHECK(run({"bpf-eval", "--tableau", odd, "--rep", data("pfaffian_matrices.json")}).code == 2);
}

TEST_CASE("JSON round trips") {
  const auto s = fixtures::five_vertex(2, 2, 3);
  const auto back = setting_from_json(to_json(s));
  CHECK(to_json(back) == to_json(s));
  CHECK(back.involution == s.involution);

  const auto gs = general_generators(fixtures::five_vertex(1, 1, 2), 2, 2);
  for (const auto& d : gs.descriptors) {
    const auto again = descriptor_from_json(gs.setting, to_json(gs.setting, d));
    CHECK(again.id == d.id);
    CHECK(to_json(gs.setting, again) == to_json(gs.setting, d));
  }

  const auto tr = sigma_tr_setting(3);
  const TracePolynomial p = sigma_tr_symbolic(1, 1);
  CHECK(trace_polynomial_from_json(tr, to_json(tr, p), Field::rational()) == p);

  const Matrix m = Matrix::from_ints({{1, -2}, {3, 4}}, Field::rational()) * Field::rational().parse_scalar("1/3");
  CHECK(matrix_from_json(to_json(m), Field::rational()) == m);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"([["1"], ["1", "2"]])"), Field::rational()), SchemaError);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"([["x"]])"), Field::rational()), SchemaError);
}
