#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcat/cli.hpp"
#include "qcat/io.hpp"

using namespace qcat;
using io::Json;

namespace {

std::string data(const std::string& name) { return std::string(QCAT_TEST_DATA) + "/" + name; }

struct Run {
  int code;
  Json out;
  std::string raw;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  Run r{code, Json(), out.str(), err.str()};
  if (!r.raw.empty()) r.out = Json::parse(r.raw);
  return r;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  return Json::parse(in);
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("qcat_unit_" + name)).string();
}

}  // namespace

TEST_CASE("cli laws") {
  auto r = run({"laws", "--quantale", "rbot"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out["status"] == "ok");
  CHECK(r.out["report"]["triples_checked"] == 216);
  CHECK(run({"laws", "--quantale", "bool,bool"}).code == cli::kOk);
  CHECK(run({"laws", "--quantale", "rbot", "--grid", "bot,0,5/2,inf"}).out["report"]["triples_checked"] == 64);
  CHECK(run({"laws", "--quantale", "nonsense"}).code == cli::kInputError);
}

TEST_CASE("cli validate") {
  auto ok = run({"validate", data("chain.json")});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.out["validation"]["valid"] == true);
  CHECK(ok.out["endohoms"]["classes"]["a"] == "regular");

  auto bad = run({"validate", data("invalid_category.json")});
  CHECK(bad.code == cli::kViolations);
  CHECK(bad.out["status"] == "violations");
  CHECK(bad.out["validation"]["violations"][0]["law"] == "composition");

  auto metric = run({"validate", data("metric3.json")});
  CHECK(metric.code == cli::kOk);
  CHECK_FALSE(metric.out.contains("endohoms"));
}

TEST_CASE("cli input errors name the file and location") {
  auto r = run({"validate", data("malformed_value.json")});
  CHECK(r.code == cli::kInputError);
  CHECK(r.out["status"] == "error");
  CHECK(r.err.find("malformed_value.json") != std::string::npos);
  CHECK(r.err.find("/hom/1/0") != std::string::npos);

  auto syntax = run({"validate", data("malformed_syntax.json")});
  CHECK(syntax.code == cli::kInputError);
  CHECK(syntax.err.find("byte") != std::string::npos);

  CHECK(run({"validate", data("does_not_exist.json")}).code == cli::kInputError);
  CHECK(run({"frobnicate"}).code == cli::kInputError);
  CHECK(run({}).code == cli::kInputError);
  auto cyc = run({"from-dag", data("cyclic.txt")});
  CHECK(cyc.code == cli::kInputError);
  CHECK(cyc.err.find("cycle") != std::string::npos);
}

TEST_CASE("cli cauchy and adjoint") {
  auto r = run({"cauchy", data("representable.json")});
  CHECK(r.code == cli::kOk);
  CHECK(r.out["cauchy"] == true);
  CHECK(r.out["representing"] == "b");
  CHECK(r.out["witness"] == "b");

  auto p = run({"cauchy", data("product_module.json")});
  CHECK(p.code == cli::kViolations);
  CHECK(p.out["cauchy"] == true);
  CHECK(p.out["representing"].is_null());
  CHECK(p.out["witness"].is_null());
  CHECK(p.out["right_adjoint"]["mat"] == Json::array({Json::array({"(true,false)", "(false,true)"})}));

  auto a = run({"adjoint", data("representable.json")});
  CHECK(a.code == cli::kOk);
  CHECK(a.out["right_adjoint"]["mat"] == Json::array({Json::array({"bot", "0"})}));
  CHECK(a.out["adjunction"]["unit_ok"] == true);

  CHECK(run({"cauchy", data("corepresentable.json")}).code == cli::kInputError);
}

TEST_CASE("cli complete") {
  auto chain = run({"complete", data("chain.json")});
  CHECK(chain.code == cli::kOk);
  CHECK(chain.out["report"]["non_representable"].empty());

  auto prod = run({"complete", data("product_discrete.json"), "--verbose"});
  CHECK(prod.code == cli::kViolations);
  const auto& nr = prod.out["report"]["non_representable"];
  CHECK(nr.size() == 2);
  CHECK(std::find(nr.begin(), nr.end(), Json::array({"(true,false)", "(false,true)"})) != nr.end());
  CHECK(prod.out["report"]["cauchy_modules"].size() == 4);

  auto threaded = run({"complete", data("product_discrete.json"), "--verbose", "--threads", "3"});
  CHECK(threaded.raw == prod.raw);

  auto empty = run({"complete", data("empty.json")});
  CHECK(empty.code == cli::kOk);
  CHECK(empty.out["report"]["cauchy_count"] == 0);

  CHECK(run({"complete", data("invalid_category.json")}).code == cli::kViolations);
  CHECK(run({"complete", data("chain.json"), "--grid", "0,zz"}).code == cli::kInputError);
}

TEST_CASE("cli compose, collage and restrict") {
  const auto out = temp_path("compose.json");
  auto c = run({"compose", data("representable.json"), data("corepresentable.json"), "-o", out});
  CHECK(c.code == cli::kOk);
  auto composed = io::module_from_json(read_json(out));
  CHECK(composed.mat() == Matrix::from_rows({{QVal::bot(), QVal::finite(3)}, {QVal::bot(), QVal::finite(0)}}));
  CHECK(run({"compose", data("representable.json"), data("representable.json")}).code == cli::kInputError);

  const auto cpath = temp_path("collage.json");
  auto col = run({"collage", data("representable.json"), "-o", cpath});
  CHECK(col.code == cli::kOk);
  CHECK(col.out["validation"]["valid"] == true);
  auto back = run({"restrict", cpath});
  CHECK(back.code == cli::kOk);
  CHECK(io::module_from_json(back.out["module"]) == io::module_from_json(read_json(data("representable.json"))));

  auto bad = run({"collage", data("bad_module.json")});
  CHECK(bad.code == cli::kViolations);
  CHECK(bad.out["module_violations"][0]["law"] == "left_action");
}

TEST_CASE("cli adjoin") {
  auto r = run({"adjoin", data("metric_rep_m.json"), data("metric_rep_n.json"), "--label", "s"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out["validation"]["valid"] == true);
  CHECK(r.out["category"]["objects"] == Json::array({"p", "q", "r", "s"}));
  CHECK(r.out["category"]["hom"][3][1] == "0");
  CHECK(r.out["category"]["hom"][1][3] == "0");

  auto fail = run({"adjoin", data("representable.json"), data("product_module_n.json")});
  CHECK(fail.code == cli::kInputError);

  auto p = run({"adjoin", data("product_module.json"), data("product_module_n.json")});
  CHECK(p.code == cli::kOk);
  CHECK(p.out["unit_ok"] == true);
}

TEST_CASE("cli from-dag, minkowski, underlying and the mixed record") {
  auto d = run({"from-dag", data("diamond.txt")});
  CHECK(d.code == cli::kOk);
  CHECK(d.out["category"]["objects"][5] == "lonely");
  CHECK(d.out["category"]["hom"][0][4] == "3");

  auto m1 = run({"minkowski", "--n", "12", "--seed", "5", "--bounds", "0,2,-1,1"});
  auto m2 = run({"minkowski", "--n", "12", "--seed", "5", "--bounds", "0,2,-1,1"});
  CHECK(m1.code == cli::kOk);
  CHECK(m1.raw == m2.raw);
  CHECK(m1.out["events"].size() == 12);
  CHECK(run({"minkowski", "--n", "3", "--bounds", "0,0,0,1"}).code == cli::kInputError);
  CHECK(run({"minkowski", "--n", "3", "--bounds", "0,1,0"}).code == cli::kInputError);

  const auto dot = temp_path("chain.dot");
  auto u = run({"underlying", data("chain.json"), "--dot", dot});
  CHECK(u.code == cli::kOk);
  CHECK(u.out["preorder"]["edges"] == Json::array({Json::array({"a", "a"}), Json::array({"a", "b"}),
                                                   Json::array({"b", "b"})}));
  std::ifstream in(dot);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("\"a\" -> \"b\"") != std::string::npos);

  auto mix = run({"counterexample-mixed"});
  CHECK(mix.code == cli::kViolations);
  CHECK(mix.out["record"]["d_AB_plus_d_BC"] == -1.0);
  CHECK(mix.out["record"]["d_AC"] == 1.0);
  CHECK(mix.out["record"]["violation"] == true);
}
