#include "bsfold/json_io.hpp"

#include "bsfold/appendix.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bsfold;

TEST_CASE("root system descriptors") {
  Json j = Json::parse(R"json({"components":[{"family":"A","rank":2},{"family":"B","rank":2}]})json");
  auto rs = root_system_from_json(j);
  CHECK(rs->rank() == 4);
  CHECK(root_system_to_json(*rs) == j);
  CHECK(root_system_from_json(Json("G2"))->positive_roots().size() == 6);
  CHECK_THROWS(root_system_from_json(Json::parse(R"json({"components":[]})json")));
}

TEST_CASE("sequence and gallery forms") {
  SimpleSeq s = seq_from_json(Json::parse(R"json({"seq":[1,2,1]})json"));
  CHECK(s.rs().rank() == 2);  // defaults to type A of the top letter
  CHECK(s.indices() == std::vector<int>{1, 2, 1});

  SimpleSeq wide = seq_from_json(Json::parse(R"json({"seq":[1],"type":"A3"})json"));
  CHECK(wide.rs().rank() == 3);

  Gallery a = gallery_from_json(s, Json::parse(R"json({"bits":[0,1,0]})json"));
  Gallery b = gallery_from_json(s, Json("(e,s2,e)"));
  CHECK(a == b);
  CHECK(a.to_string() == "(e,s2,e)");
  CHECK_THROWS(gallery_from_json(s, Json::parse(R"json({"bits":[0,1]})json")));

  SimpleSeq back = seq_from_json(seq_to_json(s));
  CHECK(back == s);
}

TEST_CASE("morphism documents") {
  Json j = Json::parse(R"json({
    "s": [1, 2],
    "s2": [1, 2, 1],
    "p": [1, 3],
    "w": {"word": []},
    "seed": {"gamma": "(e,e)", "delta": "(s1,s2,e)"}
  })json");
  FoldMorphism m = morphism_from_json(j);
  CHECK(m == appendix_morphism(3));
  CHECK(m.sign() == std::vector<int>{-1, 1});

  Json out = morphism_to_json(m);
  CHECK(out["sign"] == Json::array({-1, 1}));
  CHECK(morphism_from_json(out) == m);

  Json cyc = Json::parse(R"json({
    "type": "A4",
    "s": [2, 3, 1],
    "s2": [3, 4, 2, 4, 4],
    "p": [1, 3, 5],
    "w": {"cycles": [[1, 5], [2, 3, 4]]},
    "seed": {"gamma": "(e,e,e)", "delta": "(s3,s4,s2,s4,e)"}
  })json");
  CHECK(morphism_from_json(cyc) == appendix_morphism(6));
}

TEST_CASE("class documents") {
  Json j = Json::parse(R"json({
    "seq": [1],
    "type": "A2",
    "values": {"(e)": "0", "(s1)": "a1"}
  })json");
  GkmClass f = gkm_class_from_json(j);
  CHECK(membership(f).member);
  GkmClass back = gkm_class_from_json(gkm_class_to_json(f));
  CHECK(back.values == f.values);

  Json missing = Json::parse(R"json({"seq":[1],"values":{"(e)":"0"}})json");
  CHECK_THROWS(gkm_class_from_json(missing));
}

TEST_CASE("transition trace documents") {
  auto rs = testutil::shared_system(Family::A, 2);
  SimpleSeq s(rs, {1, 2});
  BSPoint point = bs_point(s, Gallery(s, 0b00), {Rational(2), Rational(3)});
  auto res = chart_coords(point, Gallery(s, 0b00));
  REQUIRE(res.has_value());
  Json j = transition_to_json(*res);
  CHECK(j["coords"] == Json::array({"2", "3"}));
  CHECK(j["steps"].size() == 2);
  CHECK(j["steps"][0]["i"] == 1);
  CHECK(j["steps"][0]["b"] == Json::parse(R"json([["1","0","0"],["0","1","0"],["0","0","1"]])json"));
}

TEST_CASE("moment graph document") {
  auto rs = testutil::shared_system(Family::A, 2);
  Json j = moment_graph_to_json(moment_graph(SimpleSeq(rs, {1})));
  CHECK(j["vertices"] == Json::array({"(e)", "(s1)"}));
  REQUIRE(j["edges"].size() == 1);
  CHECK(j["edges"][0]["label"] == "a1");
}

TEST_CASE("bundled fixture suite passes") {
  AppendixReport report = run_appendix();
  CHECK(report.cases.size() == 6);
  for (const AppendixCase& c : report.cases) {
    INFO("case ", c.id);
    for (const std::string& f : c.failures) INFO(f);
    CHECK(c.passed());
  }
  CHECK(report.all_passed());
}
