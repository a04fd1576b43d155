#include <catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>

#include "bandgroup/bandgroup.hpp"

using namespace bandgroup;

TEST_CASE("braid word syntax") {
  auto const w = parse_braid("s1 s2' s1", 3);
  CHECK(w == ArtinWord::from_signed(3, {1, -2, 1}));
  CHECK(parse_braid("a1.3", 3) == band_to_artin({1, 3}, 3));
  CHECK(parse_braid("a1.3'", 3) == band_to_artin({1, 3}, 3).inverse());
  CHECK(parse_braid("a1.3^3", 3) == band_power({1, 3}, 3, 3));
  CHECK(parse_braid("s2'^2", 3) == ArtinWord::from_signed(3, {-2, -2}));
  CHECK(parse_braid("s2^-2", 3) == ArtinWord::from_signed(3, {-2, -2}));
  CHECK(parse_braid("", 3).empty());
  CHECK(parse_braid("1", 3).empty());

  CHECK_THROWS_AS(parse_braid("x1", 3), ParseError);
  CHECK_THROWS_AS(parse_braid("s", 3), ParseError);
  CHECK_THROWS_AS(parse_braid("s1^0", 3), ParseError);
  CHECK_THROWS_AS(parse_braid("a3.1", 3), ParseError);
  CHECK_THROWS_AS(parse_braid("a13", 3), ParseError);
  CHECK_THROWS_AS(parse_braid("s3", 3), std::out_of_range);
  CHECK_THROWS_AS(parse_braid("a1.4", 3), std::out_of_range);

  CHECK(min_strands(parse_braid_text("s1 a2.5")) == 5);
}

TEST_CASE("braid text round trip") {
  for (std::string s : {"s1 s2' a1.3^3 a2.4'", "1", "a1.2^-4 s3^2"}) {
    auto const t = parse_braid_text(s);
    CHECK(to_string(t) == s);
    CHECK(parse_braid_text(to_string(t)) == t);
  }
  CHECK(to_string(parse_braid_text("s1'^2")) == "s1^-2");
  CHECK(to_string(ArtinWord::from_signed(3, {1, -2})) == "s1 s2'");
}

TEST_CASE("coxeter and free word syntax") {
  CHECK(parse_cox("s1 s2 s2 s3") == CoxWord({1, 3}));
  CHECK(parse_cox("s1^3") == CoxWord::letter(1));
  CHECK(parse_cox("s1^2").empty());
  CHECK(to_string(parse_cox("s1 s3 s1")) == "s1 s3 s1");

  auto const f = parse_free("t1 t2' t2 t3^-2");
  CHECK(f == FreeWord::from_letters({1, -3, -3}));
  CHECK(to_string(f) == "t1 t3^-2");
  CHECK(to_string(FreeWord{}) == "1");
  CHECK(parse_free(to_string(parse_free("t1 t2 t1' t2^3"))) == parse_free("t1 t2 t1' t2^3"));
}

TEST_CASE("expression syntax") {
  auto const e = parse_expression("b1.2^2 b3.4' b1.3");
  REQUIRE(e.size() == 3);
  CHECK(e[0] == Syllable{{1, 2}, 2});
  CHECK(e[1] == Syllable{{3, 4}, -1});
  CHECK(to_string(e) == "b1.2^2 b3.4^-1 b1.3");
  CHECK(parse_expression(to_string(e)) == e);
  CHECK(to_string(RaagExpression{}) == "1");
  CHECK_THROWS_AS(parse_expression("b2.2"), ParseError);
}

TEST_CASE("permutation syntax") {
  auto const p = parse_permutation("(1 2)(3 4)", 4);
  CHECK(p.images() == std::vector<int>{2, 1, 4, 3});
  CHECK(p.cycles() == "(1 2)(3 4)");
  CHECK(parse_permutation("(1 2 3)", 3).cycles() == "(1 2 3)");
  CHECK(parse_permutation("()", 3).is_identity());
  CHECK(parse_permutation("", 2).is_identity());
  CHECK(parse_permutation("(1,3)", 3).cycles() == "(1 3)");
  CHECK_THROWS_AS(parse_permutation("(1 2)(2 3)", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 5)", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 2", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("1 2", 3), ParseError);
}

TEST_CASE("json formats") {
  auto const m = matrix_from_json(Json::parse(R"({"n": 3, "m": [[0,3,0],[3,0,4],[0,4,0]]})"));
  CHECK(m(2, 3) == 4);
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"n": 2, "m": [[0]]})")), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([1])")), std::invalid_argument);

  auto const p = partition_from_json(Json::parse(R"({"n": 3, "parts": [[3, 1], [2]]})"));
  CHECK(p == Partition(3, {{1, 3}, {2}}));
  CHECK(partition_from_json(partition_to_json(p)) == p);
  CHECK_THROWS_AS(partition_from_json(Json::parse(R"({"parts": [[1]]})")), std::invalid_argument);

  auto const ctx = perm_context_from_json(
      Json::parse(R"j({"degree": 3, "involutive": true, "images": ["(1 2)", "(2 3)"]})j"));
  CHECK(ctx.images.size() == 2);
  CHECK_THROWS_AS(perm_context_from_json(Json::parse(R"j({"degree": 3, "involutive": true, "images": ["(1 2 3)"]})j")),
                  std::invalid_argument);

  auto const t = tuple_from_json(Json::parse(R"(["s1", "s2 s1 s2"])"), GroupContext::universal_coxeter());
  CHECK(std::get<GroupTuple<CoxWord>>(t)[1] == CoxWord({2, 1, 2}));
  CHECK(tuple_to_json(t) == Json::parse(R"(["s1", "s2 s1 s2"])"));

  auto const tp = tuple_from_json(Json::parse(R"j(["(1 2)", "(2 3)"])j"), ctx);
  CHECK(tuple_to_json(tp) == Json::parse(R"j(["(1 2)", "(2 3)"])j"));
  CHECK_THROWS_AS(tuple_from_json(Json::parse(R"j(["(1 2 3)"])j"), ctx), std::invalid_argument);
  CHECK_THROWS_AS(tuple_from_json(Json::parse(R"([1])"), ctx), std::invalid_argument);

  auto const tf = tuple_from_json(Json::parse(R"(["t1 t2", "t2'"])"), GroupContext::free_group());
  CHECK(tuple_to_json(tf) == Json::parse(R"(["t1 t2", "t2'"])"));
}

TEST_CASE("json files") {
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), std::invalid_argument);
  std::string const path = "bandgroup_test_tmp.json";
  {
    std::ofstream out(path);
    out << "{not json";
  }
  CHECK_THROWS_AS(read_json_file(path), std::invalid_argument);
  std::remove(path.c_str());
}

TEST_CASE("run reports") {
  RunReport r;
  r.tag = "demo";
  r.count(true);
  r.count(false, {"x", {1, 2}, "s1", "s2", ""});
  CHECK_FALSE(r.ok());
  CHECK(r.instances == 2);
  CHECK(r.passed == 1);
  auto const j = r.to_json();
  CHECK(j["failures"][0]["indices"] == Json::parse("[1,2]"));
  CHECK_FALSE(j.contains("wall_seconds"));
  r.wall_seconds = 1.5;
  CHECK(r.to_json().dump() == j.dump());
  CHECK(r.to_text().find("FAIL x (1,2)") != std::string::npos);

  RunReport v;
  v.add(verify_relations(relations_thm2(Partition::singletons(3)), CoxeterDatum(3, 2)));
  CHECK(v.ok());
  CHECK(v.instances == 2);
  CHECK(v.to_json()["details"]["families"]["thm2.iv"]["passed"] == 2);
}
