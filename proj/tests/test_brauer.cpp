#include "doctest.h"
#include "support.hpp"

using namespace fbc;

TEST_CASE("gs-example converts to five angles with d = (3,3,3,1,2)") {
  Configuration c = convert_bc(corpus::gs_example());
  REQUIRE(c.size() == 5);
  CHECK(c.l_trivial());
  std::vector<int> d;
  for (Angle a = 0; a < c.size(); ++a) d.push_back(c.degree(a));
  std::sort(d.begin(), d.end());
  CHECK(d == std::vector<int>{1, 2, 3, 3, 3});
  // the three angles at vertex 1 form one orbit; d = nu * fibre size
  int one = c.orbit_of(c.at("1_V1_1"));
  CHECK(c.orbit(one).size() == 3);
  CHECK(c.degree(c.at("3_V1_1")) == 2);
  CHECK(c.degree(c.at("2_V2_1")) == 1);
  ClassificationReport r = classify(c);
  CHECK(r.is_fbc);
  CHECK(r.is_bc);
}

TEST_CASE("BC invariant violations are domain failures") {
  BrauerPresentation bc = corpus::gs_example();

  SUBCASE("condition (7): a polygon whose vertices are all truncated") {
    BrauerPresentation lone;
    lone.vertices = {"x", "y"};
    lone.zeta = {{"e", "x"}, {"f", "y"}};
    lone.polygons = {{"e", "f"}};
    CHECK_THROWS_AS(convert_bc(lone), BcInvariantError);
    lone.multiplicity = {{"y", 2}};
    CHECK(convert_bc(lone).size() == 2);
  }
  SUBCASE("polygons have at least two angles") {
    bc.polygons = {{"1_V1_1", "1_V1_2"}, {"3_V1_1"}, {"1_V2_1", "2_V2_1"}};
    CHECK_THROWS_AS(convert_bc(bc), BcInvariantError);
  }
  SUBCASE("orientation must cover exactly the fibre") {
    bc.orientation = {{"1_V1_1", "1_V1_2"}};
    CHECK_THROWS_AS(convert_bc(bc), BcInvariantError);
  }
  SUBCASE("vertex without angles") {
    bc.vertices.push_back("4");
    CHECK_THROWS_AS(convert_bc(bc), BcInvariantError);
  }
  SUBCASE("unknown names are structural") {
    bc.zeta["1_V1_1"] = "9";
    CHECK_THROWS_AS(convert_bc(bc), StructuralError);
  }
}

TEST_CASE("a Brauer graph converts to a type MS configuration of integral f-degree") {
  BrauerPresentation bg;
  bg.vertices = {"u", "v", "w"};
  bg.zeta = {{"e1", "u"}, {"e2", "v"}, {"f1", "v"}, {"f2", "w"}};
  bg.polygons = {{"e1", "e2"}, {"f1", "f2"}};
  bg.orientation = {{"e2", "f1"}};
  bg.multiplicity = {{"u", 2}};
  Configuration c = convert_bc(bg);
  ClassificationReport r = classify(c);
  CHECK(r.is_bc);
  CHECK(r.is_bg);
  CHECK(r.is_type_ms);
  CHECK(r.integral_f_degree);
  CHECK(c.degree(c.at("e1")) == 2);
  CHECK(c.degree(c.at("e2")) == 2);
}
