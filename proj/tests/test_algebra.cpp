#include "doctest.h"
#include "support.hpp"

using namespace fbc;
using fbc::test::layers;
using fbc::test::projective_dim;
using L = std::vector<std::vector<std::string>>;

TEST_CASE("example2 collapses to the ground field") {
  AlgebraTable t = congruence_closure(corpus::example2());
  CHECK(t.total_dim() == 1);
  CHECK(t.quiver().vertex_count() == 1);
}

TEST_CASE("example0: dimension 12 and the printed Loewy diagrams") {
  AlgebraTable t = congruence_closure(corpus::example0());
  CHECK(t.total_dim() == 12);
  CHECK(t.loewy_length() == 3);
  CHECK(layers(t, "1") == L{{"1"}, {"3", "3"}, {"2"}});
  CHECK(layers(t, "2") == L{{"2"}, {"1", "1"}, {"3"}});
  CHECK(layers(t, "3") == L{{"3"}, {"2", "2"}, {"1"}});
  auto cartan = cartan_matrix(t);
  CHECK(cartan == std::vector<std::vector<int>>{{1, 2, 1}, {1, 1, 2}, {2, 1, 1}});
}

TEST_CASE("example1: dims 5,5,4,4 with P3 and P4 uniserial") {
  AlgebraTable t = congruence_closure(corpus::example1());
  CHECK(projective_dim(t, "1") == 5);
  CHECK(projective_dim(t, "2") == 5);
  CHECK(projective_dim(t, "3") == 4);
  CHECK(projective_dim(t, "4") == 4);
  CHECK(layers(t, "3") == L{{"3"}, {"2"}, {"1"}, {"3"}});
  CHECK(layers(t, "4") == L{{"4"}, {"2"}, {"1"}, {"4"}});
  CHECK(layers(t, "1") == L{{"1"}, {"3", "4"}, {"2"}, {"1"}});
}

TEST_CASE("example3: dims 5,6,3,5,6,3") {
  AlgebraTable t = congruence_closure(corpus::example3());
  std::vector<int> dims;
  for (const char* x : {"1", "2", "3", "4", "5", "6"}) dims.push_back(projective_dim(t, x));
  CHECK(dims == std::vector<int>{5, 6, 3, 5, 6, 3});
  CHECK(layers(t, "3") == L{{"3"}, {"1"}, {"5"}});
  CHECK(layers(t, "6") == L{{"6"}, {"4"}, {"2"}});
}

TEST_CASE("the Brauer configuration algebra of gs-example") {
  Configuration c = convert_bc(corpus::gs_example());
  AlgebraTable t = congruence_closure(c);
  const std::string v1 = c.polygon_id(c.polygon(c.at("1_V1_1")));
  const std::string v2 = c.polygon_id(c.polygon(c.at("1_V2_1")));
  CHECK(projective_dim(t, v1) == 7);
  CHECK(projective_dim(t, v2) == 4);
  CHECK(layers(t, v1) == L{{v1}, {v1, v1, v2}, {v1, v2}, {v1}});
  CHECK(layers(t, v2) == L{{v2}, {v1}, {v1}, {v2}});
}

TEST_CASE("both engines agree on every type S corpus item") {
  for (const auto& id : fbc::test::type_s_ids()) {
    CAPTURE(id);
    Configuration c = fbc::test::load_corpus(id);
    auto diff = compare_tables(congruence_closure(c), type_s_basis(c));
    CHECK_MESSAGE(!diff, (diff ? *diff : ""));
  }
}

TEST_CASE("type_s_basis refuses configurations without (f7)") {
  CHECK_THROWS_AS(type_s_basis(corpus::example2()), NotTypeSError);
  CHECK_THROWS_AS(type_s_basis(corpus::example3()), NotTypeSError);
}

TEST_CASE("multiplication follows traversal order") {
  AlgebraTable t = congruence_closure(corpus::example0());
  const Quiver& q = t.quiver();
  int a1 = t.class_of(q.parse("L(1)")), a2 = t.class_of(q.parse("L(2)")), a2p = t.class_of(q.parse("L(2')"));
  CHECK(t.multiply(a1, a2) == t.class_of(q.parse("L(2)L(1)")));
  CHECK(t.multiply(a2, a1) == kZeroClass);
  CHECK(t.multiply(a1, a2p) == kZeroClass);
  CHECK(t.multiply(t.identity(q.find_vertex("1")), a1) == a1);
  CHECK(t.multiply(a1, t.identity(q.find_vertex("2"))) == a1);
  CHECK(t.class_of(q.parse("L(2)L(1)")) == t.class_of(q.parse("L(2')L(1')")));
  CHECK(t.class_of(q.parse("L(3)L(2)L(1)")) == kZeroClass);
}

TEST_CASE("quotient by explicit relations") {
  Quiver q({"x", "y"}, {Arrow{"a", 0, 1}, Arrow{"b", 1, 0}});
  AlgebraTable t = quotient(q, {q.parse("L(a)L(b)")}, {}, 3);
  // e_x, e_y, a, b, ba (aba has length 3 but contains ab)
  CHECK(t.total_dim() == 5);
  CHECK(t.class_of(q.parse("L(b)L(a)")) != kZeroClass);
  CHECK(t.loewy_length() == 3);
}

TEST_CASE("right socles of example0") {
  AlgebraTable t = congruence_closure(corpus::example0());
  for (int x = 0; x < t.quiver().vertex_count(); ++x) {
    auto soc = right_socle_classes(t, x);
    REQUIRE(soc.size() == 1);
    CHECK(t.at(soc.front()).radical_degree == 2);
  }
}
