#include "doctest.h"
#include "support.hpp"

using namespace fbc;

namespace {

Quiver loop() { return Quiver({"x"}, {Arrow{"a", 0, 0}}); }
Quiver two_loops() { return Quiver({"x"}, {Arrow{"a", 0, 0}, Arrow{"b", 0, 0}}); }

}  // namespace

TEST_CASE("a truncated loop") {
  Quiver q = loop();
  Path a3 = q.parse("L(a)L(a)L(a)");
  PathCongruence pc(q, {a3}, 5, OverflowPolicy::zero);
  CHECK(pc.classes().size() == 3);
  CHECK(pc.is_zero(a3));
  CHECK_FALSE(pc.is_zero(q.parse("L(a)L(a)")));
}

TEST_CASE("a binomial with a monomial consequence") {
  Quiver q = two_loops();
  PathCongruence pc(q, {q.parse("L(b)L(a)"), q.parse("L(a)L(b)"), q.parse("L(b)L(b)")}, 3, OverflowPolicy::zero);
  pc.add_binomial(q.parse("L(a)L(a)"), q.parse("L(b)"));
  // b = aa forces a(aa) = ab = 0
  CHECK(pc.equivalent(q.parse("L(a)L(a)"), q.parse("L(b)")));
  CHECK(pc.is_zero(q.parse("L(a)L(a)L(a)")));
  CHECK(pc.classes().size() == 3);
}

TEST_CASE("the ignore policy never concludes more than the zero policy") {
  Quiver q = loop();
  PathCongruence zero(q, {}, 2, OverflowPolicy::zero);
  PathCongruence ignore(q, {}, 2, OverflowPolicy::ignore);
  zero.add_binomial(q.parse("L(a)"), q.parse("L(a)L(a)"));
  ignore.add_binomial(q.parse("L(a)"), q.parse("L(a)L(a)"));
  // a = aa = aaa, and aaa is beyond the bound
  CHECK(zero.is_zero(q.parse("L(a)")));
  CHECK_FALSE(ignore.is_zero(q.parse("L(a)")));
  CHECK(ignore.equivalent(q.parse("L(a)"), q.parse("L(a)L(a)")));
}

TEST_CASE("monomials added later propagate through classes") {
  Quiver q = two_loops();
  PathCongruence pc(q, {}, 3, OverflowPolicy::zero);
  pc.add_binomial(q.parse("L(a)"), q.parse("L(b)L(b)"));
  pc.add_monomial(q.parse("L(b)L(b)"));
  CHECK(pc.is_zero(q.parse("L(a)")));
  CHECK(pc.is_zero(q.parse("L(a)L(b)")));
}

TEST_CASE("classes are sorted and disjoint") {
  Configuration c = corpus::example1();
  IdealGenerators g = ideal_generators(c, GeneratorListing::factor_minimal);
  std::vector<Path> mono = g.fr2;
  mono.insert(mono.end(), g.fr3.begin(), g.fr3.end());
  PathCongruence pc(build_quiver(c), mono, g.length_bound, OverflowPolicy::zero);
  for (const auto& b : g.fr1) pc.add_binomial(b.first, b.second);
  auto classes = pc.classes();
  std::set<Path> seen;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    CHECK(std::is_sorted(classes[i].begin(), classes[i].end()));
    if (i) CHECK(classes[i - 1].front() < classes[i].front());
    for (const auto& p : classes[i]) CHECK(seen.insert(p).second);
  }
  CHECK(classes.size() == 18);
}
