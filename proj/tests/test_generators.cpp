#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace fbc;

namespace {

/// Rendered generators; a binomial is written "u - v" with u < v as strings.
std::set<std::string> rendered(const Quiver& q, const IdealGenerators& g) {
  std::set<std::string> out;
  for (const auto& b : g.fr1) {
    std::string u = q.render(b.first), v = q.render(b.second);
    if (v < u) std::swap(u, v);
    out.insert(u + " - " + v);
  }
  for (const auto& p : g.fr2) out.insert(q.render(p));
  for (const auto& p : g.fr3) out.insert(q.render(p));
  return out;
}

std::set<std::string> binomials(std::initializer_list<std::pair<std::string, std::string>> pairs,
                                std::initializer_list<std::string> monomials) {
  std::set<std::string> out(monomials);
  for (auto [u, v] : pairs) {
    if (v < u) std::swap(u, v);
    out.insert(u + " - " + v);
  }
  return out;
}

AlgebraTable algebra_of(const Configuration& c, const IdealGenerators& g) {
  std::vector<Path> mono = g.fr2;
  mono.insert(mono.end(), g.fr3.begin(), g.fr3.end());
  return quotient(build_quiver(c), mono, g.fr1, g.length_bound);
}

}  // namespace

TEST_CASE("example0: the nine printed generators") {
  Configuration c = corpus::example0();
  IdealGenerators g = ideal_generators(c);
  CHECK(g.fr1.size() + g.fr2.size() + g.fr3.size() == 9);
  CHECK(rendered(build_quiver(c), g) ==
        binomials({{"L(2)L(1)", "L(2')L(1')"}, {"L(3)L(2)", "L(3')L(2')"}, {"L(1)L(3)", "L(1')L(3')"}},
                  {"L(2')L(1)", "L(2)L(1')", "L(3')L(2)", "L(3)L(2')", "L(1')L(3)", "L(1)L(3')"}));
}

TEST_CASE("example1: the ten printed generators") {
  Configuration c = corpus::example1();
  IdealGenerators g = ideal_generators(c);
  CHECK(g.fr1.size() + g.fr2.size() + g.fr3.size() == 10);
  CHECK(rendered(build_quiver(c), g) ==
        binomials({{"L(3')", "L(2)L(1)L(3)"}, {"L(4)", "L(2')L(1)L(4')"}, {"L(3)L(2)", "L(4')L(2')"}},
                  {"L(3')L(2)", "L(3)L(3')", "L(4)L(2')", "L(4')L(4)", "L(2)L(1)L(4')", "L(2')L(1)L(3)",
                   "L(1)L(3)L(2)L(1)"}));
}

TEST_CASE("example3: the four printed generators") {
  Configuration c = corpus::example3();
  CHECK(rendered(build_quiver(c), ideal_generators(c)) ==
        binomials({{"L(5)L(4)", "L(6)L(4')"}, {"L(2)L(1)", "L(3)L(1'')"}}, {"L(4')L(3)", "L(1'')L(6)"}));
}

TEST_CASE("canonical order is deterministic") {
  Configuration c = corpus::example1();
  IdealGenerators a = ideal_generators(c), b = ideal_generators(c);
  CHECK(a.fr1 == b.fr1);
  CHECK(a.fr2 == b.fr2);
  CHECK(a.fr3 == b.fr3);
  for (const auto& x : a.fr1) CHECK(x.first < x.second);
  CHECK(std::is_sorted(a.fr2.begin(), a.fr2.end()));
}

TEST_CASE("fr2 paths are unrealizable and fr3 paths realizable") {
  for (const auto& [id, c] : corpus::all()) {
    CAPTURE(id);
    IdealGenerators g = ideal_generators(c, GeneratorListing::exhaustive);
    for (const auto& p : g.fr2) CHECK(is_realizable(p, c).kind == PathKind::B1);
    for (const auto& p : g.fr3) CHECK(is_realizable(p, c).kind == PathKind::B2);
  }
}

TEST_CASE("factor-minimal monomials have no monomial proper factor") {
  for (const auto& [id, c] : corpus::all()) {
    CAPTURE(id);
    IdealGenerators g = ideal_generators(c, GeneratorListing::factor_minimal);
    Quiver q = build_quiver(c);
    std::set<Path> mono(g.fr2.begin(), g.fr2.end());
    mono.insert(g.fr3.begin(), g.fr3.end());
    for (const auto& m : mono)
      for (int len = 1; len < m.length(); ++len)
        for (int from = 0; from + len <= m.length(); ++from) CHECK(mono.count(q.factor(m, from, len)) == 0);
  }
}

TEST_CASE("the three listings generate the same ideal") {
  for (const auto& [id, c] : corpus::all()) {
    CAPTURE(id);
    AlgebraTable a = algebra_of(c, ideal_generators(c, GeneratorListing::irredundant));
    AlgebraTable b = algebra_of(c, ideal_generators(c, GeneratorListing::factor_minimal));
    AlgebraTable e = algebra_of(c, ideal_generators(c, GeneratorListing::exhaustive));
    CHECK_FALSE(compare_tables(a, b).has_value());
    CHECK_FALSE(compare_tables(a, e).has_value());
    CHECK_FALSE(compare_tables(a, congruence_closure(c)).has_value());
  }
}

TEST_CASE("fr1 by template equals fr1 by all pairs") {
  for (const auto& [id, c] : corpus::all()) {
    CAPTURE(id);
    auto t = fr1_by_template(c);
    auto f = ideal_generators(c, GeneratorListing::factor_minimal).fr1;
    CHECK(std::set<Binomial>(t.begin(), t.end()) == std::set<Binomial>(f.begin(), f.end()));
  }
}
