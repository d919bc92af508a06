#include "doctest.h"
#include "property.hpp"

using namespace fbc;
using fbc::test::check_property;

namespace {

constexpr int kCases = 500;

std::vector<int> vertex_sigma(const Configuration& c) { return nakayama_angle_map(c).polygon; }

bool is_permutation(const std::vector<int>& p) {
  std::vector<int> s = p;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != static_cast<int>(i)) return false;
  return true;
}

}  // namespace

TEST_CASE("sigma is a bijection inducing a quiver automorphism") {
  check_property("sigma automorphism", 101, kCases, false, [](const Configuration& c) -> std::optional<std::string> {
    NakayamaMap m = nakayama_angle_map(c);
    if (!is_permutation(m.angle)) return "sigma is not a bijection on angles";
    if (!is_permutation(m.polygon)) return "sigma is not a bijection on polygons";
    if (!is_permutation(m.lblock)) return "sigma is not a bijection on L-blocks";
    Quiver q = build_quiver(c);
    for (const auto& a : q.arrows()) {
      int b = c.lblock(c.at(a.id));
      const Arrow& image = q.arrow(m.lblock[b]);
      if (image.source != m.polygon[a.source] || image.target != m.polygon[a.target])
        return "arrow " + a.id + " is not mapped compatibly";
    }
    return std::nullopt;
  });
}

TEST_CASE("dim(x, y) = dim(y, sigma x) in type S") {
  check_property("dimension symmetry", 202, kCases, true, [](const Configuration& c) -> std::optional<std::string> {
    AlgebraTable t = type_s_basis(c);
    auto sigma = vertex_sigma(c);
    int n = t.quiver().vertex_count();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (t.dim(x, y) != t.dim(y, sigma[x]))
          return "dim(" + t.quiver().vertex(x) + ", " + t.quiver().vertex(y) + ") differs";
    return std::nullopt;
  });
}

TEST_CASE("soc P_sigma(x) is S_x in type S") {
  check_property("socle", 303, kCases, true, [](const Configuration& c) -> std::optional<std::string> {
    AlgebraTable t = congruence_closure(c);
    auto sigma = vertex_sigma(c);
    auto diagrams = loewy_diagrams(t);
    for (const auto& d : diagrams) {
      int x = -1;
      for (int v = 0; v < static_cast<int>(sigma.size()); ++v)
        if (sigma[v] == d.vertex) x = v;
      if (d.socle != std::vector<int>{x}) return "socle of P_" + t.quiver().vertex(d.vertex) + " is not simple S_x";
    }
    return std::nullopt;
  });
}

TEST_CASE("eps(b sigma(a)) = eps(a b) on all basis pairs") {
  check_property("Nakayama consistency", 404, kCases, true, [](const Configuration& c) -> std::optional<std::string> {
    AlgebraTable t = type_s_basis(c);
    NakayamaConsistency n = nakayama_consistency(t, c);
    if (!n.pass) return n.witness;
    FrobeniusData f = frobenius_check(t, c);
    if (!f.frobenius) return "form is degenerate: " + f.witness;
    return std::nullopt;
  });
}

TEST_CASE("multiplication tables are associative") {
  check_property("associativity", 505, kCases, false, [](const Configuration& c) -> std::optional<std::string> {
    AlgebraTable t = congruence_closure(c);
    const int n = t.size();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int ab = t.multiply(a, b);
        for (int d = 0; d < n; ++d) {
          int bd = t.multiply(b, d);
          int left = ab == kZeroClass ? kZeroClass : t.multiply(ab, d);
          int right = bd == kZeroClass ? kZeroClass : t.multiply(a, bd);
          // a product of non-composable classes is zero on both sides
          if (left != right) return "(ab)c != a(bc) for classes " + std::to_string(a) + ", " + std::to_string(b);
        }
      }
    for (int x = 0; x < t.quiver().vertex_count(); ++x)
      for (int a = 0; a < n; ++a) {
        if (t.at(a).source() == x && t.multiply(t.identity(x), a) != a) return "left identity fails";
        if (t.at(a).target() == x && t.multiply(a, t.identity(x)) != a) return "right identity fails";
      }
    return std::nullopt;
  });
}

TEST_CASE("the radical nilpotency index is at most N") {
  check_property("nilpotency", 606, kCases, false, [](const Configuration& c) -> std::optional<std::string> {
    AlgebraTable t = congruence_closure(c);
    if (t.loewy_length() > c.length_bound())
      return "Loewy length " + std::to_string(t.loewy_length()) + " exceeds N = " + std::to_string(c.length_bound());
    for (const auto& cls : t.classes())
      if (cls.radical_degree >= c.length_bound()) return "a class of radical degree >= N";
    return std::nullopt;
  });
}

TEST_CASE("(f7) and (f7') agree") {
  int type_s = 0;
  check_property("f7 equivalence", 707, kCases, false, [&](const Configuration& c) -> std::optional<std::string> {
    SequenceTable t(c);
    bool a = check_type_s(t).holds, b = check_type_s_via_f7prime(t);
    type_s += a;
    if (a != b) return std::string("f7 says ") + (a ? "yes" : "no") + ", f7' disagrees";
    return std::nullopt;
  });
  CHECK(type_s > 0);
  CHECK(type_s < kCases);
}

TEST_CASE("the two (f6) modes agree when (f3) holds") {
  std::mt19937_64 rng(808);
  for (int i = 0; i < kCases; ++i) {
    Configuration c = random_candidate(rng);
    auto f6 = [](const AxiomReport& r) {
      for (const auto& a : r.results)
        if (a.axiom == "f6") return a.pass;
      return true;
    };
    CHECK(f6(validate(c)) == f6(validate(c, F6Mode::strict)));
  }
}

TEST_CASE("serialisation and orientation reversal round-trip") {
  check_property("document round trip", 909, kCases, false, [](const Configuration& c) -> std::optional<std::string> {
    if (!(parse_configuration(to_json(c)) == c)) return "to_json/parse changes the configuration";
    Configuration r = reverse_orientation(c);
    if (!(reverse_orientation(r) == c)) return "reversal is not an involution";
    ClassificationReport a = classify(c), b = classify(r);
    if (!b.is_fbc) return "reversal breaks " + b.axioms.violated().front();
    if (a.is_type_s != b.is_type_s) return "reversal changes the type S verdict";
    return std::nullopt;
  });
}

TEST_CASE("generator listings define the same algebra") {
  // quotient() enumerates every path avoiding the listed monomials, so the
  // sample stays small enough for the irredundant listing.
  RandomParams small;
  small.max_angles = 8;
  small.max_degree = 4;
  check_property("generator listings", 1010, kCases, false, [](const Configuration& c) -> std::optional<std::string> {
    Quiver q = build_quiver(c);
    auto algebra = [&](GeneratorListing l) {
      IdealGenerators g = ideal_generators(c, l);
      std::vector<Path> mono = g.fr2;
      mono.insert(mono.end(), g.fr3.begin(), g.fr3.end());
      return quotient(q, mono, g.fr1, g.length_bound);
    };
    AlgebraTable a = algebra(GeneratorListing::irredundant);
    if (auto d = compare_tables(a, algebra(GeneratorListing::factor_minimal))) return "factor-minimal: " + *d;
    if (auto d = compare_tables(a, congruence_closure(c))) return "closure: " + *d;
    return std::nullopt;
  }, small);
}

TEST_CASE("Gabriel presentation, (D)/(C) and round trip on random type S") {
  check_property("gabriel pipeline", 1111, kCases, true, [](const Configuration& c) -> std::optional<std::string> {
    AlgebraTable closure = congruence_closure(c);
    GabrielPresentation g = gabriel_presentation(c, closure);
    AlgebraTable algebra = presentation_algebra(g);
    const int n = closure.quiver().vertex_count();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (algebra.dim(x, y) != closure.dim(x, y)) return "presentation changes dimensions";
    if (!g.admissible) return "not admissible: " + g.admissibility_witness;
    ConditionsDC dc = check_conditions_DC(g, algebra);
    if (!dc.D || !dc.C) return "conditions (D)/(C): " + dc.witness;
    ReconstructedConfiguration rec = reconstruct_configuration(algebra, g);
    IsomorphismCheck iso = verify_isomorphism(g, rec);
    if (!iso.isomorphic) return "round trip: " + iso.failure;
    return std::nullopt;
  });
}

TEST_CASE("shrinking lowers degrees while the failure persists") {
  fbc::test::Property big_degree = [](const Configuration& c) -> std::optional<std::string> {
    if (c.max_degree() >= 3) return "degree " + std::to_string(c.max_degree());
    return std::nullopt;
  };
  std::mt19937_64 rng(1212);
  int shrunk = 0, minimal = 0;
  for (int i = 0; i < 50; ++i) {
    auto c = random_configuration(rng);
    REQUIRE(c);
    if (!big_degree(*c)) continue;
    Configuration s = fbc::test::shrink(*c, big_degree, {});
    CHECK(s.max_degree() >= 3);
    CHECK(s.max_degree() <= c->max_degree());
    CHECK(s.size() <= c->size());
    CHECK(validate(s).ok());
    ++shrunk;
    minimal += s.max_degree() == 3;
  }
  CHECK(shrunk > 0);
  CHECK(minimal * 2 > shrunk);
}
