#include "fbc/corpus.hpp"

namespace fbc::corpus {
namespace {

using Blocks = std::vector<std::vector<std::string>>;

Configuration make(std::vector<std::string> angles, Blocks g, Blocks p, std::optional<Blocks> l,
                   std::map<std::string, int> d) {
  ConfigurationSpec s;
  s.angles = std::move(angles);
  s.cycles = std::move(g);
  s.polygons = std::move(p);
  s.lblocks = std::move(l);
  s.degrees.kind = DegreeSpec::Kind::per_angle;
  s.degrees.values = std::move(d);
  return Configuration::build(s);
}

}  // namespace

Configuration example0() {
  return make({"1", "1'", "2", "2'", "3", "3'"}, {{"1", "2", "3"}, {"1'", "2'", "3'"}},
              {{"1", "1'"}, {"2", "2'"}, {"3", "3'"}}, std::nullopt, {{"1", 2}, {"1'", 2}});
}

Configuration example1() {
  return make({"1", "1'", "2", "2'", "3", "3'", "4", "4'"}, {{"1", "2", "3"}, {"1'", "2'", "4'"}},
              {{"1", "1'"}, {"2", "2'"}, {"3", "3'"}, {"4", "4'"}},
              Blocks{{"1", "1'"}, {"2"}, {"2'"}, {"3"}, {"3'"}, {"4"}, {"4'"}},
              {{"1", 3}, {"1'", 3}, {"3'", 1}, {"4", 1}});
}

Configuration example2() {
  return make({"a1", "a2", "a3", "a4"}, {{"a2", "a3"}}, {{"a1", "a2", "a3", "a4"}},
              Blocks{{"a1", "a2"}, {"a3", "a4"}}, {{"a1", 2}, {"a2", 4}, {"a4", 2}});
}

Configuration example3() {
  return make({"1", "1'", "1''", "2", "2'", "3", "4", "4'", "4''", "5", "5'", "6"},
              {{"1", "2", "4", "5"}, {"1'", "2'", "4'", "6"}, {"1''", "3", "4''", "5'"}},
              {{"1", "1'", "1''"}, {"2", "2'"}, {"3"}, {"4", "4'", "4''"}, {"5", "5'"}, {"6"}},
              Blocks{{"1", "1'"}, {"1''"}, {"2", "2'"}, {"3"}, {"4", "4''"}, {"4'"}, {"5", "5'"}, {"6"}},
              {{"1", 4}, {"1'", 4}, {"1''", 4}});
}

BrauerPresentation gs_example() {
  BrauerPresentation bc;
  bc.vertices = {"1", "2", "3"};
  bc.zeta = {{"1_V1_1", "1"}, {"1_V1_2", "1"}, {"1_V2_1", "1"}, {"2_V2_1", "2"}, {"3_V1_1", "3"}};
  bc.polygons = {{"1_V1_1", "1_V1_2", "3_V1_1"}, {"1_V2_1", "2_V2_1"}};
  bc.orientation = {{"1_V1_1", "1_V1_2", "1_V2_1"}};
  bc.multiplicity = {{"3", 2}};
  return bc;
}

Configuration ex6_5_bc() {
  return make({"1", "1'", "1''", "2", "2'", "3", "3'", "4", "4'", "5", "5'"},
              {{"1", "2", "3"}, {"1'", "4'"}, {"1''", "5'"}},
              {{"1", "1'", "1''"}, {"2", "2'"}, {"3", "3'"}, {"4", "4'"}, {"5", "5'"}}, std::nullopt,
              {{"1", 3}, {"1'", 2}, {"1''", 2}, {"2'", 1}, {"3'", 1}, {"4", 1}, {"5", 1}});
}

Configuration ex6_5() {
  return make({"1", "1'", "2", "3'", "4", "4'", "5", "5'"}, {{"1", "5", "4", "2"}, {"1'", "5'", "4'", "3'"}},
              {{"1", "1'"}, {"2"}, {"3'"}, {"4", "4'"}, {"5", "5'"}},
              Blocks{{"1", "1'"}, {"2"}, {"3'"}, {"4"}, {"4'"}, {"5", "5'"}}, {{"1", 4}, {"1'", 4}});
}

Configuration example_7_6(int m) {
  if (m < 2) throw StructuralError("example_7_6 needs m >= 2");
  std::vector<std::string> angles = {"1", "1'", "1''"};
  std::vector<std::string> cycle = {"1", "1'"};
  Blocks polygons = {{"1", "1'", "1''"}};
  Blocks lblocks = {{"1", "1''"}, {"1'"}};
  for (int i = 2; i <= m; ++i) {
    const std::string a = std::to_string(i);
    angles.push_back(a);
    cycle.push_back(a);
    polygons.push_back({a});
    lblocks.push_back({a});
  }
  return make(angles, {cycle}, polygons, lblocks, {{"1", m + 1}, {"1''", 3}});
}

std::vector<std::pair<std::string, Configuration>> all() {
  return {{"example0", example0()},       {"example1", example1()},
          {"example2", example2()},       {"example3", example3()},
          {"gs-example", convert_bc(gs_example())},
          {"ex6-5-bc", ex6_5_bc()},       {"ex6-5", ex6_5()},
          {"ex7-6-m2", example_7_6(2)},   {"ex7-6-m3", example_7_6(3)}};
}

}  // namespace fbc::corpus
