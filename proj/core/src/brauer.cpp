#include "fbc/brauer.hpp"

#include <algorithm>
#include <set>

namespace fbc {

Configuration convert_bc(const BrauerPresentation& bc) {
  const std::set<std::string> vertices(bc.vertices.begin(), bc.vertices.end());
  if (vertices.size() != bc.vertices.size()) throw StructuralError("duplicate vertex in presentation");
  std::vector<std::string> angles;
  std::map<std::string, std::vector<std::string>> fibre;
  for (const auto& [angle, vertex] : bc.zeta) {
    if (!vertices.count(vertex))
      throw StructuralError("zeta maps '" + angle + "' to unknown vertex '" + vertex + "'");
    angles.push_back(angle);
    fibre[vertex].push_back(angle);
  }
  for (const auto& [v, m] : bc.multiplicity) {
    if (!vertices.count(v)) throw StructuralError("multiplicity given for unknown vertex '" + v + "'");
    if (m <= 0) throw BcInvariantError("multiplicity of vertex '" + v + "' is not positive");
  }
  for (const auto& v : bc.vertices)
    if (!fibre.count(v)) throw BcInvariantError("vertex '" + v + "' has no angle");

  ConfigurationSpec spec;
  spec.angles = angles;
  std::set<std::string> oriented_vertices;
  for (const auto& cycle : bc.orientation) {
    if (cycle.empty()) throw StructuralError("empty orientation cycle");
    auto z = bc.zeta.find(cycle.front());
    if (z == bc.zeta.end()) throw StructuralError("orientation mentions unknown angle '" + cycle.front() + "'");
    const std::string& v = z->second;
    if (!oriented_vertices.insert(v).second)
      throw BcInvariantError("vertex '" + v + "' has more than one orientation cycle");
    std::vector<std::string> sorted_cycle = cycle;
    std::sort(sorted_cycle.begin(), sorted_cycle.end());
    std::vector<std::string> f = fibre[v];
    std::sort(f.begin(), f.end());
    if (sorted_cycle != f)
      throw BcInvariantError("orientation cycle at vertex '" + v + "' is not the fibre of zeta");
    spec.cycles.push_back(cycle);
  }
  for (const auto& [v, f] : fibre)
    if (f.size() > 1 && !oriented_vertices.count(v))
      throw BcInvariantError("vertex '" + v + "' has several angles but no orientation cycle");

  spec.polygons = bc.polygons;
  auto nu = [&](const std::string& v) {
    auto it = bc.multiplicity.find(v);
    return it == bc.multiplicity.end() ? 1 : it->second;
  };
  for (const auto& poly : bc.polygons) {
    if (poly.size() < 2)
      throw BcInvariantError("polygon {" + (poly.empty() ? std::string() : poly.front()) +
                             "} has fewer than two angles");
    bool non_truncated = false;
    for (const auto& h : poly) {
      auto z = bc.zeta.find(h);
      if (z == bc.zeta.end()) throw StructuralError("polygon mentions unknown angle '" + h + "'");
      non_truncated = non_truncated || fibre[z->second].size() * nu(z->second) > 1;
    }
    if (!non_truncated) {
      std::string names;
      for (const auto& h : poly) names += (names.empty() ? "" : ", ") + h;
      throw BcInvariantError("condition (7) fails: polygon {" + names + "} has only truncated vertices");
    }
  }
  spec.degrees.kind = DegreeSpec::Kind::per_angle;
  for (const auto& a : angles) {
    const std::string& v = bc.zeta.at(a);
    spec.degrees.values[a] = nu(v) * static_cast<int>(fibre[v].size());
  }
  return Configuration::build(spec);
}

}  // namespace fbc
