#include "fbc/configuration.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fbc {
namespace {

// Renumbers arbitrary labels so that block ids increase with their least member.
std::vector<int> normalize_labels(const std::vector<int>& label) {
  std::map<int, int> seen;
  std::vector<int> out(label.size());
  for (std::size_t i = 0; i < label.size(); ++i) {
    auto [it, inserted] = seen.emplace(label[i], static_cast<int>(seen.size()));
    out[i] = it->second;
  }
  return out;
}

std::vector<std::vector<Angle>> blocks_of(const std::vector<int>& label) {
  int count = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::vector<Angle>> blocks(count);
  for (std::size_t a = 0; a < label.size(); ++a) blocks[label[a]].push_back(static_cast<Angle>(a));
  return blocks;
}

std::vector<int> partition_labels(const std::vector<std::vector<std::string>>& blocks,
                                  const std::map<std::string, Angle>& index, const char* what) {
  std::vector<int> label(index.size(), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw StructuralError(std::string("empty block in ") + what);
    for (const auto& n : blocks[b]) {
      auto it = index.find(n);
      if (it == index.end())
        throw StructuralError(std::string(what) + " mentions unknown angle '" + n + "'");
      if (label[it->second] != -1)
        throw StructuralError(std::string(what) + " blocks overlap at angle '" + n + "'");
      label[it->second] = static_cast<int>(b);
    }
  }
  for (const auto& [n, a] : index)
    if (label[a] == -1) throw StructuralError(std::string(what) + " does not cover angle '" + n + "'");
  return label;
}

}  // namespace

Configuration::Configuration(std::vector<std::string> names, const std::vector<Angle>& successor,
                             const std::vector<int>& polygon_label,
                             const std::vector<int>& lblock_label, const std::vector<int>& degree) {
  const std::size_t n = names.size();
  if (n == 0) throw StructuralError("a configuration needs at least one angle");
  if (successor.size() != n || polygon_label.size() != n || lblock_label.size() != n ||
      degree.size() != n)
    throw StructuralError("configuration arrays have inconsistent sizes");
  {
    std::set<std::string> unique;
    for (const auto& s : names) {
      if (s.empty()) throw StructuralError("angle names must be non-empty");
      if (!unique.insert(s).second) throw StructuralError("duplicate angle '" + s + "'");
    }
  }
  std::vector<bool> hit(n, false);
  for (Angle s : successor) {
    if (s < 0 || static_cast<std::size_t>(s) >= n || hit[s])
      throw StructuralError("the action of g is not a bijection");
    hit[s] = true;
  }
  for (std::size_t a = 0; a < n; ++a)
    if (degree[a] <= 0) throw StructuralError("degree of '" + names[a] + "' is not positive");

  // Sort angles by name and carry everything along.
  std::vector<Angle> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Angle x, Angle y) { return names[x] < names[y]; });
  std::vector<Angle> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = static_cast<Angle>(i);

  names_.resize(n);
  succ_.resize(n);
  pred_.resize(n);
  degree_.resize(n);
  std::vector<int> plab(n), llab(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Angle old = order[i];
    names_[i] = std::move(names[old]);
    succ_[i] = rank[successor[old]];
    degree_[i] = degree[old];
    plab[i] = polygon_label[old];
    llab[i] = lblock_label[old];
  }
  for (std::size_t i = 0; i < n; ++i) pred_[succ_[i]] = static_cast<Angle>(i);

  polygon_of_ = normalize_labels(plab);
  lblock_of_ = normalize_labels(llab);
  polygons_ = blocks_of(polygon_of_);
  lblocks_ = blocks_of(lblock_of_);

  orbit_of_.assign(n, -1);
  orbit_pos_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (orbit_of_[i] != -1) continue;
    std::vector<Angle> cyc;
    Angle a = static_cast<Angle>(i);
    do {
      orbit_of_[a] = static_cast<int>(orbits_.size());
      orbit_pos_[a] = static_cast<int>(cyc.size());
      cyc.push_back(a);
      a = succ_[a];
    } while (a != static_cast<Angle>(i));
    orbits_.push_back(std::move(cyc));
  }
}

Configuration Configuration::build(const ConfigurationSpec& spec) {
  std::map<std::string, Angle> index;
  for (const auto& s : spec.angles) {
    if (s.empty()) throw StructuralError("angle names must be non-empty");
    if (!index.emplace(s, static_cast<Angle>(index.size())).second)
      throw StructuralError("duplicate angle '" + s + "'");
  }
  const std::size_t n = spec.angles.size();
  if (n == 0) throw StructuralError("a configuration needs at least one angle");

  std::vector<Angle> succ(n, -1);
  for (const auto& cycle : spec.cycles) {
    if (cycle.empty()) throw StructuralError("empty cycle in g");
    for (const auto& name : cycle)
      if (!index.count(name)) throw StructuralError("g mentions unknown angle '" + name + "'");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      auto it = index.find(cycle[i]);
      if (succ[it->second] != -1)
        throw StructuralError("angle '" + cycle[i] + "' appears twice in g");
      succ[it->second] = index.at(cycle[(i + 1) % cycle.size()]);
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (succ[a] == -1) succ[a] = static_cast<Angle>(a);

  std::vector<int> plab = partition_labels(spec.polygons, index, "P");
  std::vector<int> llab(n);
  if (spec.lblocks)
    llab = partition_labels(*spec.lblocks, index, "L");
  else
    std::iota(llab.begin(), llab.end(), 0);

  // Orbits are needed to expand the degree specification.
  std::vector<int> orbit(n, -1);
  std::vector<std::vector<Angle>> orbits;
  for (std::size_t i = 0; i < n; ++i) {
    if (orbit[i] != -1) continue;
    std::vector<Angle> cyc;
    Angle a = static_cast<Angle>(i);
    do {
      orbit[a] = static_cast<int>(orbits.size());
      cyc.push_back(a);
      a = succ[a];
    } while (a != static_cast<Angle>(i));
    orbits.push_back(std::move(cyc));
  }

  std::vector<int> degree(n, 0);
  switch (spec.degrees.kind) {
    case DegreeSpec::Kind::uniform:
      std::fill(degree.begin(), degree.end(), spec.degrees.uniform);
      break;
    case DegreeSpec::Kind::orbit_size:
      for (const auto& cyc : orbits)
        for (Angle a : cyc) degree[a] = static_cast<int>(cyc.size());
      break;
    case DegreeSpec::Kind::per_angle: {
      for (const auto& [name, value] : spec.degrees.values) {
        auto it = index.find(name);
        if (it == index.end()) throw StructuralError("d mentions unknown angle '" + name + "'");
        if (value <= 0) throw StructuralError("degree of '" + name + "' is not positive");
        degree[it->second] = value;
      }
      for (const auto& cyc : orbits) {
        std::set<int> listed;
        bool complete = true;
        for (Angle a : cyc) {
          if (degree[a] == 0)
            complete = false;
          else
            listed.insert(degree[a]);
        }
        if (complete) continue;  // fully listed orbits are checked by (f3)
        if (listed.empty())
          throw StructuralError("missing degree for the orbit of '" + spec.angles[cyc[0]] + "'");
        if (listed.size() > 1)
          throw StructuralError("conflicting degrees on the partially listed orbit of '" +
                                spec.angles[cyc[0]] + "'");
        for (Angle a : cyc) degree[a] = *listed.begin();
      }
      break;
    }
  }
  return Configuration(spec.angles, succ, plab, llab, degree);
}

ConfigurationSpec Configuration::to_spec() const {
  ConfigurationSpec spec;
  spec.angles = names_;
  for (const auto& cyc : orbits_) {
    if (cyc.size() < 2) continue;
    std::vector<std::string> c;
    for (Angle a : cyc) c.push_back(names_[a]);
    spec.cycles.push_back(std::move(c));
  }
  for (const auto& b : polygons_) {
    std::vector<std::string> c;
    for (Angle a : b) c.push_back(names_[a]);
    spec.polygons.push_back(std::move(c));
  }
  if (!l_trivial()) {
    std::vector<std::vector<std::string>> ls;
    for (const auto& b : lblocks_) {
      std::vector<std::string> c;
      for (Angle a : b) c.push_back(names_[a]);
      ls.push_back(std::move(c));
    }
    spec.lblocks = std::move(ls);
  }
  spec.degrees.kind = DegreeSpec::Kind::per_angle;
  for (std::size_t a = 0; a < names_.size(); ++a) spec.degrees.values[names_[a]] = degree_[a];
  return spec;
}

std::optional<Angle> Configuration::find(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<Angle>(it - names_.begin());
}

Angle Configuration::at(const std::string& name) const {
  auto a = find(name);
  if (!a) throw StructuralError("unknown angle '" + name + "'");
  return *a;
}

Angle Configuration::act(Angle a, long k) const {
  const auto& cyc = orbits_[orbit_of_[a]];
  const long len = static_cast<long>(cyc.size());
  long pos = (orbit_pos_[a] + k) % len;
  if (pos < 0) pos += len;
  return cyc[pos];
}

int Configuration::max_degree() const { return *std::max_element(degree_.begin(), degree_.end()); }

Configuration reverse_orientation(const Configuration& config) {
  const int n = config.size();
  std::vector<Angle> succ(n);
  std::vector<int> plab(n), llab(n), deg(n);
  for (Angle a = 0; a < n; ++a) {
    succ[a] = config.pred(a);
    plab[a] = config.polygon(a);
    llab[a] = config.lblock(config.pred(a));
    deg[a] = config.degree(a);
  }
  return Configuration(config.names(), succ, plab, llab, deg);
}

}  // namespace fbc
