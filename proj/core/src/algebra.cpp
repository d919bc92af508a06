#include "fbc/algebra.hpp"

#include <algorithm>

#include "fbc/congruence.hpp"
#include "fbc/sequences.hpp"

namespace fbc {

AlgebraTable::AlgebraTable(Quiver quiver, std::vector<std::vector<Path>> classes)
    : quiver_(std::move(quiver)) {
  for (auto& members : classes) {
    std::sort(members.begin(), members.end());
    PathClass c;
    c.representative = members.front();
    for (const auto& m : members) c.radical_degree = std::max(c.radical_degree, m.length());
    c.members = std::move(members);
    classes_.push_back(std::move(c));
  }
  std::sort(classes_.begin(), classes_.end(), [](const PathClass& a, const PathClass& b) {
    if (a.source() != b.source()) return a.source() < b.source();
    if (a.target() != b.target()) return a.target() < b.target();
    return a.representative < b.representative;
  });
  const int V = quiver_.vertex_count();
  basis_.assign(V, std::vector<std::vector<int>>(V));
  for (int c = 0; c < size(); ++c) {
    for (const auto& m : classes_[c].members) class_of_.emplace(m, c);
    basis_[classes_[c].source()][classes_[c].target()].push_back(c);
  }
  identity_.resize(V);
  for (int x = 0; x < V; ++x) identity_[x] = class_of(quiver_.trivial_path(x));
}

int AlgebraTable::class_of(const Path& p) const {
  auto it = class_of_.find(p);
  return it == class_of_.end() ? kZeroClass : it->second;
}

int AlgebraTable::multiply(int first, int second) const {
  if (first == kZeroClass || second == kZeroClass) return kZeroClass;
  const Path& a = classes_[first].representative;
  const Path& b = classes_[second].representative;
  if (a.target != b.source) return kZeroClass;
  return class_of(Quiver::concat(a, b));
}

int AlgebraTable::loewy_length() const {
  int m = 0;
  for (const auto& c : classes_) m = std::max(m, c.radical_degree + 1);
  return m;
}

AlgebraTable quotient(const Quiver& quiver, const std::vector<Path>& monomials,
                      const std::vector<Binomial>& binomials, int bound) {
  PathCongruence pc(quiver, monomials, bound, OverflowPolicy::zero);
  for (const auto& b : binomials) pc.add_binomial(b.first, b.second);
  return AlgebraTable(quiver, pc.classes());
}

AlgebraTable congruence_closure(const Configuration& config) {
  SequenceTable t(config);
  IdealGenerators g = ideal_generators(t, GeneratorListing::factor_minimal);
  std::vector<Path> mono = g.fr2;
  mono.insert(mono.end(), g.fr3.begin(), g.fr3.end());
  return quotient(t.quiver(), mono, g.fr1, g.length_bound);
}

AlgebraTable type_s_basis(const Configuration& config) {
  SequenceTable t(config);
  RClasses r = relation_R(t);
  return AlgebraTable(t.quiver(), std::move(r.classes));
}

std::optional<std::string> compare_tables(const AlgebraTable& a, const AlgebraTable& b) {
  if (!(a.quiver() == b.quiver())) return "quivers differ";
  if (a.size() != b.size())
    return "total dimensions differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
  for (int c = 0; c < a.size(); ++c)
    if (a.at(c).members != b.at(c).members)
      return "class " + a.quiver().render(a.at(c).representative) + " differs";
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (a.multiply(x, y) != b.multiply(x, y))
        return "products of " + a.quiver().render(a.at(x).representative) + " and " +
               a.quiver().render(a.at(y).representative) + " differ";
  return std::nullopt;
}

std::vector<std::vector<int>> cartan_matrix(const AlgebraTable& table) {
  const int V = table.quiver().vertex_count();
  std::vector<std::vector<int>> m(V, std::vector<int>(V));
  for (int x = 0; x < V; ++x)
    for (int y = 0; y < V; ++y) m[x][y] = table.dim(x, y);
  return m;
}

namespace {

bool killed_before(const AlgebraTable& t, int c) {
  const Quiver& q = t.quiver();
  for (int a : q.in_arrows(t.at(c).source()))
    if (t.class_of(Quiver::concat(q.arrow_path(a), t.at(c).representative)) != kZeroClass)
      return false;
  return true;
}

bool killed_after(const AlgebraTable& t, int c) {
  const Quiver& q = t.quiver();
  for (int a : q.out_arrows(t.at(c).target()))
    if (t.class_of(Quiver::concat(t.at(c).representative, q.arrow_path(a))) != kZeroClass)
      return false;
  return true;
}

}  // namespace

std::vector<LoewyDiagram> loewy_diagrams(const AlgebraTable& table) {
  const int V = table.quiver().vertex_count();
  std::vector<LoewyDiagram> out(V);
  for (int x = 0; x < V; ++x) out[x].vertex = x;
  for (int c = 0; c < table.size(); ++c) {
    const PathClass& pc = table.at(c);
    LoewyDiagram& d = out[pc.target()];
    if (static_cast<int>(d.layers.size()) <= pc.radical_degree) d.layers.resize(pc.radical_degree + 1);
    d.layers[pc.radical_degree].push_back(pc.source());
    ++d.dimension;
    if (killed_before(table, c)) {
      d.socle.push_back(pc.source());
      d.socle_classes.push_back(c);
    }
  }
  for (auto& d : out) {
    for (auto& layer : d.layers) std::sort(layer.begin(), layer.end());
    std::sort(d.socle.begin(), d.socle.end());
    d.loewy_length = static_cast<int>(d.layers.size());
  }
  return out;
}

std::vector<int> right_socle_classes(const AlgebraTable& table, int x) {
  std::vector<int> out;
  for (int c = 0; c < table.size(); ++c)
    if (table.at(c).source() == x && killed_after(table, c)) out.push_back(c);
  return out;
}

}  // namespace fbc
