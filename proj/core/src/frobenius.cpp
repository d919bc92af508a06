#include "fbc/frobenius.hpp"

#include <algorithm>
#include <set>

#include "fbc/classify.hpp"
#include "fbc/sequences.hpp"

namespace fbc {
namespace {

std::string describe(const AlgebraTable& t, int c) { return t.quiver().render(t.at(c).representative); }

// sigma and eps from full sequences; false if the data is inconsistent.
bool epsilon_from_configuration(const AlgebraTable& t, const Configuration& c, FrobeniusData& f) {
  const int V = t.quiver().vertex_count();
  NakayamaMap nm = nakayama_angle_map(c);
  f.nakayama_vertex = nm.polygon;
  f.epsilon_support.assign(V, -1);
  for (int x = 0; x < V; ++x) {
    std::set<int> found;
    for (Angle e : c.polygon_members(x)) found.insert(t.class_of(word(c, {e, c.degree(e)})));
    if (found.size() != 1 || *found.begin() == kZeroClass) {
      f.witness = "full sequences at vertex " + t.quiver().vertex(x) + " do not give one non-zero class";
      return false;
    }
    f.epsilon_support[x] = *found.begin();
  }
  return true;
}

// sigma from socles: the socle of P_z has composition factor x exactly when z = sigma x.
bool epsilon_from_socles(const AlgebraTable& t, FrobeniusData& f) {
  const int V = t.quiver().vertex_count();
  f.nakayama_vertex.assign(V, -1);
  f.epsilon_support.assign(V, -1);
  auto diagrams = loewy_diagrams(t);
  for (int z = 0; z < V; ++z) {
    const auto& s = diagrams[z].socle_classes;
    if (s.size() != 1) {
      f.witness = "socle of P_" + t.quiver().vertex(z) + " has " + std::to_string(s.size()) + " classes";
      return false;
    }
    const int x = t.at(s.front()).source();
    if (f.nakayama_vertex[x] != -1) {
      f.witness = "socles of P_" + t.quiver().vertex(f.nakayama_vertex[x]) + " and P_" +
                  t.quiver().vertex(z) + " share the composition factor " + t.quiver().vertex(x);
      return false;
    }
    f.nakayama_vertex[x] = z;
    f.epsilon_support[x] = s.front();
  }
  for (int x = 0; x < V; ++x) {
    auto r = right_socle_classes(t, x);
    if (r.size() != 1 || r.front() != f.epsilon_support[x]) {
      f.witness = "right socle at " + t.quiver().vertex(x) + " is not the class " +
                  describe(t, f.epsilon_support[x]);
      return false;
    }
  }
  return true;
}

int epsilon(const FrobeniusData& f, const AlgebraTable& t, int c) {
  if (c == kZeroClass) return 0;
  return f.epsilon_support[t.at(c).source()] == c ? 1 : 0;
}

}  // namespace

FrobeniusData frobenius_check(const AlgebraTable& t, const Configuration& config) {
  FrobeniusData f;
  const int V = t.quiver().vertex_count();
  const ClassificationReport rep = classify(config);
  bool have_eps = false;
  if (rep.is_type_s) {
    f.from_configuration = true;
    have_eps = epsilon_from_configuration(t, config, f);
  } else {
    have_eps = epsilon_from_socles(t, f);
  }
  if (!have_eps) return f;

  f.frobenius = true;
  for (int x = 0; x < V; ++x) {
    const int sx = f.nakayama_vertex[x];
    for (int y = 0; y < V; ++y) {
      PairingBlock b;
      b.x = x;
      b.y = y;
      b.rows = t.basis(y, sx);
      b.cols = t.basis(x, y);
      b.matrix.assign(b.rows.size(), std::vector<int>(b.cols.size()));
      for (std::size_t i = 0; i < b.rows.size(); ++i)
        for (std::size_t j = 0; j < b.cols.size(); ++j)
          b.matrix[i][j] = epsilon(f, t, t.multiply(b.cols[j], b.rows[i]));
      b.permutation = b.rows.size() == b.cols.size();
      for (std::size_t i = 0; i < b.rows.size() && b.permutation; ++i) {
        int s = 0;
        for (int v : b.matrix[i]) s += v;
        b.permutation = s == 1;
      }
      for (std::size_t j = 0; j < b.cols.size() && b.permutation; ++j) {
        int s = 0;
        for (std::size_t i = 0; i < b.rows.size(); ++i) s += b.matrix[i][j];
        b.permutation = s == 1;
      }
      if (!b.permutation && f.frobenius) {
        f.frobenius = false;
        f.witness = "pairing between " + t.quiver().vertex(x) + " and " + t.quiver().vertex(y) +
                    " is degenerate";
      }
      f.pairings.push_back(std::move(b));
    }
  }
  f.self_injective = f.frobenius;
  if (!f.frobenius) return f;

  f.symmetric = true;
  for (int x = 0; x < V && f.symmetric; ++x)
    if (f.nakayama_vertex[x] != x) {
      f.symmetric = false;
      f.witness = "Nakayama permutation moves " + t.quiver().vertex(x);
    }
  for (int a = 0; a < t.size() && f.symmetric; ++a)
    for (int b : t.basis(t.at(a).target(), t.at(a).source()))
      if (epsilon(f, t, t.multiply(a, b)) != epsilon(f, t, t.multiply(b, a))) {
        f.symmetric = false;
        f.witness = "eps(ab) != eps(ba) for a = " + describe(t, a) + ", b = " + describe(t, b);
        break;
      }
  return f;
}

std::string cycle_notation(const std::vector<int>& perm, const std::vector<std::string>& names) {
  std::vector<bool> seen(perm.size(), false);
  std::string out;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i) || perm[i] < 0) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += names[j];
      first = false;
      j = static_cast<std::size_t>(perm[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Path apply_nakayama(const Configuration& config, const Path& p) {
  NakayamaMap nm = nakayama_angle_map(config);
  Path out{nm.polygon[p.source], nm.polygon[p.target], {}};
  for (int a : p.arrows) out.arrows.push_back(nm.lblock[a]);
  return out;
}

NakayamaConsistency nakayama_consistency(const AlgebraTable& t, const Configuration& config) {
  NakayamaConsistency r;
  FrobeniusData f = frobenius_check(t, config);
  if (!f.frobenius || !f.from_configuration) {
    r.pass = false;
    r.witness = "no Frobenius form from the configuration: " + f.witness;
    return r;
  }
  const NakayamaMap nm = nakayama_angle_map(config);
  auto sigma = [&](int c) {
    const Path& p = t.at(c).representative;
    Path s{nm.polygon[p.source], nm.polygon[p.target], {}};
    for (int a : p.arrows) s.arrows.push_back(nm.lblock[a]);
    return t.class_of(s);
  };
  for (int u = 0; u < t.size() && r.pass; ++u) {
    const int x = t.at(u).source();
    const int y = t.at(u).target();
    for (int v : t.basis(y, f.nakayama_vertex[x])) {
      ++r.checks;
      if (epsilon(f, t, t.multiply(u, v)) != epsilon(f, t, t.multiply(v, sigma(u)))) {
        r.pass = false;
        r.witness = "eps(u v) != eps(v sigma(u)) for u = " + describe(t, u) + ", v = " + describe(t, v);
        break;
      }
    }
  }
  SequenceTable seq(config);
  for (int i = 0; i < seq.count() && r.pass; ++i) {
    const int c = t.class_of(seq.word(i));
    if (c == kZeroClass) continue;
    ++r.checks;
    const int twice = t.class_of(seq.word(seq.left(seq.left(i))));
    if (sigma(c) != twice) {
      r.pass = false;
      r.witness = "sigma of " + describe(t, c) + " is not the class of the double left complement";
    }
  }
  return r;
}

}  // namespace fbc
