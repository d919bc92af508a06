#include "fbc/classify.hpp"
#include "fbc/gabriel.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fbc {
namespace {

ReconstructedConfiguration finish(const Quiver& q, const std::vector<Path>& paths,
                                  const std::vector<int>& next, bool cyclic) {
  const int n = static_cast<int>(paths.size());
  std::vector<std::string> names;
  std::vector<int> plab(n), llab(n), deg(n);
  for (int i = 0; i < n; ++i) {
    names.push_back(q.render(paths[i]));
    plab[i] = paths[i].source;
    llab[i] = paths[i].arrows.front();
    deg[i] = cyclic ? 1 : paths[i].length();
  }
  Configuration c(names, next, plab, llab, deg);
  ReconstructedConfiguration r{c, {}, {}, {}, cyclic};
  std::map<std::string, int> by_name;
  for (int i = 0; i < n; ++i) by_name[names[i]] = i;
  for (Angle a = 0; a < c.size(); ++a) r.angle_paths.push_back(paths[by_name.at(c.name(a))]);
  for (int p = 0; p < c.polygon_count(); ++p)
    r.polygon_vertex.push_back(q.vertex(r.angle_paths[c.polygon_members(p).front()].source));
  for (int b = 0; b < c.lblock_count(); ++b)
    r.lblock_arrow.push_back(q.arrow(r.angle_paths[c.lblock_members(b).front()].arrows.front()).id);
  return r;
}

// Disjoint oriented cycles with all paths of length two equal to zero.
ReconstructedConfiguration cyclic_case(const AlgebraTable& t) {
  const Quiver& q = t.quiver();
  if (q.arrow_count() == 0) throw DomainError("Loewy length 1: there are no arrows to reconstruct from");
  for (int v = 0; v < q.vertex_count(); ++v)
    if (q.out_arrows(v).size() != 1 || q.in_arrows(v).size() != 1)
      throw DomainError("Loewy length 2 but the quiver is not an oriented cycle at " + q.vertex(v));
  std::vector<Path> paths;
  std::vector<int> next;
  for (int a = 0; a < q.arrow_count(); ++a) paths.push_back(q.arrow_path(a));
  for (int a = 0; a < q.arrow_count(); ++a) next.push_back(q.out_arrows(q.arrow(a).target).front());
  return finish(q, paths, next, true);
}

}  // namespace

ReconstructedConfiguration reconstruct_configuration(const AlgebraTable& t, const GabrielPresentation& g) {
  if (!(t.quiver() == g.quiver)) throw DomainError("table does not belong to the presentation");
  if (t.loewy_length() <= 2) return cyclic_case(t);
  const Quiver& q = t.quiver();

  auto diagrams = loewy_diagrams(t);
  std::set<int> socle;
  for (const auto& d : diagrams) {
    if (d.socle_classes.size() != 1)
      throw DomainError("socle of P_" + q.vertex(d.vertex) + " is not simple (" +
                        std::to_string(d.socle_classes.size()) + " classes)");
    const int c = d.socle_classes.front();
    auto right = right_socle_classes(t, t.at(c).source());
    if (right.size() != 1 || right.front() != c)
      throw DomainError("socle class " + q.render(t.at(c).representative) + " is not two-sided");
    socle.insert(c);
  }

  std::vector<Path> paths;
  std::map<Path, int> index;
  for (int c : socle)
    for (const auto& m : t.at(c).members) {
      index.emplace(m, static_cast<int>(paths.size()));
      paths.push_back(m);
    }

  std::vector<int> next(paths.size(), -1);
  std::vector<bool> hit(paths.size(), false);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Path& v = paths[i];
    if (v.trivial()) throw DomainError("a socle class contains a trivial path");
    const Path rest = q.factor(v, 1, v.length() - 1);
    std::vector<int> found;
    for (int b : q.out_arrows(rest.target)) {
      auto it = index.find(Quiver::concat(rest, q.arrow_path(b)));
      if (it != index.end()) found.push_back(it->second);
    }
    if (found.size() != 1)
      throw DomainError("socle path " + q.render(v) + " has " + std::to_string(found.size()) +
                        " one-arrow continuations");
    if (hit[found.front()]) throw DomainError("the shift on socle paths is not injective");
    hit[found.front()] = true;
    next[i] = found.front();
  }

  ReconstructedConfiguration r = finish(q, paths, next, false);
  const ClassificationReport rep = classify(r.config);
  if (!rep.is_type_s) {
    std::string why = rep.is_fbc ? "(f7)" : rep.axioms.violated().front();
    throw DomainError("reconstructed configuration fails " + why);
  }
  return r;
}

IsomorphismCheck verify_isomorphism(const GabrielPresentation& original,
                                    const ReconstructedConfiguration& rec) {
  IsomorphismCheck out;
  const Quiver& qa = original.quiver;
  const Configuration& c = rec.config;
  const Quiver qe = build_quiver(c);

  std::vector<int> fv(qe.vertex_count()), fa(qe.arrow_count());
  for (int p = 0; p < qe.vertex_count(); ++p) {
    fv[p] = qa.find_vertex(rec.polygon_vertex[p]);
    if (fv[p] < 0) {
      out.failure = "vertex " + rec.polygon_vertex[p] + " does not exist in the original quiver";
      return out;
    }
  }
  for (int b = 0; b < qe.arrow_count(); ++b) {
    fa[b] = qa.find_arrow(rec.lblock_arrow[b]);
    if (fa[b] < 0) {
      out.failure = "arrow " + rec.lblock_arrow[b] + " does not exist in the original quiver";
      return out;
    }
    if (qa.arrow(fa[b]).source != fv[qe.arrow(b).source] || qa.arrow(fa[b]).target != fv[qe.arrow(b).target]) {
      out.failure = "arrow " + rec.lblock_arrow[b] + " is not mapped compatibly with its endpoints";
      return out;
    }
  }
  if (qe.vertex_count() != qa.vertex_count() || qe.arrow_count() != qa.arrow_count() ||
      std::set<int>(fv.begin(), fv.end()).size() != fv.size() ||
      std::set<int>(fa.begin(), fa.end()).size() != fa.size()) {
    out.failure = "the quiver map is not bijective";
    return out;
  }

  auto image = [&](const Path& p) {
    Path r{fv[p.source], fv[p.target], {}};
    for (int a : p.arrows) r.arrows.push_back(fa[a]);
    return r;
  };
  const AlgebraTable target = presentation_algebra(original);
  const IdealGenerators gens = ideal_generators(c, GeneratorListing::factor_minimal);
  for (const auto& b : gens.fr1)
    if (target.class_of(image(b.first)) != target.class_of(image(b.second))) {
      out.failure = "relation " + qe.render(b.first) + " - " + qe.render(b.second) +
                    " does not hold in the original algebra";
      return out;
    }
  for (const auto* list : {&gens.fr2, &gens.fr3})
    for (const auto& m : *list)
      if (target.class_of(image(m)) != kZeroClass) {
        out.failure = "relation " + qe.render(m) + " does not hold in the original algebra";
        return out;
      }

  const AlgebraTable source = congruence_closure(c);
  for (int x = 0; x < qe.vertex_count(); ++x)
    for (int y = 0; y < qe.vertex_count(); ++y)
      if (source.dim(x, y) != target.dim(fv[x], fv[y])) {
        out.failure = "dimensions differ between " + qe.vertex(x) + " and " + qe.vertex(y);
        return out;
      }
  out.isomorphic = true;
  return out;
}

}  // namespace fbc
