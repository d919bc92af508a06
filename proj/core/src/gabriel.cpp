#include "fbc/gabriel.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fbc/classify.hpp"
#include "fbc/congruence.hpp"
#include "fbc/sequences.hpp"

namespace fbc {
namespace {

void require_type_s(const Configuration& config) {
  if (!classify(config).is_type_s) throw NotTypeSError("not type S");
}

}  // namespace

ReducedArrows reduced_arrows(const Configuration& config, const AlgebraTable& closure) {
  require_type_s(config);
  const Quiver& q = closure.quiver();
  ReducedArrows r;
  r.representative.assign(q.arrow_count(), -1);
  for (int a = 0; a < q.arrow_count(); ++a) {
    const int c = closure.class_of(q.arrow_path(a));
    if (c == kZeroClass || closure.at(c).radical_degree >= 2) {
      r.reduced.push_back(a);
      continue;
    }
    // Members of length one are arrows; the least one is the representative.
    const int rep = closure.at(c).representative.arrows.front();
    r.representative[a] = rep;
    if (rep == a) r.kept.push_back(a);
  }
  return r;
}

GabrielPresentation gabriel_presentation(const Configuration& config, const AlgebraTable& closure) {
  const ReducedArrows ra = reduced_arrows(config, closure);
  const Quiver& q = closure.quiver();
  GabrielPresentation g;
  std::vector<int> new_index(q.arrow_count(), -1);
  std::vector<Arrow> arrows;
  for (int a : ra.kept) {
    new_index[a] = static_cast<int>(arrows.size());
    arrows.push_back(q.arrow(a));
    g.original_arrow.push_back(a);
  }
  g.quiver = Quiver(q.vertices(), std::move(arrows));

  auto translate = [&](const Path& p) -> std::optional<Path> {
    Path out{p.source, p.target, {}};
    for (int a : p.arrows) {
      if (new_index[a] < 0) return std::nullopt;
      out.arrows.push_back(new_index[a]);
    }
    return out;
  };

  for (const auto& c : closure.classes()) {
    std::vector<Path> members;
    for (const auto& m : c.members)
      if (auto t = translate(m)) members.push_back(*t);
    if (members.empty()) continue;
    std::sort(members.begin(), members.end());
    for (std::size_t i = 1; i < members.size(); ++i) g.binomials.push_back({members[0], members[i]});
    g.classes.push_back(std::move(members));
  }

  SequenceTable t(config);
  std::set<Path> mono;
  for (const auto& [w, seqs] : t.by_word()) {
    if (w.trivial() || !translate(w)) continue;
    for (int a : ra.kept) {
      if (q.arrow(a).source != w.target) continue;
      Path c = Quiver::concat(w, q.arrow_path(a));
      if (t.in_E(c) || !t.in_E(q.factor(c, 1, c.length() - 1))) continue;
      mono.insert(*translate(c));
    }
  }
  g.monomials.assign(mono.begin(), mono.end());
  g.length_bound = config.length_bound();

  g.vertex_bound.assign(q.vertex_count(), 0);
  for (int x = 0; x < q.vertex_count(); ++x)
    for (Angle e : config.polygon_members(x))
      g.vertex_bound[x] = std::max(g.vertex_bound[x], config.degree(e) + 1);

  g.admissible = true;
  auto refuse = [&](std::string why) {
    if (g.admissible) g.admissibility_witness = std::move(why);
    g.admissible = false;
  };
  for (const auto& m : g.monomials)
    if (m.length() < 2) refuse("monomial " + g.quiver.render(m) + " is shorter than 2");
  for (const auto& b : g.binomials)
    if (b.first.length() < 2 || b.second.length() < 2)
      refuse("binomial " + g.quiver.render(b.first) + " - " + g.quiver.render(b.second) +
             " has a term shorter than 2");
  PathCongruence free_paths(g.quiver, g.monomials, g.length_bound, OverflowPolicy::zero);
  for (const auto& p : free_paths.universe()) {
    if (p.length() >= g.vertex_bound[p.source] || p.length() >= g.vertex_bound[p.target])
      refuse("path " + g.quiver.render(p) + " avoids every monomial but reaches N_x");
  }
  return g;
}

AlgebraTable presentation_algebra(const GabrielPresentation& g) {
  return quotient(g.quiver, g.monomials, g.binomials, g.length_bound);
}

Path to_original(const GabrielPresentation& g, const Path& p) {
  Path out{p.source, p.target, {}};
  for (int a : p.arrows) out.arrows.push_back(g.original_arrow[a]);
  return out;
}

MultiserialVerdict special_multiserial_check(const GabrielPresentation& g, const AlgebraTable& closure) {
  MultiserialVerdict v;
  const Quiver& q = g.quiver;
  for (int a = 0; a < q.arrow_count(); ++a) {
    std::vector<int> after, before;
    for (int b : q.out_arrows(q.arrow(a).target))
      if (closure.class_of(q.path({a, b})) != kZeroClass) after.push_back(b);
    for (int b : q.in_arrows(q.arrow(a).source))
      if (closure.class_of(q.path({b, a})) != kZeroClass) before.push_back(b);
    if (after.size() > 1)
      v.witnesses.push_back({q.arrow(a).id, "after", q.arrow(after[0]).id, q.arrow(after[1]).id});
    if (before.size() > 1)
      v.witnesses.push_back({q.arrow(a).id, "before", q.arrow(before[0]).id, q.arrow(before[1]).id});
  }
  v.special_multiserial = v.witnesses.empty();
  return v;
}

ConditionsDC check_conditions_DC(const GabrielPresentation& g, const AlgebraTable& closure) {
  ConditionsDC r;
  const Quiver& q = g.quiver;

  // (D): closure classes are exactly the restricted R-classes and none of
  // their members vanishes, so every relation is monomial or binomial.
  std::set<std::vector<Path>> expected(g.classes.begin(), g.classes.end());
  std::set<std::vector<Path>> computed;
  for (const auto& c : closure.classes()) computed.insert(c.members);
  for (const auto& c : g.classes) {
    ++r.checks;
    if (!computed.count(c)) {
      r.D = false;
      r.witness = "class of " + q.render(c.front()) + " is not reproduced by the presentation";
      break;
    }
  }
  if (r.D && expected != computed) {
    r.D = false;
    r.witness = "presentation has a class that is not a restricted R-class";
  }

  // (C): u v ~ u w != 0 forces v ~ w, and the mirrored statement.
  std::vector<Path> nonzero;
  for (const auto& c : closure.classes())
    for (const auto& m : c.members) nonzero.push_back(m);
  for (const auto& u : nonzero) {
    std::map<int, int> after, before;
    for (const auto& v : nonzero) {
      if (v.source == u.target) {
        const int uv = closure.class_of(Quiver::concat(u, v));
        if (uv != kZeroClass) {
          ++r.checks;
          auto [it, fresh] = after.emplace(uv, closure.class_of(v));
          if (!fresh && it->second != closure.class_of(v) && r.C) {
            r.C = false;
            r.witness = "extensions of " + q.render(u) + " identify different classes";
          }
        }
      }
      if (v.target == u.source) {
        const int vu = closure.class_of(Quiver::concat(v, u));
        if (vu != kZeroClass) {
          ++r.checks;
          auto [it, fresh] = before.emplace(vu, closure.class_of(v));
          if (!fresh && it->second != closure.class_of(v) && r.C) {
            r.C = false;
            r.witness = "prefixes of " + q.render(u) + " identify different classes";
          }
        }
      }
    }
  }
  return r;
}

}  // namespace fbc
