#include "fbc/classify.hpp"

#include <algorithm>
#include <set>

namespace fbc {
namespace {

std::vector<int> full_word(const Configuration& c, Angle e) {
  std::vector<int> w;
  Angle a = e;
  for (int i = 0; i < c.degree(e); ++i, a = c.succ(a)) w.push_back(c.lblock(a));
  return w;
}

bool is_factor_at(const std::vector<int>& small, const std::vector<int>& big, std::size_t at) {
  return std::equal(small.begin(), small.end(), big.begin() + static_cast<long>(at));
}

AxiomResult fail(const char* axiom, std::vector<std::string> witness, std::string detail) {
  return AxiomResult{axiom, false, std::move(witness), std::move(detail)};
}

AxiomResult check_f1(const Configuration& c) {
  for (Angle e = 0; e < c.size(); ++e)
    for (Angle h : c.lblock_members(c.lblock(e)))
      if (c.polygon(h) != c.polygon(e))
        return fail("f1", {c.name(e), c.name(h)}, "L-block is not contained in a polygon");
  return {"f1", true, {}, {}};
}

AxiomResult check_f2(const Configuration& c) {
  for (int b = 0; b < c.lblock_count(); ++b) {
    const auto& m = c.lblock_members(b);
    for (Angle h : m)
      if (c.polygon(c.succ(h)) != c.polygon(c.succ(m.front())))
        return fail("f2", {c.name(m.front()), c.name(h)},
                    "same L-block but g-images lie in different polygons");
  }
  return {"f2", true, {}, {}};
}

AxiomResult check_f3(const Configuration& c) {
  for (int o = 0; o < c.orbit_count(); ++o) {
    const auto& orb = c.orbit(o);
    for (Angle a : orb)
      if (c.degree(a) != c.degree(orb.front())) {
        std::vector<std::string> names;
        for (Angle x : orb) names.push_back(c.name(x));
        std::sort(names.begin(), names.end());
        return fail("f3", names, "degree is not constant on the orbit");
      }
  }
  return {"f3", true, {}, {}};
}

// (f4)/(f5): block(e1) = block(e2) iff block(sigma e1) = block(sigma e2).
template <class Block>
AxiomResult check_sigma_blocks(const Configuration& c, const char* axiom, Block block) {
  for (Angle x = 0; x < c.size(); ++x)
    for (Angle y = x + 1; y < c.size(); ++y) {
      const bool before = block(x) == block(y);
      const bool after = block(c.nakayama(x)) == block(c.nakayama(y));
      if (before != after)
        return fail(axiom, {c.name(x), c.name(y)},
                    before ? "sigma separates a block" : "sigma merges two blocks");
    }
  return {axiom, true, {}, {}};
}

AxiomResult check_f6(const Configuration& c, F6Mode mode) {
  std::vector<std::vector<int>> words;
  for (Angle e = 0; e < c.size(); ++e) words.push_back(full_word(c, e));
  for (Angle e = 0; e < c.size(); ++e)
    for (Angle h = 0; h < c.size(); ++h) {
      const auto& s = words[e];
      const auto& b = words[h];
      if (s.size() >= b.size()) continue;
      const std::size_t last = b.size() - s.size();
      if (is_factor_at(s, b, 0) || is_factor_at(s, b, last))
        return fail("f6", {c.name(e), c.name(h)}, "full word is an end-aligned proper factor");
      if (mode == F6Mode::strict)
        for (std::size_t at = 1; at < last; ++at)
          if (is_factor_at(s, b, at))
            return fail("f6", {c.name(e), c.name(h)}, "full word is an interior proper factor");
    }
  return {"f6", true, {}, {}};
}

std::set<Path> complement_words(const SequenceTable& t, int i) {
  std::set<Path> out;
  for (int j : t.with_word(t.word(t.left(i)))) out.insert(t.word(t.right(j)));
  return out;
}

std::vector<StandardSequence> sequences_with_words(const SequenceTable& t, const std::set<Path>& ws) {
  std::vector<StandardSequence> out;
  for (const auto& w : ws)
    for (int j : t.with_word(w)) out.push_back(t.sequence(j));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool AxiomReport::ok() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.pass; });
}

std::vector<std::string> AxiomReport::violated() const {
  std::vector<std::string> out;
  for (const auto& r : results)
    if (!r.pass) out.push_back(r.axiom);
  return out;
}

AxiomReport validate(const Configuration& c, F6Mode mode) {
  AxiomReport r;
  r.results.push_back(check_f1(c));
  r.results.push_back(check_f2(c));
  r.results.push_back(check_f3(c));
  r.results.push_back(check_sigma_blocks(c, "f4", [&](Angle a) { return c.polygon(a); }));
  r.results.push_back(check_sigma_blocks(c, "f5", [&](Angle a) { return c.lblock(a); }));
  r.results.push_back(check_f6(c, mode));
  return r;
}

TypeSResult check_type_s(const SequenceTable& t) {
  std::vector<std::optional<std::set<Path>>> cache(t.count());
  auto w_of = [&](int i) -> const std::set<Path>& {
    if (!cache[i]) cache[i] = complement_words(t, i);
    return *cache[i];
  };
  for (int i = 0; i < t.count(); ++i)
    for (int j : t.with_word(t.word(i))) {
      if (j <= i || w_of(i) == w_of(j)) continue;
      TypeSWitness w{t.sequence(i), t.sequence(j), sequences_with_words(t, w_of(i)),
                     sequences_with_words(t, w_of(j))};
      return {false, std::move(w)};
    }
  return {true, std::nullopt};
}

TypeSResult check_type_s(const Configuration& config) { return check_type_s(SequenceTable(config)); }

bool check_type_s_via_f7prime(const SequenceTable& t) {
  const auto& groups = t.left_groups();
  for (int i = 0; i < t.count(); ++i) {
    std::set<Path> related;
    for (int j : t.with_word(t.word(i))) {
      const auto& g = groups.at(t.word(t.left(j)));
      related.insert(g.begin(), g.end());
    }
    const auto& own = groups.at(t.word(t.left(i)));
    if (related != std::set<Path>(own.begin(), own.end())) return false;
  }
  return true;
}

bool check_type_s_via_f7prime(const Configuration& config) {
  return check_type_s_via_f7prime(SequenceTable(config));
}

Fraction f_degree(const Configuration& config, int orbit) {
  const auto& o = config.orbit(orbit);
  return Fraction(config.degree(o.front()), static_cast<std::int64_t>(o.size()));
}

ClassificationReport classify(const Configuration& c, F6Mode mode) {
  ClassificationReport r;
  r.axioms = validate(c, mode);
  r.is_fbc = r.axioms.ok();
  r.integral_f_degree = true;
  r.f_degree_trivial = true;
  for (int o = 0; o < c.orbit_count(); ++o) {
    Fraction f = f_degree(c, o);
    std::vector<Angle> members = c.orbit(o);
    r.f_degrees.push_back({members, f});
    r.integral_f_degree = r.integral_f_degree && f.is_integral();
    r.f_degree_trivial = r.f_degree_trivial && f == Fraction(1, 1);
  }
  if (!r.is_fbc) {
    r.type_s.holds = false;
    return r;
  }
  r.type_s = check_type_s(c);
  r.is_type_s = r.type_s.holds;
  r.is_type_ms = r.is_type_s && c.l_trivial();
  bool all_two = true;
  bool all_big = true;
  bool all_long = true;
  for (int p = 0; p < c.polygon_count(); ++p) {
    const auto& m = c.polygon_members(p);
    all_two = all_two && m.size() == 2;
    all_big = all_big && m.size() >= 2;
    all_long = all_long &&
               std::any_of(m.begin(), m.end(), [&](Angle a) { return c.degree(a) > 1; });
  }
  r.is_bc = c.l_trivial() && all_big && r.integral_f_degree && all_long;
  r.is_bg = all_two;
  r.is_fs_bg = all_two && r.is_type_s;
  r.is_fms_bg = all_two && r.is_type_ms;
  return r;
}

NakayamaMap nakayama_angle_map(const Configuration& c) {
  NakayamaMap m;
  m.polygon.assign(c.polygon_count(), -1);
  m.lblock.assign(c.lblock_count(), -1);
  for (Angle e = 0; e < c.size(); ++e) {
    const Angle s = c.nakayama(e);
    m.angle.push_back(s);
    int& p = m.polygon[c.polygon(e)];
    int& b = m.lblock[c.lblock(e)];
    if ((p != -1 && p != c.polygon(s)) || (b != -1 && b != c.lblock(s)))
      throw DomainError("sigma does not induce a map on blocks at '" + c.name(e) + "'");
    p = c.polygon(s);
    b = c.lblock(s);
  }
  return m;
}

}  // namespace fbc
