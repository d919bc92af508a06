#pragma once

#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include "support.hpp"

namespace fbc::test {

/// A failure message, or nullopt when the property holds.
using Property = std::function<std::optional<std::string>(const Configuration&)>;

namespace detail {

inline std::optional<Configuration> rebuild(ConfigurationSpec s) {
  try {
    Configuration c = Configuration::build(s);
    if (!validate(c).ok()) return std::nullopt;
    return c;
  } catch (const InputError&) {
    return std::nullopt;
  }
}

inline std::vector<std::vector<std::string>> without(const std::vector<std::vector<std::string>>& blocks,
                                                     const std::set<std::string>& gone) {
  std::vector<std::vector<std::string>> out;
  for (const auto& b : blocks) {
    std::vector<std::string> kept;
    for (const auto& x : b)
      if (!gone.count(x)) kept.push_back(x);
    if (!kept.empty()) out.push_back(kept);
  }
  return out;
}

/// Smaller neighbours: one orbit with a lower degree, or one orbit removed.
inline std::vector<Configuration> shrink_once(const Configuration& c) {
  std::vector<Configuration> out;
  ConfigurationSpec base = c.to_spec();
  for (int o = 0; o < c.orbit_count(); ++o) {
    const auto& orbit = c.orbit(o);
    for (int d = 1; d < c.degree(orbit.front()); ++d) {
      ConfigurationSpec s = base;
      s.degrees.kind = DegreeSpec::Kind::per_angle;
      s.degrees.values.clear();
      for (Angle a = 0; a < c.size(); ++a) s.degrees.values[c.name(a)] = c.orbit_of(a) == o ? d : c.degree(a);
      if (auto r = rebuild(s)) out.push_back(*r);
    }
    if (c.orbit_count() > 1) {
      std::set<std::string> gone;
      for (Angle a : orbit) gone.insert(c.name(a));
      ConfigurationSpec s = base;
      s.angles.clear();
      for (Angle a = 0; a < c.size(); ++a)
        if (!gone.count(c.name(a))) s.angles.push_back(c.name(a));
      s.cycles = without(s.cycles, gone);
      s.polygons = without(s.polygons, gone);
      if (s.lblocks) s.lblocks = without(*s.lblocks, gone);
      s.degrees.kind = DegreeSpec::Kind::per_angle;
      s.degrees.values.clear();
      for (Angle a = 0; a < c.size(); ++a)
        if (!gone.count(c.name(a))) s.degrees.values[c.name(a)] = c.degree(a);
      if (auto r = rebuild(s)) out.push_back(*r);
    }
  }
  return out;
}

}  // namespace detail

/// Greedy shrinking: follow any smaller neighbour that still satisfies the
/// precondition and still fails.
inline Configuration shrink(Configuration c, const Property& prop,
                            const std::function<bool(const Configuration&)>& pre) {
  for (bool progress = true; progress;) {
    progress = false;
    for (const auto& n : detail::shrink_once(c)) {
      if (pre && !pre(n)) continue;
      if (prop(n)) {
        c = n;
        progress = true;
        break;
      }
    }
  }
  return c;
}

/// Runs `prop` on `count` random valid configurations (type S only when
/// `type_s` is set) and reports the first failure after shrinking.
inline void check_property(const std::string& name, std::uint64_t seed, int count, bool type_s,
                           const Property& prop, RandomParams params = {}) {
  std::function<bool(const Configuration&)> pre;
  if (type_s) pre = [](const Configuration& c) { return classify(c).is_type_s; };
  std::mt19937_64 rng(seed);
  int ran = 0;
  while (ran < count) {
    auto c = random_configuration(rng, params, pre);
    REQUIRE(c.has_value());
    ++ran;
    if (auto failure = prop(*c)) {
      Configuration small = shrink(*c, prop, pre);
      std::ostringstream msg;
      msg << name << " fails (seed " << seed << ", case " << ran << "): " << *prop(small) << "\nshrunk input:\n"
          << to_json(small);
      FAIL(msg.str());
    }
  }
  CHECK(ran == count);
}

}  // namespace fbc::test
