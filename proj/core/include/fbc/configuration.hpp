#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fbc/errors.hpp"

namespace fbc {

/// Index of an angle inside a Configuration. Angles are numbered in
/// lexicographic order of their names.
using Angle = int;

/// How the degree function was written in a document.
struct DegreeSpec {
  enum class Kind { per_angle, uniform, orbit_size };
  Kind kind = Kind::per_angle;
  int uniform = 1;
  std::map<std::string, int> values;
};

/// Name-level description of a configuration, as read from a document.
struct ConfigurationSpec {
  std::vector<std::string> angles;
  std::vector<std::vector<std::string>> cycles;
  std::vector<std::vector<std::string>> polygons;
  std::optional<std::vector<std::vector<std::string>>> lblocks;  // nullopt: trivial
  DegreeSpec degrees;
};

/// A finite configuration (E, P, L, d) with the action of the generator g.
///
/// Immutable. Construction checks only the structural requirements
/// (bijective action, genuine partitions, positive degrees); the axioms
/// are checked by validate().
class Configuration {
 public:
  /// Index-level constructor. Names may come in any order; angles, polygons
  /// and L-blocks are renumbered canonically. Block labels are arbitrary ints.
  Configuration(std::vector<std::string> names, const std::vector<Angle>& successor,
                const std::vector<int>& polygon_label, const std::vector<int>& lblock_label,
                const std::vector<int>& degree);

  static Configuration build(const ConfigurationSpec& spec);
  [[nodiscard]] ConfigurationSpec to_spec() const;

  [[nodiscard]] int size() const { return static_cast<int>(names_.size()); }
  [[nodiscard]] const std::string& name(Angle a) const { return names_[a]; }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  [[nodiscard]] std::optional<Angle> find(const std::string& name) const;
  [[nodiscard]] Angle at(const std::string& name) const;

  [[nodiscard]] Angle succ(Angle a) const { return succ_[a]; }
  [[nodiscard]] Angle pred(Angle a) const { return pred_[a]; }
  /// g^k applied to a, for any integer k.
  [[nodiscard]] Angle act(Angle a, long k) const;
  [[nodiscard]] int degree(Angle a) const { return degree_[a]; }
  /// sigma(a) = g^{d(a)} a.
  [[nodiscard]] Angle nakayama(Angle a) const { return act(a, degree_[a]); }

  [[nodiscard]] int orbit_count() const { return static_cast<int>(orbits_.size()); }
  [[nodiscard]] int orbit_of(Angle a) const { return orbit_of_[a]; }
  /// Orbit members in g-order starting from the least angle.
  [[nodiscard]] const std::vector<Angle>& orbit(int o) const { return orbits_[o]; }

  [[nodiscard]] int polygon_count() const { return static_cast<int>(polygons_.size()); }
  [[nodiscard]] int polygon(Angle a) const { return polygon_of_[a]; }
  [[nodiscard]] const std::vector<Angle>& polygon_members(int p) const { return polygons_[p]; }
  [[nodiscard]] const std::string& polygon_id(int p) const { return names_[polygons_[p].front()]; }

  [[nodiscard]] int lblock_count() const { return static_cast<int>(lblocks_.size()); }
  [[nodiscard]] int lblock(Angle a) const { return lblock_of_[a]; }
  [[nodiscard]] const std::vector<Angle>& lblock_members(int b) const { return lblocks_[b]; }
  [[nodiscard]] const std::string& lblock_id(int b) const { return names_[lblocks_[b].front()]; }
  [[nodiscard]] bool l_trivial() const { return lblocks_.size() == names_.size(); }

  [[nodiscard]] int max_degree() const;
  /// N = max d + 1; every path at least this long vanishes in the algebra.
  [[nodiscard]] int length_bound() const { return max_degree() + 1; }

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.names_ == b.names_ && a.succ_ == b.succ_ && a.polygon_of_ == b.polygon_of_ &&
           a.lblock_of_ == b.lblock_of_ && a.degree_ == b.degree_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Angle> succ_, pred_;
  std::vector<int> degree_;
  std::vector<int> orbit_of_, orbit_pos_;
  std::vector<std::vector<Angle>> orbits_;
  std::vector<int> polygon_of_, lblock_of_;
  std::vector<std::vector<Angle>> polygons_, lblocks_;
};

/// Same angles, P and d; g replaced by its inverse and L transported along g
/// (the new block of e is g applied to the old block of g^{-1} e).
Configuration reverse_orientation(const Configuration& config);

}  // namespace fbc
