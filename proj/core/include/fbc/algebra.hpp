#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fbc/configuration.hpp"
#include "fbc/generators.hpp"
#include "fbc/quiver.hpp"

namespace fbc {

inline constexpr int kZeroClass = -1;

/// A non-zero basis class of paths.
struct PathClass {
  Path representative;        // shortlex least member
  std::vector<Path> members;  // shortlex order
  int radical_degree = 0;     // longest member

  [[nodiscard]] int source() const { return representative.source; }
  [[nodiscard]] int target() const { return representative.target; }
};

/// Path-class basis of a bounded path-algebra quotient. Every path that is
/// not a member of some class is zero.
class AlgebraTable {
 public:
  AlgebraTable(Quiver quiver, std::vector<std::vector<Path>> classes);

  [[nodiscard]] const Quiver& quiver() const { return quiver_; }
  [[nodiscard]] int size() const { return static_cast<int>(classes_.size()); }
  [[nodiscard]] const std::vector<PathClass>& classes() const { return classes_; }
  [[nodiscard]] const PathClass& at(int c) const { return classes_[c]; }

  /// Class index of a path, or kZeroClass.
  [[nodiscard]] int class_of(const Path& p) const;
  /// First class followed by second; kZeroClass when the product vanishes
  /// or the classes do not compose.
  [[nodiscard]] int multiply(int first, int second) const;
  /// Basis of paths from x to y, ordered by (length, word).
  [[nodiscard]] const std::vector<int>& basis(int x, int y) const { return basis_[x][y]; }
  [[nodiscard]] int dim(int x, int y) const { return static_cast<int>(basis_[x][y].size()); }
  [[nodiscard]] int total_dim() const { return size(); }
  [[nodiscard]] int identity(int x) const { return identity_[x]; }
  [[nodiscard]] int loewy_length() const;

 private:
  Quiver quiver_;
  std::vector<PathClass> classes_;
  std::map<Path, int> class_of_;
  std::vector<std::vector<std::vector<int>>> basis_;
  std::vector<int> identity_;
};

/// Quotient of the path category of `quiver` by the ideal generated by the
/// monomials and binomials; every path of length > bound is treated as zero.
AlgebraTable quotient(const Quiver& quiver, const std::vector<Path>& monomials,
                      const std::vector<Binomial>& binomials, int bound);

/// General engine: congruence closure of the ideal I_E.
AlgebraTable congruence_closure(const Configuration& config);
/// Type S engine: R-classes of 𝓔 as basis. Throws NotTypeSError.
AlgebraTable type_s_basis(const Configuration& config);

/// First difference between two tables (classes, dims, products), if any.
std::optional<std::string> compare_tables(const AlgebraTable& a, const AlgebraTable& b);

/// Entry (x, y) = dim of paths from x to y.
std::vector<std::vector<int>> cartan_matrix(const AlgebraTable& table);

struct LoewyDiagram {
  int vertex = 0;
  std::vector<std::vector<int>> layers;  // composition factors per radical layer
  std::vector<int> socle;
  std::vector<int> socle_classes;
  int loewy_length = 0;
  int dimension = 0;
};

/// P_x = classes with target x, layered by radical degree.
std::vector<LoewyDiagram> loewy_diagrams(const AlgebraTable& table);
/// Classes with source x killed by every arrow after their target.
std::vector<int> right_socle_classes(const AlgebraTable& table, int x);

}  // namespace fbc
