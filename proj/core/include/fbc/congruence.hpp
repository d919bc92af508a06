#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "fbc/quiver.hpp"

namespace fbc {

/// What happens to a product that would exceed the length bound.
enum class OverflowPolicy {
  zero,    ///< the product vanishes (every long path lies in the ideal)
  ignore,  ///< the product is unknown; no consequence is drawn from it
};

/// Congruence on the paths of a quiver generated by monomials and binomials,
/// truncated at a length bound, with an absorbing ZERO class.
///
/// The universe is the set of paths of length <= bound that avoid the
/// monomials passed to the constructor; such paths are factor closed, so
/// extensions are tabulated once. With OverflowPolicy::ignore the computed
/// congruence is contained in the true one, which makes membership answers
/// sound but possibly incomplete.
class PathCongruence {
 public:
  PathCongruence(const Quiver& quiver, const std::vector<Path>& monomials, int length_bound,
                 OverflowPolicy policy, std::size_t max_universe = 4'000'000);

  void add_monomial(const Path& m);
  void add_binomial(const Path& u, const Path& v);

  [[nodiscard]] bool is_zero(const Path& p);
  [[nodiscard]] bool equivalent(const Path& u, const Path& v);

  /// Non-zero classes, each sorted shortlex, ordered by their least member.
  [[nodiscard]] std::vector<std::vector<Path>> classes();
  [[nodiscard]] const std::vector<Path>& universe() const { return paths_; }
  [[nodiscard]] int length_bound() const { return bound_; }

 private:
  static constexpr int kNone = -1;      // not composable
  static constexpr int kZero = -2;      // contains a monomial or, under `zero`, overflows
  static constexpr int kOverflow = -3;  // too long under `ignore`

  [[nodiscard]] int code_of(const Path& p) const;
  [[nodiscard]] int node(int code) const { return code == kZero ? zero_node_ : code; }
  int find(int x);
  void push(int a, int b);
  void drain();

  const Quiver* quiver_;
  int bound_;
  OverflowPolicy policy_;
  std::vector<Path> paths_;
  std::map<Path, int> index_;
  std::vector<int> right_, left_;  // [id * arrows + a]
  int zero_node_ = 0;
  std::vector<int> parent_;
  std::vector<std::pair<int, int>> work_;
  std::set<std::pair<int, int>> seen_;
};

}  // namespace fbc
