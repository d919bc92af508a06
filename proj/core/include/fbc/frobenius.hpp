#pragma once

#include <string>
#include <vector>

#include "fbc/algebra.hpp"
#include "fbc/configuration.hpp"

namespace fbc {

/// <v, u> = eps(u then v) for u in basis(x, y) and v in basis(y, sigma x).
struct PairingBlock {
  int x = 0;
  int y = 0;
  std::vector<int> rows;  // basis(y, sigma x)
  std::vector<int> cols;  // basis(x, y)
  std::vector<std::vector<int>> matrix;
  bool permutation = false;
};

struct FrobeniusData {
  bool from_configuration = false;     // eps read off full sequences (type S)
  std::vector<int> nakayama_vertex;    // sigma on vertices, -1 where undetermined
  std::vector<int> epsilon_support;    // per x: the class of basis(x, sigma x) with eps = 1
  std::vector<PairingBlock> pairings;
  bool frobenius = false;
  bool symmetric = false;
  bool self_injective = false;
  std::string witness;  // reason for the first negative verdict
};

/// Requires a table whose quiver is Q_E of `config`.
FrobeniusData frobenius_check(const AlgebraTable& table, const Configuration& config);

/// "(1 3 2)" style, fixed points omitted; "()" for the identity.
std::string cycle_notation(const std::vector<int>& perm, const std::vector<std::string>& names);

struct NakayamaConsistency {
  bool pass = true;
  long checks = 0;
  std::string witness;
};

/// eps(u then v) = eps(v then sigma u) on basis pairs, and
/// sigma(word p) lies in the class of word(^^p).
NakayamaConsistency nakayama_consistency(const AlgebraTable& table, const Configuration& config);

/// sigma applied arrow by arrow to a path of Q_E.
Path apply_nakayama(const Configuration& config, const Path& p);

}  // namespace fbc
