#pragma once

#include <map>
#include <string>
#include <vector>

#include "fbc/configuration.hpp"
#include "fbc/errors.hpp"

namespace fbc {

/// A violated Brauer configuration condition (domain failure).
class BcInvariantError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Brauer configuration in angle form: vertices, the connection map zeta,
/// polygons, a cyclic orientation of every fibre of zeta, and multiplicities.
struct BrauerPresentation {
  std::vector<std::string> vertices;
  std::map<std::string, std::string> zeta;            // angle -> vertex
  std::vector<std::vector<std::string>> polygons;
  std::vector<std::vector<std::string>> orientation;  // singleton fibres may be omitted
  std::map<std::string, int> multiplicity;            // missing vertices count as 1
};

/// g acts by the orientation, L is trivial and d(e) = nu(zeta e) * |zeta^{-1}(zeta e)|.
/// Unknown names raise StructuralError; violated conditions raise BcInvariantError.
Configuration convert_bc(const BrauerPresentation& bc);

}  // namespace fbc
