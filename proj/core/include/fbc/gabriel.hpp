#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fbc/algebra.hpp"
#include "fbc/configuration.hpp"
#include "fbc/generators.hpp"
#include "fbc/quiver.hpp"

namespace fbc {

struct ReducedArrows {
  std::vector<int> reduced;         // arrows whose class contains a longer path
  std::vector<int> kept;            // least arrow of each class of non-reduced arrows
  std::vector<int> representative;  // per arrow: its kept representative, -1 if reduced
};

/// Needs the basis table of a type S configuration (either engine).
ReducedArrows reduced_arrows(const Configuration& config, const AlgebraTable& closure);

struct GabrielPresentation {
  Quiver quiver;                      // Q'_E; vertices as in Q_E
  std::vector<int> original_arrow;    // arrow of Q'_E -> arrow of Q_E
  std::vector<Path> monomials;        // minimal paths of Q'_E outside 𝓔
  std::vector<Binomial> binomials;    // representative - member within each class
  std::vector<std::vector<Path>> classes;  // R-classes restricted to Q'_E
  int length_bound = 0;
  std::vector<int> vertex_bound;      // N_x
  bool admissible = false;
  std::string admissibility_witness;
};

/// Throws NotTypeSError.
GabrielPresentation gabriel_presentation(const Configuration& config, const AlgebraTable& closure);
/// Closure of the presentation (Q'_E, I'_E).
AlgebraTable presentation_algebra(const GabrielPresentation& presentation);
/// Q'_E path as a path of Q_E.
Path to_original(const GabrielPresentation& presentation, const Path& p);

struct MultiserialVerdict {
  bool special_multiserial = true;
  std::vector<std::vector<std::string>> witnesses;  // {arrow, side, arrow, arrow}
};

/// `closure` is the algebra of the presentation.
MultiserialVerdict special_multiserial_check(const GabrielPresentation& presentation,
                                             const AlgebraTable& closure);

struct ConditionsDC {
  bool D = true;
  bool C = true;
  std::string witness;
  long checks = 0;
};

ConditionsDC check_conditions_DC(const GabrielPresentation& presentation, const AlgebraTable& closure);

struct ReconstructedConfiguration {
  Configuration config;
  std::vector<Path> angle_paths;          // per angle of config: its socle path in Q'_E
  std::vector<std::string> polygon_vertex;  // per polygon: the vertex s(v)
  std::vector<std::string> lblock_arrow;    // per L-block: the initial arrow
  bool cyclic_case = false;
};

/// Socle-path construction; throws DomainError when it does not apply.
/// `closure` is the algebra of the presentation.
ReconstructedConfiguration reconstruct_configuration(const AlgebraTable& closure,
                                                     const GabrielPresentation& presentation);

struct IsomorphismCheck {
  bool isomorphic = false;
  std::string failure;
};

IsomorphismCheck verify_isomorphism(const GabrielPresentation& original,
                                    const ReconstructedConfiguration& reconstructed);

}  // namespace fbc
