#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fbc/configuration.hpp"
#include "fbc/fraction.hpp"
#include "fbc/sequences.hpp"

namespace fbc {

enum class F6Mode {
  end_aligned,  ///< reject a full word that is a proper prefix or suffix of another
  strict,       ///< additionally reject interior contiguous factors
};

struct AxiomResult {
  std::string axiom;                 // "f1" ... "f6"
  bool pass = true;
  std::vector<std::string> witness;  // angle names
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  [[nodiscard]] bool ok() const;
  [[nodiscard]] std::vector<std::string> violated() const;
};

/// Checks (f1)-(f6).
AxiomReport validate(const Configuration& config, F6Mode mode = F6Mode::end_aligned);

struct TypeSWitness {
  StandardSequence p, q;  // p and q have the same word
  std::vector<StandardSequence> p_side, q_side;  // [[^p]^] and [[^q]^]
};

struct TypeSResult {
  bool holds = true;
  std::optional<TypeSWitness> witness;
};

/// (f7): for identical p and q, [[^p]^] and [[^q]^] have the same words.
TypeSResult check_type_s(const SequenceTable& table);
TypeSResult check_type_s(const Configuration& config);
/// Equivalent formulation through sets of left-complement words.
bool check_type_s_via_f7prime(const SequenceTable& table);
bool check_type_s_via_f7prime(const Configuration& config);

/// d(v)/|v| for orbit index o.
Fraction f_degree(const Configuration& config, int orbit);

struct OrbitDegree {
  std::vector<Angle> orbit;
  Fraction value;
};

struct ClassificationReport {
  AxiomReport axioms;
  bool is_fbc = false;
  TypeSResult type_s;
  bool is_type_s = false;
  bool is_type_ms = false;
  bool is_bc = false;
  bool is_bg = false;
  bool is_fs_bg = false;
  bool is_fms_bg = false;
  std::vector<OrbitDegree> f_degrees;
  bool integral_f_degree = false;
  bool f_degree_trivial = false;
};

ClassificationReport classify(const Configuration& config, F6Mode mode = F6Mode::end_aligned);

/// sigma on angles with the induced maps on polygons and L-blocks.
struct NakayamaMap {
  std::vector<Angle> angle;
  std::vector<int> polygon;
  std::vector<int> lblock;
};

/// Requires (f4) and (f5); throws DomainError otherwise.
NakayamaMap nakayama_angle_map(const Configuration& config);

}  // namespace fbc
