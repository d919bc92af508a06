#pragma once

#include <vector>

#include "fbc/configuration.hpp"
#include "fbc/quiver.hpp"
#include "fbc/sequences.hpp"

namespace fbc {

/// A binomial u - v; stored with first < second.
struct Binomial {
  Path first;
  Path second;
  friend auto operator<=>(const Binomial&, const Binomial&) = default;
};

struct IdealGenerators {
  std::vector<Binomial> fr1;
  std::vector<Path> fr2;  // not realizable
  std::vector<Path> fr3;  // realizable but longer than the degree
  int length_bound = 0;
};

enum class GeneratorListing {
  irredundant,     ///< no generator lies in the ideal of those before it
  factor_minimal,  ///< every fr1 pair; monomials without a proper monomial factor
  exhaustive,      ///< every fr1 pair and every B1/B2 path up to the length bound
};

IdealGenerators ideal_generators(const Configuration& config,
                                 GeneratorListing listing = GeneratorListing::irredundant);
IdealGenerators ideal_generators(const SequenceTable& table,
                                 GeneratorListing listing = GeneratorListing::irredundant);

/// fr1 pairs from the k-template on pairs of angles in one polygon.
std::vector<Binomial> fr1_by_template(const Configuration& config);

/// Generators in canonical order: binomials by (longer term, first, second),
/// monomials shortlex.
void canonical_order(IdealGenerators& gens);

}  // namespace fbc
