#pragma once

#include <string>
#include <vector>

#include "fbc/algebra.hpp"
#include "fbc/classify.hpp"
#include "fbc/configuration.hpp"
#include "fbc/frobenius.hpp"
#include "fbc/gabriel.hpp"
#include "fbc/generators.hpp"
#include "fbc/quiver.hpp"

namespace fbc {

std::string render_classification(const Configuration& config, const ClassificationReport& report);
std::string classification_json(const Configuration& config, const ClassificationReport& report);

std::string render_quiver(const Quiver& quiver);
std::string render_generators(const Quiver& quiver, const IdealGenerators& gens);
std::string generators_json(const Quiver& quiver, const IdealGenerators& gens);

/// One block per vertex; one indented line per radical layer.
std::string render_loewy(const AlgebraTable& table, const std::vector<LoewyDiagram>& diagrams);
std::string render_matrix(const std::vector<std::vector<int>>& m, const std::vector<std::string>& labels);
std::string render_frobenius(const AlgebraTable& table, const FrobeniusData& data);
std::string render_presentation(const GabrielPresentation& presentation);

struct AlgebraReport {
  const AlgebraTable* table = nullptr;
  bool with_loewy = true;
  bool with_cartan = true;
  const FrobeniusData* frobenius = nullptr;  // optional
};

std::string algebra_report_json(const AlgebraReport& report);

}  // namespace fbc
