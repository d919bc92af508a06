#pragma once

#include <string>
#include <string_view>

#include "fbc/brauer.hpp"
#include "fbc/configuration.hpp"

namespace fbc {

enum class DocumentKind { configuration, brauer };

/// Decides by keys: "zeta" marks a BC presentation.
DocumentKind detect_document_kind(std::string_view text);

/// Throws ParseError (with byte position) or StructuralError.
ConfigurationSpec parse_configuration_spec(std::string_view text);
Configuration parse_configuration(std::string_view text);
BrauerPresentation parse_brauer(std::string_view text);

/// Canonical document: sorted angles, cycles from their least angle,
/// sorted blocks, "L": "trivial" when L is trivial, per-angle degrees.
std::string to_json(const Configuration& config);
std::string to_json(const BrauerPresentation& bc);

/// Reads a file, or standard input for "-". Throws InputError.
std::string read_document(const std::string& path);

}  // namespace fbc
