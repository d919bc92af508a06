#include "fbc/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "json.hpp"

namespace fbc {
namespace {

using nlohmann::ordered_json;

ordered_json parse_json(std::string_view text) {
  try {
    return ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

const ordered_json& member(const ordered_json& j, const char* key) {
  if (!j.is_object()) throw StructuralError("document is not a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw StructuralError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::string string_of(const ordered_json& j, const char* what) {
  if (!j.is_string()) throw StructuralError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

int int_of(const ordered_json& j, const char* what) {
  if (!j.is_number_integer()) throw StructuralError(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<std::string> strings(const ordered_json& j, const char* what) {
  if (!j.is_array()) throw StructuralError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(string_of(e, what));
  return out;
}

std::vector<std::vector<std::string>> blocks(const ordered_json& j, const char* what) {
  if (!j.is_array()) throw StructuralError(std::string(what) + " must be an array of arrays");
  std::vector<std::vector<std::string>> out;
  for (const auto& b : j) out.push_back(strings(b, what));
  return out;
}

std::string line(const char* key, const ordered_json& value, bool last = false) {
  return std::string("  \"") + key + "\": " + value.dump() + (last ? "\n" : ",\n");
}

}  // namespace

DocumentKind detect_document_kind(std::string_view text) {
  ordered_json j = parse_json(text);
  if (!j.is_object()) throw StructuralError("document is not a JSON object");
  return j.contains("zeta") ? DocumentKind::brauer : DocumentKind::configuration;
}

ConfigurationSpec parse_configuration_spec(std::string_view text) {
  ordered_json j = parse_json(text);
  ConfigurationSpec spec;
  spec.angles = strings(member(j, "angles"), "\"angles\"");
  spec.cycles = j.contains("g") ? blocks(j["g"], "\"g\"") : std::vector<std::vector<std::string>>{};
  spec.polygons = blocks(member(j, "P"), "\"P\"");
  if (j.contains("L")) {
    const auto& l = j["L"];
    if (l.is_string()) {
      if (l.get<std::string>() != "trivial") throw StructuralError("\"L\" must be \"trivial\" or blocks");
    } else {
      spec.lblocks = blocks(l, "\"L\"");
    }
  }
  const auto& d = member(j, "d");
  if (d.is_number_integer()) {
    spec.degrees.kind = DegreeSpec::Kind::uniform;
    spec.degrees.uniform = int_of(d, "\"d\"");
  } else if (d.is_string()) {
    if (d.get<std::string>() != "trivial") throw StructuralError("\"d\" must be \"trivial\", an integer or an object");
    spec.degrees.kind = DegreeSpec::Kind::orbit_size;
  } else if (d.is_object()) {
    spec.degrees.kind = DegreeSpec::Kind::per_angle;
    for (const auto& [k, v] : d.items()) spec.degrees.values[k] = int_of(v, "degree");
  } else {
    throw StructuralError("\"d\" must be \"trivial\", an integer or an object");
  }
  return spec;
}

Configuration parse_configuration(std::string_view text) {
  return Configuration::build(parse_configuration_spec(text));
}

BrauerPresentation parse_brauer(std::string_view text) {
  ordered_json j = parse_json(text);
  BrauerPresentation bc;
  bc.vertices = strings(member(j, "vertices"), "\"vertices\"");
  const auto& z = member(j, "zeta");
  if (!z.is_object()) throw StructuralError("\"zeta\" must be an object");
  for (const auto& [k, v] : z.items()) bc.zeta[k] = string_of(v, "zeta value");
  bc.polygons = blocks(member(j, "polygons"), "\"polygons\"");
  if (j.contains("orientation")) bc.orientation = blocks(j["orientation"], "\"orientation\"");
  if (j.contains("multiplicity")) {
    const auto& m = j["multiplicity"];
    if (!m.is_object()) throw StructuralError("\"multiplicity\" must be an object");
    for (const auto& [k, v] : m.items()) bc.multiplicity[k] = int_of(v, "multiplicity");
  }
  return bc;
}

std::string to_json(const Configuration& c) {
  const ConfigurationSpec s = c.to_spec();
  ordered_json d = ordered_json::object();
  for (const auto& a : s.angles) d[a] = s.degrees.values.at(a);
  std::string out = "{\n";
  out += line("angles", s.angles);
  out += line("g", s.cycles.empty() ? ordered_json::array() : ordered_json(s.cycles));
  out += line("P", s.polygons);
  out += line("L", s.lblocks ? ordered_json(*s.lblocks) : ordered_json("trivial"));
  out += line("d", d, true);
  return out + "}\n";
}

std::string to_json(const BrauerPresentation& bc) {
  ordered_json z = ordered_json::object();
  for (const auto& [k, v] : bc.zeta) z[k] = v;
  ordered_json m = ordered_json::object();
  for (const auto& [k, v] : bc.multiplicity) m[k] = v;
  std::string out = "{\n";
  out += line("vertices", bc.vertices);
  out += line("zeta", z);
  out += line("polygons", bc.polygons);
  out += line("orientation", bc.orientation.empty() ? ordered_json::array() : ordered_json(bc.orientation));
  out += line("multiplicity", m, true);
  return out + "}\n";
}

std::string read_document(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace fbc
