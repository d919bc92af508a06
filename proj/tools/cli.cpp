#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "fbc/fbc.hpp"
#include "json.hpp"

namespace fbc::cli {
namespace {

using nlohmann::ordered_json;

struct Options {
  std::string path;
  bool strict_f6 = false;
  bool json = false;
  bool dot = false;
  bool gabriel = false;
  bool cartan = false;
  bool loewy = false;
  bool frobenius = false;
  std::string engine = "closure";
  std::string listing = "irredundant";
};

F6Mode mode(const Options& o) { return o.strict_f6 ? F6Mode::strict : F6Mode::end_aligned; }

Configuration load(const std::string& path) {
  std::string text = read_document(path);
  if (detect_document_kind(text) == DocumentKind::brauer) return convert_bc(parse_brauer(text));
  return parse_configuration(text);
}

void require_valid(const Configuration& config, F6Mode m) {
  auto report = validate(config, m);
  if (report.ok()) return;
  for (const auto& a : report.results)
    if (!a.pass) {
      std::string w;
      for (const auto& s : a.witness) w += " " + s;
      throw DomainError("axiom " + a.axiom + " fails:" + w + " (" + a.detail + ")");
    }
}

void require_type_s(const Configuration& config) {
  if (!classify(config).is_type_s) throw NotTypeSError("not type S");
}

const char* yes(bool b) { return b ? "yes" : "no"; }

bool special_biserial(const GabrielPresentation& g, const MultiserialVerdict& m) {
  if (!m.special_multiserial) return false;
  for (int v = 0; v < g.quiver.vertex_count(); ++v)
    if (g.quiver.out_arrows(v).size() > 2 || g.quiver.in_arrows(v).size() > 2) return false;
  return true;
}

AlgebraTable run_engine(const Configuration& config, const std::string& engine, std::ostream& out) {
  if (engine == "type-s") return type_s_basis(config);
  AlgebraTable closure = congruence_closure(config);
  if (engine == "both") {
    AlgebraTable typed = type_s_basis(config);
    if (auto diff = compare_tables(closure, typed)) throw DomainError("engines disagree: " + *diff);
    out << "engines agree\n";
  }
  return closure;
}

int cmd_validate(const Options& o, std::ostream& out, bool gate) {
  Configuration config = load(o.path);
  ClassificationReport report = classify(config, mode(o));
  out << (o.json ? classification_json(config, report) : render_classification(config, report));
  return gate && !report.axioms.ok() ? 1 : 0;
}

int cmd_quiver(const Options& o, std::ostream& out) {
  Configuration config = load(o.path);
  require_valid(config, mode(o));
  Quiver q = build_quiver(config);
  std::string name = "Q";
  if (o.gabriel) {
    require_type_s(config);
    q = gabriel_presentation(config, congruence_closure(config)).quiver;
    name = "Q_prime";
  }
  out << (o.dot ? to_dot(q, name) : render_quiver(q));
  return 0;
}

int cmd_relations(const Options& o, std::ostream& out) {
  Configuration config = load(o.path);
  require_valid(config, mode(o));
  GeneratorListing listing = o.listing == "exhaustive"       ? GeneratorListing::exhaustive
                             : o.listing == "factor-minimal" ? GeneratorListing::factor_minimal
                                                             : GeneratorListing::irredundant;
  Quiver q = build_quiver(config);
  IdealGenerators gens = ideal_generators(config, listing);
  out << (o.json ? generators_json(q, gens) : render_generators(q, gens));
  return 0;
}

int cmd_algebra(const Options& o, std::ostream& out) {
  Configuration config = load(o.path);
  require_valid(config, mode(o));
  std::ostringstream notes;
  AlgebraTable table = run_engine(config, o.engine, notes);
  bool all = !o.cartan && !o.loewy && !o.frobenius;
  std::optional<FrobeniusData> frob;
  if (all || o.frobenius) frob = frobenius_check(table, config);
  if (o.json) {
    AlgebraReport r{&table, all || o.loewy, all || o.cartan, frob ? &*frob : nullptr};
    out << algebra_report_json(r);
    return 0;
  }
  const Quiver& q = table.quiver();
  out << "engine: " << o.engine << "\n" << notes.str();
  out << "total_dim " << table.total_dim() << "\n";
  auto cartan = cartan_matrix(table);
  out << "dims:";
  for (int y = 0; y < q.vertex_count(); ++y) {
    int s = 0;
    for (int x = 0; x < q.vertex_count(); ++x) s += cartan[x][y];
    out << " P_" << q.vertex(y) << "=" << s;
  }
  out << "\n";
  if (all || o.cartan) out << "cartan (row = source, column = target):\n" << render_matrix(cartan, q.vertices());
  if (all || o.loewy) out << "loewy:\n" << render_loewy(table, loewy_diagrams(table));
  if (frob) out << render_frobenius(table, *frob);
  return 0;
}

int cmd_gabriel(const Options& o, std::ostream& out) {
  Configuration config = load(o.path);
  require_valid(config, mode(o));
  require_type_s(config);
  GabrielPresentation g = gabriel_presentation(config, congruence_closure(config));
  if (o.dot) {
    out << to_dot(g.quiver, "Q_prime");
    return 0;
  }
  AlgebraTable algebra = presentation_algebra(g);
  MultiserialVerdict m = special_multiserial_check(g, algebra);
  ConditionsDC dc = check_conditions_DC(g, algebra);
  out << render_presentation(g);
  out << "special multiserial: " << yes(m.special_multiserial) << "\n";
  for (const auto& w : m.witnesses) {
    out << "  witness:";
    for (const auto& s : w) out << " " << s;
    out << "\n";
  }
  out << "special biserial: " << yes(special_biserial(g, m)) << "\n";
  out << "condition (D): " << yes(dc.D) << ", condition (C): " << yes(dc.C) << " (" << dc.checks << " checks)\n";
  if (!dc.witness.empty()) out << "  witness: " << dc.witness << "\n";
  return 0;
}

int cmd_frobenius(const Options& o, std::ostream& out) {
  Configuration config = load(o.path);
  require_valid(config, mode(o));
  AlgebraTable table = congruence_closure(config);
  FrobeniusData f = frobenius_check(table, config);
  out << render_frobenius(table, f);
  if (classify(config).is_type_s) {
    NakayamaConsistency n = nakayama_consistency(table, config);
    out << "nakayama consistency: " << (n.pass ? "pass" : "FAIL") << " (" << n.checks << " checks)\n";
    if (!n.pass) out << "  witness: " << n.witness << "\n";
    return n.pass ? 0 : 1;
  }
  return 0;
}

int cmd_convert_bc(const Options& o, std::ostream& out) {
  std::string text = read_document(o.path);
  if (detect_document_kind(text) != DocumentKind::brauer)
    throw StructuralError("expected a BC presentation (no \"zeta\" key)");
  out << to_json(convert_bc(parse_brauer(text)));
  return 0;
}

int cmd_reverse(const Options& o, std::ostream& out) {
  Configuration config = load(o.path);
  require_valid(config, mode(o));
  out << to_json(reverse_orientation(config));
  return 0;
}

int cmd_roundtrip(const Options& o, std::ostream& out) {
  Configuration config = load(o.path);
  require_valid(config, mode(o));
  require_type_s(config);
  GabrielPresentation g = gabriel_presentation(config, congruence_closure(config));
  AlgebraTable algebra = presentation_algebra(g);
  ReconstructedConfiguration rec = reconstruct_configuration(algebra, g);
  IsomorphismCheck iso = verify_isomorphism(g, rec);
  const Configuration& r = rec.config;
  out << "reconstructed: " << r.size() << " angles, " << r.polygon_count() << " polygons, "
      << r.lblock_count() << " L-blocks" << (rec.cyclic_case ? " (cyclic case)" : "") << "\n";
  out << "degrees:";
  for (Angle a = 0; a < r.size(); ++a) out << " " << r.name(a) << "=" << r.degree(a);
  out << "\n" << to_json(r);
  out << "isomorphic: " << yes(iso.isomorphic) << "\n";
  if (!iso.isomorphic) out << "  failure: " << iso.failure << "\n";
  return iso.isomorphic ? 0 : 1;
}

std::vector<std::vector<std::string>> sorted_layers(const Quiver& q, const LoewyDiagram& d) {
  std::vector<std::vector<std::string>> out;
  for (const auto& layer : d.layers) {
    std::vector<std::string> names;
    for (int v : layer) names.push_back(q.vertex(v));
    std::sort(names.begin(), names.end());
    out.push_back(names);
  }
  return out;
}

ordered_json corpus_json(const Configuration& config) {
  ordered_json j;
  ClassificationReport c = classify(config);
  j["angles"] = config.size();
  j["degrees"] = [&] {
    std::vector<int> d;
    for (Angle a = 0; a < config.size(); ++a) d.push_back(config.degree(a));
    return d;
  }();
  for (auto [k, v] : {std::pair{"is_fbc", c.is_fbc}, {"is_type_s", c.is_type_s}, {"is_type_ms", c.is_type_ms},
                      {"is_bc", c.is_bc}, {"is_bg", c.is_bg}, {"is_fs_bg", c.is_fs_bg},
                      {"is_fms_bg", c.is_fms_bg}, {"integral_f_degree", c.integral_f_degree},
                      {"f_degree_trivial", c.f_degree_trivial}})
    j[k] = v;
  std::vector<std::string> fd;
  for (const auto& o : c.f_degrees) fd.push_back(o.value.to_string());
  std::sort(fd.begin(), fd.end());
  fd.erase(std::unique(fd.begin(), fd.end()), fd.end());
  j["f_degrees"] = fd;
  if (!c.is_fbc) return j;

  Quiver q = build_quiver(config);
  j["vertices"] = q.vertex_count();
  j["arrows"] = q.arrow_count();
  IdealGenerators gens = ideal_generators(config);
  j["generators"] = gens.fr1.size() + gens.fr2.size() + gens.fr3.size();
  AlgebraTable table = congruence_closure(config);
  j["total_dim"] = table.total_dim();
  auto cartan = cartan_matrix(table);
  ordered_json dims = ordered_json::object();
  for (int y = 0; y < q.vertex_count(); ++y) {
    int s = 0;
    for (int x = 0; x < q.vertex_count(); ++x) s += cartan[x][y];
    dims[q.vertex(y)] = s;
  }
  j["projective_dims"] = dims;
  j["cartan"] = cartan;
  ordered_json loewy = ordered_json::object();
  for (const auto& d : loewy_diagrams(table)) loewy[q.vertex(d.vertex)] = sorted_layers(q, d);
  j["loewy"] = loewy;
  FrobeniusData f = frobenius_check(table, config);
  j["frobenius"] = f.frobenius;
  j["self_injective"] = f.self_injective;
  j["symmetric"] = f.symmetric;
  if (f.self_injective) j["nakayama"] = cycle_notation(f.nakayama_vertex, q.vertices());
  if (!c.is_type_s) return j;

  GabrielPresentation g = gabriel_presentation(config, table);
  AlgebraTable algebra = presentation_algebra(g);
  j["gabriel_arrows"] = g.quiver.arrow_count();
  j["gabriel_total_dim"] = algebra.total_dim();
  j["admissible"] = g.admissible;
  MultiserialVerdict m = special_multiserial_check(g, algebra);
  j["special_multiserial"] = m.special_multiserial;
  j["special_biserial"] = special_biserial(g, m);
  ConditionsDC dc = check_conditions_DC(g, algebra);
  j["condition_D"] = dc.D;
  j["condition_C"] = dc.C;
  if (table.loewy_length() > 2) {
    ReconstructedConfiguration rec = reconstruct_configuration(algebra, g);
    j["roundtrip"] = verify_isomorphism(g, rec).isomorphic;
    std::vector<int> d;
    for (Angle a = 0; a < rec.config.size(); ++a) d.push_back(rec.config.degree(a));
    std::sort(d.begin(), d.end());
    j["reconstructed_degrees"] = d;
  }
  return j;
}

int cmd_corpus_check(const Options& o, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  fs::path dir = o.path.empty() ? fs::path("corpus") : fs::path(o.path);
  ordered_json manifest;
  try {
    manifest = ordered_json::parse(read_document((dir / "manifest.json").string()));
  } catch (const ordered_json::parse_error& e) {
    throw ParseError("manifest.json: " + std::string(e.what()));
  }
  if (!manifest.contains("entries") || !manifest["entries"].is_array())
    throw StructuralError("manifest.json: missing \"entries\" array");
  int failures = 0;
  std::set<std::string> ids;
  for (const auto& entry : manifest["entries"]) {
    std::string id = entry.value("id", "");
    if (id.empty() || !ids.insert(id).second) throw StructuralError("manifest.json: missing or duplicate id");
    Configuration config = load((dir / entry.value("file", id + ".json")).string());
    ordered_json actual = corpus_json(config);
    const ordered_json expectations = entry.value("expected", ordered_json::object());
    std::vector<std::string> mismatches;
    for (const auto& [key, expected] : expectations.items()) {
      if (!actual.contains(key))
        mismatches.push_back(key + ": not computed");
      else if (actual[key] != expected)
        mismatches.push_back(key + ": expected " + expected.dump() + ", got " + actual[key].dump());
    }
    if (mismatches.empty()) {
      out << "ok   " << id << "\n";
    } else {
      ++failures;
      out << "FAIL " << id << "\n";
      for (const auto& m : mismatches) err << "  " << id << " " << m << "\n";
    }
  }
  out << ids.size() - failures << "/" << ids.size() << " corpus entries match\n";
  return failures ? 1 : 0;
}

}  // namespace

std::string corpus_report(const Configuration& config) { return corpus_json(config).dump(2) + "\n"; }

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite fractional Brauer configurations: validation, quivers, algebras."};
  app.name("fbc");
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool path_required = true) {
    auto* opt = sub->add_option("path", o.path, "document file, or - for standard input");
    if (path_required) opt->required();
    sub->add_flag("--strict-f6", o.strict_f6, "check (f6) at every sequence, not only at aligned ends");
    return sub;
  };
  auto* validate_cmd = common(app.add_subcommand("validate", "check axioms (f1)-(f6) and classify"));
  validate_cmd->add_flag("--json", o.json, "JSON report");
  auto* classify_cmd = common(app.add_subcommand("classify", "classification report"));
  classify_cmd->add_flag("--json", o.json, "JSON report");
  auto* quiver_cmd = common(app.add_subcommand("quiver", "quiver Q_E"));
  quiver_cmd->add_flag("--gabriel", o.gabriel, "Gabriel quiver Q'_E (type S)");
  quiver_cmd->add_flag("--dot", o.dot, "Graphviz output");
  auto* relations_cmd = common(app.add_subcommand("relations", "generators of the ideal I_E"));
  relations_cmd->add_option("--listing", o.listing, "irredundant, factor-minimal or exhaustive")
      ->check(CLI::IsMember({"irredundant", "factor-minimal", "exhaustive"}));
  relations_cmd->add_flag("--json", o.json, "JSON output");
  auto* algebra_cmd = common(app.add_subcommand("algebra", "basis, Cartan matrix, Loewy diagrams, Frobenius"));
  algebra_cmd->add_flag("--cartan", o.cartan, "Cartan matrix");
  algebra_cmd->add_flag("--loewy", o.loewy, "Loewy diagrams");
  algebra_cmd->add_flag("--frobenius", o.frobenius, "Frobenius verdicts");
  algebra_cmd->add_option("--engine", o.engine, "closure, type-s or both")
      ->check(CLI::IsMember({"closure", "type-s", "both"}));
  algebra_cmd->add_flag("--json", o.json, "JSON report");
  auto* gabriel_cmd = common(app.add_subcommand("gabriel", "presentation (Q'_E, I'_E), multiserial, (D)/(C)"));
  gabriel_cmd->add_flag("--dot", o.dot, "Graphviz output of Q'_E");
  auto* frobenius_cmd = common(app.add_subcommand("frobenius", "Frobenius form and Nakayama permutation"));
  auto* convert_cmd = common(app.add_subcommand("convert-bc", "BC presentation to configuration document"));
  auto* reverse_cmd = common(app.add_subcommand("reverse", "orientation-reversed configuration"));
  auto* roundtrip_cmd = common(app.add_subcommand("roundtrip", "reconstruct from the algebra and compare"));
  auto* corpus_cmd = common(app.add_subcommand("corpus-check", "compare a corpus directory with its manifest"), false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(o, out, true);
    if (classify_cmd->parsed()) return cmd_validate(o, out, false);
    if (quiver_cmd->parsed()) return cmd_quiver(o, out);
    if (relations_cmd->parsed()) return cmd_relations(o, out);
    if (algebra_cmd->parsed()) return cmd_algebra(o, out);
    if (gabriel_cmd->parsed()) return cmd_gabriel(o, out);
    if (frobenius_cmd->parsed()) return cmd_frobenius(o, out);
    if (convert_cmd->parsed()) return cmd_convert_bc(o, out);
    if (reverse_cmd->parsed()) return cmd_reverse(o, out);
    if (roundtrip_cmd->parsed()) return cmd_roundtrip(o, out);
    if (corpus_cmd->parsed()) return cmd_corpus_check(o, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace fbc::cli
