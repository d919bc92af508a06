#include "fbc/report.hpp"

#include <sstream>

#include "json.hpp"

namespace fbc {
namespace {

using nlohmann::ordered_json;

const char* mark(bool b) { return b ? "✓" : "✗"; }

std::string joined(const std::vector<std::string>& xs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::vector<std::string> names_of(const Configuration& c, const std::vector<Angle>& as) {
  std::vector<std::string> out;
  for (Angle a : as) out.push_back(c.name(a));
  return out;
}

std::vector<std::string> vertex_names(const Quiver& q, const std::vector<int>& vs) {
  std::vector<std::string> out;
  for (int v : vs) out.push_back(q.vertex(v));
  return out;
}

std::string sequences(const Configuration& c, const std::vector<StandardSequence>& ss) {
  std::vector<std::string> out;
  for (const auto& s : ss) out.push_back(render(c, s));
  return "{" + joined(out, ",") + "}";
}

}  // namespace

std::string render_classification(const Configuration& c, const ClassificationReport& r) {
  std::ostringstream out;
  out << "axioms:\n";
  for (const auto& a : r.axioms.results) {
    out << "  " << a.axiom << " " << (a.pass ? "pass" : "FAIL");
    if (!a.pass) out << "  witness: " << joined(a.witness) << " (" << a.detail << ")";
    out << "\n";
  }
  out << "f-BC " << mark(r.is_fbc) << ", MS " << mark(r.is_type_ms) << ", S " << mark(r.is_type_s)
      << ", BC " << mark(r.is_bc) << "\n";
  if (r.is_fbc && !r.is_type_s && r.type_s.witness) {
    const auto& w = *r.type_s.witness;
    out << "  (f7) fails: p = " << render(c, w.p) << ", q = " << render(c, w.q) << "; "
        << sequences(c, w.p_side) << " vs " << sequences(c, w.q_side) << "\n";
  }
  out << "f-BG " << mark(r.is_bg) << ", f_s-BG " << mark(r.is_fs_bg) << ", f_ms-BG " << mark(r.is_fms_bg)
      << "\n";
  out << "f-degrees:";
  for (const auto& o : r.f_degrees)
    out << " {" << joined(names_of(c, o.orbit), ",") << "}: " << o.value.to_string() << ";";
  out << "\nintegral f-degree " << mark(r.integral_f_degree) << ", f-degree trivial "
      << mark(r.f_degree_trivial) << "\n";
  return out.str();
}

std::string classification_json(const Configuration& c, const ClassificationReport& r) {
  ordered_json j;
  j["is_fbc"] = r.is_fbc;
  ordered_json ax = ordered_json::array();
  for (const auto& a : r.axioms.results) {
    ordered_json e;
    e["axiom"] = a.axiom;
    e["pass"] = a.pass;
    if (!a.pass) {
      e["witness"] = a.witness;
      e["detail"] = a.detail;
    }
    ax.push_back(e);
  }
  j["axioms"] = ax;
  j["is_type_s"] = r.is_type_s;
  if (r.type_s.witness) {
    const auto& w = *r.type_s.witness;
    std::vector<std::string> ps, qs;
    for (const auto& s : w.p_side) ps.push_back(render(c, s));
    for (const auto& s : w.q_side) qs.push_back(render(c, s));
    j["type_s_counterexample"] = {{"p", render(c, w.p)}, {"q", render(c, w.q)}, {"p_side", ps}, {"q_side", qs}};
  }
  j["is_type_ms"] = r.is_type_ms;
  j["is_bc"] = r.is_bc;
  j["is_bg"] = r.is_bg;
  j["is_fs_bg"] = r.is_fs_bg;
  j["is_fms_bg"] = r.is_fms_bg;
  ordered_json fd = ordered_json::array();
  for (const auto& o : r.f_degrees) fd.push_back({{"orbit", names_of(c, o.orbit)}, {"f_degree", o.value.to_string()}});
  j["f_degrees"] = fd;
  j["integral_f_degree"] = r.integral_f_degree;
  j["f_degree_trivial"] = r.f_degree_trivial;
  return j.dump(2) + "\n";
}

std::string render_quiver(const Quiver& q) {
  std::ostringstream out;
  out << q.vertex_count() << " vertices, " << q.arrow_count() << " arrows\n";
  out << "vertices: " << joined(q.vertices()) << "\n";
  for (const auto& a : q.arrows())
    out << "  L(" << a.id << "): " << q.vertex(a.source) << " -> " << q.vertex(a.target) << "\n";
  return out.str();
}

std::string render_generators(const Quiver& q, const IdealGenerators& g) {
  std::ostringstream out;
  out << g.fr1.size() + g.fr2.size() + g.fr3.size() << " generators (N = " << g.length_bound << ")\n";
  out << "fr1:\n";
  for (const auto& b : g.fr1) out << "  " << q.render(b.first) << " - " << q.render(b.second) << "\n";
  out << "fr2:\n";
  for (const auto& p : g.fr2) out << "  " << q.render(p) << "\n";
  out << "fr3:\n";
  for (const auto& p : g.fr3) out << "  " << q.render(p) << "\n";
  return out.str();
}

std::string generators_json(const Quiver& q, const IdealGenerators& g) {
  ordered_json j;
  ordered_json b = ordered_json::array();
  for (const auto& x : g.fr1) b.push_back({q.render(x.first), q.render(x.second)});
  std::vector<std::string> m2, m3;
  for (const auto& p : g.fr2) m2.push_back(q.render(p));
  for (const auto& p : g.fr3) m3.push_back(q.render(p));
  j["length_bound"] = g.length_bound;
  j["fr1"] = b;
  j["fr2"] = m2;
  j["fr3"] = m3;
  return j.dump(2) + "\n";
}

std::string render_loewy(const AlgebraTable& t, const std::vector<LoewyDiagram>& ds) {
  const Quiver& q = t.quiver();
  std::ostringstream out;
  for (const auto& d : ds) {
    out << "P_" << q.vertex(d.vertex) << " (dim " << d.dimension << ", Loewy length " << d.loewy_length << ")\n";
    for (std::size_t i = 0; i < d.layers.size(); ++i)
      out << std::string(2 * (i + 1), ' ') << joined(vertex_names(q, d.layers[i])) << "\n";
    out << "  socle: " << joined(vertex_names(q, d.socle)) << "\n";
  }
  return out.str();
}

std::string render_matrix(const std::vector<std::vector<int>>& m, const std::vector<std::string>& labels) {
  std::size_t w = 1;
  for (const auto& l : labels) w = std::max(w, l.size());
  for (const auto& row : m)
    for (int v : row) w = std::max(w, std::to_string(v).size());
  auto pad = [&](const std::string& s) { return std::string(w - s.size(), ' ') + s; };
  std::ostringstream out;
  out << pad("") << " ";
  for (const auto& l : labels) out << " " << pad(l);
  out << "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << pad(labels[i]) << " ";
    for (int v : m[i]) out << " " << pad(std::to_string(v));
    out << "\n";
  }
  return out.str();
}

std::string render_frobenius(const AlgebraTable& t, const FrobeniusData& f) {
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream out;
  out << "frobenius: " << yes(f.frobenius) << "\n";
  out << "self-injective: " << yes(f.self_injective) << "\n";
  out << "symmetric: " << yes(f.symmetric) << "\n";
  if (!f.nakayama_vertex.empty() && f.self_injective)
    out << "nakayama permutation: " << cycle_notation(f.nakayama_vertex, t.quiver().vertices()) << "\n";
  if (!f.witness.empty()) out << "witness: " << f.witness << "\n";
  return out.str();
}

std::string render_presentation(const GabrielPresentation& g) {
  const Quiver& q = g.quiver;
  std::ostringstream out;
  out << render_quiver(q);
  out << "monomial relations (" << g.monomials.size() << "):\n";
  for (const auto& m : g.monomials) out << "  " << q.render(m) << "\n";
  out << "binomial relations (" << g.binomials.size() << "):\n";
  for (const auto& b : g.binomials) out << "  " << q.render(b.first) << " - " << q.render(b.second) << "\n";
  out << "admissible: " << (g.admissible ? "yes" : "no");
  if (!g.admissible) out << " (" << g.admissibility_witness << ")";
  out << "\nN_x:";
  for (int x = 0; x < q.vertex_count(); ++x) out << " " << q.vertex(x) << "=" << g.vertex_bound[x];
  out << "\n";
  return out.str();
}

std::string algebra_report_json(const AlgebraReport& r) {
  const AlgebraTable& t = *r.table;
  const Quiver& q = t.quiver();
  ordered_json j;
  j["vertices"] = q.vertices();
  j["total_dim"] = t.total_dim();
  auto cartan = cartan_matrix(t);
  std::vector<int> projective;
  for (int y = 0; y < q.vertex_count(); ++y) {
    int s = 0;
    for (int x = 0; x < q.vertex_count(); ++x) s += cartan[x][y];
    projective.push_back(s);
  }
  j["projective_dims"] = projective;
  if (r.with_cartan) j["cartan"] = cartan;
  j["loewy_length"] = t.loewy_length();
  if (r.with_loewy) {
    ordered_json l = ordered_json::object();
    for (const auto& d : loewy_diagrams(t)) {
      ordered_json layers = ordered_json::array();
      for (const auto& layer : d.layers) layers.push_back(vertex_names(q, layer));
      l[q.vertex(d.vertex)] = {{"layers", layers}, {"socle", vertex_names(q, d.socle)}, {"loewy_length", d.loewy_length}};
    }
    j["loewy"] = l;
  }
  if (r.frobenius) {
    const FrobeniusData& f = *r.frobenius;
    ordered_json fj;
    fj["frobenius"] = f.frobenius;
    fj["symmetric"] = f.symmetric;
    fj["self_injective"] = f.self_injective;
    if (f.self_injective) fj["nakayama"] = cycle_notation(f.nakayama_vertex, q.vertices());
    if (!f.witness.empty()) fj["witness"] = f.witness;
    j["frobenius"] = fj;
  }
  return j.dump(2) + "\n";
}

}  // namespace fbc
