#include "fbc/quiver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace fbc {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    out_[arrows_[a].source].push_back(static_cast<int>(a));
    in_[arrows_[a].target].push_back(static_cast<int>(a));
  }
}

int Quiver::find_vertex(const std::string& id) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), id);
  return it == vertices_.end() ? -1 : static_cast<int>(it - vertices_.begin());
}

int Quiver::find_arrow(const std::string& id) const {
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].id == id) return static_cast<int>(a);
  return -1;
}

Path Quiver::path(const std::vector<int>& arrows) const {
  if (arrows.empty()) throw std::invalid_argument("an arrow word needs at least one arrow");
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
    if (arrows_[arrows[i]].target != arrows_[arrows[i + 1]].source)
      throw std::invalid_argument("arrow word does not compose");
  return Path{arrows_[arrows.front()].source, arrows_[arrows.back()].target, arrows};
}

Path Quiver::concat(const Path& first, const Path& second) {
  Path p{first.source, second.target, first.arrows};
  p.arrows.insert(p.arrows.end(), second.arrows.begin(), second.arrows.end());
  return p;
}

Path Quiver::factor(const Path& p, int from, int len) const {
  if (len == 0) {
    int v = from == 0 ? p.source : arrows_[p.arrows[from - 1]].target;
    return trivial_path(v);
  }
  return path(std::vector<int>(p.arrows.begin() + from, p.arrows.begin() + from + len));
}

std::string Quiver::render(const Path& p) const {
  if (p.trivial()) return "1_" + vertices_[p.source];
  std::string out;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) out += "L(" + arrows_[*it].id + ")";
  return out;
}

Path Quiver::parse(const std::string& text) const {
  if (text.rfind("1_", 0) == 0) {
    int v = find_vertex(text.substr(2));
    if (v < 0) throw std::invalid_argument("unknown vertex in '" + text + "'");
    return trivial_path(v);
  }
  std::vector<int> rev;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text.compare(pos, 2, "L(") != 0) throw std::invalid_argument("cannot parse path '" + text + "'");
    // Arrow ids may not contain ')'.
    auto close = text.find(')', pos + 2);
    if (close == std::string::npos) throw std::invalid_argument("cannot parse path '" + text + "'");
    int a = find_arrow(text.substr(pos + 2, close - pos - 2));
    if (a < 0) throw std::invalid_argument("unknown arrow in '" + text + "'");
    rev.push_back(a);
    pos = close + 1;
  }
  std::reverse(rev.begin(), rev.end());
  return path(rev);
}

Quiver build_quiver(const Configuration& config) {
  std::vector<std::string> vertices;
  for (int p = 0; p < config.polygon_count(); ++p) vertices.push_back(config.polygon_id(p));
  std::vector<Arrow> arrows;
  for (int b = 0; b < config.lblock_count(); ++b) {
    Angle e = config.lblock_members(b).front();
    arrows.push_back(Arrow{config.lblock_id(b), config.polygon(e), config.polygon(config.succ(e))});
  }
  return Quiver(std::move(vertices), std::move(arrows));
}

namespace {
std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}
}  // namespace

std::string to_dot(const Quiver& quiver, const std::string& name) {
  std::vector<std::string> vs = quiver.vertices();
  std::sort(vs.begin(), vs.end());
  std::vector<std::tuple<std::string, std::string, std::string>> es;
  for (const auto& a : quiver.arrows())
    es.emplace_back(a.id, quiver.vertex(a.source), quiver.vertex(a.target));
  std::sort(es.begin(), es.end());
  std::ostringstream out;
  out << "digraph " << quoted(name) << " {\n";
  for (const auto& v : vs) out << "  " << quoted(v) << ";\n";
  for (const auto& [id, s, t] : es)
    out << "  " << quoted(s) << " -> " << quoted(t) << " [label=" << quoted(id) << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace fbc
