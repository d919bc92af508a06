#pragma once

#include <compare>
#include <string>
#include <vector>

#include "fbc/configuration.hpp"

namespace fbc {

/// A path of a quiver. `arrows` lists arrow indices in traversal order
/// (first arrow first); the rendering writes them right to left.
struct Path {
  int source = 0;
  int target = 0;
  std::vector<int> arrows;

  [[nodiscard]] int length() const { return static_cast<int>(arrows.size()); }
  [[nodiscard]] bool trivial() const { return arrows.empty(); }

  /// Shortlex: length first, then the arrow word, then the endpoints.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
    if (auto c = a.arrows.size() <=> b.arrows.size(); c != 0) return c;
    if (auto c = a.arrows <=> b.arrows; c != 0) return c;
    if (auto c = a.source <=> b.source; c != 0) return c;
    return a.target <=> b.target;
  }
  friend bool operator==(const Path& a, const Path& b) = default;
};

struct Arrow {
  std::string id;
  int source = 0;
  int target = 0;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  [[nodiscard]] int vertex_count() const { return static_cast<int>(vertices_.size()); }
  [[nodiscard]] int arrow_count() const { return static_cast<int>(arrows_.size()); }
  [[nodiscard]] const std::string& vertex(int v) const { return vertices_[v]; }
  [[nodiscard]] const std::vector<std::string>& vertices() const { return vertices_; }
  [[nodiscard]] const Arrow& arrow(int a) const { return arrows_[a]; }
  [[nodiscard]] const std::vector<Arrow>& arrows() const { return arrows_; }
  [[nodiscard]] const std::vector<int>& out_arrows(int v) const { return out_[v]; }
  [[nodiscard]] const std::vector<int>& in_arrows(int v) const { return in_[v]; }
  [[nodiscard]] int find_vertex(const std::string& id) const;
  [[nodiscard]] int find_arrow(const std::string& id) const;

  [[nodiscard]] Path trivial_path(int v) const { return Path{v, v, {}}; }
  [[nodiscard]] Path arrow_path(int a) const { return Path{arrows_[a].source, arrows_[a].target, {a}}; }
  /// Path from an arrow word; throws std::invalid_argument if it does not compose.
  [[nodiscard]] Path path(const std::vector<int>& arrows) const;
  [[nodiscard]] bool composable(const Path& first, const Path& second) const {
    return first.target == second.source;
  }
  /// `first` followed by `second`; caller guarantees composability.
  [[nodiscard]] static Path concat(const Path& first, const Path& second);
  /// Subpath of `len` arrows starting at traversal position `from`.
  [[nodiscard]] Path factor(const Path& p, int from, int len) const;

  /// Right-to-left rendering, e.g. "L(2)L(1)"; trivial paths render as "1_x".
  [[nodiscard]] std::string render(const Path& p) const;
  /// Inverse of render for arrow words; throws std::invalid_argument.
  [[nodiscard]] Path parse(const std::string& text) const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_.size() == b.arrows_.size() &&
           std::equal(a.arrows_.begin(), a.arrows_.end(), b.arrows_.begin(),
                      [](const Arrow& x, const Arrow& y) {
                        return x.id == y.id && x.source == y.source && x.target == y.target;
                      });
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> out_, in_;
};

/// Q_E: vertices are polygons, arrows are L-blocks; L(e) runs from P(e) to P(g e).
/// Vertex v is polygon v and arrow b is L-block b.
Quiver build_quiver(const Configuration& config);

/// Graphviz text, sorted and byte-stable.
std::string to_dot(const Quiver& quiver, const std::string& name = "Q");

}  // namespace fbc
