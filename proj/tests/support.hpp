#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "fbc/fbc.hpp"

namespace fbc::test {

inline std::string corpus_path(const std::string& id) { return std::string(FBC_CORPUS_DIR) + "/" + id + ".json"; }

inline Configuration load_corpus(const std::string& id) {
  std::string text = read_document(corpus_path(id));
  if (detect_document_kind(text) == DocumentKind::brauer) return convert_bc(parse_brauer(text));
  return parse_configuration(text);
}

inline const std::vector<std::string>& type_s_ids() {
  static const std::vector<std::string> ids{"example0", "example1", "gs-example", "ex6-5-bc",
                                            "ex6-5",    "ex7-6-m2", "ex7-6-m3"};
  return ids;
}

inline int vertex_index(const Quiver& q, const std::string& name) {
  int v = q.find_vertex(name);
  REQUIRE(v >= 0);
  return v;
}

/// Loewy layers of P_x as sorted lists of vertex names.
inline std::vector<std::vector<std::string>> layers(const AlgebraTable& t, const std::string& x) {
  const Quiver& q = t.quiver();
  int v = vertex_index(q, x);
  for (const auto& d : loewy_diagrams(t)) {
    if (d.vertex != v) continue;
    std::vector<std::vector<std::string>> out;
    for (const auto& layer : d.layers) {
      std::vector<std::string> names;
      for (int w : layer) names.push_back(q.vertex(w));
      std::sort(names.begin(), names.end());
      out.push_back(names);
    }
    return out;
  }
  return {};
}

inline int projective_dim(const AlgebraTable& t, const std::string& x) {
  int y = vertex_index(t.quiver(), x), s = 0;
  for (int v = 0; v < t.quiver().vertex_count(); ++v) s += t.dim(v, y);
  return s;
}

/// Deterministic stream of valid configurations with the requested type S verdict.
inline std::vector<Configuration> random_sample(std::uint64_t seed, int count, int want_type_s,
                                                RandomParams params = {}) {
  std::mt19937_64 rng(seed);
  std::vector<Configuration> out;
  while (static_cast<int>(out.size()) < count) {
    auto c = random_configuration(rng, params, [&](const Configuration& c) {
      return want_type_s < 0 || classify(c).is_type_s == (want_type_s == 1);
    });
    REQUIRE(c.has_value());
    out.push_back(*c);
  }
  return out;
}

}  // namespace fbc::test
