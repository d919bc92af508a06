#include "fbc/random.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "fbc/classify.hpp"

namespace fbc {
namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Labels on angles with label(sigma e) = pi(label(e)) for a random permutation pi.
std::vector<int> equivariant_labels(std::mt19937_64& rng, const std::vector<std::vector<int>>& sigma_cycles,
                                    int n, int label_count) {
  std::vector<int> pi(label_count);
  std::iota(pi.begin(), pi.end(), 0);
  std::shuffle(pi.begin(), pi.end(), rng);
  auto pi_cycle_length = [&](int s) {
    int len = 1;
    for (int x = pi[s]; x != s; x = pi[x]) ++len;
    return len;
  };
  std::vector<int> label(n, -1);
  for (const auto& cyc : sigma_cycles) {
    const int len = static_cast<int>(cyc.size());
    std::vector<int> fits;
    for (int s = 0; s < static_cast<int>(pi.size()); ++s)
      if (len % pi_cycle_length(s) == 0) fits.push_back(s);
    int s;
    if (fits.empty()) {
      s = static_cast<int>(pi.size());
      pi.push_back(s);
    } else {
      s = fits[uniform(rng, 0, static_cast<int>(fits.size()) - 1)];
    }
    for (int e : cyc) {
      label[e] = s;
      s = pi[s];
    }
  }
  return label;
}

}  // namespace

Configuration random_candidate(std::mt19937_64& rng, const RandomParams& params) {
  const int n = uniform(rng, 1, params.max_angles);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back((i < 10 ? "a0" : "a") + std::to_string(i));

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> succ(n), degree(n);
  for (int pos = 0; pos < n;) {
    const int len = uniform(rng, 1, n - pos);
    int d;
    if (coin(rng, params.integral) && len <= params.max_degree)
      d = len * uniform(rng, 1, params.max_degree / len);
    else
      d = uniform(rng, 1, params.max_degree);
    for (int i = 0; i < len; ++i) {
      succ[order[pos + i]] = order[pos + (i + 1) % len];
      degree[order[pos + i]] = d;
    }
    pos += len;
  }

  // sigma = g^d, as cycles.
  std::vector<int> sigma(n);
  for (int e = 0; e < n; ++e) {
    int x = e;
    for (int k = 0; k < degree[e]; ++k) x = succ[x];
    sigma[e] = x;
  }
  std::vector<std::vector<int>> sigma_cycles;
  std::vector<bool> seen(n, false);
  for (int e = 0; e < n; ++e) {
    if (seen[e]) continue;
    std::vector<int> c;
    for (int x = e; !seen[x]; x = sigma[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    sigma_cycles.push_back(std::move(c));
  }

  const std::vector<int> plab = equivariant_labels(rng, sigma_cycles, n, uniform(rng, 1, n));
  std::vector<int> llab(n);
  if (coin(rng, params.trivial_l)) {
    std::iota(llab.begin(), llab.end(), 0);
  } else {
    // An L-block must sit inside one polygon and send its angles into one polygon.
    const std::vector<int> sub = equivariant_labels(rng, sigma_cycles, n, uniform(rng, 1, 3));
    std::map<std::tuple<int, int, int>, int> ids;
    for (int e = 0; e < n; ++e)
      llab[e] = ids.emplace(std::make_tuple(plab[e], plab[succ[e]], sub[e]), static_cast<int>(ids.size()))
                    .first->second;
  }
  return Configuration(names, succ, plab, llab, degree);
}

std::optional<Configuration> random_configuration(std::mt19937_64& rng, const RandomParams& params,
                                                  const std::function<bool(const Configuration&)>& accept,
                                                  int max_tries) {
  for (int i = 0; i < max_tries; ++i) {
    Configuration c = random_candidate(rng, params);
    if (!validate(c).ok()) continue;
    if (accept && !accept(c)) continue;
    return c;
  }
  return std::nullopt;
}

}  // namespace fbc
