#include "fbc/generators.hpp"

#include <algorithm>
#include <set>


namespace fbc {
namespace {

Binomial make_binomial(Path a, Path b) {
  if (b < a) std::swap(a, b);
  return Binomial{std::move(a), std::move(b)};
}

std::vector<Binomial> fr1_all(const SequenceTable& t) {
  std::set<Binomial> out;
  for (const auto& [k, ws] : t.left_groups())
    for (std::size_t i = 0; i < ws.size(); ++i)
      for (std::size_t j = i + 1; j < ws.size(); ++j) out.insert(make_binomial(ws[i], ws[j]));
  return {out.begin(), out.end()};
}

// Paths outside 𝓔 all of whose proper factors lie in 𝓔.
void minimal_monomials(const SequenceTable& t, std::vector<Path>& fr2, std::vector<Path>& fr3) {
  const Quiver& q = t.quiver();
  std::set<Path> b1, b2;
  for (const auto& [w, seqs] : t.by_word()) {
    if (w.trivial()) continue;
    for (int a : q.out_arrows(w.target)) {
      Path c = Quiver::concat(w, q.arrow_path(a));
      if (t.in_E(c)) continue;
      Path rest = q.factor(c, 1, c.length() - 1);
      if (!t.in_E(rest)) continue;
      if (is_realizable(c, t.config()).kind == PathKind::B1)
        b1.insert(std::move(c));
      else
        b2.insert(std::move(c));
    }
  }
  fr2.assign(b1.begin(), b1.end());
  fr3.assign(b2.begin(), b2.end());
}

void all_monomials(const SequenceTable& t, int bound, std::vector<Path>& fr2, std::vector<Path>& fr3) {
  const Quiver& q = t.quiver();
  std::vector<Path> frontier;
  for (int v = 0; v < q.vertex_count(); ++v) frontier.push_back(q.trivial_path(v));
  for (int len = 1; len <= bound; ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (int a : q.out_arrows(p.target)) {
        Path c = Quiver::concat(p, q.arrow_path(a));
        if (len >= 2) {
          PathKind k = is_realizable(c, t.config()).kind;
          if (k == PathKind::B1) fr2.push_back(c);
          if (k == PathKind::B2) fr3.push_back(c);
        }
        next.push_back(std::move(c));
      }
    frontier = std::move(next);
  }
  std::sort(fr2.begin(), fr2.end());
  std::sort(fr3.begin(), fr3.end());
}

struct Generator {
  bool binomial;
  Path first, second;
};

// Ideal membership for monomial-binomial ideals, truncated at a length bound:
// u - v lies in the ideal iff v is reachable from u by replacing factors
// along binomials, or both reach a path with a monomial factor.
class Rewriting {
 public:
  explicit Rewriting(int bound) : bound_(bound) {}

  void add(const Generator& g) {
    if (!g.binomial) {
      monomials_.push_back(g.first.arrows);
      return;
    }
    rules_.emplace_back(g.first.arrows, g.second.arrows);
    rules_.emplace_back(g.second.arrows, g.first.arrows);
  }

  bool implies(const Generator& g) const {
    Component a = explore(g.first);
    if (!g.binomial) return a.zero;
    if (a.paths.count(g.second.arrows)) return true;
    return a.zero && explore(g.second).zero;
  }

 private:
  using Word = std::vector<int>;
  struct Component {
    std::set<Word> paths;
    bool zero = false;
  };

  static bool occurs_at(const Word& w, const Word& f, std::size_t i) {
    return std::equal(f.begin(), f.end(), w.begin() + static_cast<long>(i));
  }

  bool has_monomial(const Word& w) const {
    for (const auto& m : monomials_)
      for (std::size_t i = 0; i + m.size() <= w.size(); ++i)
        if (occurs_at(w, m, i)) return true;
    return false;
  }

  Component explore(const Path& start) const {
    Component c;
    std::vector<Word> todo{start.arrows};
    c.paths.insert(start.arrows);
    while (!todo.empty()) {
      Word w = std::move(todo.back());
      todo.pop_back();
      if (has_monomial(w)) {
        c.zero = true;
        return c;
      }
      for (const auto& [from, to] : rules_) {
        if (from.empty() || from.size() > w.size()) continue;
        if (static_cast<int>(w.size() - from.size() + to.size()) > bound_) continue;
        for (std::size_t i = 0; i + from.size() <= w.size(); ++i) {
          if (!occurs_at(w, from, i)) continue;
          Word next(w.begin(), w.begin() + static_cast<long>(i));
          next.insert(next.end(), to.begin(), to.end());
          next.insert(next.end(), w.begin() + static_cast<long>(i + from.size()), w.end());
          if (c.paths.insert(next).second) todo.push_back(std::move(next));
        }
      }
    }
    return c;
  }

  int bound_;
  std::vector<Word> monomials_;
  std::vector<std::pair<Word, Word>> rules_;
};

void make_irredundant(IdealGenerators& gens) {
  std::vector<Generator> cand;
  for (const auto& b : gens.fr1) cand.push_back({true, b.first, b.second});
  std::vector<Path> mono = gens.fr2;
  mono.insert(mono.end(), gens.fr3.begin(), gens.fr3.end());
  std::sort(mono.begin(), mono.end());
  for (const auto& m : mono) cand.push_back({false, m, {}});

  Rewriting ideal(gens.length_bound);
  std::vector<Generator> kept;
  for (const auto& g : cand) {
    if (ideal.implies(g)) continue;
    ideal.add(g);
    kept.push_back(g);
  }

  std::set<Path> b1(gens.fr2.begin(), gens.fr2.end());
  gens.fr1.clear();
  gens.fr2.clear();
  gens.fr3.clear();
  for (auto& g : kept) {
    if (g.binomial)
      gens.fr1.push_back(make_binomial(g.first, g.second));
    else if (b1.count(g.first))
      gens.fr2.push_back(g.first);
    else
      gens.fr3.push_back(g.first);
  }
}

}  // namespace

void canonical_order(IdealGenerators& gens) {
  std::sort(gens.fr1.begin(), gens.fr1.end(), [](const Binomial& a, const Binomial& b) {
    if (a.second.length() != b.second.length()) return a.second.length() < b.second.length();
    return a < b;
  });
  std::sort(gens.fr2.begin(), gens.fr2.end());
  std::sort(gens.fr3.begin(), gens.fr3.end());
}

IdealGenerators ideal_generators(const SequenceTable& t, GeneratorListing listing) {
  IdealGenerators gens;
  gens.length_bound = t.config().length_bound();
  gens.fr1 = fr1_all(t);
  canonical_order(gens);
  if (listing == GeneratorListing::exhaustive)
    all_monomials(t, gens.length_bound, gens.fr2, gens.fr3);
  else
    minimal_monomials(t, gens.fr2, gens.fr3);
  if (listing == GeneratorListing::irredundant) make_irredundant(gens);
  canonical_order(gens);
  return gens;
}

IdealGenerators ideal_generators(const Configuration& config, GeneratorListing listing) {
  return ideal_generators(SequenceTable(config), listing);
}

std::vector<Binomial> fr1_by_template(const Configuration& c) {
  std::set<Binomial> out;
  for (int p = 0; p < c.polygon_count(); ++p) {
    const auto& members = c.polygon_members(p);
    for (Angle e : members)
      for (Angle h : members) {
        if (h <= e) continue;
        const int de = c.degree(e);
        const int dh = c.degree(h);
        for (int k = 0; k <= std::min(de, dh); ++k) {
          if (k > 0 && c.lblock(c.act(e, de - k)) != c.lblock(c.act(h, dh - k))) break;
          Path u = word(c, {e, de - k});
          Path v = word(c, {h, dh - k});
          if (u != v) out.insert(make_binomial(std::move(u), std::move(v)));
        }
      }
  }
  return {out.begin(), out.end()};
}

}  // namespace fbc
