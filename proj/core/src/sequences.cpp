#include "fbc/sequences.hpp"

#include <algorithm>
#include <set>

#include "fbc/classify.hpp"

namespace fbc {

Path word(const Configuration& config, const StandardSequence& s) {
  Path p{config.polygon(s.base), config.polygon(config.act(s.base, s.length)), {}};
  p.arrows.reserve(s.length);
  Angle a = s.base;
  for (int i = 0; i < s.length; ++i, a = config.succ(a)) p.arrows.push_back(config.lblock(a));
  return p;
}

std::pair<StandardSequence, StandardSequence> complements(const Configuration& config,
                                                          const StandardSequence& s) {
  // One formula covers the cases 0 < n < d, n = d and n = 0 alike.
  const int d = config.degree(s.base);
  StandardSequence left{config.act(s.base, s.length), d - s.length};
  StandardSequence right{config.act(s.base, s.length - d), d - s.length};
  return {left, right};
}

std::string render(const Configuration& config, const StandardSequence& s) {
  if (s.length == 0) return "()_" + config.name(s.base);
  std::string out = "(";
  for (int i = s.length - 1; i >= 0; --i) {
    out += config.name(config.act(s.base, i));
    if (i > 0) out += ",";
  }
  return out + ")";
}

std::vector<StandardSequence> enumerate_standard_sequences(const Configuration& config) {
  std::vector<StandardSequence> out;
  for (Angle e = 0; e < config.size(); ++e)
    for (int n = 0; n <= config.degree(e); ++n) out.push_back({e, n});
  return out;
}

SequenceTable::SequenceTable(const Configuration& config)
    : config_(config), quiver_(build_quiver(config)) {
  for (int o = 0; o < config_.orbit_count(); ++o)
    for (Angle a : config_.orbit(o))
      if (config_.degree(a) != config_.degree(config_.orbit(o).front()))
        throw DomainError("degree is not constant on the orbit of '" + config_.name(a) + "'");
  seqs_ = enumerate_standard_sequences(config_);
  offset_.resize(config_.size());
  for (int i = static_cast<int>(seqs_.size()) - 1; i >= 0; --i) offset_[seqs_[i].base] = i;
  words_.reserve(seqs_.size());
  for (int i = 0; i < count(); ++i) {
    words_.push_back(fbc::word(config_, seqs_[i]));
    auto [l, r] = complements(config_, seqs_[i]);
    left_.push_back(index(l));
    right_.push_back(index(r));
    by_word_[words_.back()].push_back(i);
  }
  for (int i = 0; i < count(); ++i) left_groups_[words_[left_[i]]].push_back(words_[i]);
  for (auto& [k, ws] : left_groups_) {
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  }
}

const std::vector<int>& SequenceTable::with_word(const Path& w) const {
  static const std::vector<int> none;
  auto it = by_word_.find(w);
  return it == by_word_.end() ? none : it->second;
}

std::string to_string(PathKind kind) {
  switch (kind) {
    case PathKind::E:
      return "E";
    case PathKind::B2:
      return "B2";
    case PathKind::B1:
      return "B1";
  }
  return "?";
}

PathVerdict is_realizable(const Path& path, const Configuration& config) {
  PathVerdict v;
  const int n = path.length();
  if (n == 0) {
    v.kind = PathKind::E;
    v.witnesses = config.polygon_members(path.source);
    return v;
  }
  for (Angle h : config.lblock_members(path.arrows.back())) {
    bool ok = true;
    for (int i = 0; i < n - 1 && ok; ++i)
      ok = config.lblock(config.act(h, i - (n - 1))) == path.arrows[i];
    if (ok) v.witnesses.push_back(config.act(h, 1 - n));
  }
  std::sort(v.witnesses.begin(), v.witnesses.end());
  if (v.witnesses.empty())
    v.kind = PathKind::B1;
  else
    v.kind = n > config.degree(v.witnesses.front()) ? PathKind::B2 : PathKind::E;
  return v;
}

RClasses relation_R(const SequenceTable& table) {
  if (!check_type_s(table).holds)
    throw NotTypeSError(
        "not type S: relation R needs (f7); use the congruence-closure engine");
  // u R v iff u and v lie in a common left group; R is transitive exactly
  // when every word lies in groups that all carry the same word set.
  std::map<Path, const std::vector<Path>*> group_of;
  for (const auto& [k, ws] : table.left_groups()) {
    for (const auto& w : ws) {
      auto [it, inserted] = group_of.emplace(w, &ws);
      if (!inserted && *it->second != ws)
        throw DomainError("relation R is not transitive at " + table.quiver().render(w));
    }
  }
  std::set<std::vector<Path>> distinct;
  for (const auto& [w, g] : group_of) distinct.insert(*g);
  RClasses r;
  r.classes.assign(distinct.begin(), distinct.end());
  std::sort(r.classes.begin(), r.classes.end(), [](const auto& a, const auto& b) {
    const Path& x = a.front();
    const Path& y = b.front();
    if (x.source != y.source) return x.source < y.source;
    if (x.target != y.target) return x.target < y.target;
    return x < y;
  });
  for (std::size_t c = 0; c < r.classes.size(); ++c)
    for (const auto& w : r.classes[c]) r.class_of[w] = static_cast<int>(c);
  return r;
}

}  // namespace fbc
