#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fbc/configuration.hpp"
#include "fbc/quiver.hpp"

namespace fbc {

/// (g^{n-1} e, ..., g e, e): base e and length 0 <= n <= d(e).
struct StandardSequence {
  Angle base = 0;
  int length = 0;
  friend auto operator<=>(const StandardSequence&, const StandardSequence&) = default;
};

/// Arrow word L(g^{n-1} e) ... L(e) as a path of Q_E.
Path word(const Configuration& config, const StandardSequence& s);
/// Left complement ^p and right complement p^.
std::pair<StandardSequence, StandardSequence> complements(const Configuration& config,
                                                          const StandardSequence& s);
/// "(2,1)" style rendering, leftmost element applied last; "()_e" when trivial.
std::string render(const Configuration& config, const StandardSequence& s);
/// All sequences, ordered by base angle then by length.
std::vector<StandardSequence> enumerate_standard_sequences(const Configuration& config);

/// Indexed view of all standard sequences: words, complements, and the
/// grouping of sequences by word. The set of distinct words is 𝓔.
class SequenceTable {
 public:
  explicit SequenceTable(const Configuration& config);

  [[nodiscard]] const Configuration& config() const { return config_; }
  [[nodiscard]] const Quiver& quiver() const { return quiver_; }
  [[nodiscard]] int count() const { return static_cast<int>(seqs_.size()); }
  [[nodiscard]] const StandardSequence& sequence(int i) const { return seqs_[i]; }
  [[nodiscard]] int index(const StandardSequence& s) const { return offset_[s.base] + s.length; }
  [[nodiscard]] const Path& word(int i) const { return words_[i]; }
  [[nodiscard]] int left(int i) const { return left_[i]; }
  [[nodiscard]] int right(int i) const { return right_[i]; }
  [[nodiscard]] bool is_full(int i) const {
    return seqs_[i].length == config_.degree(seqs_[i].base);
  }

  /// Sequences whose word is `w` (empty when w is not in 𝓔).
  [[nodiscard]] const std::vector<int>& with_word(const Path& w) const;
  [[nodiscard]] bool in_E(const Path& w) const { return by_word_.count(w) != 0; }
  [[nodiscard]] const std::map<Path, std::vector<int>>& by_word() const { return by_word_; }
  /// For each left-complement word K, the set {word(p) : word(^p) = K}.
  [[nodiscard]] const std::map<Path, std::vector<Path>>& left_groups() const { return left_groups_; }

 private:
  Configuration config_;
  Quiver quiver_;
  std::vector<StandardSequence> seqs_;
  std::vector<int> offset_;
  std::vector<Path> words_;
  std::vector<int> left_, right_;
  std::map<Path, std::vector<int>> by_word_;
  std::map<Path, std::vector<Path>> left_groups_;
};

enum class PathKind { E, B2, B1 };
std::string to_string(PathKind kind);

struct PathVerdict {
  PathKind kind = PathKind::B1;
  std::vector<Angle> witnesses;  // angles e with path = word of (e, n)
};

/// Decides realizability through the translated intersection of L-blocks.
PathVerdict is_realizable(const Path& path, const Configuration& config);

/// The R-classes of 𝓔, members in shortlex order, classes ordered by
/// (source, target, representative).
struct RClasses {
  std::vector<std::vector<Path>> classes;
  std::map<Path, int> class_of;
  [[nodiscard]] const Path& representative(int c) const { return classes[c].front(); }
};

/// Throws NotTypeSError for configurations without (f7), DomainError if R
/// fails to be transitive.
RClasses relation_R(const SequenceTable& table);

}  // namespace fbc
