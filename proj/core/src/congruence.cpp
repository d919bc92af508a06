#include "fbc/congruence.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fbc/errors.hpp"

namespace fbc {

PathCongruence::PathCongruence(const Quiver& quiver, const std::vector<Path>& monomials,
                               int length_bound, OverflowPolicy policy, std::size_t max_universe)
    : quiver_(&quiver), bound_(length_bound), policy_(policy) {
  const int A = quiver.arrow_count();
  const std::set<Path> mono(monomials.begin(), monomials.end());
  const int overflow = policy == OverflowPolicy::zero ? kZero : kOverflow;
  std::vector<int> tail, head;

  auto add = [&](Path p, int t, int h) {
    if (paths_.size() >= max_universe)
      throw DomainError("path universe exceeds " + std::to_string(max_universe) + " paths");
    index_.emplace(p, static_cast<int>(paths_.size()));
    paths_.push_back(std::move(p));
    tail.push_back(t);
    head.push_back(h);
    right_.insert(right_.end(), A, kNone);
    return static_cast<int>(paths_.size()) - 1;
  };
  for (int v = 0; v < quiver.vertex_count(); ++v) add(quiver.trivial_path(v), -1, -1);

  // Breadth-first by length: p.a avoids the monomials iff (p without its
  // first arrow).a does and p.a is not itself a monomial.
  std::size_t level_begin = 0;
  for (int len = 0; len <= bound_; ++len) {
    const std::size_t level_end = paths_.size();
    for (std::size_t id = level_begin; id < level_end; ++id) {
      for (int a : quiver.out_arrows(paths_[id].target)) {
        int value = kZero;
        if (len == bound_) {
          value = overflow;
        } else {
          const int t = len == 0 ? quiver.arrow(a).target : right_[tail[id] * A + a];
          if (t >= 0) {
            Path q = Quiver::concat(paths_[id], quiver.arrow_path(a));
            if (!mono.count(q)) value = add(std::move(q), t, static_cast<int>(id));
          }
        }
        right_[id * A + a] = value;
      }
    }
    level_begin = level_end;
  }

  left_.assign(paths_.size() * A, kNone);
  for (std::size_t id = 0; id < paths_.size(); ++id) {
    const Path& p = paths_[id];
    for (int a : quiver.in_arrows(p.source)) {
      int& slot = left_[id * A + a];
      if (p.length() == bound_) {
        slot = overflow;
      } else if (p.trivial()) {
        slot = right_[quiver.arrow(a).source * A + a];
      } else {
        const int x = left_[head[id] * A + a];
        slot = x < 0 ? x : right_[x * A + p.arrows.back()];
      }
    }
  }

  zero_node_ = static_cast<int>(paths_.size());
  parent_.resize(paths_.size() + 1);
  for (std::size_t i = 0; i < parent_.size(); ++i) parent_[i] = static_cast<int>(i);
  for (const auto& m : monomials) push(code_of(m), kZero);
  drain();
}

int PathCongruence::code_of(const Path& p) const {
  if (p.length() > bound_) return policy_ == OverflowPolicy::zero ? kZero : kOverflow;
  const int A = quiver_->arrow_count();
  int id = p.source;
  for (int a : p.arrows) {
    if (quiver_->arrow(a).source != paths_[id].target)
      throw std::invalid_argument("path does not compose");
    id = right_[id * A + a];
    if (id < 0) return id;
  }
  return id;
}

int PathCongruence::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

void PathCongruence::push(int a, int b) {
  if (a == kNone || b == kNone || a == kOverflow || b == kOverflow) return;
  work_.emplace_back(node(a), node(b));
}

void PathCongruence::drain() {
  const int A = quiver_->arrow_count();
  while (!work_.empty()) {
    auto [x, y] = work_.back();
    work_.pop_back();
    const int rx = find(x);
    const int ry = find(y);
    if (policy_ == OverflowPolicy::zero) {
      if (rx == ry) continue;
    } else if (x == y || !seen_.insert(std::minmax(x, y)).second) {
      continue;
    }
    if (rx != ry) {
      // Keep ZERO as the root of its class.
      if (rx == find(zero_node_))
        parent_[ry] = rx;
      else
        parent_[rx] = ry;
    }
    for (int a = 0; a < A; ++a) {
      const int rxa = x == zero_node_ ? kZero : right_[x * A + a];
      const int rya = y == zero_node_ ? kZero : right_[y * A + a];
      if (!(rxa == kZero && rya == kZero)) push(rxa, rya);
      const int lxa = x == zero_node_ ? kZero : left_[x * A + a];
      const int lya = y == zero_node_ ? kZero : left_[y * A + a];
      if (!(lxa == kZero && lya == kZero)) push(lxa, lya);
    }
  }
}

void PathCongruence::add_monomial(const Path& m) {
  push(code_of(m), kZero);
  drain();
}

void PathCongruence::add_binomial(const Path& u, const Path& v) {
  push(code_of(u), code_of(v));
  drain();
}

bool PathCongruence::is_zero(const Path& p) {
  drain();
  const int c = code_of(p);
  if (c == kZero) return true;
  if (c == kOverflow) return false;
  return find(c) == find(zero_node_);
}

bool PathCongruence::equivalent(const Path& u, const Path& v) {
  drain();
  const int cu = code_of(u);
  const int cv = code_of(v);
  if (cu == kOverflow || cv == kOverflow) return false;
  return find(node(cu)) == find(node(cv));
}

std::vector<std::vector<Path>> PathCongruence::classes() {
  drain();
  const int z = find(zero_node_);
  std::map<int, std::vector<Path>> by_root;
  for (std::size_t id = 0; id < paths_.size(); ++id) {
    const int r = find(static_cast<int>(id));
    if (r != z) by_root[r].push_back(paths_[id]);
  }
  std::vector<std::vector<Path>> out;
  for (auto& [r, members] : by_root) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace fbc
