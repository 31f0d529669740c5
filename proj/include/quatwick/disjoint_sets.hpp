#pragma once

#include <numeric>
#include <vector>

namespace quatwick {

/// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(int n = 0) { reset(n); }

  void reset(int n) {
    parent_.resize(static_cast<std::size_t>(n));
    size_.assign(static_cast<std::size_t>(n), 1);
    std::iota(parent_.begin(), parent_.end(), 0);
    classes_ = n;
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --classes_;
    return true;
  }

  int classes() const { return classes_; }
  int size() const { return static_cast<int>(parent_.size()); }

  /// Canonical class labels 0..classes()-1 in order of first appearance.
  std::vector<int> labels() {
    std::vector<int> root_label(parent_.size(), -1);
    std::vector<int> out(parent_.size());
    int next = 0;
    for (int x = 0; x < size(); ++x) {
      const int r = find(x);
      if (root_label[r] < 0) root_label[r] = next++;
      out[x] = root_label[r];
    }
    return out;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int classes_ = 0;
};

}  // namespace quatwick
