#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace cubelab {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
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
    return true;
  }

  bool same(int a, int b) { return find(a) == find(b); }

  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

// A partition of {0,...,n-1}. Class ids are assigned in order of each
// class's least member, so the numbering is canonical.
struct Partition {
  std::vector<int> class_of;              // element -> class id
  std::vector<std::vector<int>> classes;  // class id -> sorted members

  static Partition from_union_find(UnionFind& uf) {
    const int n = uf.size();
    Partition p;
    p.class_of.assign(n, -1);
    for (int x = 0; x < n; ++x) {
      int r = uf.find(x);
      if (p.class_of[r] < 0) {
        p.class_of[r] = static_cast<int>(p.classes.size());
        p.classes.push_back({});
      }
      p.class_of[x] = p.class_of[r];
      p.classes[static_cast<size_t>(p.class_of[x])].push_back(x);
    }
    return p;
  }

  int num_classes() const { return static_cast<int>(classes.size()); }

  bool same(int a, int b) const { return class_of[a] == class_of[b]; }
};

}  // namespace cubelab
