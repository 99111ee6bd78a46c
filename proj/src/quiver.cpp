#include "crystal/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace crystal {

Quiver::Quiver(int n_, int sink_) : n(n_), sink(sink_) {
  if (n < 2) throw std::invalid_argument("quiver needs n >= 2");
  if (sink < 1 || sink > n - 1) throw std::invalid_argument("sink out of range");
}

namespace {

// Arrow directions between Dynkin neighbours: toward[v] == true means the
// arrow between v and v+1 points v+1 -> v (vertices 1..n-1, slots 1..n-2).
struct Orientation {
  int n;
  std::vector<bool> left;  // left[v] (1-based slot v): arrow v+1 -> v

  explicit Orientation(const Quiver& q) : n(q.n), left(q.n - 1, false) {
    for (int v = 1; v <= n - 2; ++v) left[v] = v >= q.sink;
  }
  bool is_sink(int v) const {
    bool in_from_right = v == n - 1 || left[v];
    bool in_from_left = v == 1 || !left[v - 1];
    return in_from_left && in_from_right;
  }
  void reverse_at(int v) {
    if (v >= 2) left[v - 1] = !left[v - 1];
    if (v <= n - 2) left[v] = !left[v];
  }
};

}  // namespace

std::vector<int> adapted_word(const Quiver& q) {
  const int len = q.n * (q.n - 1) / 2;
  std::vector<int> word;
  word.reserve(len);
  std::vector<int> perm(q.n + 1);
  std::iota(perm.begin(), perm.end(), 0);
  // Depth-first over sink choices, keeping every beta_k a new positive root so
  // the result is reduced; smallest sink first makes the word deterministic
  // (and reproduces 1,2,1,3,2,1,... for the all-left orientation).
  auto rec = [&](auto&& self, Orientation o) -> bool {
    if (static_cast<int>(word.size()) == len) return true;
    for (int v = 1; v <= q.n - 1; ++v) {
      if (!o.is_sink(v) || perm[v] > perm[v + 1]) continue;
      word.push_back(v);
      std::swap(perm[v], perm[v + 1]);
      Orientation next = o;
      next.reverse_at(v);
      if (self(self, next)) return true;
      std::swap(perm[v], perm[v + 1]);
      word.pop_back();
    }
    return false;
  };
  Orientation o(q);
  if (!rec(rec, o)) throw std::logic_error("no adapted reduced word found");
  return word;
}

bool is_adapted(const Quiver& q, const std::vector<int>& word) {
  Orientation o(q);
  for (int v : word) {
    if (v < 1 || v > q.n - 1 || !o.is_sink(v)) return false;
    o.reverse_at(v);
  }
  return true;
}

std::vector<Root> root_order(int n, const std::vector<int>& word) {
  if (static_cast<int>(word.size()) != n * (n - 1) / 2)
    throw std::invalid_argument("word has the wrong length for w_0");
  std::vector<int> perm(n + 1);
  std::iota(perm.begin(), perm.end(), 0);  // perm = s_{i_1}...s_{i_{k-1}}
  std::vector<Root> roots;
  std::set<Root> seen;
  for (int ik : word) {
    if (ik < 1 || ik > n - 1) throw std::invalid_argument("index out of range");
    int a = perm[ik], b = perm[ik + 1];
    Root beta = a < b ? Root{a, b} : Root{b, a};
    if (a > b || !seen.insert(beta).second)
      throw std::invalid_argument("word is not reduced");
    roots.push_back(beta);
    std::swap(perm[ik], perm[ik + 1]);
  }
  return roots;
}

}  // namespace crystal
