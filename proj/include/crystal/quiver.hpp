#pragma once

#include <utility>
#include <vector>

namespace crystal {

// The type A_{n-1} orientation 1 -> ... -> r <- ... <- n-1 with unique sink r.
// r = 1 is the all-left orientation Omega^+, r = n-1 the all-right Omega^-.
struct Quiver {
  int n = 2;
  int sink = 1;

  Quiver() = default;
  Quiver(int n_, int sink_);

  bool operator==(const Quiver&) const = default;

  Quiver reflected() const { return Quiver(n, n - sink); }
};

using Root = std::pair<int, int>;  // eps_i - eps_j, 1 <= i < j <= n

// A reduced word for w_0 adapted to q, built greedily: always reverse the
// smallest available sink.  Length n(n-1)/2.
std::vector<int> adapted_word(const Quiver& q);

bool is_adapted(const Quiver& q, const std::vector<int>& word);

// The total order beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}) on the positive
// roots induced by a reduced word.  Throws if the word is not reduced (some
// beta_k fails to be a new positive root).
std::vector<Root> root_order(int n, const std::vector<int>& word);

}  // namespace crystal
