#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "crystal/alphabet.hpp"

namespace crystal {

// Sentinel for the -infinity value of eps/phi.  Small enough that adding
// ordinary pairings cannot overflow, large enough in magnitude to stay below
// every finite statistic.
constexpr int kNegInf = std::numeric_limits<int>::min() / 4;

inline bool is_finite(int v) { return v > kNegInf / 2; }
inline int xadd(int v, int d) { return is_finite(v) ? v + d : kNegInf; }

// Statistics of one tensor factor at a fixed crystal index i.
// wt_h = <wt(factor), h_i>; equals phi - eps whenever both are finite.
struct FactorStats {
  int eps = 0;
  int phi = 0;
  int wt_h = 0;
};

// Tensor product statistics of a factor sequence at a fixed index.
int tensor_eps(const std::vector<FactorStats>& f);
int tensor_phi(const std::vector<FactorStats>& f);

// Which factor the operator acts on under the iterated tensor rule.
// Returns -1 for an empty factor list.  The chosen factor's own operator may
// still yield null; that null is the null of the whole tensor.
int tensor_route(const std::vector<FactorStats>& f, Dir dir);

// A finite word w_1...w_r, identified with w_1 (x) ... (x) w_r.
struct Word {
  Alphabet alphabet;
  std::vector<Letter> letters;

  Word() = default;
  Word(Alphabet a, std::vector<Letter> ls);

  bool operator==(const Word&) const = default;
  int size() const { return static_cast<int>(letters.size()); }
  std::vector<int> weight() const;
  std::string show() const;
};

struct WordIndexStats {
  int eps = 0;
  int phi = 0;
  int raise_pos = -1;  // letter changed by e_i, -1 if killed
  int lower_pos = -1;  // letter changed by f_i, -1 if killed
};

WordIndexStats word_index_stats(const Word& w, int i);

// The signature rule: one letter changes, or null when the operator kills w.
std::optional<Word> word_apply(const Word& w, int i, Dir dir);

}  // namespace crystal
