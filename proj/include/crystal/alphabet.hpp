#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crystal {

// A letter is an int: k in 1..n for the unbarred alphabet [n] = {1<...<n},
// -k for the barred letter k-bar in [n-bar] = {n-bar<...<1-bar}.  Integer
// order agrees with both linear orders, so letters compare with plain <.
using Letter = int;

enum class AlphabetKind { unbarred, barred };

enum class Dir { raise_op, lower_op };

struct Alphabet {
  AlphabetKind kind = AlphabetKind::unbarred;
  int n = 1;

  Alphabet() = default;
  Alphabet(AlphabetKind k, int size) : kind(k), n(size) {
    if (n < 1) throw std::invalid_argument("alphabet size must be positive");
  }
  static Alphabet unbarred(int n) { return {AlphabetKind::unbarred, n}; }
  static Alphabet barred(int n) { return {AlphabetKind::barred, n}; }

  bool operator==(const Alphabet&) const = default;

  bool contains(Letter a) const {
    return kind == AlphabetKind::unbarred ? (a >= 1 && a <= n) : (a >= -n && a <= -1);
  }

  // The opposite alphabet of the same size (used by the complement map).
  Alphabet opposite() const {
    return {kind == AlphabetKind::unbarred ? AlphabetKind::barred : AlphabetKind::unbarred, n};
  }

  // Order-reversing relabeling k <-> n+1-k (resp. on barred letters).
  Letter reversed(Letter a) const {
    return a > 0 ? n + 1 - a : -(n + 1 + a);
  }

  // Crystal indices are 1..n-1.
  int index_count() const { return n - 1; }

  std::string show(Letter a) const {
    return a > 0 ? std::to_string(a) : std::to_string(-a) + "~";
  }
};

// Single-letter crystal data at index i.  A letter k has eps_i = [k == i+1],
// phi_i = [k == i]; on barred letters the dual convention applies, so raising
// sends i-bar to (i+1)-bar.
inline int letter_eps(Letter a, int i) {
  return (a > 0 ? a == i + 1 : -a == i) ? 1 : 0;
}

inline int letter_phi(Letter a, int i) {
  return (a > 0 ? a == i : -a == i + 1) ? 1 : 0;
}

inline std::optional<Letter> letter_apply(Letter a, int i, Dir dir) {
  if (dir == Dir::raise_op) {
    if (a > 0 && a == i + 1) return i;
    if (a < 0 && -a == i) return -(i + 1);
  } else {
    if (a > 0 && a == i) return i + 1;
    if (a < 0 && -a == i + 1) return -i;
  }
  return std::nullopt;
}

// Contribution of one letter to the weight vector (coefficients of eps_1..eps_n).
inline void add_letter_weight(std::vector<int>& wt, Letter a) {
  if (a > 0)
    wt.at(a - 1) += 1;
  else
    wt.at(-a - 1) -= 1;
}

}  // namespace crystal
