#pragma once

#include <map>
#include <utility>
#include <vector>

#include "crystal/word.hpp"

namespace crystal {

// Finitely supported nonnegative integer matrix over a pair of alphabets.
struct BiwordMatrix {
  Alphabet row_alphabet;
  Alphabet col_alphabet;
  std::map<std::pair<Letter, Letter>, int> entries;  // positive counts only

  BiwordMatrix() = default;
  BiwordMatrix(Alphabet rows, Alphabet cols) : row_alphabet(rows), col_alphabet(cols) {}

  int at(Letter a, Letter b) const {
    auto it = entries.find({a, b});
    return it == entries.end() ? 0 : it->second;
  }
  void add(Letter a, Letter b, int count);

  int total() const;
  bool operator==(const BiwordMatrix& o) const;

  BiwordMatrix transposed() const;

  // Weight in an ambient gl_m, m >= every letter magnitude involved.
  std::vector<int> weight(int ambient) const;
};

// Words of equal length; the pairs (top_k, bottom_k) are kept sorted by
// top increasing, ties by bottom decreasing.
struct Biword {
  Alphabet top_alphabet;
  Alphabet bottom_alphabet;
  std::vector<Letter> top;
  std::vector<Letter> bottom;

  int size() const { return static_cast<int>(top.size()); }
  bool operator==(const Biword&) const = default;
};

Biword biword_of(const BiwordMatrix& m);
BiwordMatrix matrix_of(const Biword& bw);

// The rearrangement with the transposed multiplicity matrix: the result lives
// over (B, A), its top word is b^tau and its bottom word is a^tau.  An
// involution.
Biword tau_transpose(const Biword& bw);

}  // namespace crystal
