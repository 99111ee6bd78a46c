#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystal/alphabet.hpp"
#include "crystal/partition.hpp"
#include "crystal/word.hpp"

namespace crystal {

// A semistandard filling of a SkewShape.  rows_[t] lists display row t left to
// right; for rotated shapes the display is bottom-right justified, and the
// semistandard conditions (rows weakly increase, columns strictly increase
// top to bottom) are checked on the display grid in both orientations.
class Tableau {
 public:
  Tableau() = default;
  Tableau(SkewShape shape, Alphabet alphabet, std::vector<std::vector<Letter>> rows);

  static Tableau empty(Alphabet a) {
    return Tableau(SkewShape::straight(Partition::empty()), a, {});
  }
  // Row i filled with letter i (unbarred) resp. (n-i+1)-bar (barred).
  static Tableau highest_weight(const Partition& lambda, Alphabet a);

  const SkewShape& shape() const { return shape_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<std::vector<Letter>>& rows() const { return rows_; }
  const std::vector<Letter>& row(int t) const { return rows_.at(t); }
  int cells() const { return shape_.cells(); }

  // Entry at display row t, absolute display column c.
  Letter at(int t, int c) const;

  // Rows top to bottom, right to left in each row.
  Word reading_word() const;
  // Rows bottom to top, left to right in each row (the standard row word used
  // for Knuth equivalence).
  Word row_word() const;

  std::vector<int> weight() const;

  // Equal content: same alphabet and orientation, same cells after dropping
  // empty boundary rows.
  bool operator==(const Tableau& o) const;

  std::string show() const;

 private:
  SkewShape shape_;
  Alphabet alphabet_;
  std::vector<std::vector<Letter>> rows_;
};

struct TableauIndexStats {
  int eps = 0;
  int phi = 0;
};

TableauIndexStats tableau_index_stats(const Tableau& t, int i);

// Crystal operator through the reading word; the changed letter is written
// back into its cell.  Null when the operator kills the element.
std::optional<Tableau> tableau_apply(const Tableau& t, int i, Dir dir);

}  // namespace crystal
