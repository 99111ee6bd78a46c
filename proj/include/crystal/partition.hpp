#pragma once

#include <string>
#include <vector>

namespace crystal {

// Weakly decreasing nonnegative parts.  Trailing zero parts are kept: they fix
// an explicit row count, which matters for the row-indexed maps in this
// library (sigma complement, the c^- counting rule, skew recording tableaux).
class Partition {
 public:
  Partition() = default;
  // n_bound is the maximum permitted length (the n of P_n); parts.size() may
  // not exceed it.  Pass 0 to leave the length unconstrained.
  explicit Partition(std::vector<int> parts, int n_bound = 0);

  static Partition empty() { return Partition{}; }

  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i >= 0 && i < rows() ? parts_[i] : 0; }
  const std::vector<int>& parts() const { return parts_; }
  int n_bound() const { return n_bound_; }

  int cells() const;
  bool is_empty() const { return cells() == 0; }

  // Widest part (0 for the empty partition).
  int width() const { return part(0); }

  Partition padded(int len) const;
  Partition trimmed() const;

  bool contains(const Partition& inner) const;

  // Value equality ignores trailing zeros and the bound.
  bool operator==(const Partition& o) const;

  std::string show() const;

 private:
  std::vector<int> parts_;
  int n_bound_ = 0;
};

// A (possibly skew) shape with an orientation flag.  rotated = true means the
// 180-degree rotation of outer/inner, drawn bottom-right justified: display
// row t holds the cells of source row rows()-1-t, reversed.  A non-skew shape
// is the case inner = empty.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner, bool rotated);

  static SkewShape straight(Partition outer, bool rotated = false) {
    return SkewShape(std::move(outer), Partition::empty(), rotated);
  }

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  bool rotated() const { return rotated_; }

  int rows() const { return outer_.rows(); }
  int cells() const { return outer_.cells() - inner_.cells(); }
  bool is_straight() const { return inner_.is_empty(); }

  // Half-open 0-based column range of display row t.
  int col_begin(int t) const;
  int col_end(int t) const;
  int row_len(int t) const { return col_end(t) - col_begin(t); }

  // Display row of source row s (1-based source index as in the papers'
  // numbering) and back.
  int display_row_of_source(int s) const { return rotated_ ? rows() - s : s - 1; }
  int source_row_of_display(int t) const { return rotated_ ? rows() - t : t + 1; }

  bool operator==(const SkewShape& o) const;

  std::string show() const;

 private:
  Partition outer_, inner_;
  bool rotated_ = false;
};

}  // namespace crystal
