#pragma once

#include <utility>
#include <vector>

#include "crystal/tableau.hpp"

namespace crystal {

// 180-degree rotation combined with the order-reversing relabeling of the
// alphabet.  An involution exchanging rotated straight-shape tableaux and
// normal ones; it preserves semistandardness and Knuth classes.
Tableau rotate_relabel(const Tableau& t);

// Reverse column insertion into a rotated tableau: rotate, relabel, run
// Schensted column insertion (the incoming letter bumps the topmost entry
// weakly above it, or lands at the bottom of the column), rotate back.  The
// shape grows by one corner cell.
Tableau column_insert(const Tableau& rotated, Letter a);

// The unique normal-shape tableau Knuth equivalent to t (t rotated, possibly
// skew).  Computed by row-inserting the row word.
Tableau rectify(const Tableau& t);

// Inverse of rectify on straight shapes: replay the reading word a_1...a_r of
// a normal tableau as ((a_r <- a_{r-1}) <- ...) <- a_1.
Tableau antinormalize(const Tableau& normal);

// Column-wise alphabet complement.  A normal straight tableau of shape lambda
// over one alphabet maps to the rotated tableau of shape (d^n)/lambda over the
// opposite alphabet (n = alphabet size, d >= lambda_1); a rotated straight
// input of that form maps back to the normal tableau.  Column i of the output
// is the complement of column i of the input.
Tableau sigma_complement(const Tableau& t, int d);

namespace detail {

// Internal left-justified filling used by the insertion routines.
using Rows = std::vector<std::vector<Letter>>;

Rows to_normal_filling(const Tableau& rotated);
Tableau from_normal_filling(Rows rows, Alphabet a, int min_rows = 0);

// Returns the (row, col) of the added cell, 0-based.
std::pair<int, int> colins(Rows& rows, Letter x);
// Undo a column insertion that ended at (row, col); returns the letter that
// was originally inserted.  Throws if the state is not reachable that way.
Letter uncolins(Rows& rows, int row, int col);

Rows row_insert_word(const std::vector<Letter>& word);

}  // namespace detail

}  // namespace crystal
