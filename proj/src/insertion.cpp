#include "crystal/insertion.hpp"

#include <algorithm>
#include <stdexcept>

namespace crystal {

namespace detail {

Rows to_normal_filling(const Tableau& rotated) {
  const auto& rs = rotated.rows();
  Rows out;
  for (auto it = rs.rbegin(); it != rs.rend(); ++it) {
    std::vector<Letter> row(it->rbegin(), it->rend());
    for (Letter& l : row) l = rotated.alphabet().reversed(l);
    out.push_back(std::move(row));
  }
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

Tableau from_normal_filling(Rows rows, Alphabet a, int min_rows) {
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  while (static_cast<int>(parts.size()) < min_rows) parts.push_back(0);
  Partition outer(parts);
  std::vector<std::vector<Letter>> disp(parts.size());
  for (size_t k = 0; k < rows.size(); ++k) {
    std::vector<Letter> row(rows[k].rbegin(), rows[k].rend());
    for (Letter& l : row) l = a.reversed(l);
    disp[parts.size() - 1 - k] = std::move(row);
  }
  return Tableau(SkewShape::straight(outer, true), a, std::move(disp));
}

std::pair<int, int> colins(Rows& rows, Letter x) {
  int col = 0;
  for (;;) {
    // Column entries are rows[t][col] for the rows long enough.
    int height = 0;
    while (height < static_cast<int>(rows.size()) &&
           static_cast<int>(rows[height].size()) > col)
      ++height;
    int bump = -1;
    for (int t = 0; t < height; ++t)
      if (rows[t][col] >= x) {
        bump = t;
        break;
      }
    if (bump < 0) {
      if (height == static_cast<int>(rows.size())) rows.emplace_back();
      if (static_cast<int>(rows[height].size()) != col)
        throw std::logic_error("column insertion broke the shape");
      rows[height].push_back(x);
      return {height, col};
    }
    std::swap(rows[bump][col], x);
    ++col;
  }
}

Letter uncolins(Rows& rows, int row, int col) {
  if (row >= static_cast<int>(rows.size()) ||
      static_cast<int>(rows[row].size()) != col + 1)
    throw std::invalid_argument("cell is not a removable corner");
  if (row + 1 < static_cast<int>(rows.size()) &&
      static_cast<int>(rows[row + 1].size()) > col)
    throw std::invalid_argument("cell is not a removable corner");
  Letter y = rows[row].back();
  rows[row].pop_back();
  if (rows[row].empty() && row + 1 == static_cast<int>(rows.size())) rows.pop_back();
  for (int c = col - 1; c >= 0; --c) {
    int t = -1;
    for (int s = 0; s < static_cast<int>(rows.size()); ++s) {
      if (static_cast<int>(rows[s].size()) <= c) break;
      if (rows[s][c] <= y) t = s;
    }
    if (t < 0) throw std::invalid_argument("reverse bumping failed; pair not in the image");
    std::swap(rows[t][c], y);
  }
  return y;
}

Rows row_insert_word(const std::vector<Letter>& word) {
  Rows rows;
  for (Letter x : word) {
    int t = 0;
    for (;;) {
      if (t == static_cast<int>(rows.size())) {
        rows.push_back({x});
        break;
      }
      auto& r = rows[t];
      auto it = std::upper_bound(r.begin(), r.end(), x);
      if (it == r.end()) {
        r.push_back(x);
        break;
      }
      std::swap(*it, x);
      ++t;
    }
  }
  return rows;
}

}  // namespace detail

Tableau rotate_relabel(const Tableau& t) {
  const Alphabet a = t.alphabet();
  if (t.shape().rotated()) {
    auto rows = detail::to_normal_filling(t);
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Tableau(SkewShape::straight(Partition(parts)), a, std::move(rows));
  }
  if (!t.shape().is_straight())
    throw std::invalid_argument("rotate_relabel expects a straight shape");
  detail::Rows rows(t.rows());
  return detail::from_normal_filling(std::move(rows), a);
}

Tableau column_insert(const Tableau& rotated, Letter a) {
  if ((!rotated.shape().rotated() && rotated.cells() > 0) || !rotated.shape().is_straight())
    throw std::invalid_argument("column_insert expects a rotated straight shape");
  auto rows = detail::to_normal_filling(rotated);
  detail::colins(rows, rotated.alphabet().reversed(a));
  return detail::from_normal_filling(std::move(rows), rotated.alphabet());
}

Tableau rectify(const Tableau& t) {
  auto word = t.row_word();
  auto rows = detail::row_insert_word(word.letters);
  std::vector<int> parts;
  for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Tableau(SkewShape::straight(Partition(parts)), t.alphabet(), std::move(rows));
}

Tableau antinormalize(const Tableau& normal) {
  if (normal.shape().rotated() || !normal.shape().is_straight())
    throw std::invalid_argument("antinormalize expects a normal straight shape");
  auto word = normal.reading_word().letters;
  detail::Rows rows;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    detail::colins(rows, normal.alphabet().reversed(*it));
  return detail::from_normal_filling(std::move(rows), normal.alphabet(),
                                     normal.shape().rows());
}

Tableau sigma_complement(const Tableau& t, int d) {
  const Alphabet a = t.alphabet();
  const Alphabet b = a.opposite();
  const int n = a.n;
  if (!t.shape().is_straight())
    throw std::invalid_argument("sigma_complement expects a straight shape");

  // Column contents of the input, indexed by absolute display column.
  auto column = [&](int c) {
    std::vector<Letter> col;
    for (int tr = 0; tr < t.shape().rows(); ++tr)
      if (c >= t.shape().col_begin(tr) && c < t.shape().col_end(tr))
        col.push_back(t.at(tr, c));
    return col;
  };
  auto complement = [&](const std::vector<Letter>& col) {
    std::vector<Letter> out;
    for (int k = 1; k <= n; ++k) {
      Letter candidate = b.kind == AlphabetKind::barred ? -k : k;
      Letter mirror = -candidate;
      if (std::find(col.begin(), col.end(), mirror) == col.end()) out.push_back(candidate);
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  if (!t.shape().rotated()) {
    // lambda -> (d^n)/lambda, realized as the rotated shape
    // (d-lambda_n, ..., d-lambda_1) with n explicit rows.
    if (t.shape().rows() > n) throw std::invalid_argument("shape longer than alphabet");
    const Partition lambda = t.shape().outer().padded(n);
    if (d < lambda.width()) throw std::invalid_argument("d smaller than lambda_1");
    std::vector<int> nu(n);
    for (int i = 0; i < n; ++i) nu[i] = d - lambda.part(n - 1 - i);
    SkewShape shape(Partition(nu), Partition::empty(), true);
    std::vector<std::vector<Letter>> rows(n);
    for (int c = 0; c < d; ++c) {
      auto comp = complement(column(c));
      // Row tr+1 of (d^n)/lambda covers column c+1 exactly when lambda_{tr+1} <= c.
      size_t k = 0;
      for (int tr = 0; tr < n; ++tr)
        if (lambda.part(tr) <= c) rows[tr].push_back(comp.at(k++));
      if (k != comp.size()) throw std::logic_error("column complement size mismatch");
    }
    return Tableau(shape, b, std::move(rows));
  }

  // Rotated straight input of shape nu^pi == (d^n)/kappa with
  // kappa_i = d - nu_{n+1-i}; output is the normal tableau of shape kappa.
  if (t.shape().rows() > n) throw std::invalid_argument("shape longer than alphabet");
  const Partition nu = t.shape().outer().padded(n);
  if (d < nu.width()) throw std::invalid_argument("d smaller than the widest row");
  std::vector<int> kappa(n);
  for (int i = 0; i < n; ++i) kappa[i] = d - nu.part(n - 1 - i);
  SkewShape shape(Partition(kappa), Partition::empty(), false);
  std::vector<std::vector<Letter>> rows(n);
  // The picture (d^n)/kappa places input display column c at picture column
  // c + (d - nu_1); picture columns left of that are empty input columns.
  const int shift = d - nu.width();
  for (int c = 0; c < kappa[0]; ++c) {
    std::vector<Letter> incol;
    if (c - shift >= 0 && c - shift < nu.width()) incol = column(c - shift);
    auto comp = complement(incol);
    size_t k = 0;
    for (int tr = 0; tr < n; ++tr)
      if (c < kappa[tr]) rows[tr].push_back(comp.at(k++));
    if (k != comp.size()) throw std::logic_error("column complement size mismatch");
  }
  return Tableau(shape, b, std::move(rows));
}

}  // namespace crystal
