#include "crystal/skew_rsk.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace crystal {

SkewRSKPair skew_rsk(const Tableau& t, const BiwordMatrix& m) {
  if ((!t.shape().rotated() && t.cells() > 0) || !t.shape().is_straight())
    throw std::invalid_argument("skew_rsk expects a rotated straight-shape tableau");
  if (!(m.row_alphabet == t.alphabet()))
    throw std::invalid_argument("matrix row alphabet does not match the tableau");

  const Alphabet a_alpha = t.alphabet();
  const Alphabet b_alpha = m.col_alphabet;
  const Partition lambda = t.shape().outer();

  Biword tau = tau_transpose(biword_of(m));  // top = b^tau, bottom = a^tau
  const int r = tau.size();

  auto rows = detail::to_normal_filling(t);
  // Cell (source row, source col), 1-based, of step i together with b^tau_{r-i+1}.
  std::vector<std::tuple<int, int, Letter>> recorded;
  for (int k = r - 1; k >= 0; --k) {
    auto [ri, ci] = detail::colins(rows, a_alpha.reversed(tau.bottom[k]));
    recorded.emplace_back(ri + 1, ci + 1, tau.top[k]);
  }

  int explicit_rows = std::max<int>(t.shape().rows(), static_cast<int>(rows.size()));
  Tableau p = detail::from_normal_filling(std::move(rows), a_alpha, explicit_rows);

  const Partition mu = p.shape().outer();
  const int mrows = mu.rows();
  const int width = mu.width();
  SkewShape qshape(mu, lambda, true);
  std::map<std::pair<int, int>, Letter> cell;  // (display row, display col)
  for (auto [sr, sc, b] : recorded) cell[{mrows - sr, width - sc}] = b;
  std::vector<std::vector<Letter>> qrows(mrows);
  for (int dt = 0; dt < mrows; ++dt)
    for (int c = qshape.col_begin(dt); c < qshape.col_end(dt); ++c) {
      auto it = cell.find({dt, c});
      if (it == cell.end()) throw std::logic_error("recording cell mismatch");
      qrows[dt].push_back(it->second);
    }
  Tableau q(qshape, b_alpha, std::move(qrows));
  return {std::move(p), std::move(q)};
}

SkewRSKPreimage skew_rsk_inverse(const Tableau& p, const Tableau& q) {
  if ((!p.shape().rotated() && p.cells() > 0) || !p.shape().is_straight())
    throw std::invalid_argument("p must have a rotated straight shape");
  if (!q.shape().rotated())
    throw std::invalid_argument("q must have a rotated shape");
  if (!(q.shape().outer() == p.shape().outer()))
    throw std::invalid_argument("shape of q does not sit on the shape of p");

  const Alphabet a_alpha = p.alphabet();
  const Partition lambda = q.shape().inner();
  const int mrows = q.shape().rows();
  const int width = q.shape().outer().width();

  // Recorded cells in source coordinates with their entries; removal order is
  // the exact reverse of insertion: entries increasing, ties by source column
  // decreasing (the rightmost-added cell of an equal-entry strip comes first).
  std::vector<std::tuple<Letter, int, int>> removals;  // (entry, -col, row)
  for (int dt = 0; dt < mrows; ++dt)
    for (int c = q.shape().col_begin(dt); c < q.shape().col_end(dt); ++c)
      removals.emplace_back(q.at(dt, c), -(width - c), mrows - dt);
  std::sort(removals.begin(), removals.end());

  auto rows = detail::to_normal_filling(p);
  BiwordMatrix m(a_alpha, q.alphabet());
  for (auto [entry, negcol, srow] : removals) {
    Letter x = detail::uncolins(rows, srow - 1, -negcol - 1);
    m.add(a_alpha.reversed(x), entry, 1);
  }

  Tableau t = detail::from_normal_filling(std::move(rows), a_alpha, lambda.rows());
  if (!(t.shape().outer() == lambda))
    throw std::invalid_argument("reverse insertion did not reach the inner shape");
  return {std::move(t), std::move(m)};
}

}  // namespace crystal
