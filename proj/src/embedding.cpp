#include "crystal/embedding.hpp"

#include <algorithm>
#include <stdexcept>

#include "crystal/insertion.hpp"
#include "crystal/skew_rsk.hpp"

namespace crystal {

EmbeddingContext make_context(const Partition& lambda, const Quiver& q, int d) {
  if (lambda.rows() > q.n) throw std::invalid_argument("lambda longer than n");
  Partition lam = lambda.padded(q.n);
  if (d < 0) d = lam.width();
  if (d < lam.width()) throw std::invalid_argument("d smaller than lambda_1");
  const int r = q.sink, n = q.n;
  std::vector<int> eta(r), zeta(n - r);
  for (int k = 0; k < r; ++k) eta[k] = d - lam.part(r - 1 - k);
  for (int k = 0; k < n - r; ++k) zeta[k] = lam.part(r + k);
  return {std::move(lam), q, d, Partition(eta), Partition(zeta)};
}

namespace {

void require_normal_over(const Tableau& s, AlphabetKind kind) {
  if (s.shape().rotated() || !s.shape().is_straight())
    throw std::invalid_argument("expected a normal straight-shape tableau");
  if (s.alphabet().kind != kind)
    throw std::invalid_argument("tableau over the wrong alphabet");
}

}  // namespace

SplitTrace split_tableau_trace(const Tableau& s, const EmbeddingContext& ctx) {
  require_normal_over(s, AlphabetKind::unbarred);
  const int n = ctx.quiver.n, r = ctx.quiver.sink, d = ctx.d;
  if (!(s.shape().outer() == ctx.lambda) || s.alphabet().n != n)
    throw std::invalid_argument("tableau does not match the context");
  const Partition lam = ctx.lambda.padded(n);

  // (i) remove the first r rows
  std::vector<std::vector<Letter>> plus_rows;
  for (int t = r; t < n; ++t)
    plus_rows.push_back(t < s.shape().rows() ? s.row(t) : std::vector<Letter>{});
  Tableau s_plus(SkewShape::straight(ctx.zeta), Alphabet::unbarred(n),
                 std::move(plus_rows));

  // (ii) split the top part by letter size
  std::vector<int> kappa(r, 0);
  std::vector<std::vector<Letter>> pprime_rows(r), q_rows(r);
  for (int t = 0; t < r && t < s.shape().rows(); ++t) {
    for (Letter l : s.row(t)) (l <= r ? pprime_rows[t] : q_rows[t]).push_back(l);
    kappa[t] = static_cast<int>(pprime_rows[t].size());
  }
  Tableau p_prime(SkewShape::straight(Partition(kappa)), Alphabet::unbarred(r),
                  std::move(pprime_rows));

  std::vector<int> nu(r);
  for (int k = 0; k < r; ++k) nu[k] = d - kappa[r - 1 - k];
  Tableau q(SkewShape(Partition(nu), ctx.eta, true), Alphabet::unbarred(n),
            std::move(q_rows));

  // (iii) complement the small-letter part
  Tableau p = sigma_complement(p_prime, d);

  // (iv)-(v) reverse skew insertion and rectify
  auto pre = skew_rsk_inverse(p, q);
  Tableau s_minus = rectify(pre.t);
  if (!(s_minus.shape().outer() == ctx.eta))
    throw std::logic_error("rectified tableau is not of shape eta");
  return {std::move(s_plus), std::move(p_prime), std::move(q),     std::move(p),
          std::move(pre.t),  std::move(s_minus), std::move(pre.m)};
}

SplitTriple split_tableau(const Tableau& s, const EmbeddingContext& ctx) {
  auto tr = split_tableau_trace(s, ctx);
  return {std::move(tr.s_plus), std::move(tr.s_minus), std::move(tr.m)};
}

LusztigDatum c_plus(const Tableau& s) {
  require_normal_over(s, AlphabetKind::unbarred);
  const int n = s.alphabet().n;
  LusztigDatum c(Quiver(n, 1));
  for (int t = 0; t < s.shape().rows(); ++t)
    for (Letter l : s.row(t))
      if (l > t + 1) c.bump(t + 1, l, +1);
  return c;
}

LusztigDatum c_minus_barred(const Tableau& t) {
  require_normal_over(t, AlphabetKind::barred);
  const int n = t.alphabet().n;
  LusztigDatum c(Quiver(n, n - 1));
  for (int row = 0; row < t.shape().rows(); ++row) {
    int j = n - row;  // entries of row (n-j+1) count toward column j
    if (j < 1) break;
    for (Letter l : t.row(row))
      if (-l < j) c.bump(-l, j, +1);
  }
  return c;
}

LusztigDatum c_minus(const Tableau& s, int d) {
  require_normal_over(s, AlphabetKind::unbarred);
  if (d < 0) d = s.shape().outer().width();
  return c_minus_barred(rectify(sigma_complement(s, d)));
}

LusztigDatum embed(const Tableau& s, const Quiver& q, int d) {
  require_normal_over(s, AlphabetKind::unbarred);
  if (s.alphabet().n != q.n) throw std::invalid_argument("alphabet does not match the quiver");
  if (q.sink == 1) return c_plus(s);
  if (q.sink == q.n - 1) return c_minus(s, d);
  auto ctx = make_context(s.shape().outer(), q, d);
  auto tr = split_tableau(s, ctx);
  const int n = q.n, r = q.sink;
  LusztigDatum c(q);
  for (int i = 1; i <= r; ++i)
    for (int j = r + 1; j <= n; ++j) c.set(i, j, tr.m.at(-i, j));
  for (int row = 0; row < tr.s_minus.shape().rows() && row < r; ++row) {
    int j = r - row;  // c^- counting on s_minus over [r-bar]
    for (Letter l : tr.s_minus.row(row))
      if (-l < j) c.bump(-l, j, +1);
  }
  for (int k = 0; k < tr.s_plus.shape().rows(); ++k)
    for (Letter l : tr.s_plus.row(k))
      if (l > r + k + 1) c.bump(r + k + 1, l, +1);
  return c;
}

namespace {

// Baseline-filled row: `count` copies of base, then the given tail letters.
std::vector<Letter> baseline_row(Letter base, int count, std::vector<Letter> tail) {
  std::vector<Letter> row(count, base);
  row.insert(row.end(), tail.begin(), tail.end());
  return row;
}

}  // namespace

Tableau large_tableau(const LusztigDatum& c) {
  const int n = c.n(), r = c.quiver().sink;
  const int gap = c.coord_sum() + 1;
  std::vector<int> lam(n);
  for (int i = 0; i < n; ++i) lam[i] = (n - 1 - i) * gap;
  const Partition lambda(lam);
  const int d = lambda.width();

  if (r == 1) {
    std::vector<std::vector<Letter>> rows;
    for (int i = 1; i <= n; ++i) {
      std::vector<Letter> tail;
      int extra = 0;
      for (int j = i + 1; j <= n; ++j) {
        tail.insert(tail.end(), c.at(i, j), j);
        extra += c.at(i, j);
      }
      rows.push_back(baseline_row(i, lam[i - 1] - extra, std::move(tail)));
    }
    return Tableau(SkewShape::straight(lambda), Alphabet::unbarred(n), std::move(rows));
  }

  if (r == n - 1) {
    // Build the barred tableau with c^- counts, then pull it back through
    // antinormalize and the exchanged-alphabet complement.
    std::vector<int> eta(n);
    for (int k = 0; k < n; ++k) eta[k] = (n - 1 - k) * gap;
    std::vector<std::vector<Letter>> rows;
    for (int k = 1; k <= n; ++k) {
      int j = n - k + 1;
      std::vector<Letter> tail;
      int extra = 0;
      for (int i = j - 1; i >= 1; --i) {
        tail.insert(tail.end(), c.at(i, j), -i);
        extra += c.at(i, j);
      }
      rows.push_back(baseline_row(-j, eta[k - 1] - extra, std::move(tail)));
    }
    Tableau t_bar(SkewShape::straight(Partition(eta)), Alphabet::barred(n),
                  std::move(rows));
    Tableau s = sigma_complement(antinormalize(t_bar), d);
    if (!(s.shape().outer() == lambda))
      throw std::logic_error("large tableau reconstruction missed its shape");
    return s;
  }

  auto parts = split(c);
  auto ctx = make_context(lambda, c.quiver(), d);

  std::vector<std::vector<Letter>> minus_rows;
  for (int k = 1; k <= r; ++k) {
    int j = r - k + 1;
    std::vector<Letter> tail;
    int extra = 0;
    for (int i = j - 1; i >= 1; --i) {
      tail.insert(tail.end(), parts.c_j1.at(i, j), -i);
      extra += parts.c_j1.at(i, j);
    }
    minus_rows.push_back(baseline_row(-j, ctx.eta.part(k - 1) - extra, std::move(tail)));
  }
  Tableau s_minus(SkewShape::straight(ctx.eta), Alphabet::barred(r),
                  std::move(minus_rows));

  std::vector<std::vector<Letter>> plus_rows;
  for (int k = 1; k <= n - r; ++k) {
    std::vector<Letter> tail;
    int extra = 0;
    for (int j = r + k + 1; j <= n; ++j) {
      tail.insert(tail.end(), parts.c_j2.at(r + k, j), j);
      extra += parts.c_j2.at(r + k, j);
    }
    plus_rows.push_back(baseline_row(r + k, ctx.zeta.part(k - 1) - extra, std::move(tail)));
  }
  Tableau s_plus(SkewShape::straight(ctx.zeta), Alphabet::unbarred(n),
                 std::move(plus_rows));

  BiwordMatrix m(Alphabet::barred(r), Alphabet::unbarred(n));
  for (int i = 1; i <= r; ++i)
    for (int j = r + 1; j <= n; ++j) m.add(-i, j, parts.c_j.at(i, j));

  // Steps (v) down to (i), inverted.
  Tableau t = antinormalize(s_minus);
  auto pq = skew_rsk(t, m);
  Tableau p_prime = sigma_complement(pq.p, d);

  std::vector<std::vector<Letter>> rows;
  for (int i = 0; i < r; ++i) {
    std::vector<Letter> row = p_prime.row(i);
    const auto& qrow = pq.q.row(i);
    row.insert(row.end(), qrow.begin(), qrow.end());
    if (static_cast<int>(row.size()) != lambda.part(i))
      throw std::logic_error("large tableau row length mismatch");
    rows.push_back(std::move(row));
  }
  for (int k = 0; k < n - r; ++k) rows.push_back(s_plus.row(k));
  return Tableau(SkewShape::straight(lambda), Alphabet::unbarred(n), std::move(rows));
}

LusztigDatum transition(const LusztigDatum& c, const Quiver& to) {
  if (to.n != c.n()) throw std::invalid_argument("transition must preserve n");
  Tableau s = large_tableau(c);
  return embed(s, to, s.shape().outer().width());
}

}  // namespace crystal
