#include "crystal/lusztig.hpp"

#include <algorithm>
#include <stdexcept>

namespace crystal {

int LusztigDatum::idx(int i, int j) const {
  const int n = quiver_.n;
  if (i < 1 || i >= j || j > n) throw std::out_of_range("root out of range");
  return (i - 1) * n - i * (i - 1) / 2 + (j - i - 1);
}

void LusztigDatum::set(int i, int j, int v) {
  if (v < 0) throw std::invalid_argument("negative coordinate");
  c_[idx(i, j)] = v;
}

void LusztigDatum::bump(int i, int j, int delta) {
  int& v = c_[idx(i, j)];
  v += delta;
  if (v < 0) throw std::logic_error("coordinate driven negative");
}

int LusztigDatum::coord_sum() const {
  int s = 0;
  for (int v : c_) s += v;
  return s;
}

std::vector<int> LusztigDatum::weight() const {
  const int n = quiver_.n;
  std::vector<int> wt(n, 0);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int v = at(i, j);
      wt[i - 1] -= v;
      wt[j - 1] += v;
    }
  return wt;
}

LusztigDatum LusztigDatum::reflected() const {
  const int n = quiver_.n;
  LusztigDatum out(quiver_.reflected());
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) out.set(n + 1 - j, n + 1 - i, at(i, j));
  return out;
}

std::vector<std::tuple<int, int, int>> LusztigDatum::nonzeros() const {
  std::vector<std::tuple<int, int, int>> out;
  const int n = quiver_.n;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (at(i, j) > 0) out.emplace_back(i, j, at(i, j));
  return out;
}

std::string LusztigDatum::show() const {
  std::string s = "{n=" + std::to_string(quiver_.n) + ",sink=" + std::to_string(quiver_.sink);
  for (auto [i, j, v] : nonzeros())
    s += " c" + std::to_string(i) + std::to_string(j) + "=" + std::to_string(v);
  return s + "}";
}

namespace {

// Column visited at scan step k (1-based), for i < r.
int scan_col(int n, int r, int k) { return k <= n - r ? r + k : n - k + 1; }

OperatorScan scan_below_sink(const LusztigDatum& c, int i) {
  const int n = c.n(), r = c.quiver().sink;
  OperatorScan sc;
  sc.sums.reserve(n - i);
  int s = 0;
  for (int k = 1; k <= n - i; ++k) {
    if (k == 1) {
      s = c.at(i, r + 1);
    } else if (k <= n - r) {
      s += c.at(i, r + k) - c.at(i + 1, r + k - 1);
    } else if (k == n - r + 1) {
      s += c.at(i, r) - c.at(i + 1, n);
    } else {
      int j = n - k + 1;
      s += c.at(i, j) - c.at(i + 1, j + 1);
    }
    sc.sums.push_back(s);
  }
  sc.max = *std::max_element(sc.sums.begin(), sc.sums.end());
  for (int k = 1; k <= n - i; ++k)
    if (sc.sums[k - 1] == sc.max) {
      if (sc.k0 == 0) sc.k0 = k;
      sc.k1 = k;
    }
  return sc;
}

}  // namespace

OperatorScan operator_scan(const LusztigDatum& c, int i) {
  const int r = c.quiver().sink;
  if (i < 1 || i >= c.n()) throw std::invalid_argument("index out of range");
  if (i == r) throw std::invalid_argument("the scan is defined away from the sink");
  return i < r ? scan_below_sink(c, i) : scan_below_sink(c.reflected(), c.n() - i);
}

std::vector<int> datum_weight(const LusztigDatum& c) { return c.weight(); }

int datum_eps(const LusztigDatum& c, int i) {
  const int r = c.quiver().sink;
  if (i < 1 || i >= c.n()) throw std::invalid_argument("index out of range");
  if (i == r) return c.at(r, r + 1);
  return std::max(operator_scan(c, i).max, 0);
}

int datum_phi(const LusztigDatum& c, int i) {
  auto wt = c.weight();
  return wt[i - 1] - wt[i] + datum_eps(c, i);
}

namespace {

std::optional<LusztigDatum> apply_below_sink(const LusztigDatum& c, int i, Dir dir) {
  const int n = c.n(), r = c.quiver().sink;
  auto sc = scan_below_sink(c, i);
  LusztigDatum out = c;
  if (dir == Dir::raise_op) {
    if (sc.max == 0) return std::nullopt;
    int j = scan_col(n, r, sc.k0);
    out.bump(i, j, -1);
    if (j != i + 1) out.bump(i + 1, j, +1);
  } else {
    int j = scan_col(n, r, sc.k1);
    out.bump(i, j, +1);
    if (j != i + 1) out.bump(i + 1, j, -1);
  }
  return out;
}

}  // namespace

std::optional<LusztigDatum> apply_direct(const LusztigDatum& c, int i, Dir dir) {
  const int r = c.quiver().sink;
  if (i < 1 || i >= c.n()) throw std::invalid_argument("index out of range");
  if (i == r) {
    LusztigDatum out = c;
    if (dir == Dir::lower_op) {
      out.bump(r, r + 1, +1);
      return out;
    }
    if (c.at(r, r + 1) == 0) return std::nullopt;
    out.bump(r, r + 1, -1);
    return out;
  }
  if (i < r) return apply_below_sink(c, i, dir);
  auto res = apply_below_sink(c.reflected(), c.n() - i, dir);
  if (!res) return std::nullopt;
  return res->reflected();
}

DatumSplit split(const LusztigDatum& c) {
  const int n = c.n(), r = c.quiver().sink;
  DatumSplit s{LusztigDatum(c.quiver()), LusztigDatum(c.quiver()), LusztigDatum(c.quiver())};
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int v = c.at(i, j);
      if (i <= r && j > r)
        s.c_j.set(i, j, v);
      else if (j <= r)
        s.c_j1.set(i, j, v);
      else
        s.c_j2.set(i, j, v);
    }
  return s;
}

LusztigDatum merge(const DatumSplit& s) {
  if (!(s.c_j.quiver() == s.c_j1.quiver()) || !(s.c_j.quiver() == s.c_j2.quiver()))
    throw std::invalid_argument("split parts live on different quivers");
  const int n = s.c_j.n();
  LusztigDatum out(s.c_j.quiver());
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int parts = (s.c_j.at(i, j) > 0) + (s.c_j1.at(i, j) > 0) + (s.c_j2.at(i, j) > 0);
      if (parts > 1) throw std::invalid_argument("overlapping supports in merge");
      out.set(i, j, s.c_j.at(i, j) + s.c_j1.at(i, j) + s.c_j2.at(i, j));
    }
  return out;
}

namespace {

// A word together with the root each letter belongs to.
struct EncodedWord {
  Word w;
  std::vector<Root> roots;

  void append(Alphabet a, Letter l, Root root, int count) {
    for (int k = 0; k < count; ++k) {
      w.letters.push_back(l);
      roots.push_back(root);
    }
    w.alphabet = a;
  }
};

// a^tau of M(c^J) in I_{([n]\[r]) x [r-bar]} order: columns ascending, barred
// row letters descending within a column.
EncodedWord cj_a_tau(const LusztigDatum& cj, int r) {
  EncodedWord ew;
  Alphabet a = Alphabet::barred(r);
  ew.w.alphabet = a;
  for (int j = r + 1; j <= cj.n(); ++j)
    for (int i = 1; i <= r; ++i) ew.append(a, -i, {i, j}, cj.at(i, j));
  return ew;
}

// b of M(c^J) in I_{[r-bar] x ([n]\[r])} order: rows ascending in [r-bar]
// (i = r..1), columns descending within a row.
EncodedWord cj_b(const LusztigDatum& cj, int r) {
  EncodedWord ew;
  Alphabet a = Alphabet::unbarred(cj.n());
  ew.w.alphabet = a;
  for (int i = r; i >= 1; --i)
    for (int j = cj.n(); j >= r + 1; --j) ew.append(a, j, {i, j}, cj.at(i, j));
  return ew;
}

// Bottom word of M^-(c_J1) over [r] x [r-bar]: m_{r-j+1, i-bar} = c_ij, rows
// ascending (j = r..2), barred letters descending within a row (i = 1..j-1).
EncodedWord cj1_bottom(const LusztigDatum& c1, int r) {
  EncodedWord ew;
  Alphabet a = Alphabet::barred(r);
  ew.w.alphabet = a;
  for (int j = r; j >= 2; --j)
    for (int i = 1; i < j; ++i) ew.append(a, -i, {i, j}, c1.at(i, j));
  return ew;
}

// Bottom word of M^+(c_J2) over ([n]\[r])^2: rows ascending, columns
// descending within a row.
EncodedWord cj2_bottom(const LusztigDatum& c2, int r) {
  EncodedWord ew;
  Alphabet a = Alphabet::unbarred(c2.n());
  ew.w.alphabet = a;
  for (int i = r + 1; i < c2.n(); ++i)
    for (int j = c2.n(); j > i; --j) ew.append(a, j, {i, j}, c2.at(i, j));
  return ew;
}

int pair_wt_h(const LusztigDatum& part, int i) {
  auto wt = part.weight();
  return wt[i - 1] - wt[i];
}

}  // namespace

std::optional<LusztigDatum> apply_tensor(const LusztigDatum& c, int i, Dir dir) {
  const int n = c.n(), r = c.quiver().sink;
  if (i < 1 || i >= n) throw std::invalid_argument("index out of range");
  DatumSplit parts = split(c);

  enum FactorId { FJ, FJ1, FJ2 };
  std::vector<FactorId> ids{FJ};
  if (r >= 2) ids.push_back(FJ1);
  if (r <= n - 2) ids.push_back(FJ2);

  std::vector<FactorStats> stats;
  for (FactorId id : ids) {
    FactorStats fs;
    if (id == FJ) {
      fs.wt_h = pair_wt_h(parts.c_j, i);
      if (i == r)
        fs.eps = parts.c_j.at(r, r + 1);
      else if (i < r)
        fs.eps = word_index_stats(cj_a_tau(parts.c_j, r).w, i).eps;
      else
        fs.eps = word_index_stats(cj_b(parts.c_j, r).w, i).eps;
      fs.phi = fs.eps + fs.wt_h;
    } else if (id == FJ1) {
      fs.wt_h = pair_wt_h(parts.c_j1, i);
      if (i < r) {
        fs.eps = word_index_stats(cj1_bottom(parts.c_j1, r).w, i).eps;
        fs.phi = fs.eps + fs.wt_h;
      } else {
        fs.eps = fs.phi = kNegInf;
      }
    } else {
      fs.wt_h = pair_wt_h(parts.c_j2, i);
      if (i > r) {
        fs.eps = word_index_stats(cj2_bottom(parts.c_j2, r).w, i).eps;
        fs.phi = fs.eps + fs.wt_h;
      } else {
        fs.eps = fs.phi = kNegInf;
      }
    }
    stats.push_back(fs);
  }

  FactorId target = ids[tensor_route(stats, dir)];
  const bool raising = dir == Dir::raise_op;

  if (target == FJ) {
    if (i == r) {
      if (raising && parts.c_j.at(r, r + 1) == 0) return std::nullopt;
      parts.c_j.bump(r, r + 1, raising ? -1 : +1);
      return merge(parts);
    }
    EncodedWord ew = i < r ? cj_a_tau(parts.c_j, r) : cj_b(parts.c_j, r);
    auto st = word_index_stats(ew.w, i);
    int pos = raising ? st.raise_pos : st.lower_pos;
    if (pos < 0) return std::nullopt;
    auto [ri, rj] = ew.roots[pos];
    if (i < r) {
      // barred letter i-bar <-> (i+1)-bar moves the unit between rows i, i+1
      parts.c_j.bump(raising ? i : i + 1, rj, -1);
      parts.c_j.bump(raising ? i + 1 : i, rj, +1);
    } else {
      // letter i+1 <-> i moves the unit between columns i+1, i
      parts.c_j.bump(ri, raising ? i + 1 : i, -1);
      parts.c_j.bump(ri, raising ? i : i + 1, +1);
    }
    return merge(parts);
  }

  if (target == FJ1) {
    if (i >= r) return std::nullopt;  // dead factor selected: the operator kills c
    EncodedWord ew = cj1_bottom(parts.c_j1, r);
    auto st = word_index_stats(ew.w, i);
    int pos = raising ? st.raise_pos : st.lower_pos;
    if (pos < 0) {
      if (raising) return std::nullopt;
      parts.c_j1.bump(i, i + 1, +1);  // f_i b' = 0: add the elementary matrix
      return merge(parts);
    }
    auto [ri, rj] = ew.roots[pos];
    if (raising) {
      parts.c_j1.bump(i, rj, -1);
      if (i + 1 < rj) parts.c_j1.bump(i + 1, rj, +1);  // else projected away
    } else {
      parts.c_j1.bump(i + 1, rj, -1);
      parts.c_j1.bump(i, rj, +1);
    }
    return merge(parts);
  }

  if (i <= r) return std::nullopt;  // dead factor selected
  EncodedWord ew = cj2_bottom(parts.c_j2, r);
  auto st = word_index_stats(ew.w, i);
  int pos = raising ? st.raise_pos : st.lower_pos;
  if (pos < 0) {
    if (raising) return std::nullopt;
    parts.c_j2.bump(i, i + 1, +1);
    return merge(parts);
  }
  auto [ri, rj] = ew.roots[pos];
  if (raising) {
    parts.c_j2.bump(ri, i + 1, -1);
    if (ri < i) parts.c_j2.bump(ri, i, +1);  // else projected away
  } else {
    parts.c_j2.bump(ri, i, -1);
    parts.c_j2.bump(ri, i + 1, +1);
  }
  return merge(parts);
}

}  // namespace crystal
