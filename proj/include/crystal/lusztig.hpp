#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "crystal/quiver.hpp"
#include "crystal/word.hpp"

namespace crystal {

// Lusztig datum on a single-sink quiver: one nonnegative count per positive
// root eps_i - eps_j, stored dense and keyed by the root (i, j) rather than by
// word position; the parametrization is independent of the adapted word.
class LusztigDatum {
 public:
  LusztigDatum() : LusztigDatum(Quiver(2, 1)) {}
  explicit LusztigDatum(Quiver q) : quiver_(q), c_(q.n * (q.n - 1) / 2, 0) {}

  const Quiver& quiver() const { return quiver_; }
  int n() const { return quiver_.n; }

  int at(int i, int j) const { return c_[idx(i, j)]; }
  void set(int i, int j, int v);
  void bump(int i, int j, int delta);

  int coord_sum() const;
  std::vector<int> weight() const;  // -sum c_ij (eps_i - eps_j)

  // Diagram reflection (i,j) -> (n+1-j, n+1-i), sink r -> n-r.
  LusztigDatum reflected() const;

  std::vector<std::tuple<int, int, int>> nonzeros() const;

  bool operator==(const LusztigDatum&) const = default;
  std::string show() const;

 private:
  int idx(int i, int j) const;
  Quiver quiver_;
  std::vector<int> c_;
};

// The partial-sum scan governing the operators at an index i != sink.  For
// i < sink the sums run over the columns r+1, ..., n, then r, r-1, ..., i+1;
// for i > sink the scan is taken on the reflected datum at index n-i.
struct OperatorScan {
  std::vector<int> sums;  // c^{(i)}_k for k = 1..n-i
  int max = 0;
  int k0 = 0;  // first argmax, 1-based
  int k1 = 0;  // last argmax, 1-based
};

OperatorScan operator_scan(const LusztigDatum& c, int i);

std::vector<int> datum_weight(const LusztigDatum& c);
int datum_eps(const LusztigDatum& c, int i);
int datum_phi(const LusztigDatum& c, int i);

// Kashiwara operators by the closed scan formulas (first coordinate at the
// sink, argmax moves elsewhere).  Lowering is total; raising returns null at
// eps_i = 0.
std::optional<LusztigDatum> apply_direct(const LusztigDatum& c, int i, Dir dir);

// Restrictions of a datum to the three root blocks
// Phi+(J) = {i <= r < j}, Phi+_{J_1} = {i < j <= r}, Phi+_{J_2} = {r < i < j}.
struct DatumSplit {
  LusztigDatum c_j, c_j1, c_j2;
};

DatumSplit split(const LusztigDatum& c);
// Inverse of split; rejects parts with overlapping support or mixed quivers.
LusztigDatum merge(const DatumSplit& s);

// The same operators through the tensor decomposition c^J (x) c_J1 (x) c_J2:
// factor statistics come from the biword encodings (a^tau over [r-bar] and b
// over [n]\[r] for c^J, the M^-/M^+ bottom words for the J-factors), the
// factor is chosen by the iterated tensor rule, and the word-level operator
// is pushed back into root coordinates.
std::optional<LusztigDatum> apply_tensor(const LusztigDatum& c, int i, Dir dir);

}  // namespace crystal
