#pragma once

#include "crystal/biword.hpp"
#include "crystal/lusztig.hpp"
#include "crystal/tableau.hpp"

namespace crystal {

struct EmbeddingContext {
  Partition lambda;  // padded to n parts
  Quiver quiver;
  int d = 0;         // >= lambda_1
  Partition eta;     // (d - lambda_r, ..., d - lambda_1), r parts
  Partition zeta;    // (lambda_{r+1}, ..., lambda_n), n-r parts
};

// d < 0 selects the smallest valid padding d = lambda_1.
EmbeddingContext make_context(const Partition& lambda, const Quiver& q, int d = -1);

struct SplitTriple {
  Tableau s_plus;   // rows below row r, shape zeta over [n]\[r]
  Tableau s_minus;  // shape eta over [r-bar]
  BiwordMatrix m;   // over [r-bar] x ([n]\[r])
};

// The triple plus every intermediate object of the five-step pipeline.
struct SplitTrace {
  Tableau s_plus;
  Tableau p_prime;  // entries <= r of the first r rows
  Tableau q;        // entries >  r of the first r rows, as a rotated skew tableau
  Tableau p;        // sigma complement of p_prime
  Tableau t;        // rotated preimage of s_minus
  Tableau s_minus;
  BiwordMatrix m;
};

SplitTrace split_tableau_trace(const Tableau& s, const EmbeddingContext& ctx);
SplitTriple split_tableau(const Tableau& s, const EmbeddingContext& ctx);

// Row-counting embedding into the all-left orientation (sink 1):
// c_ij = number of j's in row i.
LusztigDatum c_plus(const Tableau& s);

// Counting embedding of a barred tableau into the all-right orientation
// (sink n-1): c_ij = number of i-bars in row n-j+1.
LusztigDatum c_minus_barred(const Tableau& t);

// c_minus = c_minus_barred of the rectified sigma complement; independent of
// the padding d (d < 0 selects lambda_1).
LusztigDatum c_minus(const Tableau& s, int d = -1);

// The Lusztig datum of a tableau with respect to a single-sink quiver.  Sinks
// 1 and n-1 delegate to c_plus / c_minus; otherwise the datum is assembled
// from the split triple: M(c^J) = M, c_J1 = c^-(S^-), c_J2 = c^+(S^+).
LusztigDatum embed(const Tableau& s, const Quiver& q, int d = -1);

// The marginally large tableau of a datum: the row-length gaps are all
// coord_sum + 1, baseline-filled rows realize the J-factors, and the split
// pipeline is run backwards.  embed(large_tableau(c), c.quiver()) == c.
Tableau large_tableau(const LusztigDatum& c);

// Change of single-sink parametrization through the common tableau model.
LusztigDatum transition(const LusztigDatum& c, const Quiver& to);

}  // namespace crystal
