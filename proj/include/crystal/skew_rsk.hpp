#pragma once

#include "crystal/biword.hpp"
#include "crystal/insertion.hpp"
#include "crystal/tableau.hpp"

namespace crystal {

struct SkewRSKPair {
  Tableau p;  // rotated, shape mu^pi over the row alphabet
  Tableau q;  // rotated skew, shape (mu/lambda)^pi over the column alphabet
};

struct SkewRSKPreimage {
  Tableau t;  // rotated, shape lambda^pi
  BiwordMatrix m;
};

// Sagan-Stanley skew insertion: column-insert a^tau_r, ..., a^tau_1 into t and
// record b^tau_{r-i+1} in the cell added at step i.
SkewRSKPair skew_rsk(const Tableau& t, const BiwordMatrix& m);

// Inverse correspondence.  Throws std::invalid_argument on pairs that are not
// in the image (inconsistent shapes, impossible reverse bumpings).
SkewRSKPreimage skew_rsk_inverse(const Tableau& p, const Tableau& q);

}  // namespace crystal
