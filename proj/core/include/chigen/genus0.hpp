#pragma once

#include "chigen/series.hpp"

namespace chigen {

// Genus-0 string equation as a series operator, plus the vanishing-theorem
// consequence chi = h^0 >= 0 as a checkable property.
//
// The only fully-known base is the 3-pointed series (a point), so iterated
// pushforward computes chi on the n-pointed space along the slice where the
// marked points beyond the first three carry exponent zero. Those extra
// variables are kept with cap 0: any positive power is truncated away, so
// the string-equation factor specializes itself.
struct Genus0Series {
  int n;  // moduli index: series lives on the n-pointed genus-0 space
  MultiSeries series;
};

// Full generating function on the 3-pointed space: every cotangent line is
// trivial on a point, so the series is prod_{i<=3} 1/(1-q_i).
Genus0Series f3(int cap);

// Pushes along the map forgetting a marked point, read in reverse: returns
// the (n+1)-pointed series with the new variable at zero, which equals
// f * (1 + sum_i q_i/(1-q_i)).
Genus0Series string_pushforward_g0(const Genus0Series& f);

// f3 with (n-3) pushforward steps applied.
Genus0Series genus0_series(int n, int cap);

// Exponents whose coefficient is negative or non-integral; empty on
// anything reachable from f3 by pushforward.
std::vector<Exponents> check_nonnegative(const MultiSeries& s);

}  // namespace chigen
