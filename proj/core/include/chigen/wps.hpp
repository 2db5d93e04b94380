#pragma once

#include "chigen/series.hpp"

namespace chigen {

// Line bundle O(k) on the weighted projective line P(a,b). Used as an
// independent cohomology oracle for the genus-1 base case: sections of
// O(k) are weighted-homogeneous polynomials, so h^0 is a lattice point
// count, and Serre duality gives the Euler characteristic. Deliberately
// computed by direct enumeration, independent of the series machinery.
struct WpsLineBundle {
  int a;
  int b;
  int k;
};

// Number of monomials x^s y^t with a*s + b*t = k; zero for k < 0.
long h0(const WpsLineBundle& bundle);

// h0(k) - h0(-k-a-b); the dualizing sheaf on P(a,b) has degree -a-b.
long chi_wps(const WpsLineBundle& bundle);

// Brute-force X_1: sum of chi(P(4,6), O(d1-d)) q^d q1^d1 over the caps.
MultiSeries x1_oracle(int cap_q, int cap_q1);

}  // namespace chigen
