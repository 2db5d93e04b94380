#pragma once

#include "chigen/errors.hpp"
#include "chigen/rat.hpp"
#include "chigen/series.hpp"

namespace chigen {

// Exact arithmetic in a quadratic extension Q(lambda) with
// lambda^2 = c0 + c1*lambda. The two fields the point sectors need:
//   lambda = i           -> lambda^2 = -1          (c0 = -1, c1 =  0)
//   lambda = e^(2pi i/3) -> lambda^2 = -1 - lambda (c0 = -1, c1 = -1)
struct QuadField {
  Rat c0;
  Rat c1;
};

// a + b*lambda.
struct QuadRat {
  Rat a;
  Rat b;

  friend bool operator==(const QuadRat&, const QuadRat&) = default;
};

QuadRat quad_add(const QuadRat& x, const QuadRat& y);
QuadRat quad_sub(const QuadRat& x, const QuadRat& y);
QuadRat quad_mul(const QuadField& f, const QuadRat& x, const QuadRat& y);
QuadRat quad_inv(const QuadField& f, const QuadRat& x);
QuadRat quad_pow(const QuadField& f, QuadRat x, int e);

// Series with coefficients in Q(lambda), kept as a rational part and a
// lambda part so the MultiSeries algebra can be reused verbatim.
struct QuadSeries {
  MultiSeries re;
  MultiSeries im;
};

QuadSeries quad_series_constant(const QuadRat& c, std::vector<int> caps);
QuadSeries quad_series_add(const QuadSeries& x, const QuadSeries& y);
QuadSeries quad_series_mul(const QuadField& f, const QuadSeries& x,
                           const QuadSeries& y);

// Expansion of 1/(1 - c * x_v) with c in Q(lambda).
QuadSeries quad_geom(const QuadField& f, VarIndex v, const QuadRat& c,
                     std::vector<int> caps);

// Asserts the lambda part vanished (conjugate-pair sums must be rational)
// and returns the rational part. Throws NonRealResult otherwise.
MultiSeries quad_require_rational(const QuadSeries& s);

}  // namespace chigen
