#include "chigen/quadratic.hpp"

namespace chigen {

QuadRat quad_add(const QuadRat& x, const QuadRat& y) {
  return {x.a + y.a, x.b + y.b};
}

QuadRat quad_sub(const QuadRat& x, const QuadRat& y) {
  return {x.a - y.a, x.b - y.b};
}

QuadRat quad_mul(const QuadField& f, const QuadRat& x, const QuadRat& y) {
  // (a1 + b1 L)(a2 + b2 L), L^2 = c0 + c1 L
  return {x.a * y.a + f.c0 * x.b * y.b,
          x.a * y.b + x.b * y.a + f.c1 * x.b * y.b};
}

QuadRat quad_inv(const QuadField& f, const QuadRat& x) {
  // Solve (a + bL)(c + dL) = 1:
  //   a c + c0 b d         = 1
  //   a d + b c + c1 b d   = 0
  Rat det = x.a * (x.a + f.c1 * x.b) - f.c0 * x.b * x.b;
  if (det == 0) throw Error("quad_inv: division by zero");
  return {(x.a + f.c1 * x.b) / det, -x.b / det};
}

QuadRat quad_pow(const QuadField& f, QuadRat x, int e) {
  if (e < 0) {
    x = quad_inv(f, x);
    e = -e;
  }
  QuadRat r{1, 0};
  for (int i = 0; i < e; ++i) r = quad_mul(f, r, x);
  return r;
}

QuadSeries quad_series_constant(const QuadRat& c, std::vector<int> caps) {
  return {MultiSeries::constant(c.a, caps), MultiSeries::constant(c.b, caps)};
}

QuadSeries quad_series_add(const QuadSeries& x, const QuadSeries& y) {
  return {x.re + y.re, x.im + y.im};
}

QuadSeries quad_series_mul(const QuadField& f, const QuadSeries& x,
                           const QuadSeries& y) {
  MultiSeries bb = x.im * y.im;
  return {x.re * y.re + f.c0 * bb,
          x.re * y.im + x.im * y.re + f.c1 * bb};
}

QuadSeries quad_geom(const QuadField& f, VarIndex v, const QuadRat& c,
                     std::vector<int> caps) {
  MultiSeries re(caps), im(caps);
  QuadRat coef{1, 0};
  Exponents e(caps.size(), 0);
  for (int m = 0; m <= caps[v.value]; ++m) {
    e[v.value] = m;
    re.accumulate(e, coef.a);
    im.accumulate(e, coef.b);
    coef = quad_mul(f, coef, c);
  }
  return {std::move(re), std::move(im)};
}

MultiSeries quad_require_rational(const QuadSeries& s) {
  if (!s.im.is_zero())
    throw NonRealResult(
        "conjugate-pair sum has a nonzero irrational part; this signals an "
        "implementation bug");
  return s.re;
}

}  // namespace chigen
