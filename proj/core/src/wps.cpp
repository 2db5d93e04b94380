#include "chigen/wps.hpp"

namespace chigen {

long h0(const WpsLineBundle& bundle) {
  if (bundle.a < 1 || bundle.b < 1)
    throw Error("wps: weights must be positive");
  if (bundle.k < 0) return 0;
  long count = 0;
  for (int s = 0; s * bundle.a <= bundle.k; ++s)
    if ((bundle.k - s * bundle.a) % bundle.b == 0) ++count;
  return count;
}

long chi_wps(const WpsLineBundle& bundle) {
  return h0(bundle) -
         h0({bundle.a, bundle.b, -bundle.k - bundle.a - bundle.b});
}

MultiSeries x1_oracle(int cap_q, int cap_q1) {
  MultiSeries s({cap_q, cap_q1});
  for (int d = 0; d <= cap_q; ++d)
    for (int d1 = 0; d1 <= cap_q1; ++d1)
      s.accumulate({d, d1}, Rat(chi_wps({4, 6, d1 - d})));
  return s;
}

}  // namespace chigen
