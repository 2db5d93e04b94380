#include <doctest.h>

#include <numeric>

#include "chigen/wps.hpp"

using namespace chigen;

TEST_CASE("section counts on P(4,6)") {
  CHECK(h0({4, 6, -3}) == 0);
  CHECK(h0({4, 6, 0}) == 1);
  CHECK(h0({4, 6, 12}) == 2);  // (3,0) and (0,2)
  CHECK(h0({4, 6, 1}) == 0);
  CHECK(h0({4, 6, 24}) == 3);
}

TEST_CASE("euler characteristics via Serre duality") {
  CHECK(chi_wps({4, 6, 0}) == 1);
  CHECK(chi_wps({4, 6, -10}) == -1);
  CHECK(chi_wps({4, 6, -1}) == 0);
}

TEST_CASE("serre duality antisymmetry") {
  for (int k = -40; k <= 40; ++k) {
    CHECK(chi_wps({4, 6, k}) == -chi_wps({4, 6, -k - 10}));
    CHECK(chi_wps({3, 5, k}) == -chi_wps({3, 5, -k - 8}));
  }
}

TEST_CASE("generating function of h0 matches the modular-forms product") {
  std::vector<int> caps{40};
  MultiSeries gen(caps);
  for (int k = 0; k <= 40; ++k) gen.accumulate({k}, Rat(h0({4, 6, k})));
  CHECK(gen == geom(VarIndex(0), 1, 4, caps) * geom(VarIndex(0), 1, 6, caps));
}

TEST_CASE("adding one lcm step adds exactly one section") {
  // 4x + 6y = k has one more solution at k + 12 whenever k is even; odd k
  // has none either way. (h0 is not monotone in smaller steps: h0(12) = 2
  // but h0(14) = 1.)
  for (int k = 0; k <= 120; ++k)
    CHECK(h0({4, 6, k + 12}) == h0({4, 6, k}) + (k % 2 == 0 ? 1 : 0));
}

TEST_CASE("P(1,1) is the projective line") {
  for (int k = -1; k <= 25; ++k) CHECK(chi_wps({1, 1, k}) == k + 1);
}

TEST_CASE("x1 oracle spot values") {
  MultiSeries x = x1_oracle(6, 6);
  CHECK(x.coeff({0, 0}) == 1);
  CHECK(x.coeff({0, 4}) == 1);
  CHECK(x.coeff({1, 0}) == 0);
  // H and L_1 coincide on the one-pointed stack, so the diagonal is chi(O).
  CHECK(x.coeff({1, 1}) == 1);
  CHECK(x.coeff({5, 5}) == 1);
}
