#pragma once

#include <vector>

#include "chigen/rat.hpp"

namespace chigen {

// Static description of which twisted sectors contribute to Phi_n. The
// classification is geometric input, not something the engine derives:
//   n = 2: main, A2-bar, the C4' and C6' point pairs
//   n = 3: main, A3-bar, the C6'' point pair
//   n = 4: main, A4-bar
//   n >= 5: main component only
// Boundary sectors contribute zero and are not listed.

enum class SectorKind { MainComponent, AkBar, PointPair };

enum class PointFamily { C4Prime, C6Prime, C6DoublePrime };

struct SectorContribution {
  SectorKind kind;
  // AkBar only: number of marked points k in {2,3,4} and the degree d_k of
  // the forgetful map to the one-pointed moduli stack (3, 6, 6 for k = 2, 3, 4).
  int k = 0;
  int degree = 0;
  // PointPair only.
  PointFamily family = PointFamily::C4Prime;
  Rat group_prefactor = 0;
};

// Degree d_k of A_k-bar over the one-pointed stack.
int ak_degree(int k);

class SectorTable {
 public:
  static SectorTable standard();

  const std::vector<SectorContribution>& sectors_for(int n) const;
  void set(int n, std::vector<SectorContribution> sectors);

 private:
  // Index 0 holds the n >= 5 list (main component only).
  std::vector<std::vector<SectorContribution>> by_n_;
};

}  // namespace chigen
