#include "chigen/sectors.hpp"

#include "chigen/errors.hpp"

namespace chigen {

int ak_degree(int k) {
  switch (k) {
    case 2:
      return 3;
    case 3:
      return 6;
    case 4:
      return 6;
    default:
      throw Error("A_k-bar sector only exists for k in {2,3,4}");
  }
}

SectorTable SectorTable::standard() {
  SectorTable t;
  t.by_n_.resize(5);
  auto main = SectorContribution{SectorKind::MainComponent};
  auto ak = [](int k) {
    return SectorContribution{SectorKind::AkBar, k, ak_degree(k)};
  };
  auto pts = [](PointFamily f, const Rat& pre) {
    SectorContribution c{SectorKind::PointPair};
    c.family = f;
    c.group_prefactor = pre;
    return c;
  };
  t.by_n_[0] = {main};
  t.by_n_[2] = {main, ak(2), pts(PointFamily::C4Prime, Rat(1, 4)),
                pts(PointFamily::C6Prime, Rat(1, 3))};
  t.by_n_[3] = {main, ak(3), pts(PointFamily::C6DoublePrime, Rat(1, 3))};
  t.by_n_[4] = {main, ak(4)};
  return t;
}

const std::vector<SectorContribution>& SectorTable::sectors_for(int n) const {
  if (n < 2) throw Error("sector table defined for n >= 2");
  return by_n_[n < 5 ? n : 0];
}

void SectorTable::set(int n, std::vector<SectorContribution> sectors) {
  if (n < 2 || n > 4) throw Error("only n in {2,3,4} entries can be overridden");
  by_n_[n] = std::move(sectors);
}

}  // namespace chigen
