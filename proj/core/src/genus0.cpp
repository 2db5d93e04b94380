#include "chigen/genus0.hpp"

namespace chigen {

Genus0Series f3(int cap) {
  std::vector<int> caps(3, cap);
  MultiSeries s = MultiSeries::constant(1, caps);
  for (int i = 0; i < 3; ++i) s = s * geom(VarIndex(i), 1, 1, caps);
  return {3, s};
}

Genus0Series string_pushforward_g0(const Genus0Series& f) {
  // New variable is inert (cap 0): the series tracks the q_{n+1} = 0 slice.
  std::vector<int> caps = f.series.caps();
  caps.push_back(0);
  std::vector<int> slot_map(f.series.arity());
  for (size_t i = 0; i < slot_map.size(); ++i) slot_map[i] = static_cast<int>(i);
  MultiSeries s = embed(f.series, caps, slot_map);

  MultiSeries factor = MultiSeries::constant(1, caps);
  for (int i = 0; i < static_cast<int>(caps.size()) - 1; ++i) {
    VarIndex v(i);
    // q_i/(1-q_i); vanishes under truncation when the variable is inert.
    factor = factor + mul_by_var(geom(v, 1, 1, caps), v);
  }
  return {f.n + 1, s * factor};
}

Genus0Series genus0_series(int n, int cap) {
  if (n < 3) throw Error("genus0_series: n >= 3 required");
  Genus0Series g = f3(cap);
  while (g.n < n) g = string_pushforward_g0(g);
  return g;
}

std::vector<Exponents> check_nonnegative(const MultiSeries& s) {
  std::vector<Exponents> violations;
  for (const auto& [e, c] : s.terms())
    if (!is_integer(c) || c < 0) violations.push_back(e);
  return violations;
}

}  // namespace chigen
