#include "chigen/series.hpp"

#include <algorithm>
#include <sstream>

namespace chigen {

namespace {

std::string exp_str(const Exponents& e) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ")";
  return os.str();
}

void check_compatible(const MultiSeries& a, const MultiSeries& b) {
  if (a.caps() != b.caps())
    throw ArityMismatch("series arity/cap mismatch");
}

bool within_caps(const Exponents& e, const std::vector<int>& caps) {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > caps[i]) return false;
  return true;
}

}  // namespace

MultiSeries::MultiSeries(std::vector<int> caps) : caps_(std::move(caps)) {
  for (int c : caps_)
    if (c < 0) throw ArityMismatch("negative cap");
}

MultiSeries MultiSeries::constant(const Rat& c, std::vector<int> caps) {
  MultiSeries s(std::move(caps));
  s.accumulate(Exponents(s.arity(), 0), c);
  return s;
}

MultiSeries MultiSeries::monomial(const Exponents& e, const Rat& c,
                                  std::vector<int> caps) {
  MultiSeries s(std::move(caps));
  if (e.size() != s.caps_.size())
    throw ArityMismatch("monomial exponent arity mismatch");
  s.accumulate(e, c);
  return s;
}

void MultiSeries::accumulate(const Exponents& e, const Rat& c) {
  if (c == 0) return;
  if (e.size() != caps_.size())
    throw ArityMismatch("exponent arity mismatch");
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0) throw ArityMismatch("negative exponent");
    if (e[i] > caps_[i]) return;
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat MultiSeries::coeff(const Exponents& e) const {
  if (e.size() != caps_.size())
    throw ArityMismatch("exponent arity mismatch");
  if (!within_caps(e, caps_))
    throw CapExceeded("coefficient " + exp_str(e) + " beyond caps");
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
  check_compatible(a, b);
  MultiSeries r = a;
  for (const auto& [e, c] : b.terms()) r.accumulate(e, c);
  return r;
}

MultiSeries operator-(const MultiSeries& a) {
  MultiSeries r(a.caps());
  for (const auto& [e, c] : a.terms()) r.accumulate(e, -c);
  return r;
}

MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) {
  check_compatible(a, b);
  MultiSeries r = a;
  for (const auto& [e, c] : b.terms()) r.accumulate(e, -c);
  return r;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  check_compatible(a, b);
  // Iterate the smaller factor in the outer loop.
  const MultiSeries& outer = a.terms().size() <= b.terms().size() ? a : b;
  const MultiSeries& inner = a.terms().size() <= b.terms().size() ? b : a;
  const auto& caps = a.caps();
  MultiSeries r(caps);
  Exponents e(caps.size());
  for (const auto& [e1, c1] : outer.terms()) {
    for (const auto& [e2, c2] : inner.terms()) {
      bool ok = true;
      for (size_t i = 0; i < e.size(); ++i) {
        e[i] = e1[i] + e2[i];
        if (e[i] > caps[i]) {
          ok = false;
          break;
        }
      }
      if (ok) r.accumulate(e, c1 * c2);
    }
  }
  return r;
}

MultiSeries operator*(const Rat& c, const MultiSeries& a) {
  MultiSeries r(a.caps());
  for (const auto& [e, coef] : a.terms()) r.accumulate(e, c * coef);
  return r;
}

MultiSeries geom(VarIndex v, const Rat& ratio, int step,
                 std::vector<int> caps) {
  if (step <= 0) throw Error("geom: step must be positive");
  Exponents e(caps.size(), 0);
  e[v.value] = step;
  return geom_monomial(e, ratio, std::move(caps));
}

MultiSeries geom_monomial(const Exponents& e, const Rat& ratio,
                          std::vector<int> caps) {
  MultiSeries r(std::move(caps));
  if (e.size() != r.caps().size())
    throw ArityMismatch("geom_monomial exponent arity mismatch");
  bool constant_dir = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  if (constant_dir) throw Error("geom: zero step is divergent");
  Rat coef = 1;
  Exponents cur(e.size(), 0);
  while (within_caps(cur, r.caps())) {
    r.accumulate(cur, coef);
    coef *= ratio;
    for (size_t i = 0; i < e.size(); ++i) cur[i] += e[i];
  }
  return r;
}

MultiSeries subst_zero(const MultiSeries& s, VarIndex v) {
  if (v.value < 0 || v.value >= s.arity())
    throw ArityMismatch("subst_zero: variable out of range");
  MultiSeries r(s.caps());
  for (const auto& [e, c] : s.terms())
    if (e[v.value] == 0) r.accumulate(e, c);
  return r;
}

MultiSeries div_by_var(const MultiSeries& s, VarIndex v) {
  if (v.value < 0 || v.value >= s.arity())
    throw ArityMismatch("div_by_var: variable out of range");
  std::vector<int> caps = s.caps();
  if (caps[v.value] == 0)
    throw DivisibilityError("div_by_var: cap in variable is already 0");
  caps[v.value] -= 1;
  MultiSeries r(std::move(caps));
  for (const auto& [e, c] : s.terms()) {
    if (e[v.value] == 0)
      throw DivisibilityError("div_by_var: term " + exp_str(e) +
                              " not divisible; a cancellation identity was "
                              "violated upstream");
    Exponents e2 = e;
    e2[v.value] -= 1;
    r.accumulate(e2, c);
  }
  return r;
}

MultiSeries mul_by_var(const MultiSeries& s, VarIndex v) {
  if (v.value < 0 || v.value >= s.arity())
    throw ArityMismatch("mul_by_var: variable out of range");
  MultiSeries r(s.caps());
  for (const auto& [e, c] : s.terms()) {
    Exponents e2 = e;
    e2[v.value] += 1;
    r.accumulate(e2, c);
  }
  return r;
}

MultiSeries permute_vars(const MultiSeries& s, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != s.arity())
    throw ArityMismatch("permute_vars: permutation arity mismatch");
  if (!perm.empty() && perm[0] != 0)
    throw ArityMismatch("permute_vars: permutation must fix the Hodge slot");
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= static_cast<int>(perm.size()) || seen[p])
      throw ArityMismatch("permute_vars: not a permutation");
    seen[p] = true;
  }
  std::vector<int> caps(s.caps().size());
  for (size_t i = 0; i < perm.size(); ++i) caps[perm[i]] = s.caps()[i];
  MultiSeries r(std::move(caps));
  for (const auto& [e, c] : s.terms()) {
    Exponents e2(e.size());
    for (size_t i = 0; i < e.size(); ++i) e2[perm[i]] = e[i];
    r.accumulate(e2, c);
  }
  return r;
}

MultiSeries truncate(const MultiSeries& s, std::vector<int> new_caps) {
  if (new_caps.size() != s.caps().size())
    throw ArityMismatch("truncate: arity mismatch");
  MultiSeries r(std::move(new_caps));
  for (const auto& [e, c] : s.terms())
    if (within_caps(e, r.caps())) r.accumulate(e, c);
  return r;
}

MultiSeries embed(const MultiSeries& s, std::vector<int> new_caps,
                  const std::vector<int>& slot_map) {
  if (slot_map.size() != s.caps().size())
    throw ArityMismatch("embed: slot map arity mismatch");
  MultiSeries r(std::move(new_caps));
  std::vector<bool> seen(r.caps().size(), false);
  for (int t : slot_map) {
    if (t < 0) continue;
    if (t >= static_cast<int>(r.caps().size()) || seen[t])
      throw ArityMismatch("embed: invalid slot map target");
    seen[t] = true;
  }
  for (const auto& [e, c] : s.terms()) {
    Exponents e2(r.caps().size(), 0);
    for (size_t i = 0; i < e.size(); ++i) {
      if (slot_map[i] < 0) {
        if (e[i] != 0)
          throw ArityMismatch("embed: dropped variable is not inert");
      } else {
        e2[slot_map[i]] = e[i];
      }
    }
    r.accumulate(e2, c);
  }
  return r;
}

}  // namespace chigen
