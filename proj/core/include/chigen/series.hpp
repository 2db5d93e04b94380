#pragma once

#include <compare>
#include <map>
#include <vector>

#include "chigen/errors.hpp"
#include "chigen/rat.hpp"

namespace chigen {

// Variable index into a series. Index 0 is the Hodge variable q, indices
// 1..n are the cotangent variables q_1..q_n. Genus-0 series have no Hodge
// slot; there index 0 is simply q_1.
struct VarIndex {
  constexpr explicit VarIndex(int i) : value(i) {}
  int value;
};

inline constexpr VarIndex kHodgeVar{0};

using Exponents = std::vector<int>;

// Truncated multivariate formal power series over Rat, stored as a sparse
// map from exponent vectors to nonzero coefficients. Caps are per variable;
// any operation result exceeding a cap is dropped. The map is canonical
// (lexicographically sorted, no zero entries), so equal values have equal
// representations and iteration order is deterministic.
//
// Values are immutable in practice: every operation returns a new series.
// The zero series is the empty map and compares equal across caps of the
// same arity.
class MultiSeries {
 public:
  using TermMap = std::map<Exponents, Rat>;

  explicit MultiSeries(std::vector<int> caps);

  static MultiSeries constant(const Rat& c, std::vector<int> caps);
  static MultiSeries monomial(const Exponents& e, const Rat& c,
                              std::vector<int> caps);

  int arity() const { return static_cast<int>(caps_.size()); }
  const std::vector<int>& caps() const { return caps_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Adds c at exponent e, silently dropping exponents beyond the caps and
  // erasing the entry if the sum cancels.
  void accumulate(const Exponents& e, const Rat& c);

  // Stored coefficient or 0. Throws CapExceeded beyond the truncation.
  Rat coeff(const Exponents& e) const;

  friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
    return a.caps_.size() == b.caps_.size() && a.terms_ == b.terms_;
  }

 private:
  std::vector<int> caps_;
  TermMap terms_;
};

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b);
MultiSeries operator-(const MultiSeries& a, const MultiSeries& b);
MultiSeries operator-(const MultiSeries& a);
MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
MultiSeries operator*(const Rat& c, const MultiSeries& a);

// Expansion of 1/(1 - ratio * x_v^step): sum_m ratio^m x_v^(m*step) up to
// the cap in v. step = 0 is rejected.
MultiSeries geom(VarIndex v, const Rat& ratio, int step, std::vector<int> caps);

// Diagonal variant: sum_m ratio^m x^(m*e), the expansion of
// 1/(1 - ratio * x^e) for a monomial exponent vector e.
MultiSeries geom_monomial(const Exponents& e, const Rat& ratio,
                          std::vector<int> caps);

// Keeps only the terms with exponent 0 in v; arity is unchanged.
MultiSeries subst_zero(const MultiSeries& s, VarIndex v);

// Exact division by x_v. Every term must have exponent >= 1 in v, otherwise
// DivisibilityError. The result's cap in v drops by one: the top slice of
// the input carries no information about the shifted top slice.
MultiSeries div_by_var(const MultiSeries& s, VarIndex v);

// Multiplication by x_v, truncating at the cap.
MultiSeries mul_by_var(const MultiSeries& s, VarIndex v);

// Applies a permutation of the variables. perm has length arity and must be
// a bijection fixing index 0 (the Hodge slot).
MultiSeries permute_vars(const MultiSeries& s, const std::vector<int>& perm);

// Reduces caps, dropping terms beyond the new ones.
MultiSeries truncate(const MultiSeries& s, std::vector<int> new_caps);

// Re-slots a series into a new variable space. slot_map has length
// s.arity(); slot_map[i] is the target index of variable i, or -1 for a
// variable required to be inert (every exponent 0, else DivisibilityError
// does not apply -- ArityMismatch is thrown). Targets must be distinct.
MultiSeries embed(const MultiSeries& s, std::vector<int> new_caps,
                  const std::vector<int>& slot_map);

}  // namespace chigen
