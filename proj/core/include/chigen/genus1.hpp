#pragma once

#include <filesystem>
#include <map>
#include <optional>

#include "chigen/sectors.hpp"
#include "chigen/series.hpp"

namespace chigen {

// The genus-1 pipeline: closed-form base case X_1, twisted-sector
// contributions to Phi_n, the subset-sum recursion X_n, and the finalized
// integer chi tables.
//
// Cap budgeting: each recursion level spends one unit of q-cap on an exact
// division by q, so X_n to q-degree D needs X_1 at q-degree D + (n-1).
// x_series and chi_table budget this automatically; x_next checks it.

// Caps for a genus-1 series: q-cap plus a shared cap for the n cotangent
// variables.
std::vector<int> genus1_caps(int n, int cap_q, int cap_qi);

// X_1 expanded from the closed form
//   (1 - q^4 - q^6 + q^10 q1^4 + q^10 q1^6 - q^10 q1^10)
//   / ((1 - q q1)(1 - q^4)(1 - q^6)(1 - q1^4)(1 - q1^6)).
MultiSeries x1_series(int cap_q, int cap_q1);

// Main-component contribution: (n-1)!/24 * 1/(1-q) * prod_i q_i/(1-q_i)^2.
MultiSeries phi_main(int n, int cap_q, int cap_qi);

// A_k-bar contribution, k in {2,3,4}:
//   (-1)^k d_k/24 * 1/(1+q) * prod_i q_i/(1-q_i^2)
//   * (11 + 2q/(1+q) - sum_{i<=k} 2q_i/(1+q_i)).
// The overload with an explicit degree exists for fault-injection tests.
MultiSeries phi_ak(int k, int cap_q, int cap_qi);
MultiSeries phi_ak(int k, int degree, int cap_q, int cap_qi);

// Zero-dimensional sector pair contributions, as printed closed forms.
// Valid (n, family): (2, C4Prime), (2, C6Prime), (3, C6DoublePrime).
MultiSeries phi_points(int n, PointFamily family, int cap_q, int cap_qi);

// The same contributions recomputed from the eigenvalue integrand
//   prefactor * sum_lambda (lambda-1)^n / ((1-q/lambda)(1+lambda)(1-lambda)^n)
//              * prod_i q_i/((1-q_i)(1-q_i lambda))
// with lambda running over the conjugate pair {i,-i} or {eps^2, eps^4},
// in exact quadratic-extension arithmetic. Cross-check oracle for
// phi_points; throws NonRealResult if the pair sum fails to be rational.
MultiSeries point_sector_oracle(int n, PointFamily family, int cap_q,
                                int cap_qi);

// Full Phi_n: sum of the contributions listed in the sector table.
MultiSeries phi(int n, int cap_q, int cap_qi,
                const SectorTable& sectors = SectorTable::standard());

// One step of the reduction: X_n from X_{n-1} and Phi_n over the 2^n - 1
// nonempty subsets of the marked points. x_prev must carry q-cap at least
// cap_q + 1. The two 1/q terms of the printed lemma are combined before
// shifting: the q-constant parts cancel by construction, and a failed
// cancellation raises DivisibilityError. Subset terms are independent and
// are dispatched to `threads` workers; the result does not depend on the
// thread count.
MultiSeries x_next(const MultiSeries& x_prev, const MultiSeries& phi_n, int n,
                   int cap_q, int cap_qi, int threads = 1);

struct PipelineOptions {
  int threads = 1;
  std::optional<std::filesystem::path> cache_dir;
  SectorTable sectors = SectorTable::standard();
};

// X_n at exactly the requested caps, recursing down to X_1 with the q-cap
// budget. With a cache directory, intermediate levels are read and written
// as serialized series keyed by (k, caps, engine version).
MultiSeries x_series(int n, int cap_q, int cap_qi,
                     const PipelineOptions& opts = {});

struct ChiKey {
  int d;
  std::vector<int> di;  // sorted ascending

  auto operator<=>(const ChiKey&) const = default;
};

// Finalized integer table chi(d; d_1..d_n), keyed by the sorted exponent
// multiset. Construction asserts integrality of every coefficient.
struct ChiTable {
  int n;
  int cap_d;
  int cap_di;
  std::map<ChiKey, Int> entries;
};

ChiTable chi_table(int n, int cap_d, int cap_di,
                   const PipelineOptions& opts = {});

}  // namespace chigen
