#include "chigen/genus1.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "chigen/quadratic.hpp"
#include "chigen/serialize.hpp"
#include "chigen/version.hpp"

namespace chigen {

namespace {

Rat factorial(int n) {
  Rat r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// q_i * 1/(1-q_i)
MultiSeries var_times_geom(VarIndex v, const std::vector<int>& caps) {
  return mul_by_var(geom(v, 1, 1, caps), v);
}

// 1/(1+x+x^2) = (1-x) / (1-x^3)
MultiSeries inv_one_x_xx(VarIndex v, const std::vector<int>& caps) {
  MultiSeries one = MultiSeries::constant(1, caps);
  Exponents e(caps.size(), 0);
  e[v.value] = 1;
  return (one - MultiSeries::monomial(e, 1, caps)) * geom(v, 1, 3, caps);
}

}  // namespace

std::vector<int> genus1_caps(int n, int cap_q, int cap_qi) {
  std::vector<int> caps(n + 1, cap_qi);
  caps[0] = cap_q;
  return caps;
}

MultiSeries x1_series(int cap_q, int cap_q1) {
  std::vector<int> caps{cap_q, cap_q1};
  // Numerator of the X_1 closed form; see the module docs.
  MultiSeries num(caps);
  num.accumulate({0, 0}, 1);
  num.accumulate({4, 0}, -1);
  num.accumulate({6, 0}, -1);
  num.accumulate({10, 4}, 1);
  num.accumulate({10, 6}, 1);
  num.accumulate({10, 10}, -1);
  MultiSeries s = num * geom_monomial({1, 1}, 1, caps);
  s = s * geom(VarIndex(0), 1, 4, caps);
  s = s * geom(VarIndex(0), 1, 6, caps);
  s = s * geom(VarIndex(1), 1, 4, caps);
  s = s * geom(VarIndex(1), 1, 6, caps);
  return s;
}

MultiSeries phi_main(int n, int cap_q, int cap_qi) {
  if (n < 2) throw Error("phi_main: n >= 2 required");
  auto caps = genus1_caps(n, cap_q, cap_qi);
  MultiSeries s = (factorial(n - 1) / 24) * geom(kHodgeVar, 1, 1, caps);
  for (int i = 1; i <= n; ++i) {
    VarIndex v(i);
    MultiSeries g = geom(v, 1, 1, caps);
    s = s * mul_by_var(g * g, v);
  }
  return s;
}

MultiSeries phi_ak(int k, int cap_q, int cap_qi) {
  return phi_ak(k, ak_degree(k), cap_q, cap_qi);
}

MultiSeries phi_ak(int k, int degree, int cap_q, int cap_qi) {
  if (k < 2 || k > 4) throw Error("phi_ak: k must be in {2,3,4}");
  auto caps = genus1_caps(k, cap_q, cap_qi);
  Rat pre = Rat(degree, 24);
  if (k % 2 != 0) pre = -pre;
  MultiSeries s = pre * geom(kHodgeVar, -1, 1, caps);
  for (int i = 1; i <= k; ++i) {
    VarIndex v(i);
    s = s * mul_by_var(geom(v, 1, 2, caps), v);
  }
  // 11 + 2q/(1+q) - sum_{i<=k} 2q_i/(1+q_i); the sum runs over the k
  // marked points of this sector.
  MultiSeries bracket = MultiSeries::constant(11, caps);
  bracket = bracket +
            Rat(2) * mul_by_var(geom(kHodgeVar, -1, 1, caps), kHodgeVar);
  for (int i = 1; i <= k; ++i) {
    VarIndex v(i);
    bracket = bracket - Rat(2) * mul_by_var(geom(v, -1, 1, caps), v);
  }
  return s * bracket;
}

MultiSeries phi_points(int n, PointFamily family, int cap_q, int cap_qi) {
  auto caps = genus1_caps(n, cap_q, cap_qi);
  auto mono = [&](std::initializer_list<int> e, int c) {
    return MultiSeries::monomial(Exponents(e), c, caps);
  };
  if (family == PointFamily::C4Prime) {
    if (n != 2) throw Error("C4' pair lives on the 2-pointed stack");
    MultiSeries s = Rat(1, 4) * var_times_geom(VarIndex(1), caps) *
                    var_times_geom(VarIndex(2), caps);
    MultiSeries num = mono({0, 0, 0}, 1) + mono({1, 0, 0}, -1) +
                      mono({0, 1, 0}, 1) + mono({0, 0, 1}, 1) +
                      mono({0, 1, 1}, -1) + mono({1, 1, 0}, 1) +
                      mono({1, 0, 1}, 1) + mono({1, 1, 1}, 1);
    s = s * num;
    for (int v = 0; v <= 2; ++v) s = s * geom(VarIndex(v), -1, 2, caps);
    return s;
  }
  if (family == PointFamily::C6Prime) {
    if (n != 2) throw Error("C6' pair lives on the 2-pointed stack");
    MultiSeries s = Rat(1, 3) * var_times_geom(VarIndex(1), caps) *
                    var_times_geom(VarIndex(2), caps);
    // 1 - q + (q+2)(q1+q2) + (2q+1) q1 q2
    MultiSeries num = mono({0, 0, 0}, 1) + mono({1, 0, 0}, -1) +
                      mono({1, 1, 0}, 1) + mono({0, 1, 0}, 2) +
                      mono({1, 0, 1}, 1) + mono({0, 0, 1}, 2) +
                      mono({1, 1, 1}, 2) + mono({0, 1, 1}, 1);
    s = s * num;
    for (int v = 0; v <= 2; ++v) s = s * inv_one_x_xx(VarIndex(v), caps);
    return s;
  }
  // C6DoublePrime
  if (n != 3) throw Error("C6'' pair lives on the 3-pointed stack");
  MultiSeries s = Rat(-1, 3) * var_times_geom(VarIndex(1), caps) *
                  var_times_geom(VarIndex(2), caps) *
                  var_times_geom(VarIndex(3), caps);
  // 1 - q + (q+2) e1 + (2q+1) e2 + (q-1) e3 in the elementary symmetric
  // polynomials of q1, q2, q3.
  MultiSeries num = mono({0, 0, 0, 0}, 1) + mono({1, 0, 0, 0}, -1);
  const int singles[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (const auto& sel : singles) {
    num = num + mono({0, sel[0], sel[1], sel[2]}, 2) +
          mono({1, sel[0], sel[1], sel[2]}, 1);
  }
  const int pairs[3][3] = {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  for (const auto& sel : pairs) {
    num = num + mono({0, sel[0], sel[1], sel[2]}, 1) +
          mono({1, sel[0], sel[1], sel[2]}, 2);
  }
  num = num + mono({0, 1, 1, 1}, -1) + mono({1, 1, 1, 1}, 1);
  s = s * num;
  for (int v = 0; v <= 3; ++v) s = s * inv_one_x_xx(VarIndex(v), caps);
  return s;
}

MultiSeries point_sector_oracle(int n, PointFamily family, int cap_q,
                                int cap_qi) {
  const bool c4 = family == PointFamily::C4Prime;
  if (c4 ? n != 2
         : (family == PointFamily::C6Prime ? n != 2 : n != 3))
    throw Error("point_sector_oracle: unsupported (n, family)");
  // lambda^2 = -1 for the order-4 pair; lambda^2 = -1 - lambda for the
  // primitive cube roots eps^2, eps^4.
  const QuadField f = c4 ? QuadField{-1, 0} : QuadField{-1, -1};
  const QuadRat lambdas[2] = {c4 ? QuadRat{0, 1} : QuadRat{0, 1},
                              c4 ? QuadRat{0, -1} : QuadRat{-1, -1}};
  const Rat prefactor = c4 ? Rat(1, 4) : Rat(1, 3);
  auto caps = genus1_caps(n, cap_q, cap_qi);

  QuadSeries total = quad_series_constant({0, 0}, caps);
  for (const QuadRat& lambda : lambdas) {
    const QuadRat one{1, 0};
    // (lambda-1)^n / ((1+lambda)(1-lambda)^n)
    QuadRat constant = quad_pow(f, quad_sub(lambda, one), n);
    constant = quad_mul(f, constant,
                        quad_inv(f, quad_add(one, lambda)));
    constant =
        quad_mul(f, constant, quad_pow(f, quad_sub(one, lambda), -n));
    QuadSeries s = quad_geom(f, kHodgeVar, quad_inv(f, lambda), caps);
    for (int i = 1; i <= n; ++i) {
      VarIndex v(i);
      QuadSeries factor = {var_times_geom(v, caps), MultiSeries(caps)};
      s = quad_series_mul(f, s, factor);
      s = quad_series_mul(f, s, quad_geom(f, v, lambda, caps));
    }
    s = quad_series_mul(f, s, quad_series_constant(constant, caps));
    total = quad_series_add(total, s);
  }
  return prefactor * quad_require_rational(total);
}

MultiSeries phi(int n, int cap_q, int cap_qi, const SectorTable& sectors) {
  if (n < 2) throw Error("phi: n >= 2 required");
  MultiSeries total(genus1_caps(n, cap_q, cap_qi));
  for (const SectorContribution& c : sectors.sectors_for(n)) {
    switch (c.kind) {
      case SectorKind::MainComponent:
        total = total + phi_main(n, cap_q, cap_qi);
        break;
      case SectorKind::AkBar:
        total = total + phi_ak(c.k, c.degree, cap_q, cap_qi);
        break;
      case SectorKind::PointPair:
        total = total + phi_points(n, c.family, cap_q, cap_qi);
        break;
    }
  }
  return total;
}

namespace {

// One subset term of the reduction lemma, for the nonempty I encoded by
// `mask` over [n].
MultiSeries subset_term(const MultiSeries& x_prev, int n, int mask,
                        const std::vector<int>& caps_full,
                        const std::vector<int>& caps_out) {
  std::vector<int> inside, outside;
  for (int i = 1; i <= n; ++i)
    ((mask >> (i - 1)) & 1 ? inside : outside).push_back(i);

  // X_{n-1} evaluated at {q_j, j not in I} and |I|-1 zeros: zero out the
  // trailing slots, then re-slot the rest onto the complement indices.
  MultiSeries prev = x_prev;
  for (int slot = static_cast<int>(outside.size()) + 1; slot <= n - 1; ++slot)
    prev = subst_zero(prev, VarIndex(slot));
  std::vector<int> slot_map(n, -1);
  slot_map[0] = 0;
  for (size_t t = 0; t < outside.size(); ++t) slot_map[t + 1] = outside[t];
  MultiSeries a = embed(prev, caps_full, slot_map);
  MultiSeries b = subst_zero(a, kHodgeVar);

  MultiSeries sum_j(caps_full);
  for (int j : outside) sum_j = sum_j + var_times_geom(VarIndex(j), caps_full);

  // A (1 - 1/q + S) + B/q regrouped as A (1 + S) + (B - A)/q; the division
  // is exact because the q-constant parts of A and B coincide.
  MultiSeries term =
      truncate(a * (MultiSeries::constant(1, caps_full) + sum_j), caps_out) +
      div_by_var(b - a, kHodgeVar);
  for (int i : inside) term = term * geom(VarIndex(i), 1, 1, caps_out);
  if (inside.size() % 2 == 0) term = -term;
  return term;
}

}  // namespace

MultiSeries x_next(const MultiSeries& x_prev, const MultiSeries& phi_n, int n,
                   int cap_q, int cap_qi, int threads) {
  if (n < 2) throw Error("x_next: n >= 2 required");
  if (x_prev.arity() != n)
    throw ArityMismatch("x_next: X_{n-1} must have arity n");
  if (x_prev.caps()[0] < cap_q + 1)
    throw CapExceeded(
        "x_next: cap budget violation, X_{n-1} needs q-cap >= cap_q + 1");
  const auto caps_full = genus1_caps(n, cap_q + 1, cap_qi);
  const auto caps_out = genus1_caps(n, cap_q, cap_qi);
  const int num_masks = (1 << n) - 1;

  std::vector<MultiSeries> terms(num_masks, MultiSeries(caps_out));
  const int workers = std::max(1, std::min(threads, num_masks));
  if (workers == 1) {
    for (int m = 0; m < num_masks; ++m)
      terms[m] = subset_term(x_prev, n, m + 1, caps_full, caps_out);
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (int m = w; m < num_masks; m += workers)
            terms[m] = subset_term(x_prev, n, m + 1, caps_full, caps_out);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  // Fixed summation order; with exact arithmetic the order is immaterial,
  // but byte-determinism of downstream output is easier to reason about.
  MultiSeries total = truncate(phi_n, caps_out);
  for (const MultiSeries& t : terms) total = total + t;
  return total;
}

namespace {

std::filesystem::path cache_path(const std::filesystem::path& dir, int n,
                                 int cap_q, int cap_qi) {
  std::ostringstream name;
  name << "X_g1_n" << n << "_q" << cap_q << "_qi" << cap_qi << ".json";
  return dir / name.str();
}

std::optional<MultiSeries> cache_load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    auto j = nlohmann::json::parse(buf.str());
    if (j.value("engine_version", "") != kEngineVersion) return std::nullopt;
    return deserialize_series(buf.str());
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable cache entries are recomputed
  }
}

void cache_store(const std::filesystem::path& file, const MultiSeries& s) {
  auto j = nlohmann::ordered_json::parse(serialize_series(s));
  j["engine_version"] = kEngineVersion;
  std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file);
  out << j.dump();
}

}  // namespace

MultiSeries x_series(int n, int cap_q, int cap_qi,
                     const PipelineOptions& opts) {
  if (n < 1) throw Error("x_series: n >= 1 required");
  std::optional<std::filesystem::path> file;
  if (opts.cache_dir) {
    file = cache_path(*opts.cache_dir, n, cap_q, cap_qi);
    if (auto cached = cache_load(*file)) return *cached;
  }
  MultiSeries result =
      n == 1 ? x1_series(cap_q, cap_qi)
             : x_next(x_series(n - 1, cap_q + 1, cap_qi, opts),
                      phi(n, cap_q, cap_qi, opts.sectors), n, cap_q, cap_qi,
                      opts.threads);
  if (file) cache_store(*file, result);
  return result;
}

ChiTable chi_table(int n, int cap_d, int cap_di, const PipelineOptions& opts) {
  MultiSeries x = x_series(n, cap_d, cap_di, opts);
  ChiTable table{n, cap_d, cap_di, {}};
  // Enumerate sorted exponent multisets; symmetry makes the sorted
  // representative canonical.
  Exponents di(n, 0);
  auto emit = [&](int d) {
    Exponents e(n + 1);
    e[0] = d;
    std::copy(di.begin(), di.end(), e.begin() + 1);
    Rat c = x.coeff(e);
    if (!is_integer(c))
      throw IntegralityError(e, c,
                             "non-integer chi at exponent; the algorithm "
                             "guarantees integers, so this is a bug");
    table.entries.emplace(ChiKey{d, di}, numerator(c));
  };
  // Non-decreasing sequences over 0..cap_di.
  while (true) {
    for (int d = 0; d <= cap_d; ++d) emit(d);
    int pos = n - 1;
    while (pos >= 0 && di[pos] == cap_di) --pos;
    if (pos < 0) break;
    int v = di[pos] + 1;
    for (int i = pos; i < n; ++i) di[i] = v;
  }
  return table;
}

}  // namespace chigen
