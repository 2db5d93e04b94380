#include "chigen/verify.hpp"

#include <algorithm>
#include <sstream>

#include "chigen/genus0.hpp"
#include "chigen/genus1.hpp"
#include "chigen/wps.hpp"

namespace chigen {

namespace {

std::string exp_str(const Exponents& e) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ")";
  return os.str();
}

// Lexicographically smallest exponent where the two series differ.
SuiteResult compare(const std::string& name, const MultiSeries& got,
                    const MultiSeries& expected) {
  auto it = got.terms().begin();
  auto jt = expected.terms().begin();
  while (it != got.terms().end() || jt != expected.terms().end()) {
    if (jt == expected.terms().end() ||
        (it != got.terms().end() && it->first < jt->first)) {
      return {name, false,
              "coefficient at " + exp_str(it->first) + ": got " +
                  rat_str(it->second) + ", expected 0"};
    }
    if (it == got.terms().end() || jt->first < it->first) {
      return {name, false,
              "coefficient at " + exp_str(jt->first) + ": got 0, expected " +
                  rat_str(jt->second)};
    }
    if (it->second != jt->second) {
      return {name, false,
              "coefficient at " + exp_str(it->first) + ": got " +
                  rat_str(it->second) + ", expected " + rat_str(jt->second)};
    }
    ++it;
    ++jt;
  }
  return {name, true, ""};
}

SuiteResult suite_x1(const SectorTable&) {
  return compare("x1", x1_series(30, 30), x1_oracle(30, 30));
}

SuiteResult suite_specialization(const SectorTable&) {
  MultiSeries lhs = subst_zero(x1_series(0, 60), kHodgeVar);
  std::vector<int> caps{0, 60};
  MultiSeries rhs =
      geom(VarIndex(1), 1, 4, caps) * geom(VarIndex(1), 1, 6, caps);
  return compare("specialization", lhs, rhs);
}

SuiteResult suite_points(const SectorTable&) {
  const struct {
    int n;
    PointFamily family;
    const char* label;
  } cases[] = {{2, PointFamily::C4Prime, "C4'"},
               {2, PointFamily::C6Prime, "C6'"},
               {3, PointFamily::C6DoublePrime, "C6''"}};
  for (const auto& c : cases) {
    SuiteResult r = compare("points", phi_points(c.n, c.family, 8, 8),
                            point_sector_oracle(c.n, c.family, 8, 8));
    if (!r.passed) {
      r.detail = std::string(c.label) + " pair: " + r.detail;
      return r;
    }
  }
  return {"points", true, ""};
}

SuiteResult suite_symmetry(const SectorTable& sectors) {
  for (int n = 2; n <= 4; ++n) {
    PipelineOptions opts;
    opts.sectors = sectors;
    MultiSeries x = x_series(n, 3, 3, opts);
    std::vector<int> perm(n + 1);
    for (int i = 0; i <= n; ++i) perm[i] = i;
    while (std::next_permutation(perm.begin() + 1, perm.end())) {
      SuiteResult r = compare("symmetry", permute_vars(x, perm), x);
      if (!r.passed) {
        r.detail = "X_" + std::to_string(n) + " not symmetric: " + r.detail;
        return r;
      }
    }
  }
  return {"symmetry", true, ""};
}

SuiteResult suite_string(const SectorTable& sectors) {
  PipelineOptions opts;
  opts.sectors = sectors;
  for (int n = 2; n <= 4; ++n) {
    MultiSeries x = x_series(n, 4, 4, opts);
    MultiSeries lhs = subst_zero(x, VarIndex(n));
    // X_{n-1} needs one spare unit of q-cap for the exact 1/q shift.
    MultiSeries prev = x_series(n - 1, 5, 4, opts);
    auto caps_wide = genus1_caps(n, 5, 4);
    auto caps_out = genus1_caps(n, 4, 4);
    std::vector<int> slot_map(n);
    for (int i = 0; i < n; ++i) slot_map[i] = i;
    MultiSeries prev_e = embed(prev, caps_wide, slot_map);
    MultiSeries factor = MultiSeries::constant(1, caps_wide);
    for (int j = 1; j < n; ++j) {
      VarIndex v(j);
      factor = factor + mul_by_var(geom(v, 1, 1, caps_wide), v);
    }
    MultiSeries rhs =
        truncate(prev_e * factor, caps_out) -
        div_by_var(prev_e - subst_zero(prev_e, kHodgeVar), kHodgeVar);
    SuiteResult r = compare("string", lhs, rhs);
    if (!r.passed) {
      r.detail = "string equation at n=" + std::to_string(n) + ": " + r.detail;
      return r;
    }
  }
  return {"string", true, ""};
}

SuiteResult suite_integrality(const SectorTable& sectors) {
  // Every chi value is an integer; rational intermediates must cancel.
  // This is the suite a wrong sector table fails first.
  for (int n = 2; n <= 4; ++n) {
    PipelineOptions opts;
    opts.sectors = sectors;
    MultiSeries x = x_series(n, 4, 4, opts);
    for (const auto& [e, c] : x.terms()) {
      if (!is_integer(c)) {
        return {"integrality", false,
                "non-integer chi " + rat_str(c) + " at " + exp_str(e) +
                    " on X_" + std::to_string(n)};
      }
    }
  }
  return {"integrality", true, ""};
}

SuiteResult suite_genus0(const SectorTable&) {
  for (int n = 3; n <= 6; ++n) {
    auto violations = check_nonnegative(genus0_series(n, 6).series);
    if (!violations.empty()) {
      return {"genus0", false,
              "negative or non-integer coefficient at " +
                  exp_str(violations.front()) + " on the " +
                  std::to_string(n) + "-pointed series"};
    }
  }
  // 4-pointed space specialized to one variable is the projective line:
  // chi(O(d)) = d + 1.
  Genus0Series g = genus0_series(4, 30);
  for (int d = 0; d <= 30; ++d) {
    Rat c = g.series.coeff({d, 0, 0, 0});
    if (c != d + 1) {
      return {"genus0", false,
              "P^1 check: coefficient at degree " + std::to_string(d) +
                  " is " + rat_str(c) + ", expected " + std::to_string(d + 1)};
    }
  }
  return {"genus0", true, ""};
}

using SuiteFn = SuiteResult (*)(const SectorTable&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"x1", suite_x1},
      {"specialization", suite_specialization},
      {"points", suite_points},
      {"symmetry", suite_symmetry},
      {"string", suite_string},
      {"integrality", suite_integrality},
      {"genus0", suite_genus0},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : suite_registry()) n.push_back(name);
    return n;
  }();
  return names;
}

SuiteResult run_verify_suite(const std::string& name,
                             const SectorTable& sectors) {
  for (const auto& [n, fn] : suite_registry())
    if (n == name) return fn(sectors);
  throw Error("unknown verification suite: " + name);
}

std::vector<SuiteResult> run_verify(const std::vector<std::string>& suites,
                                    const SectorTable& sectors) {
  std::vector<SuiteResult> results;
  if (suites.empty()) {
    for (const auto& [name, fn] : suite_registry())
      results.push_back(fn(sectors));
  } else {
    for (const auto& name : suites)
      results.push_back(run_verify_suite(name, sectors));
  }
  return results;
}

}  // namespace chigen
