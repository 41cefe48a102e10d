// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fail.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "eicp/enumeration.hpp"
#include "eicp/error.hpp"
#include "eicp/families.hpp"
#include "eicp/linalg.hpp"
#include "eicp/localization.hpp"
#include "eicp/report.hpp"
#include "eicp/row_stats.hpp"
#include "support.hpp"

using namespace eicp;
using namespace testing_support;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// The random distribution shared by criteria 5 and 6.
std::vector<MatrixPair> random_instances() {
  std::mt19937_64 rng(20240501);
  std::vector<MatrixPair> out;
  for (int k = 0; k < 600; ++k) out.push_back(random_certified_pair(rng, uniform_n(rng, 2, 8)));
  return out;
}

Outcome example_spectrum() {
  const Spectrum s = enumerate_spectrum(example1());
  const double want[] = {0.822, 2.333, 2.347, 2.349, 2.352};
  bool ok = s.values.size() == 5;
  for (std::size_t k = 0; ok && k < 5; ++k) ok = std::abs(s.values[k] - want[k]) <= 1e-3;
  std::vector<std::vector<std::size_t>> supports;
  for (const EicpSolution& sol : s.solutions) supports.push_back(sol.support);
  std::sort(supports.begin(), supports.end());
  ok = ok && supports == std::vector<std::vector<std::size_t>>{{0}, {0, 1}, {0, 1, 2}, {0, 2}, {1, 2}};
  std::string vals;
  for (double v : s.values) vals += fmt("%.4f ", v);
  return {ok, "values " + vals + fmt("from %zu supports", s.solutions.size())};
}

Outcome example_k1_hull() {
  const Interval h = hull_bounds_k1(example1());
  const bool ok = std::abs(h.lo() - 3.0 / 4) <= 1e-12 && std::abs(h.hi() - 8.0 / 3) <= 1e-12;
  return {ok, fmt("[%.17g, %.17g]", h.lo(), h.hi())};
}

Outcome example_k2_hull() {
  const Interval h = hull_bounds_k2(example1());
  const double lo = (31 - std::sqrt(127.0)) / 24, hi = (109 + std::sqrt(1081.0)) / 60;
  const double err = std::max(std::abs(h.lo() - lo), std::abs(h.hi() - hi));
  return {err <= 1e-10, fmt("[%.12f, %.12f], max error %.2e", h.lo(), h.hi(), err)};
}

Outcome example_gamma() {
  const MatrixPair p = example1();
  const Interval g = gamma_interval(p);
  const Vector ev = generalized_eig(p.a(), p.b()).values;
  const bool published = std::abs(g.lo() - 0.804) <= 5e-3 && std::abs(g.hi() - 2.352) <= 5e-3;
  const bool own = std::abs(g.lo() - ev.front()) <= 1e-9 && std::abs(g.hi() - ev.back()) <= 1e-9;
  return {published && own, fmt("[%.6f, %.6f]", g.lo(), g.hi())};
}

Outcome containment_chain(const std::vector<MatrixPair>& instances) {
  int k2_violations = 0, k1_violations = 0, hull_violations = 0;
  for (const MatrixPair& p : instances) {
    const LocalizationSet k1 = k1_set(p), cop = k1_cop_set(p), k2 = k2_set(p);
    bool k2_ok = true;
    for (const IndexedInterval& m : k2.raw) {
      bool inside = false;
      for (const Interval& host : cop.set.intervals()) inside = inside || host.contains(m.interval, 1e-9);
      k2_ok = k2_ok && inside;
    }
    bool k1_ok = true;
    for (const Interval& piece : cop.set.intervals()) {
      bool inside = false;
      for (const Interval& host : k1.set.intervals()) inside = inside || host.contains(piece, 1e-9);
      k1_ok = k1_ok && inside;
    }
    if (!k2_ok) ++k2_violations;
    if (!k1_ok) ++k1_violations;
    if (!cop.hull().contains(k2.hull(), 1e-9)) ++hull_violations;
  }
  return {k2_violations == 0 && k1_violations == 0,
          fmt("%zu instances: K2 interval outside every K1' interval in %d, K1' not in K1 in %d "
              "(hull(K2) outside hull(K1') in %d)",
              instances.size(), k2_violations, k1_violations, hull_violations)};
}

Outcome spectrum_containment(const std::vector<MatrixPair>& instances) {
  int checked = 0, violations = 0, values = 0;
  for (const MatrixPair& p : instances) {
    if (p.size() > 6) continue;
    ++checked;
    const Spectrum s = enumerate_spectrum(p);
    const LocalizationSet k1 = k1_set(p), cop = k1_cop_set(p), k2 = k2_set(p);
    const Interval g = gamma_interval(p);
    for (double lambda : s.values) {
      ++values;
      const bool ok = k1.set.contains(lambda, 1e-7) && cop.set.contains(lambda, 1e-7) &&
                      k2.set.contains(lambda, 1e-7) && g.contains(lambda, 1e-7);
      if (!ok) ++violations;
    }
  }
  return {violations == 0 && checked >= 300,
          fmt("%d instances, %d eigenvalues, %d outside some set", checked, values, violations)};
}

Outcome all_ones_family_check() {
  int bad = 0, cases = 0;
  for (std::size_t n = 2; n <= 6; ++n)
    for (double eps : {1.5, 2.0, 5.0, 10.0}) {
      ++cases;
      const double nd = static_cast<double>(n);
      const MatrixPair p = all_ones_family(n, eps).pair;
      const double klo = (1 + eps) / (nd - 2 + eps), khi = (nd + eps) / (eps - 1);
      const double glo = eps / (nd - 1 + eps);
      const Interval k1 = hull_bounds_k1(p), k2 = hull_bounds_k2(p), g = gamma_interval(p);
      const Interval s1 = k1_set(p).hull(), s2 = k2_set(p).hull();
      bool ok = true;
      for (const Interval& h : {k1, k2, s1, s2}) ok = ok && rel_err(h.lo(), klo) <= 1e-9 && rel_err(h.hi(), khi) <= 1e-9;
      ok = ok && rel_err(g.lo(), glo) <= 1e-9 && rel_err(g.hi(), khi) <= 1e-9;
      ok = ok && k1.lo() > g.lo() && k2.lo() > g.lo();
      if (!ok) ++bad;
    }
  return {bad == 0, fmt("%d (n, eps) cases, %d mismatches", cases, bad)};
}

Outcome proportional_family_check() {
  std::mt19937_64 rng(7);
  int bad = 0, cases = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = uniform_n(rng, 2, 8);
    const double r = uniform(rng, 0.05, 3.0), beta = r + uniform(rng, 0.01, 4.0), c = uniform(rng, 0.1, 5.0);
    ++cases;
    const MatrixPair p = proportional_family(n, beta, r, c).pair;
    const double lo = c * beta / (beta + r), hi = c * (beta + r) / beta;
    const Interval g = gamma_interval(p);
    bool ok = std::abs(g.lo() - c) <= 1e-9 * std::max(1.0, c) && std::abs(g.hi() - c) <= 1e-9 * std::max(1.0, c);
    for (const Interval& h : {hull_bounds_k1(p), hull_bounds_k2(p), k1_set(p).hull(), k2_set(p).hull()})
      ok = ok && rel_err(h.lo(), lo) <= 1e-9 && rel_err(h.hi(), hi) <= 1e-9;
    ok = ok && lo < c && c < hi;
    if (!ok) ++bad;
  }
  return {bad == 0, fmt("%d sampled (n, beta, R, c), %d mismatches", cases, bad)};
}

Outcome multi_row_check() {
  const MatrixPair p = example1();
  const std::size_t all[] = {0, 1, 2};
  const MultiRowRoots r = multi_row_roots(p, all);
  const Spectrum s = enumerate_spectrum(p);
  const double small = s.values[0], mid = s.values[2];
  const bool roots = std::abs(r.low_min - 1.1) <= 1e-9 && std::abs(r.up_max - 2.336) <= 1e-3;
  const bool outside = std::abs(small - 0.822) <= 1e-3 && std::abs(mid - 2.347) <= 1e-3 &&
                       (small < r.low_min || small > r.up_max) && (mid < r.low_min || mid > r.up_max);
  // Evaluated at the enumerated eigenvalue that the value 2.347 rounds.
  const double value = multi_row_polys(p, all, mid).up;
  return {roots && outside && std::abs(value - 8.5) <= 0.1,
          fmt("roots %.12f, %.6f; eigenvalues %.6f and %.6f outside; P_up(%.6f) = %.4f", r.low_min, r.up_max,
              small, mid, mid, value)};
}

Outcome shift_covariance() {
  std::mt19937_64 rng(99);
  int bad = 0, runs = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = uniform_n(rng, 1, 5);
    const MatrixPair p(random_symmetric(rng, n, -2.0, 2.0), random_sdd(rng, n));
    const Spectrum base = enumerate_spectrum(p);
    for (double mu : {0.5, 1.0, 3.0}) {
      ++runs;
      const Spectrum s = enumerate_spectrum(shift_pair(p, mu));
      bool ok = s.values.size() == base.values.size() && s.solutions.size() == base.solutions.size();
      for (std::size_t k = 0; ok && k < s.values.size(); ++k) ok = std::abs(s.values[k] - (base.values[k] + mu)) <= 1e-7;
      for (std::size_t k = 0; ok && k < s.solutions.size(); ++k) ok = s.solutions[k].support == base.solutions[k].support;
      if (!ok) ++bad;
    }
  }
  return {bad == 0, fmt("%d (pair, mu) runs, %d mismatches", runs, bad)};
}

Outcome lemma_suites() {
  std::mt19937_64 rng(1234);
  const int trials = 1000;
  int row_bound = 0, cross = 0, ordered = 0, convex_disc = 0, vertex = 0, commuting = 0;
  for (int t = 0; t < trials; ++t) {
    // Row sums bound the row product at the largest component.
    {
      const std::size_t n = uniform_n(rng, 2, 8);
      const SymMatrix m = random_symmetric(rng, n, -5.0, 5.0);
      Vector x(n);
      for (double& v : x) v = uniform(rng, 0.0, 1.0);
      const std::size_t p = static_cast<std::size_t>(std::max_element(x.begin(), x.end()) - x.begin());
      const RowStats s = row_stats(m);
      const double row = dot(m.row(p), x), tol = 1e-12 * (1 + m.norm_inf());
      if (s.m_minus[p] * x[p] > row + tol || row > s.m_plus[p] * x[p] + tol) ++row_bound;
    }
    // Cross terms bounded through the two largest components.
    {
      const std::size_t n = uniform_n(rng, 2, 8);
      const SymMatrix m = random_symmetric(rng, n, -5.0, 5.0);
      Vector x(n);
      double total = 0;
      for (double& v : x) total += (v = uniform(rng, 0.0, 1.0));
      for (double& v : x) v /= total;
      std::vector<std::size_t> order(n);
      for (std::size_t k = 0; k < n; ++k) order[k] = k;
      std::sort(order.begin(), order.end(), [&](std::size_t u, std::size_t v) { return x[u] > x[v]; });
      const RowStats s = row_stats(m);
      for (std::size_t i : {order[0], order[1]}) {
        double c = 0;
        for (std::size_t j = 0; j < n; ++j)
          if (j != i) c += m(i, j) * x[i] * x[j];
        const double bound = x[order[0]] * x[order[1]], tol = 1e-12 * (1 + m.norm_inf());
        if (-s.r_minus[i] * bound > c + tol || c > s.r_plus[i] * bound + tol) {
          ++cross;
          break;
        }
      }
    }
    // Shifted diagonals of SDD matrices.
    {
      const SymMatrix m = random_sdd(rng, uniform_n(rng, 1, 8));
      const RowStats s = row_stats(m);
      for (std::size_t i = 0; i < m.size(); ++i)
        if (!(s.m_plus[i] >= s.m_minus[i] && s.m_minus[i] > 0)) {
          ++ordered;
          break;
        }
    }
    // Convexity, discriminant bounds and vertex caps of the pair quadratics.
    {
      const std::size_t n = uniform_n(rng, 2, 8);
      const MatrixPair p = random_certified_pair(rng, n);
      const RowStats ra = row_stats(p.a()), rb = row_stats(p.b());
      const std::size_t i = uniform_n(rng, 0, n - 1);
      std::size_t j = uniform_n(rng, 0, n - 2);
      if (j >= i) ++j;
      const PairQuadratics q = build_quadratics(p, i, j);
      const double aii = p.a()(i, i), ajj = p.a()(j, j), bii = p.b()(i, i), bjj = p.b()(j, j);
      const double lb = 4 * std::pow(std::sqrt(aii * ajj * rb.r_plus[i] * rb.r_plus[j]) +
                                         std::sqrt(bii * bjj * ra.r_minus[i] * ra.r_minus[j]), 2);
      const double ub = 4 * std::pow(std::sqrt(aii * ajj * rb.r_minus[i] * rb.r_minus[j]) +
                                         std::sqrt(bii * bjj * ra.r_plus[i] * ra.r_plus[j]), 2);
      if (!(q.low.a2 > 0 && q.up.a2 > 0 && q.low.discriminant() >= lb - 1e-9 && q.up.discriminant() >= ub - 1e-9))
        ++convex_disc;
      const VertexCaps v = pair_vertex_and_caps(p, i, j);
      for (double y : {uniform(rng, -3.0, 6.0), uniform(rng, -3.0, 6.0)}) {
        const double fu = factored_up(p, i, j, y), fl = factored_low(p, i, j, y);
        if (std::abs(q.up(y) - fu) > 1e-9 * (1 + std::abs(fu)) || std::abs(q.low(y) - fl) > 1e-9 * (1 + std::abs(fl)))
          ++convex_disc;
      }
      if (v.y_star_up > v.c_up + 1e-12 * (1 + std::abs(v.c_up)) ||
          v.y_star_low < v.c_low - 1e-12 * (1 + std::abs(v.c_low)))
        ++vertex;
    }
    // Commuting pairs: generalized values are ratios along a shared basis.
    {
      const std::size_t n = uniform_n(rng, 1, 7);
      const auto q = random_orthogonal(rng, n);
      Vector da(n), db(n);
      for (std::size_t k = 0; k < n; ++k) {
        da[k] = uniform(rng, -3, 3);
        db[k] = uniform(rng, 0.2, 4);
      }
      Vector want(n);
      for (std::size_t k = 0; k < n; ++k) want[k] = da[k] / db[k];
      std::sort(want.begin(), want.end());
      const CommutingRatios r = commuting_ratio_check(from_spectrum(q, da), from_spectrum(q, db));
      bool ok = r.matches;
      for (std::size_t k = 0; k < n; ++k) ok = ok && std::abs(r.generalized[k] - want[k]) <= 1e-7 * (1 + std::abs(want[k]));
      if (!ok) ++commuting;
    }
  }
  const int total = row_bound + cross + ordered + convex_disc + vertex + commuting;
  return {total == 0,
          fmt("%d trials each; violations: row bound %d, cross terms %d, SDD diagonals %d, "
              "convexity/discriminant %d, vertex caps %d, commuting ratios %d",
              trials, row_bound, cross, ordered, convex_disc, vertex, commuting)};
}

// Instance text with the B key omitted, so the parser supplies the identity.
std::string instance_without_b(const SymMatrix& a) {
  std::string text = fmt("{\"n\": %zu, \"A\": [", a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    text += i ? ", [" : "[";
    for (std::size_t j = 0; j < a.size(); ++j) text += fmt(j ? ", %.17g" : "%.17g", a(i, j));
    text += "]";
  }
  return text + "]}";
}

Outcome identity_reduction() {
  std::mt19937_64 rng(4321);
  int bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = uniform_n(rng, 1, 6);
    // Alternate positive definite and entrywise nonnegative (often indefinite) A.
    const SymMatrix a = trial % 2 ? random_pd(rng, n) : random_symmetric(rng, n, 0.0, 2.0);
    const MatrixPair explicit_b(a, SymMatrix::identity(n));
    const MatrixPair from_file = parse_instance(instance_without_b(a));
    bool ok = from_file.a() == a && from_file.b() == SymMatrix::identity(n);
    ok = ok && k1_set(explicit_b) == k1_set(from_file) && k1_cop_set(explicit_b) == k1_cop_set(from_file) &&
         k2_set(explicit_b) == k2_set(from_file);
    const RowStats rs = row_stats(a);
    const LocalizationSet k1 = k1_set(explicit_b);
    for (std::size_t i = 0; i < n; ++i) ok = ok && k1.raw[i].interval == Interval(rs.m_minus[i], rs.m_plus[i]);
    if (!ok) ++bad;
  }
  return {bad == 0, fmt("100 copositive A, %d mismatches", bad)};
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<MatrixPair> instances = random_instances();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"example spectrum", example_spectrum},
      {"example K1 hull", example_k1_hull},
      {"example K2 hull", example_k2_hull},
      {"example Gamma", example_gamma},
      {"K2 in K1' in K1 on random instances", [&] { return containment_chain(instances); }},
      {"spectrum inside all sets on random instances", [&] { return spectrum_containment(instances); }},
      {"all-ones family closed forms", all_ones_family_check},
      {"proportional family closed forms", proportional_family_check},
      {"three-row polynomial counterexample", multi_row_check},
      {"shift covariance of the spectrum", shift_covariance},
      {"lemma-level property suites", lemma_suites},
      {"identity B reduction", identity_reduction},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %2zu  %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, o.detail.c_str());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria passed in %.1f s\n", static_cast<int>(criteria.size()) - failed, criteria.size(), secs);
  return failed ? 1 : 0;
}
