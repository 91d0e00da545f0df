// Copyright 2026 The crpchips Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//
// Acceptance gate: one line per criterion, exit 1 on any failure.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "crpchips/checker.hpp"
#include "crpchips/chip.hpp"
#include "crpchips/dirichlet.hpp"
#include "crpchips/engines.hpp"
#include "crpchips/ewens.hpp"
#include "crpchips/restaurant.hpp"
#include "crpchips/rng.hpp"
#include "crpchips/simulate.hpp"
#include "crpchips/stats.hpp"

using namespace crpchips;
using cplx = std::complex<double>;

namespace {

Permutation random_permutation(int degree, std::mt19937_64& rng) {
  std::vector<int> img(static_cast<size_t>(degree));
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

Restaurant random_tables(int count, std::mt19937_64& rng) {
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double> l(static_cast<size_t>(count));
  double tot = 0.0;
  for (double& v : l) tot += (v = exp1(rng));
  for (double& v : l) v /= tot;
  std::sort(l.begin(), l.end(), std::greater<>());
  return Restaurant{Rational(1), l, 0.0};
}

bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

// --- Criterion 1: pushforward consistency of the Ewens measures. ----------

bool criterion_pushforward() {
  for (int n = 2; n <= 7; ++n)
    for (const Rational& z : {Rational(1, 2), Rational(1), Rational(2)}) {
      const PushforwardReport rep = pushforward_check(n, EwensParams{z});
      if (!rep.ok) {
        std::fprintf(stderr, "  pushforward n=%d failed: %s\n", n,
                     rep.detail.c_str());
        return false;
      }
    }
  return true;
}

// --- Criterion 2: equivariance of the projection. --------------------------

bool criterion_equivariance() {
  auto rng = make_rng(Seed{101});
  for (int n = 2; n <= 5; ++n) {
    const int N = n + 2;
    for (int trial = 0; trial < 200; ++trial) {
      const Permutation g = random_permutation(N, rng);
      const Permutation h1 = random_permutation(n, rng);
      const Permutation h2 = random_permutation(n, rng);
      const Permutation lhs = project(
          compose(h1.extend(N), compose(g, h2.extend(N))), n);
      const Permutation rhs = compose(h1, compose(project(g, n), h2));
      if (!(lhs == rhs)) return false;
      if (!(project(g, N - 1) == project_map_based(g))) return false;
    }
  }
  return true;
}

// --- Criterion 3: chip algebra. --------------------------------------------

Chip acceptance_random_chip(int dst, int src, std::mt19937_64& rng) {
  const int deg = std::max({dst, src, 1}) + 3;
  Chip c = chip_from_pair(random_permutation(deg, rng),
                          random_permutation(deg, rng), dst, src);
  std::uniform_int_distribution<int> extra(0, 2);
  for (int i = extra(rng); i > 0; --i) c.circles.push_back(2 + extra(rng));
  c.canonicalize();
  return c;
}

bool criterion_chip_algebra() {
  auto rng = make_rng(Seed{102});
  std::uniform_int_distribution<int> size(0, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    const int a = size(rng), b = size(rng), c = size(rng), d = size(rng);
    const Chip f = acceptance_random_chip(a, b, rng);
    const Chip g = acceptance_random_chip(b, c, rng);
    const Chip h = acceptance_random_chip(c, d, rng);
    if (!(multiply(multiply(f, g), h) == multiply(f, multiply(g, h))))
      return false;
    if (!(multiply(chip_identity(a), f) == f)) return false;
    if (!(involute(multiply(f, g)) == multiply(involute(g), involute(f))))
      return false;
  }
  return true;
}

// --- Criterion 4: theta stabilization. -------------------------------------

bool criterion_theta_stabilization() {
  auto rng = make_rng(Seed{103});
  std::uniform_int_distribution<int> size(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int alpha = size(rng), beta = size(rng), gamma = size(rng);
    const int deg = 6;
    const Permutation g1 = random_permutation(deg, rng);
    const Permutation g2 = random_permutation(deg, rng);
    const Permutation h1 = random_permutation(deg, rng);
    const Permutation h2 = random_permutation(deg, rng);
    const Chip product = multiply(chip_from_pair(g1, g2, alpha, beta),
                                  chip_from_pair(h1, h2, beta, gamma));
    for (int j = deg - beta + 1; j <= deg - beta + 3; ++j) {
      const Permutation th = theta_element(beta, j);
      const int big = std::max(deg, beta + 2 * j);
      const Chip cur = chip_from_pair(
          compose(g1.extend(big), compose(th.extend(big), h1.extend(big))),
          compose(g2.extend(big), compose(th.extend(big), h2.extend(big))),
          alpha, gamma);
      if (!(cur == product)) return false;
    }
  }
  return true;
}

// --- Criterion 5: Dirichlet Laplace transforms. -----------------------------

bool criterion_laplace() {
  auto rng = make_rng(Seed{104});
  std::uniform_real_distribution<double> unif(0.05, 2.0);
  std::uniform_int_distribution<int> kdist(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const int p = 1 + static_cast<int>(rng() % 4);
    DirichletSpec spec;
    spec.ell = unif(rng);
    int total = 0;
    for (int i = 0; i < p; ++i) total += (spec.k.emplace_back(kdist(rng)));
    if (total == 0) spec.k[0] = 1;
    std::vector<cplx> u;
    for (int i = 0; i < p; ++i) u.emplace_back(unif(rng), unif(rng) - 1.0);
    const double diff =
        std::abs(laplace_closed(spec, u) - laplace_contour(spec, u));
    if (diff > 1e-6) {
      std::fprintf(stderr, "  contour mismatch %g\n", diff);
      return false;
    }
  }
  // Monte Carlo cross-check at 3 SE with one million draws.
  const DirichletSpec spec{{2, 1, 1}, 1.3};
  const std::vector<double> w{0.5, 1.0, 0.2};
  auto mc = make_rng(Seed{105});
  const long draws = 1000000;
  double mean = 0, m2 = 0;
  for (long i = 0; i < draws; ++i) {
    const auto x = sample(spec, mc);
    double e = 0.0;
    for (size_t j = 0; j < w.size(); ++j) e -= w[j] * x[j];
    const double v = std::exp(e);
    mean += v;
    m2 += v * v;
  }
  mean /= draws;
  const double se = std::sqrt((m2 / draws - mean * mean) / draws);
  const std::vector<cplx> uc{cplx(0.5), cplx(1.0), cplx(0.2)};
  if (std::abs(laplace_closed(spec, uc).real() - mean) > 3 * se + 1e-12)
    return false;
  // Aggregation of uniform simplex points.
  for (const auto& [n, grouping] :
       std::vector<std::pair<int, std::vector<int>>>{
           {4, {1, 1, 1, 1}}, {5, {5}}, {3, {2, 1}}}) {
    if (!aggregate_check(n, grouping, 1.7, Seed{106}).pass) return false;
  }
  return true;
}

// --- Criterion 6: literal engine calibration is exact. ----------------------

bool mixtures_agree(const MixtureMeasure& a, const MixtureMeasure& b) {
  if (a.components.size() != b.components.size()) return false;
  const auto ma = exponent_marginal(a), mb = exponent_marginal(b);
  if (ma.size() != mb.size()) return false;
  for (const auto& [e, w] : ma) {
    auto it = mb.find(e);
    if (it == mb.end() || !close_rel(w, it->second, 1e-11)) return false;
  }
  const auto [massa, erra] = total_mass(a);
  const auto [massb, errb] = total_mass(b);
  if (!close_rel(massa, massb, 1e-11)) return false;
  for (double u : {0.3, 1.0, 2.7})
    if (!close_rel(laplace_functional(a, u), laplace_functional(b, u), 1e-10))
      return false;
  return true;
}

bool criterion_calibration() {
  auto rng = make_rng(Seed{107});
  for (const std::vector<int>& ks :
       {std::vector<int>{2}, {3}, {2, 2}}) {
    for (int trial = 0; trial < 20; ++trial) {
      const Restaurant r = random_tables(5, rng);
      const MixtureMeasure norm = act_cycles(ks, r);
      const MixtureMeasure lit =
          act_cycles_literal(ks, r, DivisorMode::kFullAut);
      if (!mixtures_agree(norm, lit)) return false;
      int n = 0;
      for (int k : ks) n += k;
      if (!close_rel(total_mass(norm).first, std::pow(r.stored_mass(), n),
                     1e-10))
        return false;
    }
  }
  // Hand form for the transposition on two tables.
  const Restaurant two{Rational(1), {0.6, 0.4}, 0.0};
  const auto em = exponent_marginal(act_cycles({2}, two));
  return close_rel(em.at(1), 0.6 * 0.6 + 0.4 * 0.4, 1e-12) &&
         close_rel(em.at(-1), 2 * 0.6 * 0.4, 1e-12);
}

// --- Criterion 7: exact mixture against the Monte Carlo oracle. -------------

bool criterion_cycles_oracle() {
  const Restaurant r = sample_tables(Rational(1), SampleMethod::kStickBreaking,
                                     Truncation{40, 1e-9}, Seed{108});
  for (const std::vector<int>& ks : {std::vector<int>{2}, {3}}) {
    SimOptions opt;
    opt.samples = 1000000;
    opt.u_grid = {0.1, 0.3, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0, 8.0, 12.0};
    const SimSummary sim = simulate_cycles(ks, r, opt, Seed{109});
    const MixtureMeasure m = act_cycles(ks, r);
    const CompareReport rep = compare_report(m, sim, 0.01, 3.0);
    if (!rep.pass) {
      std::fprintf(stderr, "  oracle mismatch: %s\n", rep.detail.c_str());
      return false;
    }
    const auto [mass, err] = total_mass(m);
    if (std::abs(mass - 1.0) > err + 1e-9) return false;
  }
  return true;
}

// --- Criterion 8: chip action engine. ---------------------------------------

bool criterion_chip_action() {
  // Identity chip: exactly one component of weight one.
  const Restaurant r{Rational(1), {0.6, 0.4}, 0.0};
  OccupiedRestaurant occ = place_guests(r, 2, Seed{110});
  ChipData ident;
  ident.sigma = Permutation::identity(2);
  ident.phi = {0, 0};
  const MixtureMeasure mi = act_chip(ident, occ, 2);
  if (mi.components.size() != 1 ||
      !close_rel(mi.components[0].weight, 1.0, 1e-12) ||
      mi.components[0].rn_exponent != 0)
    return false;

  // One strand with one crossing: exact law against the sampling oracle.
  OccupiedRestaurant occ1 = place_guests(r, 1, Seed{111});
  ChipData data;
  data.sigma = Permutation::identity(1);
  data.phi = {1};
  const MixtureMeasure m = act_chip(data, occ1, 1);
  SimOptions opt;
  opt.samples = 200000;
  opt.u_grid = {0.3, 1.0, 2.0, 4.0};
  const ChipSimSummary sim = simulate_chip(data, occ1, 1, opt, Seed{112});

  // Exponent marginal.
  std::map<int, double> em_sim;
  for (const auto& [e, c] : sim.exponent_freq)
    em_sim[e] = static_cast<double>(c);
  if (total_variation(exponent_marginal(m), em_sim) > 0.01) return false;
  // Rho marginal.
  std::map<std::string, double> rho_m, rho_s;
  for (const auto& c : m.components)
    rho_m[c.rho ? c.rho->to_string() : "-"] += c.weight;
  for (const auto& [k, v] : sim.rho_freq) rho_s[k] += static_cast<double>(v);
  double tot_m = 0, tot_s = 0;
  for (auto& [k, v] : rho_m) tot_m += v;
  for (auto& [k, v] : rho_s) tot_s += v;
  double tv = 0;
  for (auto& [k, v] : rho_m)
    tv += std::abs(v / tot_m - (rho_s.count(k) ? rho_s[k] / tot_s : 0.0));
  if (tv / 2 > 0.01) return false;
  // Laplace over the labeled arc coordinates (the first n = 1).
  for (size_t i = 0; i < opt.u_grid.size(); ++i) {
    const double u = opt.u_grid[i];
    double exact = 0.0;
    for (const auto& c : m.components) {
      std::vector<cplx> uv(static_cast<size_t>(c.replacement.dimension()),
                           cplx(0.0));
      uv[0] = cplx(u);
      exact += c.weight * laplace_closed(c.replacement, uv).real();
    }
    if (std::abs(exact - sim.laplace_mean[i]) > 3 * sim.laplace_se[i] + 1e-9)
      return false;
  }
  return true;
}

// --- Criterion 9: center action samplers. -----------------------------------

bool criterion_center() {
  const Restaurant r = sample_tables(Rational(1), SampleMethod::kStickBreaking,
                                     Truncation{15, 1e-9}, Seed{113});
  const OccupiedRestaurant occ = occupy(r);
  const long trials = 100000;
  std::map<int, double> exact_freq, direct_freq;
  std::vector<double> exact_new, direct_new;
  for (long i = 0; i < trials; ++i) {
    const CenterActResult a =
        act_center_sample({2}, occ, derive_seed(Seed{114}, i));
    const CenterActResult b =
        simulate_direct_center({2}, occ, derive_seed(Seed{115}, i));
    exact_freq[a.rn_exponent] += 1;
    direct_freq[b.rn_exponent] += 1;
    for (const auto& t : a.occ.tables)
      if (t.id >= occ.next_id) exact_new.push_back(t.length);
    for (const auto& t : b.occ.tables)
      if (t.id >= occ.next_id) direct_new.push_back(t.length);
  }
  if (total_variation(exact_freq, direct_freq) > 0.02) return false;
  const double ks = ks_two_sample(exact_new, direct_new);
  return ks <= ks_two_sample_critical(exact_new.size(), direct_new.size());
}

// --- Criterion 10: checker toolkit. -----------------------------------------

bool criterion_checker() {
  auto rng = make_rng(Seed{116});
  // Boundary words of bipartite ribbon graphs.
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Permutation g = random_permutation(n, rng);
    const Permutation h = random_permutation(n, rng);
    const auto [a, b] = ribbon_boundary(g, h);
    if (!(a == compose(g, h)) || !(b == compose(h, g))) return false;
  }
  // Class enumeration against Burnside counting.
  for (const std::vector<int>& ks :
       {std::vector<int>{2}, {3}, {2, 2}}) {
    if (static_cast<long>(enumerate_gamma(ks).size()) !=
        gamma_class_count_burnside(ks))
      return false;
  }
  // Orbit-stabilizer for the relabeling action.
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 3;
    const CheckerSurface s{random_permutation(n, rng),
                           random_permutation(n, rng),
                           random_permutation(n, rng)};
    std::set<CheckerSurface> orbit;
    for_each_permutation(n, [&](const Permutation& sg) {
      for_each_permutation(n, [&](const Permutation& t) {
        const auto rl = [&](const Permutation& p) {
          return compose(t, compose(p, sg.inverse()));
        };
        orbit.insert({rl(s.ga), rl(s.gb), rl(s.gc)});
      });
    });
    if (static_cast<long>(orbit.size()) * relabeling_stabilizer_order(s) != 36)
      return false;  // |S_3 x S_3| = 36
  }
  // Round trip through the triple encoding, incidence sums, and Euler
  // characteristic bookkeeping.
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const EngineSurface s{random_permutation(n, rng),
                          random_permutation(n, rng)};
    const CheckerSurface t = engine_to_triple(s);
    if (!(t.ga == s.g) || !(t.gc.inverse() == s.u)) return false;
    const SurfaceStats ts = surface_stats(t);
    const auto inc = incidence_matrix(s);
    const SurfaceStats st = surface_stats(s);
    if (st.chi != ts.chi || st.components != ts.components) return false;
    std::vector<int> col(st.c_orders.size(), 0);
    for (size_t rr = 0; rr < inc.size(); ++rr) {
      int row = 0;
      for (size_t cc = 0; cc < inc[rr].size(); ++cc) {
        row += inc[rr][cc];
        col[cc] += inc[rr][cc];
      }
      if (row != st.b_orders[rr]) return false;
    }
    for (size_t cc = 0; cc < col.size(); ++cc)
      if (col[cc] != st.c_orders[cc]) return false;
    int chi = 0;
    for (size_t i = 0; i < st.chi_per_component.size(); ++i) {
      if (st.genus_per_component[i] < 0) return false;
      if (st.chi_per_component[i] != 2 - 2 * st.genus_per_component[i])
        return false;
      chi += st.chi_per_component[i];
    }
    if (chi != st.chi) return false;
  }
  return true;
}

struct Criterion {
  const char* name;
  bool (*fn)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"ewens pushforward and Radon-Nikodym exponents", criterion_pushforward},
      {"projection equivariance", criterion_equivariance},
      {"chip algebra: associativity, units, involution", criterion_chip_algebra},
      {"theta stabilization matches the chip product", criterion_theta_stabilization},
      {"Dirichlet Laplace transforms: contour, Monte Carlo, aggregation", criterion_laplace},
      {"literal engine with full automorphism divisor is exact", criterion_calibration},
      {"cycle-action mixture matches the sampling oracle", criterion_cycles_oracle},
      {"chip-action mixture matches the sampling oracle", criterion_chip_action},
      {"center-action exact sampler matches the direct oracle", criterion_center},
      {"checker toolkit invariants", criterion_checker},
  };
  bool all = true;
  int idx = 0;
  for (const Criterion& c : criteria) {
    ++idx;
    bool ok = false;
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      std::fprintf(stderr, "  criterion %d threw: %s\n", idx, e.what());
    }
    std::printf("criterion %2d: %-62s %s\n", idx, c.name,
                ok ? "PASS" : "FAIL");
    std::fflush(stdout);
    all = all && ok;
  }
  return all ? 0 : 1;
}
