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

#include "crpchips/ewens.hpp"

#include <map>

#include "crpchips/guard.hpp"

namespace crpchips {

Rational ewens_mass(const Permutation& p, const EwensParams& params) {
  if (params.z <= 0) throw std::invalid_argument("ewens_mass: z must be > 0");
  Rational denom(1);
  for (int i = 0; i < p.degree(); ++i) denom *= params.z + i;
  return rational_pow(params.z, p.cycle_count()) / denom;
}

int rn_exponent_finite(const Permutation& h1, const Permutation& h2,
                       const Permutation& u) {
  if (h1.degree() != u.degree() || h2.degree() != u.degree())
    throw std::invalid_argument("rn_exponent_finite: degree mismatch");
  return compose(compose(h1.inverse(), u), h2).cycle_count() - u.cycle_count();
}

namespace {

PushforwardReport run_check(
    int n, const EwensParams& params,
    const std::function<Rational(const Permutation&)>& mass_n, int guard) {
  if (n < 2) throw std::invalid_argument("pushforward_check: n must be >= 2");
  check_guard(n, guard, "pushforward_check");

  std::map<Permutation, Rational> pushed;
  for_each_permutation(n, [&](const Permutation& g) {
    pushed[project(g, n - 1)] += mass_n(g);
  });

  PushforwardReport report;
  report.ok = true;
  for (const auto& [h, total] : pushed) {
    Rational expected = ewens_mass(h, params);
    if (total != expected) {
      report.ok = false;
      report.detail = "pushforward mismatch at h = " + h.to_string();
      return report;
    }
  }

  if (n <= 5) {
    // Two-sided equivariance of the projection: with h1, h2 fixing the top
    // symbol, deleting it commutes with multiplication.
    bool equi = true;
    std::string offender;
    for_each_permutation(n, [&](const Permutation& g) {
      if (!equi) return;
      for_each_permutation(n - 1, [&](const Permutation& h1) {
        if (!equi) return;
        for_each_permutation(n - 1, [&](const Permutation& h2) {
          if (!equi) return;
          Permutation lhs = project(
              compose(compose(h1.extend(n), g), h2.extend(n)), n - 1);
          Permutation rhs = compose(compose(h1, project(g, n - 1)), h2);
          if (!(lhs == rhs)) {
            equi = false;
            offender = "equivariance failed at g = " + g.to_string() +
                       ", h1 = " + h1.to_string() + ", h2 = " + h2.to_string();
          }
        });
      });
    });
    if (!equi) {
      report.ok = false;
      report.detail = offender;
      return report;
    }
    report.detail = "pushforward and equivariance verified";
  } else {
    report.detail = "pushforward verified";
  }
  return report;
}

}  // namespace

PushforwardReport pushforward_check(int n, const EwensParams& params,
                                    int guard) {
  return run_check(
      n, params,
      [&](const Permutation& g) { return ewens_mass(g, params); }, guard);
}

PushforwardReport pushforward_check_measure(
    int n, const EwensParams& params,
    const std::function<Rational(const Permutation&)>& level_n_mass,
    int guard) {
  return run_check(n, params, level_n_mass, guard);
}

}  // namespace crpchips
