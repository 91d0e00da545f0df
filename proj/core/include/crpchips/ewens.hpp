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

#ifndef CRPCHIPS_EWENS_HPP
#define CRPCHIPS_EWENS_HPP

#include <functional>
#include <string>

#include "crpchips/permutation.hpp"
#include "crpchips/rational.hpp"

namespace crpchips {

struct EwensParams {
  Rational z;  // must be > 0
};

// mu^z_n(g) = z^{#cycles(g)} / (z (z+1) ... (z+n-1)), computed exactly.
Rational ewens_mass(const Permutation& p, const EwensParams& params);

// Integer exponent [h1^{-1} u h2] - [u].
int rn_exponent_finite(const Permutation& h1, const Permutation& h2,
                       const Permutation& u);

struct PushforwardReport {
  bool ok = false;
  std::string detail;  // offending element on failure, diagnostics otherwise
};

// Verifies, with exact rational arithmetic, that the projection maps the
// level-n measure to the level-(n-1) measure: for every h of degree n-1,
//   sum over {g : project(g, n-1) = h} of mass(g)  ==  mu^z_{n-1}(h).
// For n <= 5 additionally verifies two-sided equivariance of the projection
// on all triples (g, h1, h2).  Refuses when n exceeds the guard.
PushforwardReport pushforward_check(int n, const EwensParams& params,
                                    int guard = 8);

// Same check, with an arbitrary level-n measure (used as a negative control:
// perturb the Ewens measure and watch the identity fail).
PushforwardReport pushforward_check_measure(
    int n, const EwensParams& params,
    const std::function<Rational(const Permutation&)>& level_n_mass,
    int guard = 8);

}  // namespace crpchips

#endif  // CRPCHIPS_EWENS_HPP
