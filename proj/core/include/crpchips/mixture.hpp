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

#ifndef CRPCHIPS_MIXTURE_HPP
#define CRPCHIPS_MIXTURE_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crpchips/dirichlet.hpp"
#include "crpchips/permutation.hpp"
#include "crpchips/restaurant.hpp"

namespace crpchips {

// One summand of a spreaded image: remove the listed tables, multiply the
// density by z^rn_exponent, and lay down new lengths by the replacement law.
struct MixtureComponent {
  double weight = 0.0;
  int rn_exponent = 0;
  std::vector<TableId> removed;  // sorted ascending
  ConvolutionSpec replacement;   // dimension = number of new tables
  std::optional<Permutation> rho;  // labeled components only

  void validate() const;
};

struct MixtureMeasure {
  std::vector<MixtureComponent> components;
  double truncation_error = 0.0;
  std::string fingerprint;  // input-configuration hash

  void validate() const;
};

// Sum of weights together with the truncation bound.
std::pair<double, double> total_mass(const MixtureMeasure& m);

// Weight of each rn_exponent value, unnormalized.
std::map<int, double> exponent_marginal(const MixtureMeasure& m);

// E[sum_gamma e^{-u len_gamma}] under the mixture, where the sum runs over
// the coordinates of the replacement law of each component.
double laplace_functional(const MixtureMeasure& m, double u);

std::string configuration_fingerprint(const std::vector<int>& ks,
                                      const std::vector<double>& lengths,
                                      double tail_mass);

}  // namespace crpchips

#endif  // CRPCHIPS_MIXTURE_HPP
