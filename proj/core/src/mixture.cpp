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

#include "crpchips/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

namespace crpchips {

void MixtureComponent::validate() const {
  if (weight < 0.0)
    throw std::invalid_argument("MixtureComponent: negative weight");
  if (!std::is_sorted(removed.begin(), removed.end()))
    throw std::invalid_argument("MixtureComponent: removed not sorted");
  replacement.validate();
}

void MixtureMeasure::validate() const {
  if (truncation_error < 0.0)
    throw std::invalid_argument("MixtureMeasure: negative truncation_error");
  double total = 0.0;
  for (const auto& c : components) {
    c.validate();
    total += c.weight;
  }
  if (total > 1.0 + 1e-9 || total < 1.0 - truncation_error - 1e-9)
    throw std::invalid_argument("MixtureMeasure: mass outside [1-err, 1]");
}

std::pair<double, double> total_mass(const MixtureMeasure& m) {
  double total = 0.0;
  for (const auto& c : m.components) total += c.weight;
  return {total, m.truncation_error};
}

std::map<int, double> exponent_marginal(const MixtureMeasure& m) {
  std::map<int, double> out;
  for (const auto& c : m.components) out[c.rn_exponent] += c.weight;
  return out;
}

double laplace_functional(const MixtureMeasure& m, double u) {
  const auto [mass, err] = total_mass(m);
  if (mass <= 0.0) throw std::invalid_argument("laplace_functional: no mass");
  double acc = 0.0;
  for (const auto& c : m.components) {
    const int d = c.replacement.dimension();
    std::vector<std::complex<double>> uvec(static_cast<std::size_t>(d),
                                           {0.0, 0.0});
    double comp = 0.0;
    for (int g = 0; g < d; ++g) {
      uvec[static_cast<std::size_t>(g)] = {u, 0.0};
      comp += laplace_closed(c.replacement, uvec).real();
      uvec[static_cast<std::size_t>(g)] = {0.0, 0.0};
    }
    acc += c.weight * comp;
  }
  return acc / mass;
}

std::string configuration_fingerprint(const std::vector<int>& ks,
                                      const std::vector<double>& lengths,
                                      double tail_mass) {
  std::string s = "ks:";
  char buf[64];
  for (int k : ks) {
    std::snprintf(buf, sizeof buf, "%d,", k);
    s += buf;
  }
  s += ";ell:";
  for (double l : lengths) {
    std::snprintf(buf, sizeof buf, "%.17g,", l);
    s += buf;
  }
  std::snprintf(buf, sizeof buf, ";tail:%.17g", tail_mass);
  s += buf;
  std::snprintf(buf, sizeof buf, "%016zx", std::hash<std::string>{}(s));
  return buf;
}

}  // namespace crpchips
