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

#include "crpchips/stats.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace crpchips {

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("ks_two_sample: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na -
                             static_cast<double>(j) / nb));
  }
  return d;
}

double ks_two_sample_critical(std::size_t n, std::size_t m, double coeff) {
  const double dn = static_cast<double>(n), dm = static_cast<double>(m);
  return coeff * std::sqrt((dn + dm) / (dn * dm));
}

double ks_one_sample_uniform(std::vector<double> a) {
  if (a.empty()) throw std::invalid_argument("ks_one_sample: empty sample");
  std::sort(a.begin(), a.end());
  const double n = static_cast<double>(a.size());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double x = std::clamp(a[i], 0.0, 1.0);
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - x));
    d = std::max(d, std::abs(x - static_cast<double>(i) / n));
  }
  return d;
}

double ks_one_sample_critical(std::size_t n, double coeff) {
  return coeff / std::sqrt(static_cast<double>(n));
}

double total_variation(const std::map<int, double>& p,
                       const std::map<int, double>& q) {
  double sp = 0.0, sq = 0.0;
  for (const auto& [k, v] : p) sp += v;
  for (const auto& [k, v] : q) sq += v;
  if (sp <= 0.0 || sq <= 0.0)
    throw std::invalid_argument("total_variation: zero mass");
  std::set<int> keys;
  for (const auto& [k, v] : p) keys.insert(k);
  for (const auto& [k, v] : q) keys.insert(k);
  double tv = 0.0;
  for (int k : keys) {
    const auto ip = p.find(k);
    const auto iq = q.find(k);
    const double vp = (ip == p.end() ? 0.0 : ip->second) / sp;
    const double vq = (iq == q.end() ? 0.0 : iq->second) / sq;
    tv += std::abs(vp - vq);
  }
  return tv / 2.0;
}

}  // namespace crpchips
