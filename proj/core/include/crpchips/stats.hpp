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

#ifndef CRPCHIPS_STATS_HPP
#define CRPCHIPS_STATS_HPP

#include <cstddef>
#include <map>
#include <vector>

namespace crpchips {

// Kolmogorov-Smirnov statistics.  Critical values use the asymptotic
// coefficient 1.628 (1% level).
double ks_two_sample(std::vector<double> a, std::vector<double> b);
double ks_two_sample_critical(std::size_t n, std::size_t m,
                              double coeff = 1.628);
double ks_one_sample_uniform(std::vector<double> a);  // against U[0,1]
double ks_one_sample_critical(std::size_t n, double coeff = 1.628);

// Total variation distance between two nonnegative weight tables; both sides
// are normalized to probability vectors first.
double total_variation(const std::map<int, double>& p,
                       const std::map<int, double>& q);

}  // namespace crpchips

#endif  // CRPCHIPS_STATS_HPP
