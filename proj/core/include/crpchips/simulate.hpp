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

#ifndef CRPCHIPS_SIMULATE_HPP
#define CRPCHIPS_SIMULATE_HPP

#include <map>
#include <string>
#include <vector>

#include "crpchips/engines.hpp"
#include "crpchips/mixture.hpp"
#include "crpchips/restaurant.hpp"
#include "crpchips/rng.hpp"

namespace crpchips {

// Streaming summary of Monte Carlo runs of the cut-and-glue action.
struct SimSummary {
  long samples = 0;
  std::map<int, long> exponent_freq;
  std::vector<double> u_grid;
  // Per grid point: empirical mean and standard error of
  // sum_{new tables} e^{-u * length}.
  std::vector<double> laplace_mean;
  std::vector<double> laplace_se;
  std::vector<double> new_lengths;  // pooled, possibly capped
  std::string fingerprint;
};

struct SimOptions {
  long samples = 100000;
  std::vector<double> u_grid;
  long max_pooled_lengths = 2000000;
  int threads = 0;  // 0: CRPCHIPS_THREADS env or hardware_concurrency
  int chunks = 64;  // deterministic merge granularity
};

int resolve_threads(int requested);

// Places n fresh guests uniformly, applies the canonical cycles element, and
// forgets the guests; one record per sample.
SimSummary simulate_cycles(const std::vector<int>& cycle_lengths,
                           const Restaurant& r, const SimOptions& opt,
                           Seed seed);

// Chip-action oracle: starting from the occupied point, places the auxiliary
// guests, acts by the chip's group element, and records (rho, exponent,
// labeled arc lengths, new free lengths).
struct ChipSimSummary {
  long samples = 0;
  std::map<int, long> exponent_freq;
  std::map<std::string, long> rho_freq;
  std::vector<double> u_grid;
  std::vector<double> laplace_mean;  // over labeled arc-length vectors
  std::vector<double> laplace_se;
};

ChipSimSummary simulate_chip(const ChipData& data,
                             const OccupiedRestaurant& occ, int n,
                             const SimOptions& opt, Seed seed);

struct CompareReport {
  double tv_exponent = 0.0;
  double tv_threshold = 0.0;
  std::vector<double> u_grid;
  std::vector<double> laplace_diff;
  std::vector<double> laplace_se;
  double mass = 0.0;
  double truncation_error = 0.0;
  bool pass = false;
  std::string detail;
};

// Engine output against the Monte Carlo oracle: TV on exponent marginals and
// the Laplace functional of new-length vectors on the u-grid.
CompareReport compare_report(const MixtureMeasure& m, const SimSummary& sim,
                             double tv_threshold = 0.01,
                             double se_multiplier = 3.0);

}  // namespace crpchips

#endif  // CRPCHIPS_SIMULATE_HPP
