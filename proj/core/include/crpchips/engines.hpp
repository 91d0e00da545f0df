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

#ifndef CRPCHIPS_ENGINES_HPP
#define CRPCHIPS_ENGINES_HPP

#include <vector>

#include "crpchips/chip.hpp"
#include "crpchips/mixture.hpp"
#include "crpchips/restaurant.hpp"
#include "crpchips/rng.hpp"

namespace crpchips {

// Normative labeled engine: the spreaded image of the restaurant under the
// polymorphism of disjoint cycles {k_j}, as a sum over extensions u and
// ordered injective framings of u-cycles into stored tables.
MixtureMeasure act_cycles(const std::vector<int>& cycle_lengths,
                          const Restaurant& r, int guard = 6);

enum class DivisorMode { kAutB, kFullAut };

// Literal transcription engine: one term per unlabeled surface class and
// framing, with the printed combinatorial prefactor and the selected
// automorphism divisor.  kFullAut reproduces act_cycles exactly.
MixtureMeasure act_cycles_literal(const std::vector<int>& cycle_lengths,
                                  const Restaurant& r, DivisorMode mode,
                                  int guard = 6);

// A trivial-left chip: left half identity, right half sigma with phi_i extra
// crossings on strand i, plus free circles of lengths ks.
struct ChipData {
  Permutation sigma;
  std::vector<int> phi;  // one entry per strand, >= 0
  std::vector<int> ks;   // circle lengths, >= 2

  int n() const { return sigma.degree(); }
  int ambient() const;  // N = n + sum phi + sum ks
  void validate() const;
  Chip chip() const;
};

// The S_N element whose compressed chip is chip_data.chip().
Permutation chip_group_element(const ChipData& data);

// Spreaded image of the occupied point (first n guests are the labeled ones)
// under the chip; components carry rho.
MixtureMeasure act_chip(const ChipData& data, const OccupiedRestaurant& occ,
                        int n, int guard = 6);

struct CenterActResult {
  int rn_exponent = 0;
  OccupiedRestaurant occ;
};

// One exact draw from the center-action law: sample a framed surface from
// the closed-form weights, realize guest positions conditionally, and apply
// the cut-and-glue machinery.  Tables without auxiliary guests are untouched.
CenterActResult act_center_sample(const std::vector<int>& cycle_lengths,
                                  const OccupiedRestaurant& occ, Seed seed,
                                  int guard = 6);

// The oracle path: place the auxiliary guests uniformly, act, forget.
CenterActResult simulate_direct_center(const std::vector<int>& cycle_lengths,
                                       const OccupiedRestaurant& occ,
                                       Seed seed, int guard = 6);

}  // namespace crpchips

#endif  // CRPCHIPS_ENGINES_HPP
