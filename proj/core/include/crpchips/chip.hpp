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

#ifndef CRPCHIPS_CHIP_HPP
#define CRPCHIPS_CHIP_HPP

#include <string>
#include <vector>

#include "crpchips/permutation.hpp"

namespace crpchips {

// Arc kinds of a chip.  The boundary of a chip in S(alpha, beta) carries
// beta pairs of top endpoints (left and right) and alpha pairs of bottom
// endpoints.  Arcs match endpoints; lengths are stored in half units (twice
// the length), even for vertical arcs and odd for horizontal ones.
enum class ArcKind { kVL, kVR, kHT, kHB };

struct ChipArc {
  ArcKind kind;
  int from;  // top index for vertical arcs, left index for horizontal ones
  int to;    // bottom index for vertical arcs, right index for horizontal ones
  int half_units;

  friend auto operator<=>(const ChipArc&, const ChipArc&) = default;
};

// A morphism of the chip category S(dst, src): a perfect matching of the
// boundary endpoints by typed arcs carrying lengths, plus a multiset of
// closed circles of length >= 2.  Stored in a canonical sorted form so that
// equality is structural.
struct Chip {
  int dst = 0;  // alpha: bottom pair count
  int src = 0;  // beta: top pair count
  std::vector<ChipArc> arcs;
  std::vector<int> circles;

  void canonicalize();
  void validate() const;  // throws std::invalid_argument
  std::string to_string() const;

  friend bool operator==(const Chip&, const Chip&) = default;
};

Chip chip_identity(int n);

// Gluing product: f in S(alpha, beta) times g in S(beta, gamma) gives a chip
// in S(alpha, gamma).  Compound arcs are traced through the glued interface;
// lengths add; closed interface loops become circles and circles of length 1
// are dropped.
Chip multiply(const Chip& f, const Chip& g);

// Swaps top and bottom; an anti-homomorphism.
Chip involute(const Chip& c);

// The canonical morphism with n through-strands and m - n half-length
// horizontal top arcs; lives in S(n, m).
Chip lambda_chip(int m, int n);

// The block-swap involution of degree beta + 2j: fixes 1..beta, exchanges
// the two following blocks of size j.
Permutation theta_element(int beta, int j);

// Chip of the bisymmetric-group element (g1, g2), taken in S(alpha, beta).
// The left half encodes g1, the right half g2; crossed connectors close the
// top pairs above beta and the bottom pairs above alpha, one cross each;
// arc length is half the accumulated cross count.
Chip chip_from_pair(const Permutation& g1, const Permutation& g2, int alpha,
                    int beta);

// The central element: circles only, padded with ambient identity strands.
Chip center_element(const std::vector<int>& cycle_lengths, int ambient = 0);

// The canonical permutation with consecutive blocks as cycles; its chip via
// chip_from_pair(e, g, 0, 0) is exactly the circle collection.
Permutation cycles_representative(const std::vector<int>& cycle_lengths);

}  // namespace crpchips

#endif  // CRPCHIPS_CHIP_HPP
