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

#ifndef CRPCHIPS_RESTAURANT_HPP
#define CRPCHIPS_RESTAURANT_HPP

#include <cstdint>
#include <vector>

#include "crpchips/permutation.hpp"
#include "crpchips/rational.hpp"
#include "crpchips/rng.hpp"

namespace crpchips {

// A truncated Poisson-Dirichlet restaurant: finitely many stored table
// lengths (decreasing, positive) plus the explicit unstored tail mass.
struct Restaurant {
  Rational z;
  std::vector<double> lengths;
  double tail_mass = 0.0;

  void validate() const;  // throws std::invalid_argument on broken invariants
  double stored_mass() const;
};

enum class SampleMethod { kPoissonProcess, kStickBreaking };

struct Truncation {
  int max_tables = 64;
  double tail_epsilon = 1e-9;  // target expected unstored normalized mass
};

// Two independent constructions of the same law; cross-validated by tests.
Restaurant sample_tables(const Rational& z, SampleMethod method,
                         const Truncation& truncation, Seed seed);

// Tables are identified by opaque tokens, never by position in the list:
// the cut-and-glue action deletes tables and mints fresh ones.
using TableId = std::uint64_t;

struct Table {
  TableId id;
  double length;
};

struct GuestSeat {
  TableId table;
  double pos;  // offset in [0, length) from the per-table anchor, clockwise

  friend bool operator==(const GuestSeat&, const GuestSeat&) = default;
};

struct OccupiedRestaurant {
  Rational z;
  std::vector<Table> tables;  // decreasing by length
  double tail_mass = 0.0;
  std::vector<GuestSeat> guests;  // guest i is guests[i-1]
  double placement_error = 0.0;   // accumulated tail-redraw probability bound
  TableId next_id = 1;

  int guest_count() const { return static_cast<int>(guests.size()); }
  const Table& table_by_id(TableId id) const;
  double stored_mass() const;
  void validate() const;
};

// Assigns ids 1..K to the stored tables; no guests.
OccupiedRestaurant occupy(const Restaurant& r);

// Appends `count` guests, each independent uniform on the disjoint union of
// stored tables.  A draw landing in the tail mass is redrawn among stored
// tables and the event probability is added to placement_error.
OccupiedRestaurant place_guests(const OccupiedRestaurant& occ, int count,
                                Seed seed);
OccupiedRestaurant place_guests(const Restaurant& r, int count, Seed seed);

// Drops guests keep+1, ...; tables unchanged.
OccupiedRestaurant forget_guests(const OccupiedRestaurant& occ, int keep);

// Clockwise orders of guests 1..n per table, as a permutation of degree n.
Permutation project_finite(const OccupiedRestaurant& occ, int n);

struct ActResult {
  OccupiedRestaurant occ;
  int rn_exponent = 0;  // tables after minus tables before, affected set only
};

// Cut-and-glue action.  Tables are cut at guests 1..degree and the arcs are
// reglued; the finite projection maps u to left^{-1} * u * right.  Guests
// beyond the degree ride along with their arcs.
ActResult act(const OccupiedRestaurant& occ, const Permutation& left,
              const Permutation& right);
ActResult act_right(const OccupiedRestaurant& occ, const Permutation& g);
ActResult act_left(const OccupiedRestaurant& occ, const Permutation& g);

// Reverses the orientation of every table; an involution.  The finite
// projection of the result is the inverse permutation.
OccupiedRestaurant invert(const OccupiedRestaurant& occ);

// Clockwise distance from guest i to guest j along their common table.
// Throws std::domain_error when they sit on different tables.
double arc_length_exact(const OccupiedRestaurant& occ, int i, int j);

// Monte Carlo estimate of the same quantity: drops N uniform auxiliary
// points on the restaurant and counts those falling strictly between i and j.
double arc_length_estimate(const OccupiedRestaurant& occ, int i, int j, int N,
                           Seed seed);

}  // namespace crpchips

#endif  // CRPCHIPS_RESTAURANT_HPP
