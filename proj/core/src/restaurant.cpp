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

#include "crpchips/restaurant.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace crpchips {

void Restaurant::validate() const {
  if (z <= 0) throw std::invalid_argument("Restaurant: z must be > 0");
  double sum = 0.0;
  for (size_t i = 0; i < lengths.size(); ++i) {
    if (!(lengths[i] > 0.0))
      throw std::invalid_argument("Restaurant: lengths must be positive");
    if (i > 0 && lengths[i] > lengths[i - 1])
      throw std::invalid_argument("Restaurant: lengths must be decreasing");
    sum += lengths[i];
  }
  if (tail_mass < 0.0)
    throw std::invalid_argument("Restaurant: tail_mass must be >= 0");
  if (std::abs(sum + tail_mass - 1.0) > 1e-9)
    throw std::invalid_argument("Restaurant: lengths + tail must sum to 1");
}

double Restaurant::stored_mass() const {
  return std::accumulate(lengths.begin(), lengths.end(), 0.0);
}

Restaurant sample_tables(const Rational& z, SampleMethod method,
                         const Truncation& truncation, Seed seed) {
  if (truncation.max_tables < 1 || truncation.tail_epsilon <= 0.0 ||
      truncation.tail_epsilon >= 1.0)
    throw std::invalid_argument("sample_tables: invalid truncation");
  if (z <= 0) throw std::invalid_argument("sample_tables: z must be > 0");

  const double zd = static_cast<double>(z);
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> jumps;

  if (method == SampleMethod::kPoissonProcess) {
    // Jumps of the Poisson process with intensity z x^{-1} e^{-x} dx,
    // truncated below x0.  The expected unstored normalized mass is about
    // z * x0 / z = x0, so x0 = epsilon.  Two dominating regimes:
    //   on (x0, 1]: intensity <= z/x; substituting y = log(1/x) gives a
    //     homogeneous rate-z process, thinned by e^{-x};
    //   on (1, inf): intensity <= z e^{-x}; a Poisson(z/e) number of points
    //     at 1 + Exp(1), thinned by 1/x.
    const double x0 = truncation.tail_epsilon;
    {
      std::exponential_distribution<double> gap(zd);
      double y = 0.0;
      const double ymax = std::log(1.0 / x0);
      while (true) {
        y += gap(rng);
        if (y >= ymax) break;
        const double x = std::exp(-y);
        if (unif(rng) < std::exp(-x)) jumps.push_back(x);
      }
    }
    {
      std::poisson_distribution<int> count(zd * std::exp(-1.0));
      std::exponential_distribution<double> expo(1.0);
      int m = count(rng);
      for (int i = 0; i < m; ++i) {
        const double x = 1.0 + expo(rng);
        if (unif(rng) < 1.0 / x) jumps.push_back(x);
      }
    }
    std::sort(jumps.rbegin(), jumps.rend());
    double total = std::accumulate(jumps.begin(), jumps.end(), 0.0);
    Restaurant out;
    out.z = z;
    if (total > 0.0) {
      // Attribute the expected unsampled mass to the tail so that the stored
      // lengths plus tail_mass sum to 1 exactly.
      const double denom = total / (1.0 - truncation.tail_epsilon);
      const size_t keep =
          std::min(jumps.size(), static_cast<size_t>(truncation.max_tables));
      double sum = 0.0;
      for (size_t i = 0; i < keep; ++i) {
        out.lengths.push_back(jumps[i] / denom);
        sum += out.lengths.back();
      }
      out.tail_mass = 1.0 - sum;
    } else {
      out.tail_mass = 1.0;
    }
    out.validate();
    return out;
  }

  // Stick breaking: v_i ~ Beta(1, z), lengths are the GEM residual products.
  std::vector<double> sticks;
  double residual = 1.0;
  for (int i = 0; i < truncation.max_tables; ++i) {
    double u = unif(rng);
    // Beta(1, z) via inverse CDF, kept strictly inside (0, 1).
    double v = -std::expm1(std::log1p(-u) / zd);
    v = std::min(std::max(v, 1e-300), 1.0 - 1e-16);
    sticks.push_back(residual * v);
    residual *= 1.0 - v;
  }
  std::sort(sticks.rbegin(), sticks.rend());
  Restaurant out;
  out.z = z;
  out.lengths = std::move(sticks);
  out.tail_mass = std::max(0.0, 1.0 - out.stored_mass());
  out.validate();
  return out;
}

const Table& OccupiedRestaurant::table_by_id(TableId id) const {
  for (const auto& t : tables)
    if (t.id == id) return t;
  throw std::invalid_argument("OccupiedRestaurant: unknown table id");
}

double OccupiedRestaurant::stored_mass() const {
  double s = 0.0;
  for (const auto& t : tables) s += t.length;
  return s;
}

void OccupiedRestaurant::validate() const {
  double sum = 0.0;
  for (size_t i = 0; i < tables.size(); ++i) {
    if (!(tables[i].length > 0.0))
      throw std::invalid_argument("OccupiedRestaurant: nonpositive length");
    if (i > 0 && tables[i].length > tables[i - 1].length)
      throw std::invalid_argument("OccupiedRestaurant: lengths not decreasing");
    sum += tables[i].length;
  }
  if (std::abs(sum + tail_mass - 1.0) > 1e-9)
    throw std::invalid_argument("OccupiedRestaurant: masses do not sum to 1");
  std::map<TableId, std::vector<double>> per_table;
  for (const auto& g : guests) {
    const Table& t = table_by_id(g.table);
    if (g.pos < 0.0 || g.pos >= t.length)
      throw std::invalid_argument("OccupiedRestaurant: position out of range");
    per_table[g.table].push_back(g.pos);
  }
  for (auto& [id, ps] : per_table) {
    std::sort(ps.begin(), ps.end());
    if (std::adjacent_find(ps.begin(), ps.end()) != ps.end())
      throw std::invalid_argument("OccupiedRestaurant: coincident guests");
  }
}

OccupiedRestaurant occupy(const Restaurant& r) {
  r.validate();
  OccupiedRestaurant occ;
  occ.z = r.z;
  occ.tail_mass = r.tail_mass;
  for (double len : r.lengths) occ.tables.push_back(Table{occ.next_id++, len});
  return occ;
}

OccupiedRestaurant place_guests(const OccupiedRestaurant& occ, int count,
                                Seed seed) {
  if (count < 0) throw std::invalid_argument("place_guests: negative count");
  OccupiedRestaurant out = occ;
  if (count == 0) return out;
  if (out.tables.empty())
    throw std::invalid_argument("place_guests: no stored tables");
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double stored = out.stored_mass();
  for (int c = 0; c < count; ++c) {
    double x = unif(rng);
    if (x >= stored) {
      // Tail hit: redraw among stored tables, record the honest error bound.
      out.placement_error += out.tail_mass;
      x = unif(rng) * stored;
    }
    size_t idx = 0;
    while (idx + 1 < out.tables.size() && x >= out.tables[idx].length) {
      x -= out.tables[idx].length;
      ++idx;
    }
    x = std::min(x, std::nextafter(out.tables[idx].length, 0.0));
    out.guests.push_back(GuestSeat{out.tables[idx].id, x});
  }
  return out;
}

OccupiedRestaurant place_guests(const Restaurant& r, int count, Seed seed) {
  return place_guests(occupy(r), count, seed);
}

OccupiedRestaurant forget_guests(const OccupiedRestaurant& occ, int keep) {
  if (keep < 0) throw std::invalid_argument("forget_guests: negative keep");
  if (keep > occ.guest_count())
    throw std::invalid_argument("forget_guests: keep exceeds guest count");
  OccupiedRestaurant out = occ;
  out.guests.resize(static_cast<size_t>(keep));
  return out;
}

namespace {

// Guests of one table in clockwise order of their positions.
std::map<TableId, std::vector<int>> guests_by_table(
    const OccupiedRestaurant& occ, int n) {
  std::map<TableId, std::vector<int>> by_table;
  for (int i = 1; i <= n; ++i)
    by_table[occ.guests[static_cast<size_t>(i - 1)].table].push_back(i);
  for (auto& [id, gs] : by_table) {
    std::sort(gs.begin(), gs.end(), [&](int a, int b) {
      return occ.guests[static_cast<size_t>(a - 1)].pos <
             occ.guests[static_cast<size_t>(b - 1)].pos;
    });
  }
  return by_table;
}

}  // namespace

Permutation project_finite(const OccupiedRestaurant& occ, int n) {
  if (n < 0 || n > occ.guest_count())
    throw std::invalid_argument("project_finite: not enough guests");
  std::vector<int> images(static_cast<size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  for (const auto& [id, gs] : guests_by_table(occ, n)) {
    for (size_t i = 0; i < gs.size(); ++i)
      images[static_cast<size_t>(gs[i] - 1)] = gs[(i + 1) % gs.size()];
  }
  return Permutation(std::move(images));
}

namespace {

// One cut-and-glue pass.  Tables are cut at guests 1..n; the arc that starts
// at guest i runs clockwise to guest u(i).  The cut at guest j is glued to
// the cut at guest g(j) (the arc ending at j continues with the arc starting
// at g(j)).  The junction point carries the guest label of the minus side
// (label j: finite projection becomes u*g) or of the plus side (label g(j):
// finite projection becomes g*u).  Guests > n ride along inside their arcs.
ActResult glue(const OccupiedRestaurant& occ, const Permutation& g,
               bool label_plus_side) {
  const int n = g.degree();
  if (n > occ.guest_count())
    throw std::invalid_argument("act: degree exceeds guest count");
  ActResult result;
  if (n == 0) {
    result.occ = occ;
    return result;
  }
  const Permutation u = project_finite(occ, n);
  const Permutation w =
      label_plus_side ? compose(g, u) : compose(u, g);  // new projection

  auto by_table = guests_by_table(occ, n);

  // Arc i: from guest i clockwise to guest u(i) on the old table.
  std::vector<double> arc_start(static_cast<size_t>(n));
  std::vector<double> arc_len(static_cast<size_t>(n));
  std::vector<TableId> arc_table(static_cast<size_t>(n));
  for (const auto& [id, gs] : by_table) {
    const double len = occ.table_by_id(id).length;
    for (int i : gs) {
      const double p0 = occ.guests[static_cast<size_t>(i - 1)].pos;
      const double p1 = occ.guests[static_cast<size_t>(u(i) - 1)].pos;
      double d = p1 - p0;
      if (d <= 0.0) d += len;  // single cut guest: the full circle
      arc_start[static_cast<size_t>(i - 1)] = p0;
      arc_len[static_cast<size_t>(i - 1)] = d;
      arc_table[static_cast<size_t>(i - 1)] = id;
    }
  }

  // Passengers (guests > n on affected tables), assigned to the arc that
  // contains them; offset measured from the arc start.
  std::vector<std::vector<std::pair<double, int>>> passengers(
      static_cast<size_t>(n));
  for (int q = n + 1; q <= occ.guest_count(); ++q) {
    const GuestSeat& seat = occ.guests[static_cast<size_t>(q - 1)];
    auto it = by_table.find(seat.table);
    if (it == by_table.end()) continue;  // untouched table
    const double len = occ.table_by_id(seat.table).length;
    for (int i : it->second) {
      const size_t a = static_cast<size_t>(i - 1);
      double off = seat.pos - arc_start[a];
      if (off < 0.0) off += len;
      if (off > 0.0 && off <= arc_len[a]) {
        passengers[a].push_back({off, q});
        break;
      }
    }
  }

  OccupiedRestaurant out;
  out.z = occ.z;
  out.tail_mass = occ.tail_mass;
  out.placement_error = occ.placement_error;
  out.next_id = occ.next_id;
  out.guests.resize(occ.guests.size());
  for (const auto& t : occ.tables)
    if (!by_table.count(t.id)) out.tables.push_back(t);
  for (int q = n + 1; q <= occ.guest_count(); ++q) {
    const GuestSeat& seat = occ.guests[static_cast<size_t>(q - 1)];
    if (!by_table.count(seat.table))
      out.guests[static_cast<size_t>(q - 1)] = seat;
  }

  // New tables: one per cycle of the new projection.  The piece following
  // junction guest j is arc g(j) in minus labeling, arc j in plus labeling.
  int new_tables = 0;
  for (const auto& cyc : w.cycles()) {
    const TableId id = out.next_id++;
    ++new_tables;
    double offset = 0.0;
    for (int j : cyc) {
      out.guests[static_cast<size_t>(j - 1)] = GuestSeat{id, offset};
      const size_t a =
          static_cast<size_t>((label_plus_side ? j : g(j)) - 1);
      for (const auto& [off, q] : passengers[a])
        out.guests[static_cast<size_t>(q - 1)] = GuestSeat{id, offset + off};
      offset += arc_len[a];
    }
    out.tables.push_back(Table{id, offset});
  }

  std::sort(out.tables.begin(), out.tables.end(),
            [](const Table& a, const Table& b) {
              return a.length > b.length ||
                     (a.length == b.length && a.id < b.id);
            });
  result.occ = std::move(out);
  result.rn_exponent = new_tables - static_cast<int>(by_table.size());
  return result;
}

}  // namespace

ActResult act_right(const OccupiedRestaurant& occ, const Permutation& g) {
  return glue(occ, g, /*label_plus_side=*/false);
}

ActResult act_left(const OccupiedRestaurant& occ, const Permutation& g) {
  return glue(occ, g, /*label_plus_side=*/true);
}

ActResult act(const OccupiedRestaurant& occ, const Permutation& left,
              const Permutation& right) {
  if (left.degree() != right.degree())
    throw std::invalid_argument("act: degree mismatch");
  bool right_trivial = right == Permutation::identity(right.degree());
  bool left_trivial = left == Permutation::identity(left.degree());
  ActResult step1;
  if (right_trivial) {
    step1.occ = occ;
  } else {
    step1 = act_right(occ, right);
  }
  if (left_trivial) return step1;
  ActResult step2 = act_left(step1.occ, left.inverse());
  step2.rn_exponent += step1.rn_exponent;
  return step2;
}

OccupiedRestaurant invert(const OccupiedRestaurant& occ) {
  OccupiedRestaurant out = occ;
  for (auto& g : out.guests) {
    const double len = occ.table_by_id(g.table).length;
    g.pos = g.pos == 0.0 ? 0.0 : len - g.pos;
  }
  return out;
}

double arc_length_exact(const OccupiedRestaurant& occ, int i, int j) {
  if (i < 1 || j < 1 || i > occ.guest_count() || j > occ.guest_count())
    throw std::invalid_argument("arc_length: guest index out of range");
  const GuestSeat& a = occ.guests[static_cast<size_t>(i - 1)];
  const GuestSeat& b = occ.guests[static_cast<size_t>(j - 1)];
  if (a.table != b.table)
    throw std::domain_error("arc_length: guests on different tables");
  const double len = occ.table_by_id(a.table).length;
  double d = b.pos - a.pos;
  if (d < 0.0) d += len;
  return d;
}

double arc_length_estimate(const OccupiedRestaurant& occ, int i, int j, int N,
                           Seed seed) {
  const double target = arc_length_exact(occ, i, j);  // also validates i, j
  (void)target;
  const GuestSeat& a = occ.guests[static_cast<size_t>(i - 1)];
  const GuestSeat& b = occ.guests[static_cast<size_t>(j - 1)];
  const double len = occ.table_by_id(a.table).length;
  // Position of the table in the cumulative layout.
  double before = 0.0;
  for (const auto& t : occ.tables) {
    if (t.id == a.table) break;
    before += t.length;
  }
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  long hits = 0;
  for (int s = 0; s < N; ++s) {
    const double x = unif(rng);
    if (x < before || x >= before + len) continue;
    double rel = x - before - a.pos;
    if (rel < 0.0) rel += len;
    double relb = b.pos - a.pos;
    if (relb < 0.0) relb += len;
    if (rel > 0.0 && rel < relb) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(N);
}

}  // namespace crpchips
