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

#include "crpchips/engines.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "crpchips/checker.hpp"
#include "crpchips/guard.hpp"

namespace crpchips {

namespace {

void validate_cycle_lengths(const std::vector<int>& ks) {
  if (ks.empty()) throw std::invalid_argument("cycle_lengths: empty");
  for (int k : ks)
    if (k < 2) throw std::invalid_argument("cycle_lengths: k_j must be >= 2");
}

double log_factorial(int m) { return std::lgamma(m + 1.0); }

double falling_weight(int s, double ell) {
  // ell^s / (s-1)!
  return std::exp(s * std::log(ell) - log_factorial(s - 1));
}

// Enumerates ordered injective index tuples of the given arity over
// {0,...,count-1} and calls fn on each.
template <typename Fn>
void for_each_injection(int arity, int count, const Fn& fn) {
  std::vector<int> pick(static_cast<size_t>(arity), -1);
  std::vector<bool> used(static_cast<size_t>(count), false);
  std::function<void(int)> rec = [&](int depth) {
    if (depth == arity) {
      fn(pick);
      return;
    }
    for (int i = 0; i < count; ++i) {
      if (used[static_cast<size_t>(i)]) continue;
      used[static_cast<size_t>(i)] = true;
      pick[static_cast<size_t>(depth)] = i;
      rec(depth + 1);
      used[static_cast<size_t>(i)] = false;
    }
  };
  rec(0);
}

std::string serialize_rows(const std::vector<std::pair<double, std::vector<int>>>& rows) {
  std::ostringstream os;
  char buf[40];
  for (const auto& [ell, counts] : rows) {
    std::snprintf(buf, sizeof buf, "%.17g:", ell);
    os << buf;
    for (int c : counts) os << c << ',';
    os << '|';
  }
  return os.str();
}

// Canonical fingerprint of a replacement law whose first `fixed_cols`
// coordinates are labeled; the remaining columns are exchangeable.
std::string law_fingerprint(const ConvolutionSpec& spec, int fixed_cols) {
  const int d = spec.dimension();
  const int free_cols = d - fixed_cols;
  std::vector<int> perm(static_cast<size_t>(free_cols));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::vector<std::pair<double, std::vector<int>>> rows;
    for (const auto& comp : spec.components) {
      std::vector<int> counts(comp.k.begin(),
                              comp.k.begin() + fixed_cols);
      for (int c = 0; c < free_cols; ++c)
        counts.push_back(
            comp.k[static_cast<size_t>(fixed_cols + perm[static_cast<size_t>(c)])]);
      rows.push_back({comp.ell, std::move(counts)});
    }
    std::sort(rows.begin(), rows.end());
    std::string s = serialize_rows(rows);
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

struct Accumulator {
  std::map<std::string, MixtureComponent> by_key;

  void add(const std::string& key, const MixtureComponent& c) {
    auto [it, fresh] = by_key.insert({key, c});
    if (!fresh) it->second.weight += c.weight;
  }

  std::vector<MixtureComponent> take() {
    std::vector<MixtureComponent> out;
    out.reserve(by_key.size());
    for (auto& [k, c] : by_key) out.push_back(std::move(c));
    return out;
  }
};

// Lexicographic minimum of the conjugation orbit of u under the centralizer
// of g0 in S_n.
class UCanonicalizer {
 public:
  explicit UCanonicalizer(const Permutation& g0) {
    for_each_permutation(g0.degree(), [&](const Permutation& sigma) {
      if (compose(sigma, g0) == compose(g0, sigma)) z_.push_back(sigma);
    });
  }

  const std::string& canon(const Permutation& u) {
    auto it = cache_.find(u);
    if (it != cache_.end()) return it->second;
    Permutation best = u;
    for (const auto& sigma : z_)
      if (Permutation cand = compose(sigma, compose(u, sigma.inverse()));
          cand < best)
        best = cand;
    return cache_.emplace(u, best.to_string()).first->second;
  }

  std::size_t order() const { return z_.size(); }

 private:
  std::vector<Permutation> z_;
  std::map<Permutation, std::string> cache_;
};

std::string component_key(const std::string& surface, int exponent,
                          const std::vector<TableId>& removed,
                          const std::string& law) {
  std::ostringstream os;
  os << surface << '#' << exponent << '#';
  for (TableId id : removed) os << id << ',';
  os << '#' << law;
  return os.str();
}

// Shared emission of a Theorem-2 component for a given (u-surface, framing).
void emit_cycle_component(Accumulator& acc, const std::string& surface_key,
                          int exponent,
                          const std::vector<std::vector<int>>& incidence,
                          const std::vector<int>& cycle_orders,
                          const std::vector<int>& framing,
                          const std::vector<double>& lengths, double weight) {
  MixtureComponent comp;
  comp.rn_exponent = exponent;
  double w = weight;
  for (std::size_t b = 0; b < framing.size(); ++b) {
    const double ell = lengths[static_cast<size_t>(framing[b])];
    w *= falling_weight(cycle_orders[b], ell);
    comp.replacement.components.push_back(DirichletSpec{incidence[b], ell});
    comp.removed.push_back(static_cast<TableId>(framing[b] + 1));
  }
  comp.weight = w;
  std::sort(comp.removed.begin(), comp.removed.end());
  const std::string law = law_fingerprint(comp.replacement, 0);
  acc.add(component_key(surface_key, exponent, comp.removed, law), comp);
}

}  // namespace

MixtureMeasure act_cycles(const std::vector<int>& cycle_lengths,
                          const Restaurant& r, int guard) {
  validate_cycle_lengths(cycle_lengths);
  r.validate();
  const int n = std::accumulate(cycle_lengths.begin(), cycle_lengths.end(), 0);
  check_guard(n, guard, "act_cycles");
  const Permutation g0 = cycles_representative(cycle_lengths);
  const int kcount = static_cast<int>(r.lengths.size());
  UCanonicalizer canon(g0);

  Accumulator acc;
  for_each_permutation(n, [&](const Permutation& u) {
    const auto cycles = u.cycles();
    const int nb = static_cast<int>(cycles.size());
    if (nb > kcount) return;  // no injective framing exists
    const EngineSurface surf{g0, u};
    const int exponent = compose(u, g0).cycle_count() - nb;
    const auto incidence = incidence_matrix(surf);
    std::vector<int> orders;
    for (const auto& c : cycles) orders.push_back(static_cast<int>(c.size()));
    const std::string& skey = canon.canon(u);
    for_each_injection(nb, kcount, [&](const std::vector<int>& framing) {
      emit_cycle_component(acc, skey, exponent, incidence, orders, framing,
                           r.lengths, 1.0);
    });
  });

  MixtureMeasure out;
  out.components = acc.take();
  out.truncation_error = 1.0 - std::pow(1.0 - r.tail_mass, n);
  out.fingerprint =
      configuration_fingerprint(cycle_lengths, r.lengths, r.tail_mass);
  return out;
}

MixtureMeasure act_cycles_literal(const std::vector<int>& cycle_lengths,
                                  const Restaurant& r, DivisorMode mode,
                                  int guard) {
  validate_cycle_lengths(cycle_lengths);
  r.validate();
  const int n = std::accumulate(cycle_lengths.begin(), cycle_lengths.end(), 0);
  check_guard(n, guard, "act_cycles_literal");
  const int kcount = static_cast<int>(r.lengths.size());

  // prod_j k_j * prod_m iota_m!
  double prefactor = 1.0;
  std::map<int, int> iota;
  for (int k : cycle_lengths) {
    prefactor *= k;
    ++iota[k];
  }
  for (const auto& [k, c] : iota) prefactor *= std::tgamma(c + 1.0);

  const Permutation g0 = cycles_representative(cycle_lengths);
  UCanonicalizer canon(g0);
  const auto classes = enumerate_gamma(cycle_lengths, guard);

  Accumulator acc;
  for (const auto& cls : classes) {
    const auto cycles = cls.rep.u.cycles();
    const int nb = static_cast<int>(cycles.size());
    if (nb > kcount) continue;
    const long divisor = mode == DivisorMode::kFullAut
                             ? cls.aut.full_order
                             : cls.aut.b_fixing_order;
    const int exponent =
        compose(cls.rep.u, g0).cycle_count() - nb;
    std::vector<int> orders;
    for (const auto& c : cycles) orders.push_back(static_cast<int>(c.size()));
    const std::string& skey = canon.canon(cls.rep.u);
    const double base = prefactor / static_cast<double>(divisor);
    for_each_injection(nb, kcount, [&](const std::vector<int>& framing) {
      emit_cycle_component(acc, skey, exponent, cls.incidence, orders, framing,
                           r.lengths, base);
    });
  }

  MixtureMeasure out;
  out.components = acc.take();
  out.truncation_error = 1.0 - std::pow(1.0 - r.tail_mass, n);
  out.fingerprint =
      configuration_fingerprint(cycle_lengths, r.lengths, r.tail_mass);
  return out;
}

int ChipData::ambient() const {
  return n() + std::accumulate(phi.begin(), phi.end(), 0) +
         std::accumulate(ks.begin(), ks.end(), 0);
}

void ChipData::validate() const {
  if (static_cast<int>(phi.size()) != n())
    throw std::invalid_argument("ChipData: phi size mismatch");
  for (int p : phi)
    if (p < 0) throw std::invalid_argument("ChipData: negative phi");
  for (int k : ks)
    if (k < 2) throw std::invalid_argument("ChipData: circle length < 2");
}

Chip ChipData::chip() const {
  validate();
  Chip c;
  c.dst = n();
  c.src = n();
  for (int i = 1; i <= n(); ++i) {
    c.arcs.push_back(ChipArc{ArcKind::kVL, i, i, 0});
    c.arcs.push_back(
        ChipArc{ArcKind::kVR, i, sigma(i), 2 * phi[static_cast<size_t>(i - 1)]});
  }
  c.circles = ks;
  c.canonicalize();
  c.validate();
  return c;
}

Permutation chip_group_element(const ChipData& data) {
  data.validate();
  const int n = data.n();
  const int total = data.ambient();
  std::vector<int> img(static_cast<size_t>(total));
  int next = n;
  for (int i = 1; i <= n; ++i) {
    int prev = i;
    for (int t = 0; t < data.phi[static_cast<size_t>(i - 1)]; ++t) {
      ++next;
      img[static_cast<size_t>(prev - 1)] = next;
      prev = next;
    }
    img[static_cast<size_t>(prev - 1)] = data.sigma(i);
  }
  for (int k : data.ks) {
    const int first = next + 1;
    for (int j = 1; j < k; ++j) {
      img[static_cast<size_t>(next + j - 1)] = next + j + 1;
    }
    img[static_cast<size_t>(next + k - 1)] = first;
    next += k;
  }
  Permutation g(std::move(img));
  // Consistency: compressing g through the canonical morphisms must return
  // the declared chip.
  if (!(chip_from_pair(Permutation::identity(total), g, n, n) == data.chip()))
    throw std::logic_error("chip_group_element: compression mismatch");
  return g;
}

MixtureMeasure act_chip(const ChipData& data, const OccupiedRestaurant& occ,
                        int n, int guard) {
  data.validate();
  occ.validate();
  if (data.n() != n)
    throw std::invalid_argument("act_chip: chip size mismatch");
  if (occ.guest_count() != n)
    throw std::invalid_argument("act_chip: point must carry exactly n guests");
  const int total = data.ambient();
  check_guard(total, guard, "act_chip");
  const Permutation g = chip_group_element(data);
  const Permutation tau = project_finite(occ, n);

  // Labeled arc lengths l_i: clockwise from guest i to guest tau(i).
  std::vector<double> arc_len(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const GuestSeat& a = occ.guests[static_cast<size_t>(i - 1)];
    const GuestSeat& b = occ.guests[static_cast<size_t>(tau(i) - 1)];
    const double len = occ.table_by_id(a.table).length;
    double d = b.pos - a.pos;
    if (d <= 0.0) d += len;
    arc_len[static_cast<size_t>(i - 1)] = d;
  }
  std::vector<TableId> guest_tables;
  for (const auto& seat : occ.guests) guest_tables.push_back(seat.table);
  std::sort(guest_tables.begin(), guest_tables.end());
  guest_tables.erase(std::unique(guest_tables.begin(), guest_tables.end()),
                     guest_tables.end());
  std::vector<Table> free_tables;
  for (const auto& t : occ.tables)
    if (!std::binary_search(guest_tables.begin(), guest_tables.end(), t.id))
      free_tables.push_back(t);

  Accumulator acc;
  for (const auto& fs : enumerate_framed(g, tau, n, guard)) {
    double base = 1.0;
    for (int i = 0; i < n; ++i) {
      const int m = fs.m_counts_per_arc[static_cast<size_t>(i)];
      if (m > 0)
        base *= std::exp(m * std::log(arc_len[static_cast<size_t>(i)]) -
                         log_factorial(m));
    }
    const int nfree = static_cast<int>(fs.free_rows.size());
    if (nfree > static_cast<int>(free_tables.size())) continue;
    for_each_injection(
        nfree, static_cast<int>(free_tables.size()),
        [&](const std::vector<int>& assign) {
          MixtureComponent comp;
          comp.rn_exponent = fs.rn_exponent;
          comp.rho = fs.rho;
          comp.removed = guest_tables;
          double w = base;
          for (int i = 0; i < n; ++i)
            comp.replacement.components.push_back(DirichletSpec{
                fs.incidence[static_cast<size_t>(i)],
                arc_len[static_cast<size_t>(i)]});
          for (int f = 0; f < nfree; ++f) {
            const Table& t = free_tables[static_cast<size_t>(
                assign[static_cast<size_t>(f)])];
            const int s =
                static_cast<int>(fs.free_rows[static_cast<size_t>(f)].size());
            w *= falling_weight(s, t.length);
            comp.replacement.components.push_back(DirichletSpec{
                fs.incidence[static_cast<size_t>(n + f)], t.length});
            comp.removed.push_back(t.id);
          }
          comp.weight = w;
          std::sort(comp.removed.begin(), comp.removed.end());
          const std::string law = law_fingerprint(comp.replacement, n);
          acc.add(component_key(fs.rho.to_string(), fs.rn_exponent,
                                comp.removed, law),
                  comp);
        });
  }

  MixtureMeasure out;
  out.components = acc.take();
  out.truncation_error = 1.0 - std::pow(1.0 - occ.tail_mass, total - n);
  std::vector<double> lens;
  for (const auto& t : occ.tables) lens.push_back(t.length);
  out.fingerprint = configuration_fingerprint(data.ks, lens, occ.tail_mass);
  return out;
}

namespace {

// Applies the canonical cycles element to the last n_aux guests (which must
// currently sit at the end of the guest list), then drops them.  Tables
// without auxiliary guests are untouched.
CenterActResult apply_to_trailing_aux(const OccupiedRestaurant& occ,
                                      int n_old, int n_aux,
                                      const Permutation& g0) {
  OccupiedRestaurant reordered = occ;
  for (int q = 0; q < n_aux; ++q)
    reordered.guests[static_cast<size_t>(q)] =
        occ.guests[static_cast<size_t>(n_old + q)];
  for (int q = 0; q < n_old; ++q)
    reordered.guests[static_cast<size_t>(n_aux + q)] =
        occ.guests[static_cast<size_t>(q)];
  ActResult res = act_right(reordered, g0);
  CenterActResult out;
  out.rn_exponent = res.rn_exponent;
  out.occ = res.occ;
  out.occ.guests.assign(res.occ.guests.begin() + n_aux,
                        res.occ.guests.end());
  return out;
}

}  // namespace

CenterActResult act_center_sample(const std::vector<int>& cycle_lengths,
                                  const OccupiedRestaurant& occ, Seed seed,
                                  int guard) {
  validate_cycle_lengths(cycle_lengths);
  occ.validate();
  const int n = std::accumulate(cycle_lengths.begin(), cycle_lengths.end(), 0);
  check_guard(n, guard, "act_center_sample");
  const int kcount = static_cast<int>(occ.tables.size());
  const Permutation g0 = cycles_representative(cycle_lengths);

  // Pass 1: total weight of (u, framing) pairs; pass 2: select by threshold.
  auto sweep = [&](double threshold, Permutation* u_out,
                   std::vector<int>* framing_out) {
    double running = 0.0;
    bool done = false;
    for_each_permutation(n, [&](const Permutation& u) {
      if (done) return;
      const auto cycles = u.cycles();
      const int nb = static_cast<int>(cycles.size());
      if (nb > kcount) return;
      std::vector<int> orders;
      for (const auto& c : cycles)
        orders.push_back(static_cast<int>(c.size()));
      for_each_injection(nb, kcount, [&](const std::vector<int>& framing) {
        if (done) return;
        double w = 1.0;
        for (int b = 0; b < nb; ++b)
          w *= falling_weight(
              orders[static_cast<size_t>(b)],
              occ.tables[static_cast<size_t>(framing[static_cast<size_t>(b)])]
                  .length);
        running += w;
        if (threshold >= 0.0 && running >= threshold) {
          *u_out = u;
          *framing_out = framing;
          done = true;
        }
      });
    });
    return running;
  };
  const double total = sweep(-1.0, nullptr, nullptr);
  if (total <= 0.0)
    throw std::runtime_error("act_center_sample: no admissible framing");

  auto rng = make_rng(derive_seed(seed, 0));
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Permutation u = Permutation::identity(n);
  std::vector<int> framing;
  sweep(unif(rng) * total, &u, &framing);

  // Conditional positions: iid uniforms on the framed table, labels laid
  // down in cycle order with a uniform rotation.
  const int n_old = occ.guest_count();
  OccupiedRestaurant with_aux = occ;
  with_aux.guests.resize(static_cast<size_t>(n_old + n));
  const auto cycles = u.cycles();
  for (std::size_t b = 0; b < cycles.size(); ++b) {
    const Table& t = occ.tables[static_cast<size_t>(framing[b])];
    const int s = static_cast<int>(cycles[b].size());
    std::vector<double> pos(static_cast<size_t>(s));
    for (double& p : pos) p = unif(rng) * t.length;
    std::sort(pos.begin(), pos.end());
    std::uniform_int_distribution<int> rot(0, s - 1);
    const int r = rot(rng);
    for (int m = 0; m < s; ++m) {
      const int guest = cycles[b][static_cast<size_t>(m)];
      with_aux.guests[static_cast<size_t>(n_old + guest - 1)] =
          GuestSeat{t.id, pos[static_cast<size_t>((r + m) % s)]};
    }
  }
  return apply_to_trailing_aux(with_aux, n_old, n, g0);
}

CenterActResult simulate_direct_center(const std::vector<int>& cycle_lengths,
                                       const OccupiedRestaurant& occ,
                                       Seed seed, int guard) {
  validate_cycle_lengths(cycle_lengths);
  occ.validate();
  const int n = std::accumulate(cycle_lengths.begin(), cycle_lengths.end(), 0);
  check_guard(n, guard, "simulate_direct_center");
  const Permutation g0 = cycles_representative(cycle_lengths);
  OccupiedRestaurant with_aux = place_guests(occ, n, derive_seed(seed, 1));
  return apply_to_trailing_aux(with_aux, occ.guest_count(), n, g0);
}

}  // namespace crpchips
