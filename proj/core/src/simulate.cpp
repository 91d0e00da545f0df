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

#include "crpchips/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "crpchips/stats.hpp"

namespace crpchips {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CRPCHIPS_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

struct ChunkStats {
  std::map<int, long> exponent_freq;
  std::vector<double> lap_sum, lap_sumsq;
  std::vector<double> lengths;
  long samples = 0;
};

// Runs `chunks` independent jobs on a deterministic seed split and merges in
// chunk order, so results do not depend on the thread count.
template <typename Job>
std::vector<ChunkStats> run_chunks(int chunks, int threads, const Job& job) {
  std::vector<ChunkStats> results(static_cast<size_t>(chunks));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int c = next.fetch_add(1); c < chunks; c = next.fetch_add(1))
      job(c, results[static_cast<size_t>(c)]);
  };
  std::vector<std::thread> pool;
  const int nthreads = std::min(threads, chunks);
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

void merge_chunks(const std::vector<ChunkStats>& parts, long max_lengths,
                  long* samples, std::map<int, long>* freq,
                  const std::vector<double>& grid, std::vector<double>* mean,
                  std::vector<double>* se, std::vector<double>* lengths) {
  *samples = 0;
  std::vector<double> sum(grid.size(), 0.0), sumsq(grid.size(), 0.0);
  for (const auto& part : parts) {
    *samples += part.samples;
    for (const auto& [e, c] : part.exponent_freq) (*freq)[e] += c;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      sum[i] += part.lap_sum[i];
      sumsq[i] += part.lap_sumsq[i];
    }
    if (lengths)
      for (double l : part.lengths) {
        if (static_cast<long>(lengths->size()) >= max_lengths) break;
        lengths->push_back(l);
      }
  }
  mean->resize(grid.size());
  se->resize(grid.size());
  const double ns = static_cast<double>(*samples);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double m = sum[i] / ns;
    (*mean)[i] = m;
    const double var = std::max(0.0, sumsq[i] / ns - m * m);
    (*se)[i] = std::sqrt(var / ns);
  }
}

}  // namespace

SimSummary simulate_cycles(const std::vector<int>& cycle_lengths,
                           const Restaurant& r, const SimOptions& opt,
                           Seed seed) {
  r.validate();
  const int n = std::accumulate(cycle_lengths.begin(), cycle_lengths.end(), 0);
  const Permutation g0 = cycles_representative(cycle_lengths);
  const OccupiedRestaurant base = occupy(r);
  const TableId stored_max = static_cast<TableId>(r.lengths.size());
  const int chunks = std::max(1, opt.chunks);
  const long per_chunk_cap =
      std::max<long>(1, opt.max_pooled_lengths / chunks);

  auto job = [&](int c, ChunkStats& st) {
    const Seed chunk_seed = derive_seed(seed, static_cast<std::uint64_t>(c));
    st.lap_sum.assign(opt.u_grid.size(), 0.0);
    st.lap_sumsq.assign(opt.u_grid.size(), 0.0);
    const long lo = opt.samples * c / chunks;
    const long hi = opt.samples * (c + 1) / chunks;
    for (long s = lo; s < hi; ++s) {
      const OccupiedRestaurant placed = place_guests(
          base, n, derive_seed(chunk_seed, static_cast<std::uint64_t>(s - lo)));
      const ActResult res = act_right(placed, g0);
      ++st.exponent_freq[res.rn_exponent];
      std::vector<double> fresh;
      for (const auto& t : res.occ.tables)
        if (t.id > stored_max) fresh.push_back(t.length);
      for (std::size_t i = 0; i < opt.u_grid.size(); ++i) {
        double v = 0.0;
        for (double l : fresh) v += std::exp(-opt.u_grid[i] * l);
        st.lap_sum[i] += v;
        st.lap_sumsq[i] += v * v;
      }
      if (static_cast<long>(st.lengths.size()) + static_cast<long>(fresh.size()) <=
          per_chunk_cap)
        st.lengths.insert(st.lengths.end(), fresh.begin(), fresh.end());
      ++st.samples;
    }
  };
  const auto parts = run_chunks(chunks, resolve_threads(opt.threads), job);

  SimSummary out;
  out.u_grid = opt.u_grid;
  merge_chunks(parts, opt.max_pooled_lengths, &out.samples, &out.exponent_freq,
               opt.u_grid, &out.laplace_mean, &out.laplace_se,
               &out.new_lengths);
  out.fingerprint =
      configuration_fingerprint(cycle_lengths, r.lengths, r.tail_mass);
  return out;
}

ChipSimSummary simulate_chip(const ChipData& data,
                             const OccupiedRestaurant& occ, int n,
                             const SimOptions& opt, Seed seed) {
  data.validate();
  occ.validate();
  if (occ.guest_count() != n)
    throw std::invalid_argument("simulate_chip: point must carry n guests");
  const int total = data.ambient();
  const Permutation g = chip_group_element(data);
  const int chunks = std::max(1, opt.chunks);

  std::vector<std::map<std::string, long>> rho_parts(
      static_cast<size_t>(chunks));
  auto job = [&](int c, ChunkStats& st) {
    const Seed chunk_seed = derive_seed(seed, static_cast<std::uint64_t>(c));
    st.lap_sum.assign(opt.u_grid.size(), 0.0);
    st.lap_sumsq.assign(opt.u_grid.size(), 0.0);
    const long lo = opt.samples * c / chunks;
    const long hi = opt.samples * (c + 1) / chunks;
    for (long s = lo; s < hi; ++s) {
      const OccupiedRestaurant placed = place_guests(
          occ, total - n,
          derive_seed(chunk_seed, static_cast<std::uint64_t>(s - lo)));
      const ActResult res = act_right(placed, g);
      ++st.exponent_freq[res.rn_exponent];
      const Permutation rho = project_finite(res.occ, n);
      ++rho_parts[static_cast<size_t>(c)][rho.to_string()];
      // Labeled arc lengths after the action.
      std::vector<double> arcs(static_cast<size_t>(n));
      for (int i = 1; i <= n; ++i) {
        const GuestSeat& a = res.occ.guests[static_cast<size_t>(i - 1)];
        const GuestSeat& b = res.occ.guests[static_cast<size_t>(rho(i) - 1)];
        const double len = res.occ.table_by_id(a.table).length;
        double d = b.pos - a.pos;
        if (d <= 0.0) d += len;
        arcs[static_cast<size_t>(i - 1)] = d;
      }
      for (std::size_t i = 0; i < opt.u_grid.size(); ++i) {
        double v = 0.0;
        for (double l : arcs) v += std::exp(-opt.u_grid[i] * l);
        st.lap_sum[i] += v;
        st.lap_sumsq[i] += v * v;
      }
      ++st.samples;
    }
  };
  const auto parts = run_chunks(chunks, resolve_threads(opt.threads), job);

  ChipSimSummary out;
  out.u_grid = opt.u_grid;
  merge_chunks(parts, 0, &out.samples, &out.exponent_freq, opt.u_grid,
               &out.laplace_mean, &out.laplace_se, nullptr);
  for (const auto& part : rho_parts)
    for (const auto& [k, v] : part) out.rho_freq[k] += v;
  return out;
}

CompareReport compare_report(const MixtureMeasure& m, const SimSummary& sim,
                             double tv_threshold, double se_multiplier) {
  if (!m.fingerprint.empty() && !sim.fingerprint.empty() &&
      m.fingerprint != sim.fingerprint)
    throw std::invalid_argument("compare_report: fingerprint mismatch");
  CompareReport rep;
  rep.tv_threshold = tv_threshold;
  rep.u_grid = sim.u_grid;
  std::tie(rep.mass, rep.truncation_error) = total_mass(m);

  std::map<int, double> sim_marginal;
  for (const auto& [e, c] : sim.exponent_freq)
    sim_marginal[e] = static_cast<double>(c);
  rep.tv_exponent = total_variation(exponent_marginal(m), sim_marginal);

  std::ostringstream detail;
  bool pass = rep.tv_exponent <= tv_threshold;
  if (!pass) detail << "TV(exponent) " << rep.tv_exponent << " exceeds "
                    << tv_threshold << "; ";
  if (rep.mass > 1.0 + 1e-9 ||
      rep.mass < 1.0 - rep.truncation_error - 1e-9) {
    pass = false;
    detail << "mass " << rep.mass << " outside truncation bound; ";
  }
  for (std::size_t i = 0; i < sim.u_grid.size(); ++i) {
    const double exact = laplace_functional(m, sim.u_grid[i]);
    const double diff = std::abs(exact - sim.laplace_mean[i]);
    rep.laplace_diff.push_back(diff);
    rep.laplace_se.push_back(sim.laplace_se[i]);
    if (diff > se_multiplier * sim.laplace_se[i] + 1e-9) {
      pass = false;
      detail << "Laplace diff " << diff << " at u=" << sim.u_grid[i]
             << " exceeds " << se_multiplier << " SE (" << sim.laplace_se[i]
             << "); ";
    }
  }
  rep.pass = pass;
  rep.detail = detail.str();
  return rep;
}

}  // namespace crpchips
