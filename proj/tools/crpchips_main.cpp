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
//
// Command-line front end.  Exit codes: 0 success, 1 verification failure,
// 2 invalid flags, 3 guard refusal.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "crpchips/checker.hpp"
#include "crpchips/chip.hpp"
#include "crpchips/dirichlet.hpp"
#include "crpchips/engines.hpp"
#include "crpchips/ewens.hpp"
#include "crpchips/guard.hpp"
#include "crpchips/json_io.hpp"
#include "crpchips/restaurant.hpp"
#include "crpchips/rng.hpp"
#include "crpchips/simulate.hpp"
#include "crpchips/stats.hpp"

using namespace crpchips;

namespace {

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

Permutation parse_images(const std::vector<int>& images) {
  return Permutation(images);
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open input file: " + path);
  Json j;
  in >> j;
  return j;
}

void write_output(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text << std::endl;
  } else {
    std::ofstream f(out);
    if (!f) throw CLI::ValidationError("cannot open output file: " + out);
    f << text << std::endl;
  }
}

void write_json(const std::string& out, const Json& j) {
  write_output(out, j.dump(2));
}

// Guard override: print the expected cost before lifting the limit.
int effective_guard(int base, int unsafe_guard, const char* what) {
  if (unsafe_guard <= 0) return base;
  double cost = 1.0;
  for (int i = 2; i <= unsafe_guard; ++i) cost *= i;
  std::fprintf(stderr,
               "unsafe-guard: lifting %s limit from %d to %d "
               "(worst-case on the order of %.3g states)\n",
               what, base, unsafe_guard, cost);
  return unsafe_guard;
}

Permutation random_permutation(int degree, std::mt19937_64& rng) {
  std::vector<int> img(static_cast<size_t>(degree));
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

Restaurant random_tables(int count, std::mt19937_64& rng) {
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double> l(static_cast<size_t>(count));
  double tot = 0.0;
  for (double& v : l) tot += (v = exp1(rng));
  for (double& v : l) v /= tot;
  std::sort(l.begin(), l.end(), std::greater<>());
  return Restaurant{Rational(1), l, 0.0};
}

// ---------------------------------------------------------------------------
// Verification suites.  Each returns pass plus a short human-readable detail.

struct SuiteResult {
  bool pass = false;
  std::string detail;
};

SuiteResult suite_ewens_pushforward(int n_max) {
  for (int n = 2; n <= n_max; ++n)
    for (const Rational& z : {Rational(1, 2), Rational(1), Rational(2)}) {
      const PushforwardReport rep = pushforward_check(n, EwensParams{z});
      if (!rep.ok) return {false, "n=" + std::to_string(n) + ": " + rep.detail};
    }
  return {true, "exact pushforward for n=2.." + std::to_string(n_max)};
}

SuiteResult suite_chip_assoc(long trials, Seed seed) {
  auto rng = make_rng(seed);
  std::uniform_int_distribution<int> size(0, 5);
  auto rand_chip = [&](int dst, int src) {
    const int deg = std::max({dst, src, 1}) + 3;
    Chip c = chip_from_pair(random_permutation(deg, rng),
                            random_permutation(deg, rng), dst, src);
    c.canonicalize();
    return c;
  };
  for (long t = 0; t < trials; ++t) {
    const int a = size(rng), b = size(rng), c = size(rng), d = size(rng);
    const Chip f = rand_chip(a, b), g = rand_chip(b, c), h = rand_chip(c, d);
    if (!(multiply(multiply(f, g), h) == multiply(f, multiply(g, h))))
      return {false, "associativity failed at trial " + std::to_string(t)};
    if (!(involute(multiply(f, g)) == multiply(involute(g), involute(f))))
      return {false, "involution failed at trial " + std::to_string(t)};
  }
  return {true, std::to_string(trials) + " random triples exact"};
}

SuiteResult suite_theta_stab(long trials, Seed seed) {
  auto rng = make_rng(seed);
  std::uniform_int_distribution<int> size(0, 4);
  for (long t = 0; t < trials; ++t) {
    const int alpha = size(rng), beta = size(rng), gamma = size(rng);
    const int deg = 6;
    const Permutation g1 = random_permutation(deg, rng);
    const Permutation g2 = random_permutation(deg, rng);
    const Permutation h1 = random_permutation(deg, rng);
    const Permutation h2 = random_permutation(deg, rng);
    const Chip product = multiply(chip_from_pair(g1, g2, alpha, beta),
                                  chip_from_pair(h1, h2, beta, gamma));
    for (int j = deg - beta + 1; j <= deg - beta + 3; ++j) {
      const Permutation th = theta_element(beta, j);
      const int big = std::max(deg, beta + 2 * j);
      const Chip cur = chip_from_pair(
          compose(g1.extend(big), compose(th.extend(big), h1.extend(big))),
          compose(g2.extend(big), compose(th.extend(big), h2.extend(big))),
          alpha, gamma);
      if (!(cur == product))
        return {false, "stabilization failed at trial " + std::to_string(t)};
    }
  }
  return {true, std::to_string(trials) + " stabilized products exact"};
}

SuiteResult suite_dirichlet_laplace(long draws, Seed seed) {
  using cplx = std::complex<double>;
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> unif(0.05, 2.0);
  std::uniform_int_distribution<int> kdist(0, 3);
  for (int t = 0; t < 50; ++t) {
    const int p = 1 + static_cast<int>(rng() % 4);
    DirichletSpec spec;
    spec.ell = unif(rng);
    int total = 0;
    for (int i = 0; i < p; ++i) total += spec.k.emplace_back(kdist(rng));
    if (total == 0) spec.k[0] = 1;
    std::vector<cplx> u;
    for (int i = 0; i < p; ++i) u.emplace_back(unif(rng), unif(rng) - 1.0);
    if (std::abs(laplace_closed(spec, u) - laplace_contour(spec, u)) > 1e-6)
      return {false, "closed vs contour mismatch at trial " +
                         std::to_string(t)};
  }
  const DirichletSpec spec{{2, 1, 1}, 1.3};
  auto mc = make_rng(derive_seed(seed, 1));
  double mean = 0, m2 = 0;
  for (long i = 0; i < draws; ++i) {
    const auto x = sample(spec, mc);
    const double v = std::exp(-0.5 * x[0] - 1.0 * x[1] - 0.2 * x[2]);
    mean += v;
    m2 += v * v;
  }
  mean /= static_cast<double>(draws);
  const double se =
      std::sqrt((m2 / static_cast<double>(draws) - mean * mean) /
                static_cast<double>(draws));
  const std::vector<cplx> uc{cplx(0.5), cplx(1.0), cplx(0.2)};
  if (std::abs(laplace_closed(spec, uc).real() - mean) > 3 * se + 1e-12)
    return {false, "Monte Carlo disagreement beyond 3 SE"};
  if (!aggregate_check(4, {2, 1, 1}, 1.0, derive_seed(seed, 2)).pass)
    return {false, "aggregation KS above critical"};
  return {true, "contour, Monte Carlo, and aggregation checks pass"};
}

SuiteResult suite_thm2_calibration(const std::vector<int>& ks, Seed seed) {
  auto rng = make_rng(seed);
  for (int t = 0; t < 20; ++t) {
    const Restaurant r = random_tables(5, rng);
    const MixtureMeasure a = act_cycles(ks, r);
    const MixtureMeasure b = act_cycles_literal(ks, r, DivisorMode::kFullAut);
    if (a.components.size() != b.components.size())
      return {false, "component count differs at trial " + std::to_string(t)};
    const auto ma = exponent_marginal(a), mb = exponent_marginal(b);
    for (const auto& [e, w] : ma) {
      auto it = mb.find(e);
      if (it == mb.end() ||
          std::abs(w - it->second) > 1e-11 * std::max(1.0, std::abs(w)))
        return {false, "exponent weight differs at trial " +
                           std::to_string(t)};
    }
  }
  return {true, "literal engine exact over 20 random configurations"};
}

SuiteResult suite_thm2_oracle(const std::vector<int>& ks, long samples,
                              Seed seed) {
  const Restaurant r = sample_tables(Rational(1), SampleMethod::kStickBreaking,
                                     Truncation{40, 1e-9}, derive_seed(seed, 0));
  SimOptions opt;
  opt.samples = samples;
  opt.u_grid = {0.1, 0.3, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0, 8.0, 12.0};
  const SimSummary sim = simulate_cycles(ks, r, opt, derive_seed(seed, 1));
  const MixtureMeasure m = act_cycles(ks, r);
  const CompareReport rep = compare_report(m, sim, 0.01, 3.0);
  if (!rep.pass) return {false, rep.detail};
  std::ostringstream os;
  os << "TV=" << rep.tv_exponent << " over " << samples << " samples";
  return {true, os.str()};
}

SuiteResult suite_center_oracle(const std::vector<int>& ks, long samples,
                                Seed seed) {
  const Restaurant r = sample_tables(Rational(1), SampleMethod::kStickBreaking,
                                     Truncation{15, 1e-9}, derive_seed(seed, 0));
  const OccupiedRestaurant occ = occupy(r);
  std::map<int, double> ef, df;
  std::vector<double> en, dn;
  for (long i = 0; i < samples; ++i) {
    const auto a = act_center_sample(ks, occ, derive_seed(seed, 2 * i + 1));
    const auto b =
        simulate_direct_center(ks, occ, derive_seed(seed, 2 * i + 2));
    ef[a.rn_exponent] += 1;
    df[b.rn_exponent] += 1;
    for (const auto& t : a.occ.tables)
      if (t.id >= occ.next_id) en.push_back(t.length);
    for (const auto& t : b.occ.tables)
      if (t.id >= occ.next_id) dn.push_back(t.length);
  }
  const double tv = total_variation(ef, df);
  if (tv > 0.02) return {false, "exponent TV " + std::to_string(tv)};
  if (ks_two_sample(en, dn) > ks_two_sample_critical(en.size(), dn.size()))
    return {false, "new-length KS above critical"};
  return {true, "exponent TV " + std::to_string(tv)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Virtual-permutation calculus: restaurants, chips, checker "
               "surfaces, and spreaded-image engines"};
  app.require_subcommand(1);

  std::string out;
  app.add_option("--out", out, "Output path (default: stdout)");
  std::uint64_t seed_v = 1;
  app.add_option("--seed", seed_v, "Master seed");
  int threads = 0;
  app.add_option("--threads", threads,
                 "Worker threads (0: CRPCHIPS_THREADS or hardware)");
  int unsafe_guard = 0;
  app.add_option("--unsafe-guard", unsafe_guard,
                 "Override enumeration guards with this degree limit "
                 "(prints expected cost)");

  // sample
  auto* c_sample = app.add_subcommand("sample", "Sample table lengths");
  std::string z_str = "1";
  int tables = 64;
  double tail_eps = 1e-9;
  std::string method = "poisson";
  c_sample->add_option("--z", z_str, "Ewens parameter (rational, e.g. 3/2)");
  c_sample->add_option("--tables", tables, "Maximum stored tables");
  c_sample->add_option("--tail-eps", tail_eps, "Target unstored tail mass");
  c_sample->add_option("--method", method, "poisson | stick")
      ->check(CLI::IsMember({"poisson", "stick"}));

  // place
  auto* c_place = app.add_subcommand("place", "Place guests uniformly");
  std::string restaurant_path;
  int count = 1;
  c_place->add_option("--restaurant", restaurant_path, "Restaurant JSON")
      ->required();
  c_place->add_option("--count", count, "Number of guests");

  // project
  auto* c_project =
      app.add_subcommand("project", "Finite projection of a seating");
  std::string occupied_path;
  int proj_n = 1;
  c_project->add_option("--occupied", occupied_path, "Occupied JSON")
      ->required();
  c_project->add_option("--n", proj_n, "Projection degree");

  // act
  auto* c_act = app.add_subcommand("act", "Two-sided cut-and-glue action");
  std::string act_occ_path;
  std::vector<int> left_imgs, right_imgs;
  c_act->add_option("--occupied", act_occ_path, "Occupied JSON")->required();
  c_act->add_option("--left", left_imgs, "Left permutation images")->delimiter(',');
  c_act->add_option("--right", right_imgs, "Right permutation images")->delimiter(',');

  // chip-mul
  auto* c_chipmul = app.add_subcommand("chip-mul", "Multiply two chips");
  std::string chip_a, chip_b;
  c_chipmul->add_option("--a", chip_a, "Left chip JSON")->required();
  c_chipmul->add_option("--b", chip_b, "Right chip JSON")->required();

  // chip-from-pair
  auto* c_cfp =
      app.add_subcommand("chip-from-pair", "Chip of a bisymmetric pair");
  std::vector<int> g1_imgs, g2_imgs;
  int alpha = 0, beta = 0;
  c_cfp->add_option("--g1", g1_imgs, "First permutation images")->delimiter(',')->required();
  c_cfp->add_option("--g2", g2_imgs, "Second permutation images")->delimiter(',')->required();
  c_cfp->add_option("--alpha", alpha, "Bottom pair count");
  c_cfp->add_option("--beta", beta, "Top pair count");

  // enum-gamma
  auto* c_gamma =
      app.add_subcommand("enum-gamma", "Surface classes over a cycle type");
  std::vector<int> gamma_ks;
  c_gamma->add_option("--k", gamma_ks, "Cycle lengths")->delimiter(',')->required();

  // dessin
  auto* c_dessin = app.add_subcommand("dessin", "DOT dessin of a surface");
  std::vector<int> dessin_g, dessin_u;
  c_dessin->add_option("--g", dessin_g, "Permutation g images")->delimiter(',')->required();
  c_dessin->add_option("--u", dessin_u, "Permutation u images")->delimiter(',')->required();

  // laplace
  auto* c_laplace =
      app.add_subcommand("laplace", "Laplace transform of a Dirichlet law");
  std::string spec_path;
  std::vector<double> u_args;
  c_laplace->add_option("--spec", spec_path,
                        "DirichletSpec or ConvolutionSpec JSON")
      ->required();
  c_laplace->add_option("--u", u_args, "Real evaluation points")->delimiter(',')->required();

  // act-cycles
  auto* c_cycles =
      app.add_subcommand("act-cycles", "Spreaded image of disjoint cycles");
  std::string cyc_restaurant;
  std::vector<int> cyc_ks;
  std::string divisor = "";
  c_cycles->add_option("--k", cyc_ks, "Cycle lengths")->delimiter(',')->required();
  c_cycles->add_option("--restaurant", cyc_restaurant, "Restaurant JSON")
      ->required();
  c_cycles->add_option("--literal", divisor,
                       "Literal transcription divisor: aut-b | full-aut")
      ->check(CLI::IsMember({"aut-b", "full-aut"}));

  // act-chip
  auto* c_chip = app.add_subcommand("act-chip", "Spreaded image of a chip");
  std::string chip_occ_path;
  std::vector<int> sigma_imgs, phi_args, chip_ks;
  c_chip->add_option("--sigma", sigma_imgs, "Strand permutation images")->delimiter(',')
      ->required();
  c_chip->add_option("--phi", phi_args, "Extra crossings per strand")->delimiter(',');
  c_chip->add_option("--ks", chip_ks, "Free circle lengths")->delimiter(',');
  c_chip->add_option("--occupied", chip_occ_path, "Occupied JSON")->required();

  // act-center
  auto* c_center =
      app.add_subcommand("act-center", "One exact draw of the center action");
  std::string center_occ_path;
  std::vector<int> center_ks;
  c_center->add_option("--k", center_ks, "Cycle lengths")->delimiter(',')->required();
  c_center->add_option("--occupied", center_occ_path, "Occupied JSON")
      ->required();

  // simulate
  auto* c_sim =
      app.add_subcommand("simulate", "Monte Carlo cut-and-glue oracle");
  std::string sim_restaurant;
  std::vector<int> sim_ks;
  long sim_samples = 100000;
  std::vector<double> sim_grid{0.5, 1.0, 2.0};
  c_sim->add_option("--k", sim_ks, "Cycle lengths")->delimiter(',')->required();
  c_sim->add_option("--restaurant", sim_restaurant, "Restaurant JSON")
      ->required();
  c_sim->add_option("--samples", sim_samples, "Sample count");
  c_sim->add_option("--u-grid", sim_grid, "Laplace grid")->delimiter(',');

  // verify
  auto* c_verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  std::vector<int> verify_ks{2};
  long verify_samples = 0;
  int verify_n = 6;
  c_verify
      ->add_option("suite", suite,
                   "ewens-pushforward | chip-assoc | theta-stab | "
                   "dirichlet-laplace | thm2-calibration | thm2-oracle | "
                   "center-oracle")
      ->required()
      ->check(CLI::IsMember({"ewens-pushforward", "chip-assoc", "theta-stab",
                             "dirichlet-laplace", "thm2-calibration",
                             "thm2-oracle", "center-oracle"}));
  c_verify->add_option("--k", verify_ks, "Cycle lengths")->delimiter(',');
  c_verify->add_option("--samples", verify_samples,
                       "Sample count (0: suite default)");
  c_verify->add_option("--n", verify_n, "Degree bound for exact suites");

  // Global flags are accepted after the subcommand name as well.
  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  const Seed seed{seed_v};
  try {
    if (*c_sample) {
      const Restaurant r = sample_tables(
          parse_rational(z_str),
          method == "stick" ? SampleMethod::kStickBreaking
                            : SampleMethod::kPoissonProcess,
          Truncation{tables, tail_eps}, seed);
      write_json(out, to_json(r));
    } else if (*c_place) {
      const Restaurant r = restaurant_from_json(read_json(restaurant_path));
      write_json(out, to_json(place_guests(r, count, seed)));
    } else if (*c_project) {
      const OccupiedRestaurant occ =
          occupied_from_json(read_json(occupied_path));
      write_json(out, to_json(project_finite(occ, proj_n)));
    } else if (*c_act) {
      const OccupiedRestaurant occ = occupied_from_json(read_json(act_occ_path));
      const int deg = std::max<int>(
          {1, static_cast<int>(left_imgs.size()),
           static_cast<int>(right_imgs.size())});
      const Permutation l = left_imgs.empty() ? Permutation::identity(deg)
                                              : parse_images(left_imgs);
      const Permutation rr = right_imgs.empty() ? Permutation::identity(deg)
                                                : parse_images(right_imgs);
      const ActResult res = act(occ, l, rr);
      Json j;
      j["rn_exponent"] = res.rn_exponent;
      j["occupied"] = to_json(res.occ);
      write_json(out, j);
    } else if (*c_chipmul) {
      const Chip a = chip_from_json(read_json(chip_a));
      const Chip b = chip_from_json(read_json(chip_b));
      write_json(out, to_json(multiply(a, b)));
    } else if (*c_cfp) {
      write_json(out, to_json(chip_from_pair(parse_images(g1_imgs),
                                             parse_images(g2_imgs), alpha,
                                             beta)));
    } else if (*c_gamma) {
      const int guard = effective_guard(8, unsafe_guard, "brute-force");
      Json arr = Json::array();
      for (const GammaClass& c : enumerate_gamma(gamma_ks, guard)) {
        Json j;
        j["g"] = to_json(c.rep.g);
        j["u"] = to_json(c.rep.u);
        j["labeled_count"] = c.labeled_count;
        j["aut_full"] = c.aut.full_order;
        j["aut_b_fixing"] = c.aut.b_fixing_order;
        j["incidence"] = c.incidence;
        arr.push_back(std::move(j));
      }
      write_json(out, arr);
    } else if (*c_dessin) {
      const EngineSurface s{parse_images(dessin_g), parse_images(dessin_u)};
      write_output(out, to_dessin_dot(s));
    } else if (*c_laplace) {
      const Json sj = read_json(spec_path);
      ConvolutionSpec conv;
      if (sj.contains("convolution"))
        conv = convolution_from_json(sj);
      else
        conv.components.push_back(dirichlet_from_json(sj));
      std::vector<std::complex<double>> u(u_args.begin(), u_args.end());
      Json j;
      j["closed"] = real_to_json(laplace_closed(conv, u).real());
      j["contour"] = real_to_json(laplace_contour(conv, u).real());
      write_json(out, j);
    } else if (*c_cycles) {
      const Restaurant r = restaurant_from_json(read_json(cyc_restaurant));
      const int guard = effective_guard(6, unsafe_guard, "engine");
      const MixtureMeasure m =
          divisor.empty()
              ? act_cycles(cyc_ks, r, guard)
              : act_cycles_literal(cyc_ks, r,
                                   divisor == "full-aut"
                                       ? DivisorMode::kFullAut
                                       : DivisorMode::kAutB,
                                   guard);
      write_json(out, to_json(m));
    } else if (*c_chip) {
      const OccupiedRestaurant occ =
          occupied_from_json(read_json(chip_occ_path));
      ChipData data;
      data.sigma = parse_images(sigma_imgs);
      data.phi = phi_args.empty()
                     ? std::vector<int>(sigma_imgs.size(), 0)
                     : phi_args;
      data.ks = chip_ks;
      const int guard = effective_guard(6, unsafe_guard, "engine");
      write_json(out, to_json(act_chip(data, occ, data.n(), guard)));
    } else if (*c_center) {
      const OccupiedRestaurant occ =
          occupied_from_json(read_json(center_occ_path));
      const int guard = effective_guard(6, unsafe_guard, "engine");
      const CenterActResult res =
          act_center_sample(center_ks, occ, seed, guard);
      Json j;
      j["rn_exponent"] = res.rn_exponent;
      j["occupied"] = to_json(res.occ);
      write_json(out, j);
    } else if (*c_sim) {
      const Restaurant r = restaurant_from_json(read_json(sim_restaurant));
      SimOptions opt;
      opt.samples = sim_samples;
      opt.u_grid = sim_grid;
      opt.threads = threads;
      write_json(out, to_json(simulate_cycles(sim_ks, r, opt, seed)));
    } else if (*c_verify) {
      SuiteResult res;
      if (suite == "ewens-pushforward") {
        res = suite_ewens_pushforward(std::min(verify_n, 7));
      } else if (suite == "chip-assoc") {
        res = suite_chip_assoc(verify_samples > 0 ? verify_samples : 1000,
                               seed);
      } else if (suite == "theta-stab") {
        res = suite_theta_stab(verify_samples > 0 ? verify_samples : 200,
                               seed);
      } else if (suite == "dirichlet-laplace") {
        res = suite_dirichlet_laplace(
            verify_samples > 0 ? verify_samples : 1000000, seed);
      } else if (suite == "thm2-calibration") {
        res = suite_thm2_calibration(verify_ks, seed);
      } else if (suite == "thm2-oracle") {
        res = suite_thm2_oracle(
            verify_ks, verify_samples > 0 ? verify_samples : 1000000, seed);
      } else if (suite == "center-oracle") {
        res = suite_center_oracle(
            verify_ks, verify_samples > 0 ? verify_samples : 100000, seed);
      }
      Json j;
      j["suite"] = suite;
      j["pass"] = res.pass;
      j["detail"] = res.detail;
      write_json(out, j);
      return res.pass ? 0 : 1;
    }
  } catch (const GuardError& e) {
    std::fprintf(stderr,
                 "guard refusal: %s\n"
                 "Re-run with --unsafe-guard <limit> to override; the cost "
                 "grows factorially with the degree.\n",
                 e.what());
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
