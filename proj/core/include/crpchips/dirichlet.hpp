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

#ifndef CRPCHIPS_DIRICHLET_HPP
#define CRPCHIPS_DIRICHLET_HPP

#include <complex>
#include <random>
#include <vector>

#include "crpchips/rng.hpp"

namespace crpchips {

// The law Theta_p[k_1,...,k_p; ell] on the scaled simplex sum x_i = ell.
// Zero k_i put an atom at x_i = 0.
struct DirichletSpec {
  std::vector<int> k;
  double ell = 1.0;

  int dimension() const { return static_cast<int>(k.size()); }
  int total_k() const;
  void validate() const;  // k_i >= 0, at least one positive, ell > 0
  friend bool operator==(const DirichletSpec&, const DirichletSpec&) = default;
};

// A convolution (law of the sum of independent draws) of Dirichlet laws of a
// common dimension.
struct ConvolutionSpec {
  std::vector<DirichletSpec> components;

  int dimension() const;
  double total_scale() const;
  void validate() const;
  friend bool operator==(const ConvolutionSpec&,
                         const ConvolutionSpec&) = default;
};

struct DensityResult {
  double density = 0.0;              // absolutely continuous part
  std::vector<int> zero_atoms;       // coordinates carrying an atom at 0
  bool scale_atom = false;           // all mass at a single point (one k_i>0)
  bool on_support = false;
};

DensityResult density(const DirichletSpec& spec, const std::vector<double>& x,
                      double tol = 1e-9);

std::vector<double> sample(const DirichletSpec& spec, std::mt19937_64& rng);
std::vector<double> sample(const ConvolutionSpec& spec, std::mt19937_64& rng);
std::vector<double> sample(const DirichletSpec& spec, Seed seed);
std::vector<double> sample(const ConvolutionSpec& spec, Seed seed);

// Closed-form Laplace transform (integer k), evaluated by confluent divided
// differences; u_j closer than cluster_rel (relative) are merged.
std::complex<double> laplace_closed(const DirichletSpec& spec,
                                    const std::vector<std::complex<double>>& u,
                                    double cluster_rel = 1e-9);
std::complex<double> laplace_closed(const ConvolutionSpec& spec,
                                    const std::vector<std::complex<double>>& u,
                                    double cluster_rel = 1e-9);

// Contour-integral Laplace transform; verification oracle only.
std::complex<double> laplace_contour(
    const DirichletSpec& spec, const std::vector<std::complex<double>>& u);
std::complex<double> laplace_contour(
    const ConvolutionSpec& spec, const std::vector<std::complex<double>>& u);

struct AggregateReport {
  std::vector<double> ks_per_marginal;
  double critical = 0.0;
  long draws = 0;
  bool pass = false;
};

// Pushes uniform points of the n-simplex through block sums given by the
// grouping and two-sample-tests each marginal against direct draws.
AggregateReport aggregate_check(int n, const std::vector<int>& grouping,
                                double ell, Seed seed, long draws = 100000);

}  // namespace crpchips

#endif  // CRPCHIPS_DIRICHLET_HPP
