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

#include "crpchips/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <utility>
#include <stdexcept>

#include "crpchips/stats.hpp"

namespace crpchips {

int DirichletSpec::total_k() const {
  return std::accumulate(k.begin(), k.end(), 0);
}

void DirichletSpec::validate() const {
  if (k.empty()) throw std::invalid_argument("DirichletSpec: empty k");
  bool positive = false;
  for (int ki : k) {
    if (ki < 0) throw std::invalid_argument("DirichletSpec: negative k");
    positive |= ki > 0;
  }
  if (!positive) throw std::invalid_argument("DirichletSpec: all k zero");
  if (!(ell > 0.0)) throw std::invalid_argument("DirichletSpec: ell <= 0");
}

int ConvolutionSpec::dimension() const {
  return components.empty() ? 0 : components.front().dimension();
}

double ConvolutionSpec::total_scale() const {
  double s = 0.0;
  for (const auto& c : components) s += c.ell;
  return s;
}

void ConvolutionSpec::validate() const {
  if (components.empty())
    throw std::invalid_argument("ConvolutionSpec: empty");
  for (const auto& c : components) {
    c.validate();
    if (c.dimension() != dimension())
      throw std::invalid_argument("ConvolutionSpec: dimension mismatch");
  }
}

DensityResult density(const DirichletSpec& spec, const std::vector<double>& x,
                      double tol) {
  spec.validate();
  if (static_cast<int>(x.size()) != spec.dimension())
    throw std::invalid_argument("density: dimension mismatch");
  DensityResult out;
  int active = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (spec.k[i] == 0)
      out.zero_atoms.push_back(static_cast<int>(i));
    else
      ++active;
    sum += x[i];
  }
  out.scale_atom = active == 1;
  // Support: nonnegative, atom coordinates at zero, total equal to ell.
  if (std::abs(sum - spec.ell) > tol * std::max(1.0, spec.ell)) return out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < -tol) return out;
    if (spec.k[i] == 0 && std::abs(x[i]) > tol) return out;
  }
  out.on_support = true;
  if (out.scale_atom) return out;  // purely atomic; no density part
  const int n = spec.total_k();
  double logd = std::lgamma(n) + (1.0 - n) * std::log(spec.ell);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (spec.k[i] == 0) continue;
    logd -= std::lgamma(spec.k[i]);
    if (spec.k[i] > 1) {
      if (x[i] <= 0.0) return out;  // density vanishes on the boundary slice
      logd += (spec.k[i] - 1) * std::log(x[i]);
    }
  }
  out.density = std::exp(logd);
  return out;
}

std::vector<double> sample(const DirichletSpec& spec, std::mt19937_64& rng) {
  spec.validate();
  std::vector<double> g(spec.k.size(), 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (spec.k[i] == 0) continue;
    std::gamma_distribution<double> gamma(static_cast<double>(spec.k[i]), 1.0);
    g[i] = gamma(rng);
    total += g[i];
  }
  if (total <= 0.0) {
    // Degenerate draw; put all mass on the first active coordinate.
    for (std::size_t i = 0; i < g.size(); ++i)
      if (spec.k[i] > 0) {
        g[i] = spec.ell;
        return g;
      }
  }
  for (double& v : g) v *= spec.ell / total;
  return g;
}

std::vector<double> sample(const ConvolutionSpec& spec, std::mt19937_64& rng) {
  spec.validate();
  std::vector<double> out(static_cast<std::size_t>(spec.dimension()), 0.0);
  for (const auto& c : spec.components) {
    const auto s = sample(c, rng);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += s[i];
  }
  return out;
}

std::vector<double> sample(const DirichletSpec& spec, Seed seed) {
  auto rng = make_rng(seed);
  return sample(spec, rng);
}

std::vector<double> sample(const ConvolutionSpec& spec, Seed seed) {
  auto rng = make_rng(seed);
  return sample(spec, rng);
}

namespace {

using Complex = std::complex<double>;

// Divided difference of f(t) = exp(-a t) over the cell z[i..i+len] by the
// shifted Taylor series around the cell mean: with w_j = z_j - c,
//   f[z_i..z_{i+len}] = e^{-a c} sum_{q>=0} (-a)^{q+m} h_q(w) / (q+m)!
// where h_q is the complete homogeneous symmetric polynomial.  Stable for
// close (including coincident) nodes.
Complex dd_exp_taylor(const std::vector<Complex>& z, std::size_t i,
                      std::size_t len, double a, Complex c) {
  const std::size_t m = len;
  constexpr std::size_t kTerms = 64;
  std::vector<Complex> h(kTerms, Complex{0.0, 0.0});
  h[0] = Complex{1.0, 0.0};
  for (std::size_t j = i; j <= i + len; ++j) {
    const Complex w = z[j] - c;
    for (std::size_t q = 1; q < kTerms; ++q) h[q] += w * h[q - 1];
  }
  // term_q = (-a)^{q+m} / (q+m)!; accumulate with a running factor.
  Complex sum{0.0, 0.0};
  double factor = 1.0;
  for (std::size_t j = 1; j <= m; ++j) factor *= -a / static_cast<double>(j);
  for (std::size_t q = 0; q < kTerms; ++q) {
    sum += factor * h[q];
    factor *= -a / static_cast<double>(q + m + 1);
  }
  return std::exp(-a * c) * sum;
}

// Confluent divided difference table over possibly repeated or clustered
// nodes; cells with small scaled radius use the Taylor form, wide cells the
// difference quotient.  Continuous in the nodes by construction.
Complex divided_difference_exp(std::vector<Complex> z, double a) {
  std::sort(z.begin(), z.end(), [](const Complex& x, const Complex& y) {
    return std::make_pair(x.real(), x.imag()) <
           std::make_pair(y.real(), y.imag());
  });
  const std::size_t n = z.size();
  std::vector<Complex> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = std::exp(-a * z[i]);
  for (std::size_t len = 1; len < n; ++len) {
    for (std::size_t i = 0; i + len < n; ++i) {
      Complex c{0.0, 0.0};
      for (std::size_t j = i; j <= i + len; ++j) c += z[j];
      c /= static_cast<double>(len + 1);
      double r = 0.0;
      for (std::size_t j = i; j <= i + len; ++j)
        r = std::max(r, std::abs(z[j] - c));
      if (a * r <= 2.0)
        dd[i] = dd_exp_taylor(z, i, len, a, c);
      else
        dd[i] = (dd[i + 1] - dd[i]) / (z[i + len] - z[i]);
    }
  }
  return dd[0];
}

}  // namespace

std::complex<double> laplace_closed(const DirichletSpec& spec,
                                    const std::vector<std::complex<double>>& u,
                                    double cluster_rel) {
  spec.validate();
  if (static_cast<int>(u.size()) != spec.dimension())
    throw std::invalid_argument("laplace_closed: dimension mismatch");
  // Collect active evaluation points with multiplicities.
  std::vector<Complex> pts;
  std::vector<int> mult;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (spec.k[i] == 0) continue;
    pts.push_back(u[i]);
    mult.push_back(spec.k[i]);
  }
  // Cluster points within the relative threshold (union-find).
  const std::size_t p = pts.size();
  std::vector<std::size_t> parent(p);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j) {
      const double scale =
          std::max({1.0, std::abs(pts[i]), std::abs(pts[j])});
      if (std::abs(pts[i] - pts[j]) <= cluster_rel * scale)
        parent[find(j)] = find(i);
    }
  // Cluster representatives: multiplicity-weighted means.
  std::vector<Complex> rep_sum(p, Complex{0.0, 0.0});
  std::vector<int> rep_mult(p, 0);
  for (std::size_t i = 0; i < p; ++i) {
    const std::size_t r = find(i);
    rep_sum[r] += pts[i] * static_cast<double>(mult[i]);
    rep_mult[r] += mult[i];
  }
  std::vector<Complex> z;
  for (std::size_t r = 0; r < p; ++r) {
    if (rep_mult[r] == 0) continue;
    const Complex c = rep_sum[r] / static_cast<double>(rep_mult[r]);
    for (int m = 0; m < rep_mult[r]; ++m) z.push_back(c);
  }
  const int n = static_cast<int>(z.size());
  if (n == 1) return std::exp(-spec.ell * z[0]);
  const double a = spec.ell;
  const Complex dd = divided_difference_exp(z, a);
  const double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n-1}
  return sign * std::tgamma(static_cast<double>(n)) *
         std::pow(a, 1.0 - n) * dd;
}

std::complex<double> laplace_closed(const ConvolutionSpec& spec,
                                    const std::vector<std::complex<double>>& u,
                                    double cluster_rel) {
  spec.validate();
  Complex out{1.0, 0.0};
  for (const auto& c : spec.components) out *= laplace_closed(c, u, cluster_rel);
  return out;
}

namespace {

template <typename F>
Complex adaptive_simpson(const F& f, double a, double b, Complex fa,
                         Complex fm, Complex fb, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const Complex flm = f(lm), frm = f(rm);
  const Complex whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const Complex left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const Complex right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, tol / 2.0, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, tol / 2.0, depth - 1);
}

template <typename F>
Complex integrate(const F& f, double a, double b, double tol) {
  const double m = 0.5 * (a + b);
  return adaptive_simpson(f, a, b, f(a), f(m), f(b), tol, 40);
}

}  // namespace

std::complex<double> laplace_contour(
    const DirichletSpec& spec, const std::vector<std::complex<double>>& u) {
  spec.validate();
  if (static_cast<int>(u.size()) != spec.dimension())
    throw std::invalid_argument("laplace_contour: dimension mismatch");
  const double a = spec.ell;
  const int n = spec.total_k();
  // After s = a z the transform is Gamma(n)/(2 pi i) int e^s
  // prod (s + a u_j)^{-k_j} ds; integer powers avoid branch cuts.  The
  // vertical line through the saddle near s = n keeps the integrand and the
  // result on the same scale, so the Gamma(n) prefactor costs no digits.
  auto integrand = [&](Complex ss) {
    Complex denom{1.0, 0.0};
    for (std::size_t j = 0; j < u.size(); ++j)
      for (int m = 0; m < spec.k[j]; ++m) denom *= ss + a * u[j];
    return std::exp(ss) / denom;
  };
  const double c = static_cast<double>(n);
  double max_im = 0.0;
  for (const auto& uj : u) max_im = std::max(max_im, std::abs(a * uj.imag()));
  const double y = std::max(5.0 + c, 2.0 * max_im + 5.0);
  // Ray length: e^{c - t/sqrt 2} below 1e-18 relative.
  const double t_max = std::sqrt(2.0) * (c + 42.0);
  const Complex up{-std::sqrt(0.5), std::sqrt(0.5)};    // e^{i 3pi/4}
  const Complex down{-std::sqrt(0.5), -std::sqrt(0.5)};  // e^{-i 3pi/4}
  const double tol = 1e-11 * std::max(std::abs(integrand(Complex{c, 0.0})),
                                      std::numeric_limits<double>::min());

  Complex total{0.0, 0.0};
  // Bottom ray traversed toward the vertical segment.
  auto f_bot = [&](double t) { return integrand(Complex{c, -y} + t * down); };
  total -= down * integrate(f_bot, 0.0, t_max, tol);
  // Vertical segment c - iy .. c + iy.
  auto f_vert = [&](double t) { return integrand(Complex{c, t}); };
  total += Complex{0.0, 1.0} *
           (integrate(f_vert, -y, 0.0, tol) + integrate(f_vert, 0.0, y, tol));
  // Top ray outward.
  auto f_top = [&](double t) { return integrand(Complex{c, y} + t * up); };
  total += up * integrate(f_top, 0.0, t_max, tol);

  const Complex two_pi_i{0.0, 2.0 * std::acos(-1.0)};
  return std::tgamma(static_cast<double>(n)) * total / two_pi_i;
}

std::complex<double> laplace_contour(
    const ConvolutionSpec& spec, const std::vector<std::complex<double>>& u) {
  spec.validate();
  Complex out{1.0, 0.0};
  for (const auto& c : spec.components) out *= laplace_contour(c, u);
  return out;
}

AggregateReport aggregate_check(int n, const std::vector<int>& grouping,
                                double ell, Seed seed, long draws) {
  if (n <= 0 || std::accumulate(grouping.begin(), grouping.end(), 0) != n)
    throw std::invalid_argument("aggregate_check: grouping must compose n");
  for (int g : grouping)
    if (g <= 0) throw std::invalid_argument("aggregate_check: zero group");
  const std::size_t p = grouping.size();
  auto rng_a = make_rng(derive_seed(seed, 0));
  auto rng_b = make_rng(derive_seed(seed, 1));
  std::exponential_distribution<double> exp1(1.0);
  const DirichletSpec direct{grouping, ell};
  std::vector<std::vector<double>> marg_a(p), marg_b(p);
  for (long d = 0; d < draws; ++d) {
    // Uniform point of the scaled n-simplex via normalized exponentials.
    std::vector<double> e(static_cast<std::size_t>(n));
    double tot = 0.0;
    for (double& v : e) tot += (v = exp1(rng_a));
    std::size_t pos = 0;
    for (std::size_t g = 0; g < p; ++g) {
      double block = 0.0;
      for (int j = 0; j < grouping[g]; ++j) block += e[pos++];
      marg_a[g].push_back(block * ell / tot);
    }
    const auto s = sample(direct, rng_b);
    for (std::size_t g = 0; g < p; ++g) marg_b[g].push_back(s[g]);
  }
  // Quantize so that a degenerate (point-mass) marginal compares as equal in
  // spite of summation rounding; continuous marginals are unaffected.
  const double step = ell * 1e-12;
  for (auto* marg : {&marg_a, &marg_b})
    for (auto& col : *marg)
      for (double& v : col) v = std::round(v / step) * step;
  AggregateReport rep;
  rep.draws = draws;
  rep.critical = ks_two_sample_critical(static_cast<std::size_t>(draws),
                                        static_cast<std::size_t>(draws));
  rep.pass = true;
  for (std::size_t g = 0; g < p; ++g) {
    const double ks = ks_two_sample(marg_a[g], marg_b[g]);
    rep.ks_per_marginal.push_back(ks);
    rep.pass = rep.pass && ks <= rep.critical;
  }
  return rep;
}

}  // namespace crpchips
