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

#include "crpchips/checker.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "crpchips/chip.hpp"
#include "crpchips/guard.hpp"

namespace crpchips {

void CheckerSurface::validate() const {
  if (ga.degree() != gb.degree() || gb.degree() != gc.degree())
    throw std::invalid_argument("CheckerSurface: degree mismatch");
}

void EngineSurface::validate() const {
  if (g.degree() != u.degree())
    throw std::invalid_argument("EngineSurface: degree mismatch");
}

CheckerSurface engine_to_triple(const EngineSurface& s) {
  s.validate();
  return CheckerSurface{s.g, Permutation::identity(s.degree()), s.u.inverse()};
}

namespace {

std::vector<int> orders_of(const Permutation& p) {
  std::vector<int> out;
  for (const auto& c : p.cycles()) out.push_back(static_cast<int>(c.size()));
  return out;
}

// Connected components of {1..n} under a list of permutations, as component
// index per point (0-based).
std::pair<std::vector<int>, int> components_of(
    int n, const std::vector<const Permutation*>& gens) {
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  };
  for (const Permutation* p : gens)
    for (int i = 1; i <= n; ++i) unite(i - 1, (*p)(i) - 1);
  std::map<int, int> index;
  std::vector<int> comp(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    auto [it, fresh] = index.insert({r, static_cast<int>(index.size())});
    comp[static_cast<size_t>(i)] = it->second;
    (void)fresh;
  }
  return {comp, static_cast<int>(index.size())};
}

SurfaceStats stats_from_products(int n, const Permutation& p1,
                                 const Permutation& p2,
                                 const Permutation& p3) {
  SurfaceStats st;
  st.a_orders = orders_of(p1);
  st.b_orders = orders_of(p2);
  st.c_orders = orders_of(p3);
  auto [comp, ncomp] = components_of(n, {&p1, &p2, &p3});
  st.components = ncomp;
  // Per component: chi = (#vertices inside) - 3 n_c + 2 n_c.
  std::vector<int> vcount(static_cast<size_t>(ncomp), 0);
  std::vector<int> tri(static_cast<size_t>(ncomp), 0);
  for (const Permutation* p : {&p1, &p2, &p3})
    for (const auto& cyc : p->cycles())
      ++vcount[static_cast<size_t>(comp[static_cast<size_t>(cyc[0] - 1)])];
  for (int i = 0; i < n; ++i) ++tri[static_cast<size_t>(comp[static_cast<size_t>(i)])];
  st.chi = 0;
  for (int c = 0; c < ncomp; ++c) {
    const int chi_c = vcount[static_cast<size_t>(c)] - tri[static_cast<size_t>(c)];
    st.chi_per_component.push_back(chi_c);
    st.genus_per_component.push_back((2 - chi_c) / 2);
    st.chi += chi_c;
  }
  return st;
}

}  // namespace

SurfaceStats surface_stats(const CheckerSurface& s) {
  s.validate();
  const Permutation p1 = compose(s.ga.inverse(), s.gb);
  const Permutation p2 = compose(s.gb.inverse(), s.gc);
  const Permutation p3 = compose(s.gc.inverse(), s.ga);
  return stats_from_products(s.degree(), p1, p2, p3);
}

SurfaceStats surface_stats(const EngineSurface& s) {
  s.validate();
  return stats_from_products(s.degree(), s.g, s.u, compose(s.u, s.g));
}

std::vector<std::vector<int>> incidence_matrix(const EngineSurface& s) {
  s.validate();
  const int n = s.degree();
  const Permutation w = compose(s.u, s.g);
  const Permutation gi = s.g.inverse();
  auto cycle_index = [n](const Permutation& p) {
    std::vector<int> idx(static_cast<size_t>(n));
    int c = 0;
    for (const auto& cyc : p.cycles()) {
      for (int m : cyc) idx[static_cast<size_t>(m - 1)] = c;
      ++c;
    }
    return idx;
  };
  const auto brow = cycle_index(s.u);
  const auto ccol = cycle_index(w);
  std::vector<std::vector<int>> m(
      static_cast<size_t>(s.u.cycle_count()),
      std::vector<int>(static_cast<size_t>(w.cycle_count()), 0));
  for (int t = 1; t <= n; ++t)
    ++m[static_cast<size_t>(brow[static_cast<size_t>(t - 1)])]
      [static_cast<size_t>(ccol[static_cast<size_t>(gi(t) - 1)])];
  return m;
}

namespace {

CheckerSurface relabel(const CheckerSurface& s, const Permutation& sigma_inv,
                       const Permutation& tau) {
  return CheckerSurface{compose(tau, compose(s.ga, sigma_inv)),
                        compose(tau, compose(s.gb, sigma_inv)),
                        compose(tau, compose(s.gc, sigma_inv))};
}

}  // namespace

CheckerSurface canonical_form(const CheckerSurface& s, int guard) {
  s.validate();
  check_guard(s.degree(), guard, "canonical_form");
  CheckerSurface best = s;
  for_each_permutation(s.degree(), [&](const Permutation& sigma) {
    const Permutation sigma_inv = sigma.inverse();
    for_each_permutation(s.degree(), [&](const Permutation& tau) {
      CheckerSurface cand = relabel(s, sigma_inv, tau);
      if (cand < best) best = cand;
    });
  });
  return best;
}

bool isomorphic(const CheckerSurface& a, const CheckerSurface& b, int guard) {
  if (a.degree() != b.degree()) return false;
  return canonical_form(a, guard) == canonical_form(b, guard);
}

long relabeling_stabilizer_order(const CheckerSurface& s, int guard) {
  s.validate();
  check_guard(s.degree(), guard, "relabeling_stabilizer_order");
  long count = 0;
  for_each_permutation(s.degree(), [&](const Permutation& sigma) {
    const Permutation sigma_inv = sigma.inverse();
    for_each_permutation(s.degree(), [&](const Permutation& tau) {
      if (relabel(s, sigma_inv, tau) == s) ++count;
    });
  });
  return count;
}

AutomorphismOrders automorphisms(const EngineSurface& s) {
  s.validate();
  const int n = s.degree();
  std::vector<int> ucycle(static_cast<size_t>(n));
  {
    int c = 0;
    for (const auto& cyc : s.u.cycles()) {
      for (int m : cyc) ucycle[static_cast<size_t>(m - 1)] = c;
      ++c;
    }
  }
  AutomorphismOrders out;
  for_each_permutation(n, [&](const Permutation& sigma) {
    if (!(compose(sigma, s.g) == compose(s.g, sigma))) return;
    if (!(compose(sigma, s.u) == compose(s.u, sigma))) return;
    ++out.full_order;
    for (int i = 1; i <= n; ++i)
      if (ucycle[static_cast<size_t>(sigma(i) - 1)] !=
          ucycle[static_cast<size_t>(i - 1)])
        return;
    ++out.b_fixing_order;
  });
  return out;
}

namespace {

std::vector<Permutation> centralizer(const Permutation& g) {
  std::vector<Permutation> z;
  for_each_permutation(g.degree(), [&](const Permutation& sigma) {
    if (compose(sigma, g) == compose(g, sigma)) z.push_back(sigma);
  });
  return z;
}

long centralizer_order_from_type(const Permutation& p) {
  std::map<int, int> mult;
  for (int len : p.cycle_type()) ++mult[len];
  long order = 1;
  for (const auto& [len, c] : mult) {
    for (int i = 0; i < c; ++i) order *= len;
    for (int i = 2; i <= c; ++i) order *= i;
  }
  return order;
}

}  // namespace

std::vector<GammaClass> enumerate_gamma(const std::vector<int>& cycle_lengths,
                                        int guard) {
  const Permutation g0 = cycles_representative(cycle_lengths);
  const int n = g0.degree();
  check_guard(n, guard, "enumerate_gamma");
  const auto z = centralizer(g0);
  std::map<Permutation, long> counts;
  for_each_permutation(n, [&](const Permutation& u) {
    Permutation best = u;
    for (const auto& sigma : z) {
      Permutation cand = compose(sigma, compose(u, sigma.inverse()));
      if (cand < best) best = cand;
    }
    ++counts[best];
  });
  std::vector<GammaClass> out;
  for (const auto& [ucan, count] : counts) {
    GammaClass cls;
    cls.rep = EngineSurface{g0, ucan};
    cls.labeled_count = count;
    cls.aut = automorphisms(cls.rep);
    cls.incidence = incidence_matrix(cls.rep);
    out.push_back(std::move(cls));
  }
  return out;
}

long gamma_class_count_burnside(const std::vector<int>& cycle_lengths,
                                int guard) {
  const Permutation g0 = cycles_representative(cycle_lengths);
  check_guard(g0.degree(), guard, "gamma_class_count_burnside");
  const auto z = centralizer(g0);
  // Fixed points of conjugation by sigma on S_n form the centralizer of
  // sigma, whose order depends only on the cycle type.
  long total = 0;
  for (const auto& sigma : z) total += centralizer_order_from_type(sigma);
  return total / static_cast<long>(z.size());
}

std::pair<Permutation, Permutation> ribbon_boundary(const Permutation& g,
                                                    const Permutation& h) {
  if (g.degree() != h.degree())
    throw std::invalid_argument("ribbon_boundary: degree mismatch");
  const int n = g.degree();
  // Darts (i, side); rotation at A-vertices follows g, at B-vertices h.
  // Face permutation phi = rotation o involution:
  //   phi(i, A) = (h(i), B),  phi(i, B) = (g(i), A).
  // Successive A-darts along a face realize g o h, successive B-darts h o g.
  std::vector<int> next_a(static_cast<size_t>(n)), next_b(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    next_a[static_cast<size_t>(i - 1)] = g(h(i));
    next_b[static_cast<size_t>(i - 1)] = h(g(i));
  }
  return {Permutation(std::move(next_a)), Permutation(std::move(next_b))};
}

std::vector<FramedStructure> enumerate_framed(const Permutation& g,
                                              const Permutation& tau, int n,
                                              int guard) {
  const int N = g.degree();
  if (tau.degree() != n || n > N)
    throw std::invalid_argument("enumerate_framed: inconsistent degrees");
  check_guard(N, guard, "enumerate_framed");
  const Permutation gi = g.inverse();
  std::vector<FramedStructure> out;
  for_each_permutation(N, [&](const Permutation& up) {
    if (!(project(up, n) == tau)) return;
    FramedStructure fs;
    fs.u_prime = up;
    const Permutation w = compose(up, g);
    fs.rho = project(w, n);
    fs.rn_exponent = w.cycle_count() - up.cycle_count();

    // Row of a point: the arc of the previous old guest in u'-order, or a
    // free u'-cycle when the cycle has no old guest.
    const Permutation upi = up.inverse();
    const Permutation wi = w.inverse();
    std::vector<int> row_of(static_cast<size_t>(N), -1);
    std::map<int, int> free_row_by_min;
    for (const auto& cyc : up.cycles()) {
      if (cyc[0] <= n) continue;
      free_row_by_min[cyc[0]] = n + static_cast<int>(fs.free_rows.size());
      fs.free_rows.push_back(cyc);
    }
    fs.m_counts_per_arc.assign(static_cast<size_t>(n), 0);
    for (int m = 1; m <= N; ++m) {
      if (m <= n) {
        row_of[static_cast<size_t>(m - 1)] = m - 1;
        continue;
      }
      int wpt = m;
      int hops = 0;
      while (wpt > n && hops <= N) {
        wpt = upi(wpt);
        ++hops;
        if (wpt == m) break;  // free cycle
      }
      if (wpt <= n) {
        row_of[static_cast<size_t>(m - 1)] = wpt - 1;
        ++fs.m_counts_per_arc[static_cast<size_t>(wpt - 1)];
      } else {
        // locate the free cycle's minimum
        int mn = m, c = up(m);
        while (c != m) {
          mn = std::min(mn, c);
          c = up(c);
        }
        row_of[static_cast<size_t>(m - 1)] = free_row_by_min.at(mn);
      }
    }

    std::map<int, int> psi_col_by_min;
    for (const auto& cyc : w.cycles()) {
      if (cyc[0] <= n) continue;
      psi_col_by_min[cyc[0]] = n + static_cast<int>(fs.psi_cycles.size());
      fs.psi_cycles.push_back(cyc);
    }
    auto col_of = [&](int m) {
      int j = gi(m);
      int hops = 0;
      int start = j;
      while (j > n && hops <= N) {
        j = wi(j);
        ++hops;
        if (j == start) break;
      }
      if (j <= n) return j - 1;
      int mn = start, c = w(start);
      while (c != start) {
        mn = std::min(mn, c);
        c = w(c);
      }
      return psi_col_by_min.at(mn);
    };

    const size_t rows = static_cast<size_t>(n) + fs.free_rows.size();
    const size_t cols = static_cast<size_t>(n) + fs.psi_cycles.size();
    fs.incidence.assign(rows, std::vector<int>(cols, 0));
    for (int m = 1; m <= N; ++m)
      ++fs.incidence[static_cast<size_t>(row_of[static_cast<size_t>(m - 1)])]
        [static_cast<size_t>(col_of(m))];

    fs.aut = automorphisms(EngineSurface{g, up});
    out.push_back(std::move(fs));
  });
  return out;
}

namespace {

std::string dessin_dot(const Permutation& a, const Permutation& b) {
  const int n = a.degree();
  auto index_of = [n](const Permutation& p) {
    std::vector<int> idx(static_cast<size_t>(n));
    int c = 0;
    for (const auto& cyc : p.cycles()) {
      for (int m : cyc) idx[static_cast<size_t>(m - 1)] = c;
      ++c;
    }
    return std::pair<std::vector<int>, int>{idx, c};
  };
  auto [aidx, na] = index_of(a);
  auto [bidx, nb] = index_of(b);
  std::ostringstream os;
  os << "graph dessin {\n";
  for (int i = 0; i < na; ++i)
    os << "  A" << i << " [shape=circle];\n";
  for (int i = 0; i < nb; ++i)
    os << "  B" << i << " [shape=point];\n";
  for (int i = 1; i <= n; ++i)
    os << "  A" << aidx[static_cast<size_t>(i - 1)] << " -- B"
       << bidx[static_cast<size_t>(i - 1)] << " [label=\"" << i << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace

std::string to_dessin_dot(const EngineSurface& s) {
  s.validate();
  return dessin_dot(s.g, s.u);
}

std::string to_dessin_dot(const CheckerSurface& s) {
  s.validate();
  return dessin_dot(compose(s.ga.inverse(), s.gb),
                    compose(s.gb.inverse(), s.gc));
}

}  // namespace crpchips
