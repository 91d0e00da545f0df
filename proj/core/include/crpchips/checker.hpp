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

#ifndef CRPCHIPS_CHECKER_HPP
#define CRPCHIPS_CHECKER_HPP

#include <string>
#include <vector>

#include "crpchips/permutation.hpp"

namespace crpchips {

// A checker surface with n black and n white triangles, glued along edges of
// three colors according to the permutation triple.
struct CheckerSurface {
  Permutation ga, gb, gc;

  int degree() const { return ga.degree(); }
  void validate() const;  // common degree
  friend bool operator==(const CheckerSurface&, const CheckerSurface&) =
      default;
  friend bool operator<(const CheckerSurface& x, const CheckerSurface& y) {
    if (!(x.ga == y.ga)) return x.ga < y.ga;
    if (!(x.gb == y.gb)) return x.gb < y.gb;
    return x.gc < y.gc;
  }
};

// The engine's operational encoding of the surface built from (g, u): the
// A-vertices are the cycles of g, B-vertices the cycles of u, C-vertices the
// cycles of u*g; black triangle m touches the B-vertex of m and the C-vertex
// of g^{-1}(m).
struct EngineSurface {
  Permutation g, u;

  int degree() const { return g.degree(); }
  void validate() const;
  friend bool operator==(const EngineSurface&, const EngineSurface&) = default;
};

// The triple behind an engine surface.
CheckerSurface engine_to_triple(const EngineSurface& s);

struct SurfaceStats {
  std::vector<int> a_orders, b_orders, c_orders;
  int chi = 0;
  int components = 0;
  std::vector<int> chi_per_component;
  std::vector<int> genus_per_component;
};

SurfaceStats surface_stats(const CheckerSurface& s);
SurfaceStats surface_stats(const EngineSurface& s);

// m[beta][gamma] = number of black triangles incident to both B_beta and
// C_gamma.  Rows follow u.cycles(), columns follow compose(u, g).cycles().
std::vector<std::vector<int>> incidence_matrix(const EngineSurface& s);

// Lexicographic minimum of the orbit under simultaneous relabeling
// (ga, gb, gc) -> (t ga s^{-1}, t gb s^{-1}, t gc s^{-1}).
CheckerSurface canonical_form(const CheckerSurface& s, int guard = 6);
bool isomorphic(const CheckerSurface& a, const CheckerSurface& b,
                int guard = 6);
// Order of the stabilizer of the (s, t) relabeling action.
long relabeling_stabilizer_order(const CheckerSurface& s, int guard = 6);

struct AutomorphismOrders {
  long full_order = 0;      // sigma commuting with both g and u
  long b_fixing_order = 0;  // additionally fixing each u-cycle setwise
};

AutomorphismOrders automorphisms(const EngineSurface& s);

struct GammaClass {
  EngineSurface rep;
  long labeled_count = 0;  // permutations u in the conjugation class
  AutomorphismOrders aut;
  std::vector<std::vector<int>> incidence;
};

// Orbit representatives of pairs (g, u) with g of cycle type {k_j} under
// simultaneous conjugation; g is fixed to the consecutive-block
// representative and u runs over centralizer orbits.
std::vector<GammaClass> enumerate_gamma(const std::vector<int>& cycle_lengths,
                                        int guard = 8);

// Independent class count via Burnside's lemma over the centralizer.
long gamma_class_count_burnside(const std::vector<int>& cycle_lengths,
                                int guard = 8);

// Boundary cycles of the bipartite ribbon graph of (g, h): reading one type
// of edge origins along the boundary yields the cycles of hg, the other of
// gh.  Returned as the pair of reconstructed permutations.
std::pair<Permutation, Permutation> ribbon_boundary(const Permutation& g,
                                                    const Permutation& h);

// Framed combinatorial structure for the trivial-left-chip engine: an
// extension u' of tau whose cut-and-glue against g produces rho, together
// with the piece bookkeeping feeding the Dirichlet replacement laws.
struct FramedStructure {
  Permutation u_prime;  // in S_N, projects to tau on 1..n
  Permutation rho;      // projection of u'*g to 1..n
  int rn_exponent = 0;  // [u'*g] - [u']
  // m_counts_per_arc[i-1]: auxiliaries inserted into the arc after guest i.
  std::vector<int> m_counts_per_arc;
  // u'-cycles without old guests, in canonical cycle order (rows beyond the
  // n arcs); consumed by an injective free-table assignment downstream.
  std::vector<std::vector<int>> free_rows;
  // (u'*g)-cycles without old guests (columns beyond the n output arcs).
  std::vector<std::vector<int>> psi_cycles;
  // rows: n arcs then free_rows; cols: n output arcs then psi_cycles.
  std::vector<std::vector<int>> incidence;
  AutomorphismOrders aut;  // of the engine surface (g, u')
};

// Enumerates all u' in S_N with project(u', n) == tau; N = g.degree().
std::vector<FramedStructure> enumerate_framed(const Permutation& g,
                                              const Permutation& tau, int n,
                                              int guard = 8);

// DOT output of the dessin (edges of two colors removed): bipartite graph on
// the A- and B-vertices with one edge per triangle pair.
std::string to_dessin_dot(const EngineSurface& s);
std::string to_dessin_dot(const CheckerSurface& s);

}  // namespace crpchips

#endif  // CRPCHIPS_CHECKER_HPP
