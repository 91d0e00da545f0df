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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "crpchips/chip.hpp"
#include "crpchips/rng.hpp"

using namespace crpchips;

namespace {

Permutation random_permutation(int degree, std::mt19937_64& rng) {
  std::vector<int> img(static_cast<size_t>(degree));
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

// Random permutation fixing 1..fixed.
Permutation random_fixing(int degree, int fixed, std::mt19937_64& rng) {
  std::vector<int> tail(static_cast<size_t>(degree - fixed));
  std::iota(tail.begin(), tail.end(), fixed + 1);
  std::shuffle(tail.begin(), tail.end(), rng);
  std::vector<int> img(static_cast<size_t>(degree));
  std::iota(img.begin(), img.end(), 1);
  for (int i = fixed; i < degree; ++i)
    img[static_cast<size_t>(i)] = tail[static_cast<size_t>(i - fixed)];
  return Permutation(std::move(img));
}

Chip random_chip(int dst, int src, std::mt19937_64& rng) {
  const int deg = std::max({dst, src, 1}) + 3;
  Chip c = chip_from_pair(random_permutation(deg, rng),
                          random_permutation(deg, rng), dst, src);
  std::uniform_int_distribution<int> extra(0, 2);
  for (int i = extra(rng); i > 0; --i) c.circles.push_back(1 + extra(rng) + 1);
  c.canonicalize();
  return c;
}

}  // namespace

TEST_CASE("identity and circle products") {
  auto rng = make_rng(Seed{1});
  for (int trial = 0; trial < 50; ++trial) {
    const Chip c = random_chip(3, 4, rng);
    CHECK(multiply(chip_identity(3), c) == c);
    CHECK(multiply(c, chip_identity(4)) == c);
  }
  CHECK(multiply(center_element({2}), center_element({3})) ==
        center_element({2, 3}));
}

TEST_CASE("lambda chips collapse to the empty chip") {
  for (int n = 1; n <= 5; ++n) {
    const Chip lam = lambda_chip(n, 0);  // in S(0, n)
    const Chip prod = multiply(lam, involute(lam));
    CHECK(prod == chip_identity(0));
  }
  CHECK(lambda_chip(4, 4) == chip_identity(4));
  const Chip l63 = lambda_chip(6, 3);
  int horizontal_top = 0, vertical = 0;
  for (const auto& a : l63.arcs) {
    if (a.kind == ArcKind::kHT) {
      ++horizontal_top;
      CHECK(a.half_units == 1);
    }
    if (a.kind == ArcKind::kVL || a.kind == ArcKind::kVR) {
      ++vertical;
      CHECK(a.half_units == 0);
    }
  }
  CHECK(horizontal_top == 3);
  CHECK(vertical == 6);
  int bottom = 0;
  for (const auto& a : involute(l63).arcs)
    if (a.kind == ArcKind::kHB) ++bottom;
  CHECK(bottom == 3);
}

TEST_CASE("associativity on random composable triples") {
  auto rng = make_rng(Seed{2});
  std::uniform_int_distribution<int> size(0, 5);
  for (int trial = 0; trial < 1000; ++trial) {
    const int a = size(rng), b = size(rng), c = size(rng), d = size(rng);
    const Chip f = random_chip(a, b, rng);
    const Chip g = random_chip(b, c, rng);
    const Chip h = random_chip(c, d, rng);
    CHECK(multiply(multiply(f, g), h) == multiply(f, multiply(g, h)));
  }
}

TEST_CASE("involution is an anti-homomorphism") {
  auto rng = make_rng(Seed{3});
  std::uniform_int_distribution<int> size(0, 5);
  for (int trial = 0; trial < 300; ++trial) {
    const int a = size(rng), b = size(rng), c = size(rng);
    const Chip f = random_chip(a, b, rng);
    const Chip g = random_chip(b, c, rng);
    CHECK(involute(involute(f)) == f);
    CHECK(involute(multiply(f, g)) == multiply(involute(g), involute(f)));
  }
}

TEST_CASE("theta elements") {
  CHECK(theta_element(0, 1) == Permutation({2, 1}));
  for (int beta = 0; beta <= 4; ++beta)
    for (int j = 1; j <= 4; ++j) {
      const Permutation th = theta_element(beta, j);
      CHECK(th.degree() == beta + 2 * j);
      for (int i = 1; i <= beta; ++i) CHECK(th(i) == i);
      CHECK(compose(th, th) == Permutation::identity(beta + 2 * j));
    }
}

TEST_CASE("chips from pairs") {
  const Permutation e1 = Permutation::identity(1);
  CHECK(chip_from_pair(e1, e1, 0, 0) == chip_identity(0));
  CHECK(chip_from_pair(Permutation::identity(2), Permutation({2, 1}), 0, 0) ==
        center_element({2}));
  for (int k = 2; k <= 6; ++k) {
    std::vector<std::vector<int>> cyc{std::vector<int>(k)};
    std::iota(cyc[0].begin(), cyc[0].end(), 1);
    CHECK(chip_from_pair(Permutation::identity(k),
                         Permutation::from_cycles(k, cyc), 0, 0) ==
          center_element({k}));
  }
}

TEST_CASE("chip_from_pair is constant on double cosets") {
  auto rng = make_rng(Seed{4});
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> size(0, 4);
    const int alpha = size(rng), beta = size(rng);
    const int deg = 8;
    const Permutation g1 = random_permutation(deg, rng);
    const Permutation g2 = random_permutation(deg, rng);
    const Chip base = chip_from_pair(g1, g2, alpha, beta);
    const Permutation l = random_fixing(deg, alpha, rng);
    const Permutation r = random_fixing(deg, beta, rng);
    CHECK(chip_from_pair(compose(l, compose(g1, r)),
                         compose(l, compose(g2, r)), alpha, beta) == base);
  }
}

TEST_CASE("theta stabilization reproduces the chip product") {
  auto rng = make_rng(Seed{5});
  std::uniform_int_distribution<int> size(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int alpha = size(rng), beta = size(rng), gamma = size(rng);
    const int deg = 6;
    const Permutation g1 = random_permutation(deg, rng);
    const Permutation g2 = random_permutation(deg, rng);
    const Permutation h1 = random_permutation(deg, rng);
    const Permutation h2 = random_permutation(deg, rng);
    const Chip product = multiply(chip_from_pair(g1, g2, alpha, beta),
                                  chip_from_pair(h1, h2, beta, gamma));
    // The sequence stabilizes once beta + j clears both supports.
    const int j0 = deg - beta;
    Chip prev;
    bool stable_seen = false;
    for (int j = 1; j <= j0 + 3; ++j) {
      const Permutation th = theta_element(beta, j);
      const int big = std::max(deg, beta + 2 * j);
      const Chip cur = chip_from_pair(
          compose(g1.extend(big), compose(th.extend(big), h1.extend(big))),
          compose(g2.extend(big), compose(th.extend(big), h2.extend(big))),
          alpha, gamma);
      if (j > j0) {
        if (stable_seen) CHECK(cur == prev);
        stable_seen = true;
        CHECK(cur == product);
      }
      prev = cur;
    }
  }
}

TEST_CASE("center elements commute with everything") {
  auto rng = make_rng(Seed{6});
  std::uniform_int_distribution<int> size(0, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const int alpha = size(rng), beta = size(rng);
    const Chip c = random_chip(alpha, beta, rng);
    const Chip left = multiply(center_element({2}, alpha), c);
    const Chip right = multiply(c, center_element({2}, beta));
    CHECK(left == right);
  }
  CHECK(center_element({}) == chip_identity(0));
}

TEST_CASE("cycles representatives") {
  CHECK(cycles_representative({2}) == Permutation({2, 1}));
  CHECK(cycles_representative({2, 3}) ==
        Permutation::from_cycles(5, {{1, 2}, {3, 4, 5}}));
  for (const std::vector<int>& ks :
       {std::vector<int>{2}, {3}, {2, 2}, {2, 3}}) {
    const Permutation g = cycles_representative(ks);
    const Chip c = chip_from_pair(Permutation::identity(g.degree()), g, 0, 0);
    Chip expect = center_element(ks);
    CHECK(c == expect);
  }
}
