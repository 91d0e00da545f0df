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

#include "crpchips/ewens.hpp"
#include "crpchips/guard.hpp"
#include "crpchips/permutation.hpp"

using namespace crpchips;

TEST_CASE("cycle decomposition matches the map view") {
  const Permutation p({3, 2, 4, 1, 5});
  const std::vector<std::vector<int>> expected{{1, 3, 4}, {2}, {5}};
  CHECK(p.cycles() == expected);

  const Permutation id = Permutation::identity(4);
  CHECK(id.cycles().size() == 4);

  const Permutation t({2, 1});
  CHECK(t.cycles() == std::vector<std::vector<int>>{{1, 2}});

  // Recomposing the cycles reproduces the images.
  for (int n = 1; n <= 5; ++n)
    for_each_permutation(n, [&](const Permutation& g) {
      CHECK(Permutation::from_cycles(n, g.cycles()) == g);
    });
}

TEST_CASE("projection by cycle deletion") {
  CHECK(project(Permutation({3, 2, 4, 1, 5}), 4) == Permutation({3, 2, 4, 1}));
  CHECK(project(Permutation({3, 2, 5, 1, 4}), 4) == Permutation({3, 2, 4, 1}));
  CHECK(project(Permutation::identity(6), 3) == Permutation::identity(3));
  CHECK_THROWS_AS(project(Permutation::identity(3), 0),
                  std::invalid_argument);
}

TEST_CASE("tower property and map-based agreement") {
  for (int n = 2; n <= 6; ++n)
    for_each_permutation(n, [&](const Permutation& g) {
      CHECK(project_map_based(g) == project(g, n - 1));
      for (int m = 1; m < n; ++m)
        CHECK(project(project(g, n - 1), std::min(m, n - 1)) ==
              project(g, std::min(m, n - 1)));
    });
}

TEST_CASE("ewens masses") {
  const EwensParams z1{Rational(1)};
  for_each_permutation(4, [&](const Permutation& g) {
    CHECK(ewens_mass(g, z1) == Rational(1, 24));
  });
  CHECK(ewens_mass(Permutation::identity(2), EwensParams{Rational(2)}) ==
        Rational(2, 3));
  for (const Rational& z :
       {Rational(1, 2), Rational(1), Rational(2), Rational(7, 3)}) {
    for (int n = 2; n <= 7; ++n) {
      Rational total = 0;
      for_each_permutation(
          n, [&](const Permutation& g) { total += ewens_mass(g, {z}); });
      CHECK(total == Rational(1));
    }
  }
}

TEST_CASE("rn exponent") {
  const Permutation e2 = Permutation::identity(2);
  CHECK(rn_exponent_finite(e2, e2, Permutation({2, 1})) == 0);
  CHECK(rn_exponent_finite(e2, Permutation({2, 1}), e2) == -1);
  for_each_permutation(4, [&](const Permutation& g) {
    for_each_permutation(4, [&](const Permutation& u) {
      CHECK(rn_exponent_finite(g, g, u) == 0);
    });
  });
}

TEST_CASE("ewens transformation identity") {
  const EwensParams z{Rational(2, 3)};
  for (int n = 2; n <= 4; ++n)
    for_each_permutation(n, [&](const Permutation& h1) {
      for_each_permutation(n, [&](const Permutation& h2) {
        for_each_permutation(n, [&](const Permutation& u) {
          const Permutation v = compose(h1.inverse(), compose(u, h2));
          const int e = rn_exponent_finite(h1, h2, u);
          Rational factor = 1;
          for (int i = 0; i < std::abs(e); ++i) factor *= z.z;
          if (e >= 0)
            CHECK(ewens_mass(v, z) == factor * ewens_mass(u, z));
          else
            CHECK(factor * ewens_mass(v, z) == ewens_mass(u, z));
        });
      });
    });
}

TEST_CASE("pushforward check and negative control") {
  CHECK(pushforward_check(3, {Rational(1)}).ok);
  CHECK(pushforward_check(6, {Rational(2)}).ok);
  CHECK_THROWS_AS(pushforward_check(9, {Rational(1)}), GuardError);

  const EwensParams z{Rational(1)};
  const Permutation a = Permutation::identity(3);
  const Permutation b({2, 1, 3});
  auto perturbed = [&](const Permutation& g) {
    Rational m = ewens_mass(g, z);
    if (g == a) m += Rational(1, 100);
    if (g == b) m -= Rational(1, 100);
    return m;
  };
  const auto report = pushforward_check_measure(3, z, perturbed);
  CHECK_FALSE(report.ok);
  CHECK_FALSE(report.detail.empty());
}
