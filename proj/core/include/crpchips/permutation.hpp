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

#ifndef CRPCHIPS_PERMUTATION_HPP
#define CRPCHIPS_PERMUTATION_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crpchips {

// A finite permutation of {1, ..., n} with an explicit degree.  Points are
// 1-indexed throughout the library.
class Permutation {
 public:
  Permutation() = default;

  // images[i-1] is the image of i.  Throws std::invalid_argument unless the
  // vector is a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>>& cycles);
  static Permutation transposition(int degree, int a, int b);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int i) const;
  int operator()(int i) const { return apply(i); }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;

  // Disjoint-cycle decomposition.  Cycles are listed with their smallest
  // element first, ordered by that element; fixed points appear as 1-cycles.
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const;

  // Multiset of cycle lengths, sorted descending.
  std::vector<int> cycle_type() const;

  // Trivial extension to a larger degree (new points are fixed).
  Permutation extend(int degree) const;

  // Smallest m such that all points > m are fixed.
  int support_bound() const;

  bool operator==(const Permutation& other) const {
    return images_ == other.images_;
  }
  bool operator<(const Permutation& other) const {
    return images_ < other.images_;
  }

  std::string to_string() const;

 private:
  std::vector<int> images_;
};

// compose(a, b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);

// The canonical projection: delete all symbols > m from the disjoint-cycle
// expression of p.  Requires 1 <= m <= degree.
Permutation project(const Permutation& p, int m);

// The one-step map-based definition of the projection (cases on whether n is
// fixed).  Agrees with project(p, n-1); kept separate as a cross-check.
Permutation project_map_based(const Permutation& p);

// Calls fn for every element of S_n in lexicographic order of image vectors.
void for_each_permutation(int degree,
                          const std::function<void(const Permutation&)>& fn);

}  // namespace crpchips

#endif  // CRPCHIPS_PERMUTATION_HPP
