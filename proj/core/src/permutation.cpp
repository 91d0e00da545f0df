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

#include "crpchips/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace crpchips {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)])
      throw std::invalid_argument("Permutation: images are not a bijection of {1..n}");
    seen[static_cast<size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree < 0) throw std::invalid_argument("Permutation: negative degree");
  std::vector<int> im(static_cast<size_t>(degree));
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int degree,
                                     const std::vector<std::vector<int>>& cycles) {
  std::vector<int> im(static_cast<size_t>(degree));
  std::iota(im.begin(), im.end(), 1);
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (from < 1 || from > degree)
        throw std::invalid_argument("from_cycles: point out of range");
      im[static_cast<size_t>(from - 1)] = to;
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int degree, int a, int b) {
  return from_cycles(degree, {{a, b}});
}

int Permutation::apply(int i) const {
  if (i < 1 || i > degree()) throw std::out_of_range("Permutation::apply");
  return images_[static_cast<size_t>(i - 1)];
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 1; i <= degree(); ++i) im[static_cast<size_t>(apply(i) - 1)] = i;
  return Permutation(std::move(im));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> done(images_.size() + 1, 0);
  for (int start = 1; start <= degree(); ++start) {
    if (done[static_cast<size_t>(start)]) continue;
    std::vector<int> cyc;
    int cur = start;
    do {
      cyc.push_back(cur);
      done[static_cast<size_t>(cur)] = 1;
      cur = apply(cur);
    } while (cur != start);
    out.push_back(std::move(cyc));
  }
  return out;
}

int Permutation::cycle_count() const {
  int count = 0;
  std::vector<char> done(images_.size() + 1, 0);
  for (int start = 1; start <= degree(); ++start) {
    if (done[static_cast<size_t>(start)]) continue;
    ++count;
    int cur = start;
    do {
      done[static_cast<size_t>(cur)] = 1;
      cur = apply(cur);
    } while (cur != start);
  }
  return count;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> type;
  for (const auto& c : cycles()) type.push_back(static_cast<int>(c.size()));
  std::sort(type.rbegin(), type.rend());
  return type;
}

Permutation Permutation::extend(int new_degree) const {
  if (new_degree < degree())
    throw std::invalid_argument("Permutation::extend: smaller degree");
  std::vector<int> im(static_cast<size_t>(new_degree));
  std::iota(im.begin(), im.end(), 1);
  std::copy(images_.begin(), images_.end(), im.begin());
  return Permutation(std::move(im));
}

int Permutation::support_bound() const {
  int m = degree();
  while (m > 0 && apply(m) == m) --m;
  return m;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 1; i <= degree(); ++i) {
    if (i > 1) os << ",";
    os << apply(i);
  }
  os << "]";
  return os.str();
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> im(static_cast<size_t>(a.degree()));
  for (int i = 1; i <= a.degree(); ++i)
    im[static_cast<size_t>(i - 1)] = a.apply(b.apply(i));
  return Permutation(std::move(im));
}

Permutation project(const Permutation& p, int m) {
  if (m < 1 || m > p.degree())
    throw std::invalid_argument("project: target degree out of range");
  // Delete symbols > m from each cycle; surviving symbols keep their cyclic
  // order.
  std::vector<int> im(static_cast<size_t>(m));
  std::iota(im.begin(), im.end(), 1);
  for (const auto& cyc : p.cycles()) {
    std::vector<int> kept;
    for (int v : cyc)
      if (v <= m) kept.push_back(v);
    for (size_t i = 0; i < kept.size(); ++i)
      im[static_cast<size_t>(kept[i] - 1)] = kept[(i + 1) % kept.size()];
  }
  return Permutation(std::move(im));
}

Permutation project_map_based(const Permutation& p) {
  const int n = p.degree();
  if (n < 2) throw std::invalid_argument("project_map_based: degree < 2");
  std::vector<int> im(static_cast<size_t>(n - 1));
  if (p.apply(n) == n) {
    for (int j = 1; j < n; ++j) im[static_cast<size_t>(j - 1)] = p.apply(j);
  } else {
    const int alpha = p.apply(n);
    const int beta = p.inverse().apply(n);
    for (int j = 1; j < n; ++j)
      im[static_cast<size_t>(j - 1)] = (j == beta) ? alpha : p.apply(j);
  }
  return Permutation(std::move(im));
}

void for_each_permutation(int degree,
                          const std::function<void(const Permutation&)>& fn) {
  std::vector<int> im(static_cast<size_t>(degree));
  std::iota(im.begin(), im.end(), 1);
  do {
    fn(Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));
}

}  // namespace crpchips
