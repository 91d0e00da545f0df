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

#ifndef CRPCHIPS_RNG_HPP
#define CRPCHIPS_RNG_HPP

#include <cstdint>
#include <random>

namespace crpchips {

struct Seed {
  std::uint64_t value = 0;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Seed-splitting rule for parallel Monte Carlo: task i of a run with master
// seed s draws from mt19937_64(splitmix64(s ^ splitmix64(i + 1))).  Results
// are therefore independent of the number of workers.
inline Seed derive_seed(Seed master, std::uint64_t task_index) {
  return Seed{splitmix64(master.value ^ splitmix64(task_index + 1))};
}

inline std::mt19937_64 make_rng(Seed seed) {
  return std::mt19937_64(splitmix64(seed.value));
}

}  // namespace crpchips

#endif  // CRPCHIPS_RNG_HPP
