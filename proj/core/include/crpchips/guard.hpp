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

#ifndef CRPCHIPS_GUARD_HPP
#define CRPCHIPS_GUARD_HPP

#include <stdexcept>
#include <string>

namespace crpchips {

// Thrown when a brute-force enumeration would exceed its size guard.
// The CLI translates this into exit code 3.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

inline void check_guard(long size, long limit, const std::string& what) {
  if (size > limit)
    throw GuardError(what + ": size " + std::to_string(size) +
                     " exceeds guard " + std::to_string(limit) +
                     " (pass a larger guard / --unsafe-guard to override)");
}

}  // namespace crpchips

#endif  // CRPCHIPS_GUARD_HPP
