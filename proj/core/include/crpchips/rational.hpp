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

#ifndef CRPCHIPS_RATIONAL_HPP
#define CRPCHIPS_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace crpchips {

// Exact arithmetic for Ewens masses and pushforward identities.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rational_pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  Rational b = exp > 0 ? base : Rational(1) / base;
  long e = exp > 0 ? exp : -exp;
  Rational out(1);
  while (e > 0) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

}  // namespace crpchips

#endif  // CRPCHIPS_RATIONAL_HPP
