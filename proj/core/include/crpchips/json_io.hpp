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

#ifndef CRPCHIPS_JSON_IO_HPP
#define CRPCHIPS_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "crpchips/checker.hpp"
#include "crpchips/chip.hpp"
#include "crpchips/dirichlet.hpp"
#include "crpchips/mixture.hpp"
#include "crpchips/permutation.hpp"
#include "crpchips/restaurant.hpp"
#include "crpchips/simulate.hpp"

namespace crpchips {

using Json = nlohmann::json;

// Reals serialize as decimal strings with 17 significant digits; rationals
// as {"num","den"}.
Json real_to_json(double x);
double real_from_json(const Json& j);
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Permutation& p);          // array of images
Permutation permutation_from_json(const Json& j);

Json to_json(const Restaurant& r);
Restaurant restaurant_from_json(const Json& j);
Json to_json(const OccupiedRestaurant& occ);
OccupiedRestaurant occupied_from_json(const Json& j);

Json to_json(const Chip& c);
Chip chip_from_json(const Json& j);

Json to_json(const CheckerSurface& s);
CheckerSurface surface_from_json(const Json& j);

Json to_json(const DirichletSpec& s);
DirichletSpec dirichlet_from_json(const Json& j);
Json to_json(const ConvolutionSpec& s);
ConvolutionSpec convolution_from_json(const Json& j);

Json to_json(const MixtureMeasure& m);
MixtureMeasure mixture_from_json(const Json& j);

Json to_json(const SimSummary& s);
Json to_json(const CompareReport& r);

}  // namespace crpchips

#endif  // CRPCHIPS_JSON_IO_HPP
