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

#include "crpchips/json_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace crpchips {

Json real_to_json(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return Json(std::string(buf));
}

double real_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return std::stod(j.get<std::string>());
  throw std::invalid_argument("real_from_json: expected number or string");
}

Json rational_to_json(const Rational& r) {
  return Json{{"num", boost::multiprecision::numerator(r).str()},
              {"den", boost::multiprecision::denominator(r).str()}};
}

Rational rational_from_json(const Json& j) {
  const BigInt num(j.at("num").get<std::string>());
  const BigInt den(j.at("den").get<std::string>());
  return Rational(num, den);
}

Json to_json(const Permutation& p) {
  Json arr = Json::array();
  for (int i = 1; i <= p.degree(); ++i) arr.push_back(p(i));
  return arr;
}

Permutation permutation_from_json(const Json& j) {
  std::vector<int> img;
  for (const auto& v : j) img.push_back(v.get<int>());
  return Permutation(std::move(img));
}

Json to_json(const Restaurant& r) {
  Json lengths = Json::array();
  for (double l : r.lengths) lengths.push_back(real_to_json(l));
  return Json{{"z", rational_to_json(r.z)},
              {"lengths", lengths},
              {"tail_mass", real_to_json(r.tail_mass)}};
}

Restaurant restaurant_from_json(const Json& j) {
  Restaurant r;
  r.z = rational_from_json(j.at("z"));
  for (const auto& v : j.at("lengths")) r.lengths.push_back(real_from_json(v));
  r.tail_mass = real_from_json(j.at("tail_mass"));
  r.validate();
  return r;
}

Json to_json(const OccupiedRestaurant& occ) {
  Json j = Json{{"z", rational_to_json(occ.z)},
                {"tail_mass", real_to_json(occ.tail_mass)},
                {"placement_error", real_to_json(occ.placement_error)},
                {"next_id", occ.next_id}};
  Json tables = Json::array();
  for (const auto& t : occ.tables)
    tables.push_back(Json{{"id", t.id}, {"length", real_to_json(t.length)}});
  j["tables"] = tables;
  Json guests = Json::array();
  for (const auto& g : occ.guests)
    guests.push_back(Json{{"table", g.table}, {"pos", real_to_json(g.pos)}});
  j["guests"] = guests;
  return j;
}

OccupiedRestaurant occupied_from_json(const Json& j) {
  OccupiedRestaurant occ;
  occ.z = rational_from_json(j.at("z"));
  occ.tail_mass = real_from_json(j.at("tail_mass"));
  if (j.contains("placement_error"))
    occ.placement_error = real_from_json(j.at("placement_error"));
  for (const auto& t : j.at("tables"))
    occ.tables.push_back(
        Table{t.at("id").get<TableId>(), real_from_json(t.at("length"))});
  for (const auto& g : j.at("guests"))
    occ.guests.push_back(
        GuestSeat{g.at("table").get<TableId>(), real_from_json(g.at("pos"))});
  occ.next_id = j.contains("next_id") ? j.at("next_id").get<TableId>() : 1;
  for (const auto& t : occ.tables) occ.next_id = std::max(occ.next_id, t.id + 1);
  occ.validate();
  return occ;
}

namespace {

std::string kind_name(ArcKind k) {
  switch (k) {
    case ArcKind::kVL: return "vl";
    case ArcKind::kVR: return "vr";
    case ArcKind::kHT: return "ht";
    case ArcKind::kHB: return "hb";
  }
  throw std::logic_error("kind_name: bad arc kind");
}

ArcKind kind_from_name(const std::string& s) {
  if (s == "vl") return ArcKind::kVL;
  if (s == "vr") return ArcKind::kVR;
  if (s == "ht") return ArcKind::kHT;
  if (s == "hb") return ArcKind::kHB;
  throw std::invalid_argument("chip_from_json: bad arc kind " + s);
}

}  // namespace

Json to_json(const Chip& c) {
  Json arcs = Json::array();
  for (const auto& a : c.arcs)
    arcs.push_back(Json{{"kind", kind_name(a.kind)},
                        {"from", a.from},
                        {"to", a.to},
                        {"len", std::to_string(a.half_units) + "/2"}});
  return Json{{"src", c.src},
              {"dst", c.dst},
              {"arcs", arcs},
              {"circles", c.circles}};
}

Chip chip_from_json(const Json& j) {
  Chip c;
  c.src = j.at("src").get<int>();
  c.dst = j.at("dst").get<int>();
  for (const auto& a : j.at("arcs")) {
    ChipArc arc;
    arc.kind = kind_from_name(a.at("kind").get<std::string>());
    arc.from = a.at("from").get<int>();
    arc.to = a.at("to").get<int>();
    const std::string len = a.at("len").get<std::string>();
    const auto slash = len.find('/');
    if (slash == std::string::npos || len.substr(slash) != "/2")
      throw std::invalid_argument("chip_from_json: bad length " + len);
    arc.half_units = std::stoi(len.substr(0, slash));
    c.arcs.push_back(arc);
  }
  for (const auto& v : j.at("circles")) c.circles.push_back(v.get<int>());
  c.canonicalize();
  c.validate();
  return c;
}

Json to_json(const CheckerSurface& s) {
  return Json{{"ga", to_json(s.ga)}, {"gb", to_json(s.gb)},
              {"gc", to_json(s.gc)}};
}

CheckerSurface surface_from_json(const Json& j) {
  CheckerSurface s{permutation_from_json(j.at("ga")),
                   permutation_from_json(j.at("gb")),
                   permutation_from_json(j.at("gc"))};
  s.validate();
  return s;
}

Json to_json(const DirichletSpec& s) {
  return Json{{"k", s.k}, {"ell", real_to_json(s.ell)}};
}

DirichletSpec dirichlet_from_json(const Json& j) {
  DirichletSpec s;
  for (const auto& v : j.at("k")) s.k.push_back(v.get<int>());
  s.ell = real_from_json(j.at("ell"));
  s.validate();
  return s;
}

Json to_json(const ConvolutionSpec& s) {
  Json comps = Json::array();
  for (const auto& c : s.components) comps.push_back(to_json(c));
  return Json{{"convolution", comps}};
}

ConvolutionSpec convolution_from_json(const Json& j) {
  ConvolutionSpec s;
  for (const auto& c : j.at("convolution"))
    s.components.push_back(dirichlet_from_json(c));
  s.validate();
  return s;
}

Json to_json(const MixtureMeasure& m) {
  Json comps = Json::array();
  for (const auto& c : m.components) {
    Json jc{{"weight", real_to_json(c.weight)},
            {"rn_exp", c.rn_exponent},
            {"removed", c.removed},
            {"replacement", to_json(c.replacement)}};
    if (c.rho) jc["rho"] = to_json(*c.rho);
    comps.push_back(jc);
  }
  return Json{{"components", comps},
              {"truncation_error", real_to_json(m.truncation_error)},
              {"fingerprint", m.fingerprint}};
}

MixtureMeasure mixture_from_json(const Json& j) {
  MixtureMeasure m;
  for (const auto& jc : j.at("components")) {
    MixtureComponent c;
    c.weight = real_from_json(jc.at("weight"));
    c.rn_exponent = jc.at("rn_exp").get<int>();
    for (const auto& id : jc.at("removed"))
      c.removed.push_back(id.get<TableId>());
    c.replacement = convolution_from_json(jc.at("replacement"));
    if (jc.contains("rho")) c.rho = permutation_from_json(jc.at("rho"));
    m.components.push_back(std::move(c));
  }
  m.truncation_error = real_from_json(j.at("truncation_error"));
  if (j.contains("fingerprint"))
    m.fingerprint = j.at("fingerprint").get<std::string>();
  return m;
}

Json to_json(const SimSummary& s) {
  Json freq = Json::object();
  for (const auto& [e, c] : s.exponent_freq) freq[std::to_string(e)] = c;
  Json grid = Json::array(), mean = Json::array(), se = Json::array();
  for (double u : s.u_grid) grid.push_back(real_to_json(u));
  for (double v : s.laplace_mean) mean.push_back(real_to_json(v));
  for (double v : s.laplace_se) se.push_back(real_to_json(v));
  return Json{{"samples", s.samples},  {"exponent_freq", freq},
              {"u_grid", grid},        {"laplace_mean", mean},
              {"laplace_se", se},      {"fingerprint", s.fingerprint}};
}

Json to_json(const CompareReport& r) {
  Json grid = Json::array(), diff = Json::array(), se = Json::array();
  for (double u : r.u_grid) grid.push_back(real_to_json(u));
  for (double v : r.laplace_diff) diff.push_back(real_to_json(v));
  for (double v : r.laplace_se) se.push_back(real_to_json(v));
  return Json{{"tv_exponent", real_to_json(r.tv_exponent)},
              {"tv_threshold", real_to_json(r.tv_threshold)},
              {"u_grid", grid},
              {"laplace_diff", diff},
              {"laplace_se", se},
              {"mass", real_to_json(r.mass)},
              {"truncation_error", real_to_json(r.truncation_error)},
              {"pass", r.pass},
              {"detail", r.detail}};
}

}  // namespace crpchips
