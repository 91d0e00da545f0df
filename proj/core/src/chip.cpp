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

#include "crpchips/chip.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <stdexcept>

namespace crpchips {

namespace {

// Endpoint classes of a chip boundary.
enum Cls { kTL = 0, kTR = 1, kBL = 2, kBR = 3 };

struct Endpoint {
  int cls;
  int idx;
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

// Matching of all boundary endpoints; value is (partner, half_units).
std::map<Endpoint, std::pair<Endpoint, int>> build_matching(const Chip& c) {
  std::map<Endpoint, std::pair<Endpoint, int>> match;
  auto link = [&](Endpoint a, Endpoint b, int h) {
    if (match.count(a) || match.count(b))
      throw std::invalid_argument("Chip: endpoint used twice");
    match[a] = {b, h};
    match[b] = {a, h};
  };
  for (const auto& arc : c.arcs) {
    switch (arc.kind) {
      case ArcKind::kVL:
        link({kTL, arc.from}, {kBL, arc.to}, arc.half_units);
        break;
      case ArcKind::kVR:
        link({kTR, arc.from}, {kBR, arc.to}, arc.half_units);
        break;
      case ArcKind::kHT:
        link({kTL, arc.from}, {kTR, arc.to}, arc.half_units);
        break;
      case ArcKind::kHB:
        link({kBL, arc.from}, {kBR, arc.to}, arc.half_units);
        break;
    }
  }
  return match;
}

}  // namespace

void Chip::canonicalize() {
  std::sort(arcs.begin(), arcs.end());
  std::sort(circles.begin(), circles.end());
}

void Chip::validate() const {
  if (src < 0 || dst < 0) throw std::invalid_argument("Chip: negative size");
  auto match = build_matching(*this);
  if (match.size() != static_cast<size_t>(2 * (src + dst)))
    throw std::invalid_argument("Chip: arcs are not a perfect matching");
  for (int cls : {kTL, kTR})
    for (int i = 1; i <= src; ++i)
      if (!match.count({cls, i}))
        throw std::invalid_argument("Chip: uncovered top endpoint");
  for (int cls : {kBL, kBR})
    for (int j = 1; j <= dst; ++j)
      if (!match.count({cls, j}))
        throw std::invalid_argument("Chip: uncovered bottom endpoint");
  for (const auto& arc : arcs) {
    const bool vertical =
        arc.kind == ArcKind::kVL || arc.kind == ArcKind::kVR;
    if (vertical && (arc.half_units < 0 || arc.half_units % 2 != 0))
      throw std::invalid_argument("Chip: vertical length must be integral");
    if (!vertical && (arc.half_units < 1 || arc.half_units % 2 != 1))
      throw std::invalid_argument(
          "Chip: horizontal length must be a positive half-integer");
  }
  for (int k : circles)
    if (k < 2) throw std::invalid_argument("Chip: circle of length <= 1");
}

std::string Chip::to_string() const {
  std::ostringstream os;
  os << "S(" << dst << "," << src << "){";
  for (const auto& a : arcs) {
    const char* k = a.kind == ArcKind::kVL   ? "vl"
                    : a.kind == ArcKind::kVR ? "vr"
                    : a.kind == ArcKind::kHT ? "ht"
                                             : "hb";
    os << k << a.from << ">" << a.to << "[" << a.half_units << "/2] ";
  }
  os << "|circles:";
  for (int c : circles) os << " " << c;
  os << "}";
  return os.str();
}

Chip chip_identity(int n) {
  Chip c;
  c.src = c.dst = n;
  for (int i = 1; i <= n; ++i) {
    c.arcs.push_back({ArcKind::kVL, i, i, 0});
    c.arcs.push_back({ArcKind::kVR, i, i, 0});
  }
  c.canonicalize();
  return c;
}

Chip multiply(const Chip& f, const Chip& g) {
  if (f.src != g.dst) throw std::invalid_argument("multiply: size mismatch");
  f.validate();
  g.validate();
  auto mf = build_matching(f);
  auto mg = build_matching(g);

  // Node = (which chip, endpoint).  The interface glues f's top pair i to
  // g's bottom pair i; every other endpoint is a boundary endpoint of the
  // product.
  struct Node {
    int chip;
    Endpoint e;
    auto key() const { return std::tie(chip, e.cls, e.idx); }
    bool operator==(const Node& o) const { return key() == o.key(); }
    bool operator<(const Node& o) const { return key() < o.key(); }
  };
  auto interface = [&](const Node& nd) {
    return (nd.chip == 0 && (nd.e.cls == kTL || nd.e.cls == kTR)) ||
           (nd.chip == 1 && (nd.e.cls == kBL || nd.e.cls == kBR));
  };
  auto hop = [&](const Node& nd) -> Node {
    if (nd.chip == 0)
      return {1, {nd.e.cls == kTL ? kBL : kBR, nd.e.idx}};
    return {0, {nd.e.cls == kBL ? kTL : kTR, nd.e.idx}};
  };

  Chip out;
  out.dst = f.dst;
  out.src = g.src;
  std::set<Node> visited;

  // Product role of a boundary node: top endpoints come from g, bottom from f.
  struct Role {
    bool top;
    bool left;
    int idx;
  };
  auto role = [&](const Node& nd) -> Role {
    if (nd.chip == 1) return {true, nd.e.cls == kTL, nd.e.idx};
    return {false, nd.e.cls == kBL, nd.e.idx};
  };
  auto emit_arc = [&](const Node& a, const Node& b, int half) {
    Role ra = role(a), rb = role(b);
    if (ra.top == rb.top) {
      if (ra.left == rb.left)
        throw std::logic_error("multiply: invalid same-side arc");
      const Role& l = ra.left ? ra : rb;
      const Role& r = ra.left ? rb : ra;
      out.arcs.push_back(
          {ra.top ? ArcKind::kHT : ArcKind::kHB, l.idx, r.idx, half});
    } else {
      if (ra.left != rb.left)
        throw std::logic_error("multiply: invalid crossing arc");
      const Role& t = ra.top ? ra : rb;
      const Role& b2 = ra.top ? rb : ra;
      out.arcs.push_back(
          {ra.left ? ArcKind::kVL : ArcKind::kVR, t.idx, b2.idx, half});
    }
  };

  auto walk = [&](Node start) {
    Node cur = start;
    int total = 0;
    while (true) {
      visited.insert(cur);
      const auto& m = cur.chip == 0 ? mf : mg;
      auto [partner, half] = m.at(cur.e);
      Node nxt{cur.chip, partner};
      total += half;
      visited.insert(nxt);
      if (!interface(nxt)) {
        emit_arc(start, nxt, total);
        return;
      }
      cur = hop(nxt);
      if (cur == start) {  // closed interface loop
        if (total % 2 != 0 || total < 2)
          throw std::logic_error("multiply: invalid loop length");
        if (total / 2 >= 2) out.circles.push_back(total / 2);
        return;
      }
    }
  };

  for (int j = 1; j <= f.dst; ++j) {
    for (int cls : {kBL, kBR}) {
      Node nd{0, {cls, j}};
      if (!visited.count(nd)) walk(nd);
    }
  }
  for (int i = 1; i <= g.src; ++i) {
    for (int cls : {kTL, kTR}) {
      Node nd{1, {cls, i}};
      if (!visited.count(nd)) walk(nd);
    }
  }
  for (int i = 1; i <= f.src; ++i) {
    for (int cls : {kTL, kTR}) {
      Node nd{0, {cls, i}};
      if (!visited.count(nd)) walk(nd);
    }
  }

  out.circles.insert(out.circles.end(), f.circles.begin(), f.circles.end());
  out.circles.insert(out.circles.end(), g.circles.begin(), g.circles.end());
  out.canonicalize();
  out.validate();
  return out;
}

Chip involute(const Chip& c) {
  Chip out;
  out.dst = c.src;
  out.src = c.dst;
  for (const auto& a : c.arcs) {
    switch (a.kind) {
      case ArcKind::kVL:
        out.arcs.push_back({ArcKind::kVL, a.to, a.from, a.half_units});
        break;
      case ArcKind::kVR:
        out.arcs.push_back({ArcKind::kVR, a.to, a.from, a.half_units});
        break;
      case ArcKind::kHT:
        out.arcs.push_back({ArcKind::kHB, a.from, a.to, a.half_units});
        break;
      case ArcKind::kHB:
        out.arcs.push_back({ArcKind::kHT, a.from, a.to, a.half_units});
        break;
    }
  }
  out.circles = c.circles;
  out.canonicalize();
  return out;
}

Chip lambda_chip(int m, int n) {
  if (n < 0 || n > m) throw std::invalid_argument("lambda_chip: need 0<=n<=m");
  Chip c;
  c.dst = n;
  c.src = m;
  for (int i = 1; i <= n; ++i) {
    c.arcs.push_back({ArcKind::kVL, i, i, 0});
    c.arcs.push_back({ArcKind::kVR, i, i, 0});
  }
  for (int i = n + 1; i <= m; ++i) c.arcs.push_back({ArcKind::kHT, i, i, 1});
  c.canonicalize();
  return c;
}

Permutation theta_element(int beta, int j) {
  if (beta < 0 || j < 1)
    throw std::invalid_argument("theta_element: need beta >= 0, j >= 1");
  std::vector<int> im(static_cast<size_t>(beta + 2 * j));
  for (int k = 1; k <= beta; ++k) im[static_cast<size_t>(k - 1)] = k;
  for (int k = beta + 1; k <= beta + j; ++k)
    im[static_cast<size_t>(k - 1)] = k + j;
  for (int k = beta + j + 1; k <= beta + 2 * j; ++k)
    im[static_cast<size_t>(k - 1)] = k - j;
  return Permutation(std::move(im));
}

Chip chip_from_pair(const Permutation& g1, const Permutation& g2, int alpha,
                    int beta) {
  if (alpha < 0 || beta < 0)
    throw std::invalid_argument("chip_from_pair: negative size");
  const int M = std::max({alpha, beta, g1.degree(), g2.degree()});
  const Permutation a = g1.extend(M);
  const Permutation b = g2.extend(M);
  const Permutation ai = a.inverse();
  const Permutation bi = b.inverse();

  struct Node {
    int cls;
    int idx;
    auto key() const { return std::tie(cls, idx); }
    bool operator==(const Node& o) const { return key() == o.key(); }
    bool operator!=(const Node& o) const { return !(*this == o); }
    bool operator<(const Node& o) const { return key() < o.key(); }
  };
  enum EdgeType { kPerm, kConn };
  // The permutation edge is always present; the crossed connector closes
  // top pairs above beta and bottom pairs above alpha, one cross each.
  auto perm_edge = [&](Node nd) -> std::pair<Node, int> {
    switch (nd.cls) {
      case kTL:
        return {{kBL, a(nd.idx)}, 0};
      case kTR:
        return {{kBR, b(nd.idx)}, 0};
      case kBL:
        return {{kTL, ai(nd.idx)}, 0};
      default:
        return {{kTR, bi(nd.idx)}, 0};
    }
  };
  auto has_conn = [&](Node nd) {
    return (nd.cls == kTL || nd.cls == kTR) ? nd.idx > beta : nd.idx > alpha;
  };
  auto conn_edge = [&](Node nd) -> std::pair<Node, int> {
    switch (nd.cls) {
      case kTL:
        return {{kTR, nd.idx}, 1};
      case kTR:
        return {{kTL, nd.idx}, 1};
      case kBL:
        return {{kBR, nd.idx}, 1};
      default:
        return {{kBL, nd.idx}, 1};
    }
  };

  Chip out;
  out.dst = alpha;
  out.src = beta;
  std::set<Node> visited;

  auto emit_arc = [&](Node s, Node e, int crosses) {
    auto kind_of = [&](Node x, Node y) -> ChipArc {
      if (x.cls == kTL && y.cls == kBL)
        return {ArcKind::kVL, x.idx, y.idx, crosses};
      if (x.cls == kTR && y.cls == kBR)
        return {ArcKind::kVR, x.idx, y.idx, crosses};
      if (x.cls == kTL && y.cls == kTR)
        return {ArcKind::kHT, x.idx, y.idx, crosses};
      if (x.cls == kBL && y.cls == kBR)
        return {ArcKind::kHB, x.idx, y.idx, crosses};
      throw std::logic_error("chip_from_pair: invalid arc ends");
    };
    if ((s.cls == kTL && (e.cls == kBL || e.cls == kTR)) ||
        (s.cls == kTR && e.cls == kBR) || (s.cls == kBL && e.cls == kBR))
      out.arcs.push_back(kind_of(s, e));
    else
      out.arcs.push_back(kind_of(e, s));
  };

  // Walk a path from a boundary node (no connector): alternate permutation
  // edges and connectors until hitting another boundary node.
  auto walk_path = [&](Node start) {
    Node cur = start;
    int crosses = 0;
    visited.insert(cur);
    while (true) {
      auto [nxt, cost] = perm_edge(cur);
      crosses += cost;
      visited.insert(nxt);
      if (!has_conn(nxt)) {
        emit_arc(start, nxt, crosses);
        return;
      }
      auto [nxt2, cost2] = conn_edge(nxt);
      crosses += cost2;
      visited.insert(nxt2);
      cur = nxt2;
    }
  };
  auto walk_cycle = [&](Node start) {
    Node cur = start;
    int crosses = 0;
    do {
      visited.insert(cur);
      auto [nxt, cost] = perm_edge(cur);
      crosses += cost;
      visited.insert(nxt);
      auto [nxt2, cost2] = conn_edge(nxt);
      crosses += cost2;
      cur = nxt2;
    } while (cur != start);
    if (crosses % 2 != 0 || crosses < 2)
      throw std::logic_error("chip_from_pair: invalid cycle length");
    if (crosses / 2 >= 2) out.circles.push_back(crosses / 2);
  };

  for (int i = 1; i <= beta; ++i) {
    for (int cls : {kTL, kTR}) {
      Node nd{cls, i};
      if (!visited.count(nd)) walk_path(nd);
    }
  }
  for (int j = 1; j <= alpha; ++j) {
    for (int cls : {kBL, kBR}) {
      Node nd{cls, j};
      if (!visited.count(nd)) walk_path(nd);
    }
  }
  for (int i = 1; i <= M; ++i) {
    for (int cls : {kTL, kTR, kBL, kBR}) {
      Node nd{cls, i};
      if (!visited.count(nd)) walk_cycle(nd);
    }
  }

  out.canonicalize();
  out.validate();
  return out;
}

Chip center_element(const std::vector<int>& cycle_lengths, int ambient) {
  for (int k : cycle_lengths)
    if (k < 2)
      throw std::invalid_argument("center_element: cycle length < 2");
  Chip c = chip_identity(ambient);
  c.circles = cycle_lengths;
  c.canonicalize();
  return c;
}

Permutation cycles_representative(const std::vector<int>& cycle_lengths) {
  std::vector<int> ks = cycle_lengths;
  std::sort(ks.begin(), ks.end());
  int n = 0;
  for (int k : ks) {
    if (k < 2)
      throw std::invalid_argument("cycles_representative: length < 2");
    n += k;
  }
  std::vector<std::vector<int>> cycles;
  int next = 1;
  for (int k : ks) {
    std::vector<int> cyc;
    for (int t = 0; t < k; ++t) cyc.push_back(next++);
    cycles.push_back(std::move(cyc));
  }
  return Permutation::from_cycles(n, cycles);
}

}  // namespace crpchips
