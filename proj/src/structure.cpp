// Copyright 2026 The outer1 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "outer1/structure.hpp"

#include <algorithm>
#include <initializer_list>
#include <limits>
#include <optional>

#include "outer1/oracle.hpp"

namespace outer1 {

Match find_structure(const Drawing& d, bool check_d2) {
  if (d.n() == 0 || min_degree(d) < 2) {
    throw std::invalid_argument("find_structure needs minimum degree at least 2");
  }
  for (const ConfigPattern& p : load_catalog()) {
    if (auto m = first_match(d, p, check_d2)) return *m;
  }
  throw GuaranteeViolation("no configuration G1..G17 found");
}

namespace {

bool qualifies(const VertexRole& a, const VertexRole& b, bool maximal_mode) {
  auto solid = [](const VertexRole& r, int k) {
    return r.kind == RoleKind::Solid && r.drawn_degree == k;
  };
  const int bound = maximal_mode ? 5 : 7;
  auto capped = [&](const VertexRole& r) {
    const auto cap = r.max_host_degree();
    return cap && *cap <= bound;
  };
  if ((solid(a, 2) && capped(b)) || (solid(b, 2) && capped(a))) return true;
  return solid(a, 3) && solid(b, 3);
}

}  // namespace

LightEdge find_light_edge(const Drawing& d, bool maximal_mode) {
  const int bound = maximal_mode ? 7 : 9;
  if (d.n() == 0 || min_degree(d) < 2) {
    throw std::invalid_argument("find_light_edge needs minimum degree at least 2");
  }
  for (const ConfigPattern& p : load_catalog()) {
    if (maximal_mode && p.id == 3) continue;
    const auto m = first_match(d, p);
    if (!m) continue;
    std::optional<LightEdge> best;
    for (auto [a, b] : p.edges) {
      if (!qualifies(p.vertices[a].role, p.vertices[b].role, maximal_mode)) continue;
      const Vertex hu = m->assignment[a];
      const Vertex hv = m->assignment[b];
      const int sum = d.degree(hu) + d.degree(hv);
      LightEdge cand{Edge(hu, hv), sum, p.id};
      if (!best || sum < best->degree_sum ||
          (sum == best->degree_sum && cand.endpoints < best->endpoints)) {
        best = cand;
      }
    }
    if (best && best->degree_sum <= bound) return *best;
  }
  std::optional<LightEdge> best;
  for (const Edge& e : d.edges()) {
    const int sum = d.degree(e.u) + d.degree(e.v);
    if (!best || sum < best->degree_sum) best = LightEdge{e, sum, 0};
  }
  if (best && best->degree_sum <= bound) return *best;
  throw GuaranteeViolation("no edge with degree sum <= " + std::to_string(bound));
}

std::string_view to_string(ReductionKind k) {
  switch (k) {
    case ReductionKind::P1Pendant: return "P1-pendant";
    case ReductionKind::P2AdjacentDeg2: return "P2-adjacent-deg2";
    case ReductionKind::P3TriangleDeg2: return "P3-triangle-deg2";
    case ReductionKind::P4G3: return "P4-G3";
    case ReductionKind::P5G6: return "P5-G6";
    case ReductionKind::P6G7: return "P6-G7";
    case ReductionKind::P7G8: return "P7-G8";
    case ReductionKind::P8G9: return "P8-G9";
    case ReductionKind::P9G10: return "P9-G10";
    case ReductionKind::P10G11: return "P10-G11";
  }
  return "?";
}

int config_id(ReductionKind k) {
  switch (k) {
    case ReductionKind::P4G3: return 3;
    case ReductionKind::P5G6: return 6;
    case ReductionKind::P6G7: return 7;
    case ReductionKind::P7G8: return 8;
    case ReductionKind::P8G9: return 9;
    case ReductionKind::P9G10: return 10;
    case ReductionKind::P10G11: return 11;
    default: return 0;
  }
}

Vertex ReductionStep::anchor(const std::string& name) const {
  auto it = anchors.find(name);
  if (it == anchors.end()) throw std::out_of_range("reduction step has no anchor " + name);
  return it->second;
}

namespace {

// Third neighbour of `x` besides `a` and `b` when d(x) = 3.
std::optional<Vertex> third_neighbor(const Drawing& d, Vertex x, Vertex a, Vertex b) {
  if (d.degree(x) != 3) return std::nullopt;
  for (Vertex w : d.neighbors(x)) {
    if (w != a && w != b) return w;
  }
  return std::nullopt;
}

struct CatalogRule {
  ReductionKind kind;
  int id;
  std::initializer_list<const char*> deleted;
  // x1 is the third neighbour of x other than these two labels; same for y1.
  const char* x_besides[2];
  const char* y_besides[2];
};

// Deleted sets and third-neighbour conventions of the extension rules.
const CatalogRule kRules[] = {
    {ReductionKind::P4G3, 3, {"u"}, {"u", "v"}, {"u", "v"}},
    {ReductionKind::P5G6, 6, {"u"}, {"u", "v"}, {"u", "v"}},
    {ReductionKind::P6G7, 7, {"u", "v"}, {"w", "v"}, {"v", "w"}},
    {ReductionKind::P7G8, 8, {"u", "w"}, {"u", "v"}, {"v", "w"}},
    {ReductionKind::P8G9, 9, {"u", "w"}, {"u", "v"}, {"z", "w"}},
    {ReductionKind::P9G10, 10, {"u", "w"}, {"v", "z"}, {"v", "w"}},
    {ReductionKind::P10G11, 11, {"u", "v", "a"}, {"v", "z"}, {"w", "a"}},
};

}  // namespace

ReductionStep find_reduction(const Drawing& d) {
  if (d.n() == 0) throw std::invalid_argument("find_reduction needs a nonempty drawing");
  ReductionStep step;
  for (Vertex u = 1; u <= d.n(); ++u) {
    if (d.degree(u) <= 1) {
      step.kind = ReductionKind::P1Pendant;
      step.deleted = {u};
      step.anchors["u"] = u;
      if (d.degree(u) == 1) step.anchors["v"] = d.neighbors(u)[0];
      return step;
    }
  }
  for (const Edge& e : d.edges()) {
    if (d.degree(e.u) == 2 && d.degree(e.v) == 2) {
      step.kind = ReductionKind::P2AdjacentDeg2;
      step.deleted = {e.u, e.v};
      step.anchors["u"] = e.u;
      step.anchors["v"] = e.v;
      for (Vertex w : d.neighbors(e.u)) {
        if (w != e.v) step.anchors["x"] = w;
      }
      for (Vertex w : d.neighbors(e.v)) {
        if (w != e.u) step.anchors["y"] = w;
      }
      return step;
    }
  }
  for (Vertex u = 1; u <= d.n(); ++u) {
    if (d.degree(u) != 2) continue;
    const Vertex x = d.neighbors(u)[0];
    const Vertex y = d.neighbors(u)[1];
    if (!d.adjacent(x, y)) continue;
    step.kind = ReductionKind::P3TriangleDeg2;
    step.deleted = {u};
    step.anchors = {{"u", u}, {"x", x}, {"y", y}};
    if (auto x1 = third_neighbor(d, x, u, y)) step.anchors["x1"] = *x1;
    if (auto y1 = third_neighbor(d, y, u, x)) step.anchors["y1"] = *y1;
    return step;
  }
  for (const CatalogRule& rule : kRules) {
    const ConfigPattern& p = pattern(rule.id);
    const auto m = first_match(d, p);
    if (!m) continue;
    step.kind = rule.kind;
    step.anchors.clear();
    for (const auto& [name, index] : p.anchors) step.anchors[name] = m->assignment[index];
    step.deleted.clear();
    for (const char* label : rule.deleted) step.deleted.push_back(step.anchors.at(label));
    std::sort(step.deleted.begin(), step.deleted.end());
    const Vertex x = step.anchors.at("x");
    const Vertex y = step.anchors.at("y");
    if (auto x1 = third_neighbor(d, x, step.anchors.at(rule.x_besides[0]),
                                 step.anchors.at(rule.x_besides[1]))) {
      step.anchors["x1"] = *x1;
    }
    if (auto y1 = third_neighbor(d, y, step.anchors.at(rule.y_besides[0]),
                                 step.anchors.at(rule.y_besides[1]))) {
      step.anchors["y1"] = *y1;
    }
    return step;
  }
  throw GuaranteeViolation("no reducible configuration found");
}

bool check_d1(const Drawing& d, const Match& g3_match) {
  const ConfigPattern& p = pattern(3);
  if (g3_match.pattern_id != 3) throw std::invalid_argument("check_d1 expects a G3 match");
  const auto [iu, iv] = *p.d1_pair;
  const Vertex u = g3_match.assignment[iu];
  const Vertex v = g3_match.assignment[iv];
  if (d.n() <= 3 || d.adjacent(u, v)) return true;
  AbstractGraph g = AbstractGraph::of(d);
  g.edges.emplace_back(u, v);
  return is_outer_1_planar(g);
}

}  // namespace outer1
