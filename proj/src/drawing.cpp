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

#include "outer1/drawing.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace outer1 {

namespace {

// Strictly between a and b walking clockwise from a (a < b as integers).
bool strictly_inside(Edge e, Vertex x) { return e.u < x && x < e.v; }

}  // namespace

bool interleave(Edge e, Edge f) {
  if (e.has(f.u) || e.has(f.v)) return false;
  return strictly_inside(e, f.u) != strictly_inside(e, f.v);
}

Drawing::Drawing(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw DrawingError("vertex count must be non-negative");
  std::sort(edges_.begin(), edges_.end());
  adj_.assign(static_cast<std::size_t>(n_ + 1) * (n_ + 1), 0);
  nbrs_.assign(n_ + 1, {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u == e.v) throw DrawingError("loop at vertex " + std::to_string(e.u));
    if (e.u < 1 || e.v > n_) {
      throw DrawingError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         "} out of range");
    }
    if (i > 0 && edges_[i - 1] == e) {
      throw DrawingError("duplicate edge {" + std::to_string(e.u) + "," +
                         std::to_string(e.v) + "}");
    }
    adj_[index(e.u, e.v)] = adj_[index(e.v, e.u)] = 1;
    nbrs_[e.u].push_back(e.v);
    nbrs_[e.v].push_back(e.u);
  }
  for (auto& list : nbrs_) std::sort(list.begin(), list.end());

  partner_.assign(edges_.size(), -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (std::size_t j = i + 1; j < edges_.size(); ++j) {
      if (!interleave(edges_[i], edges_[j])) continue;
      for (std::size_t k : {i, j}) {
        if (partner_[k] != -1) {
          throw DrawingError("not outer-1-plane in given order: edge {" +
                             std::to_string(edges_[k].u) + "," +
                             std::to_string(edges_[k].v) + "} is crossed more than once");
        }
      }
      partner_[i] = static_cast<int>(j);
      partner_[j] = static_cast<int>(i);
    }
  }
}

int Drawing::edge_index(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

const Edge* Drawing::crossing_partner(Edge e) const {
  const int i = edge_index(e);
  if (i < 0 || partner_[i] < 0) return nullptr;
  return &edges_[partner_[i]];
}

EdgeListText parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Edge> edges;
  auto read_int = [&](std::istringstream& ls, const char* what) {
    std::string tok;
    if (!(ls >> tok)) throw DrawingError(std::string("missing ") + what, lineno);
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
      throw DrawingError(std::string("bad ") + what + " '" + tok + "'", lineno);
    }
    return value;
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "n") {
      if (n != -1) throw DrawingError("repeated 'n' line", lineno);
      n = read_int(ls, "vertex count");
      if (n < 1) throw DrawingError("vertex count must be at least 1", lineno);
    } else if (tag == "e") {
      if (n == -1) throw DrawingError("'e' line before 'n' line", lineno);
      const int u = read_int(ls, "endpoint");
      const int v = read_int(ls, "endpoint");
      if (u == v) throw DrawingError("loop at vertex " + std::to_string(u), lineno);
      if (u < 1 || v < 1 || u > n || v > n) {
        throw DrawingError("endpoint out of range 1.." + std::to_string(n), lineno);
      }
      if (u > v) throw DrawingError("edge endpoints must satisfy u < v", lineno);
      Edge e(u, v);
      if (std::find(edges.begin(), edges.end(), e) != edges.end()) {
        throw DrawingError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}",
                           lineno);
      }
      edges.push_back(e);
    } else {
      throw DrawingError("unknown line tag '" + tag + "'", lineno);
    }
    std::string extra;
    if (ls >> extra) throw DrawingError("trailing token '" + extra + "'", lineno);
  }
  if (n == -1) throw DrawingError("missing 'n' line");
  return EdgeListText{n, std::move(edges)};
}

Drawing parse_drawing(std::string_view text) {
  auto parsed = parse_edge_list(text);
  return Drawing(parsed.n, std::move(parsed.edges));
}

std::string to_text(const Drawing& d) {
  std::string out = "n " + std::to_string(d.n()) + "\n";
  for (const Edge& e : d.edges()) {
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

std::string to_dot(const Drawing& d) {
  std::string out = "graph drawing {\n  layout=neato;\n";
  const double step = 2.0 * std::numbers::pi / std::max(d.n(), 1);
  for (Vertex v = 1; v <= d.n(); ++v) {
    char pos[64];
    // Clockwise from the top.
    std::snprintf(pos, sizeof pos, "%.4f,%.4f", 3.0 * std::sin(step * (v - 1)),
                  3.0 * std::cos(step * (v - 1)));
    out += "  " + std::to_string(v) + " [pos=\"" + pos + "!\"];\n";
  }
  for (const Edge& e : d.edges()) {
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v);
    if (d.crossing_partner(e) != nullptr) out += " [style=dashed]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

std::vector<int> degrees(const Drawing& d) {
  std::vector<int> deg(d.n() + 1, 0);
  for (Vertex v = 1; v <= d.n(); ++v) deg[v] = d.degree(v);
  return deg;
}

int min_degree(const Drawing& d) {
  int best = 0;
  for (Vertex v = 1; v <= d.n(); ++v) best = v == 1 ? d.degree(v) : std::min(best, d.degree(v));
  return best;
}

std::vector<CrossingPair> crossing_pairs(const Drawing& d) {
  std::vector<CrossingPair> out;
  for (const Edge& e : d.edges()) {
    const Edge* f = d.crossing_partner(e);
    if (f != nullptr && e < *f) out.emplace_back(e, *f);
  }
  return out;
}

bool co_crosses(const Drawing& d, Edge e1, Edge e2) {
  if (!d.contains(e1) || !d.contains(e2) || !interleave(e1, e2)) return false;
  const int n = d.n();
  for (int dir : {+1, -1}) {
    auto step = [&](Vertex v) { return dir > 0 ? d.next(v) : d.prev(v); };
    for (Vertex i : {e1.u, e1.v}) {
      const Vertex j = e1.other(i);
      const Vertex k = step(i);
      if (!e2.has(k)) continue;
      const Vertex l = e2.other(k);
      // Walk i -> l; j must be the vertex just before l.
      int span = 1;
      Vertex cur = i;
      Vertex before_l = i;
      while (cur != l && span <= n) {
        before_l = cur;
        cur = step(cur);
        ++span;
      }
      if (before_l != j) continue;
      if (span < 4 || span > 5) continue;
      if (d.adjacent(i, k) && d.adjacent(j, l)) return true;
    }
  }
  return false;
}

std::vector<Vertex> Segment::members(int n) const {
  std::vector<Vertex> out;
  if (n <= 0) return out;
  Vertex cur = from;
  while (true) {
    out.push_back(cur);
    if (cur == to) break;
    cur = cur == n ? 1 : cur + 1;
  }
  if (!closed) {
    out.erase(out.begin());
    if (!out.empty() && from != to) out.pop_back();
  }
  return out;
}

bool Segment::contains(int n, Vertex v) const {
  const auto m = members(n);
  return std::find(m.begin(), m.end(), v) != m.end();
}

std::string_view to_string(SegmentKind k) {
  switch (k) {
    case SegmentKind::Path: return "path";
    case SegmentKind::NonEdge: return "non-edge";
    case SegmentKind::Other: return "other";
  }
  return "other";
}

SegmentKind segment_kind(const Drawing& d, const Segment& s) {
  const auto m = Segment{s.from, s.to, true}.members(d.n());
  if (m.size() < 2) return SegmentKind::Other;
  if (m.size() == 2 && !d.adjacent(m[0], m[1])) return SegmentKind::NonEdge;
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    if (!d.adjacent(m[i], m[i + 1])) return SegmentKind::Other;
  }
  return SegmentKind::Path;
}

SubDrawing induced_without(const Drawing& d, std::span<const Vertex> removed) {
  std::vector<int> relabel(d.n() + 1, 0);
  for (Vertex v : removed) {
    if (v < 1 || v > d.n()) throw DrawingError("vertex " + std::to_string(v) + " out of range");
    relabel[v] = -1;
  }
  SubDrawing out;
  out.original.push_back(0);
  int next = 0;
  for (Vertex v = 1; v <= d.n(); ++v) {
    if (relabel[v] == -1) continue;
    relabel[v] = ++next;
    out.original.push_back(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : d.edges()) {
    if (relabel[e.u] > 0 && relabel[e.v] > 0) edges.emplace_back(relabel[e.u], relabel[e.v]);
  }
  out.drawing = Drawing(next, std::move(edges));
  return out;
}

Drawing delete_vertices(const Drawing& d, std::span<const Vertex> removed) {
  return induced_without(d, removed).drawing;
}

std::vector<std::vector<Vertex>> components(const Drawing& d) {
  std::vector<int> comp(d.n() + 1, -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 1; s <= d.n(); ++s) {
    if (comp[s] != -1) continue;
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = static_cast<int>(out.size()) - 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (Vertex w : d.neighbors(v)) {
        if (comp[w] == -1) {
          comp[w] = comp[s];
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const Drawing& d) { return components(d).size() <= 1; }

}  // namespace outer1
