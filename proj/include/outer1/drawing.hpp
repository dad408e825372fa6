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

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace outer1 {

/// Vertices are 1-based and numbered clockwise along the outer boundary.
using Vertex = int;

/// Unordered vertex pair, stored with `u < v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool has(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using CrossingPair = std::pair<Edge, Edge>;

/// Raised for malformed drawing text or drawings that violate the invariants.
class DrawingError : public std::runtime_error {
 public:
  explicit DrawingError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// True iff chords {a,b} and {c,d} strictly interleave in the cyclic order.
/// Chords sharing an endpoint never interleave.
bool interleave(Edge e, Edge f);

/// An outer-1-plane drawing in convex position: the clockwise vertex order
/// 1..n plus an edge set. Two edges cross iff their endpoints interleave; the
/// constructor rejects loops, repeated edges and edges crossed more than once.
class Drawing {
 public:
  Drawing() : Drawing(1, {}) {}
  Drawing(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool adjacent(Vertex a, Vertex b) const {
    return a != b && adj_[index(a, b)] != 0;
  }
  int degree(Vertex v) const { return static_cast<int>(nbrs_[v].size()); }
  /// Sorted neighbours of `v`.
  std::span<const Vertex> neighbors(Vertex v) const { return nbrs_[v]; }
  bool contains(Edge e) const { return adjacent(e.u, e.v); }

  /// Index into edges(), or -1.
  int edge_index(Edge e) const;
  /// Edge crossing `e`, if any (at most one exists).
  const Edge* crossing_partner(Edge e) const;

  /// Clockwise successor / predecessor with wraparound.
  Vertex next(Vertex v) const { return v == n_ ? 1 : v + 1; }
  Vertex prev(Vertex v) const { return v == 1 ? n_ : v - 1; }

  friend bool operator==(const Drawing& a, const Drawing& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t index(Vertex a, Vertex b) const {
    return static_cast<std::size_t>(a) * (n_ + 1) + b;
  }

  int n_;
  std::vector<Edge> edges_;                 // sorted
  std::vector<std::uint8_t> adj_;           // (n+1)^2 matrix
  std::vector<std::vector<Vertex>> nbrs_;   // index 0 unused
  std::vector<int> partner_;                // per edge index, -1 if uncrossed
};

/// Vertex count and edge list read from drawing text, before any crossing
/// check.
struct EdgeListText {
  int n = 0;
  std::vector<Edge> edges;
};

/// Tokenises the drawing format; syntax, range, loop and duplicate errors
/// carry line numbers.
EdgeListText parse_edge_list(std::string_view text);

/// Parses the line-oriented drawing format:
///
///   # comment
///   n <count>
///   e <u> <v>        (1 <= u < v <= n)
///
/// Errors carry the offending line number.
Drawing parse_drawing(std::string_view text);

/// Emits the drawing format with edges sorted lexicographically.
std::string to_text(const Drawing& d);

/// Graphviz rendering with vertices pinned on a circle.
std::string to_dot(const Drawing& d);

/// Degree of every vertex; index 0 is unused.
std::vector<int> degrees(const Drawing& d);
int min_degree(const Drawing& d);

/// All crossing pairs, each as (e, f) with e < f, sorted.
std::vector<CrossingPair> crossing_pairs(const Drawing& d);

/// The adjacent-endpoint crossing pattern: e1 = {v_i,v_j} crosses
/// e2 = {v_k,v_l}, walking i,k,j,l in one direction around the boundary with
/// k the successor of i, j the predecessor of l, 4 <= |[i..l]| <= 5, and the
/// short boundary edges v_iv_k and v_jv_l present. Evaluated for both
/// orientations of the boundary.
bool co_crosses(const Drawing& d, Edge e1, Edge e2);

/// Clockwise run of boundary vertices from `from` to `to`; `closed` includes
/// both ends.
struct Segment {
  Vertex from = 1;
  Vertex to = 1;
  bool closed = true;

  /// Members in clockwise order.
  std::vector<Vertex> members(int n) const;
  bool contains(int n, Vertex v) const;
};

enum class SegmentKind { Path, NonEdge, Other };

std::string_view to_string(SegmentKind k);

SegmentKind segment_kind(const Drawing& d, const Segment& s);

/// Induced sub-drawing after removing `removed`, relabelled 1..n' in the
/// inherited cyclic order. `original[i]` is the source vertex of new vertex i.
struct SubDrawing {
  Drawing drawing;
  std::vector<Vertex> original;  // index 0 unused
};

SubDrawing induced_without(const Drawing& d, std::span<const Vertex> removed);
Drawing delete_vertices(const Drawing& d, std::span<const Vertex> removed);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Drawing& d);
bool is_connected(const Drawing& d);

}  // namespace outer1
