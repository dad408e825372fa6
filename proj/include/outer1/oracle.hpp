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

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "outer1/drawing.hpp"

namespace outer1 {

/// Raised when an exhaustive routine is asked for an instance above its cap.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple graph with no drawing attached; vertices 1..n.
struct AbstractGraph {
  int n = 0;
  std::vector<Edge> edges;

  static AbstractGraph of(const Drawing& d);
  /// Same text format as drawings, without the crossing check.
  static AbstractGraph parse(std::string_view text);
};

/// Colour lists per vertex (index 0 unused).
using ListAssignment = std::vector<std::vector<int>>;

inline constexpr int kMaxExactVertices = 12;
inline constexpr int kMaxRecognitionVertices = 9;
inline constexpr int kMaxEnumerationVertices = 8;

/// Smallest k <= k_max admitting an r-dynamic k-colouring, or -1 when none
/// does. Plain backtracking; n <= 12.
int chromatic_r_dynamic(const AbstractGraph& g, int r, int k_max);

/// Ordinary chromatic number by a separate proper-colouring backtracker.
int chromatic_number(const AbstractGraph& g);

/// Whether an r-dynamic L-colouring exists. n <= 12.
bool is_list_colorable(const AbstractGraph& g, const ListAssignment& lists, int r);

/// Whether some cyclic vertex order puts every edge in at most one
/// interleaving pair. Searches (n-1)!/2 orders; n <= 9.
bool is_outer_1_planar(const AbstractGraph& g);

/// Whether no non-edge can be added while staying outer-1-planar. n <= 9.
bool is_maximal(const Drawing& d);

enum class EnumFilter { All, Connected, ConnectedMinDeg2 };

EnumFilter parse_filter(std::string_view name);
std::string_view to_string(EnumFilter f);

/// Every edge set over the convex n-gon in which each chord is crossed at
/// most once, filtered; visited in a fixed order. n <= 8.
void enumerate_drawings(int n, EnumFilter filter, const std::function<void(const Drawing&)>& visit);
std::vector<Drawing> enumerate_drawings(int n, EnumFilter filter);

/// Minimum edge bitmask over the 2n rotations and reflections; n <= 11.
std::uint64_t canonical_form(const Drawing& d);

}  // namespace outer1
