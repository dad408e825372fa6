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

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "outer1/drawing.hpp"
#include "outer1/oracle.hpp"
#include "outer1/structure.hpp"

namespace outer1 {

/// Colour per vertex, index 0 unused; kUncolored marks a missing colour.
using Coloring = std::vector<int>;
inline constexpr int kUncolored = -1;

enum class ViolationKind { Uncolored, Improper, TooFewColors, NotInList };
std::string_view to_string(ViolationKind k);

struct Violation {
  ViolationKind kind = ViolationKind::Uncolored;
  Vertex vertex = 0;
  Vertex other = 0;  // Improper: the clashing neighbour
  int seen = 0;      // TooFewColors: distinct neighbour colours
  int required = 0;  // TooFewColors: min(r, d(v))
  std::string describe() const;
};

struct DynamicVerdict {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

/// Checks properness and that each v sees at least min(r, d(v)) distinct
/// colours on its neighbours. With `only` nonempty, just those vertices
/// are examined.
DynamicVerdict verify_dynamic(const Drawing& d, const Coloring& c, int r,
                              std::span<const Vertex> only = {});

/// Every coloured vertex uses a colour from its list.
DynamicVerdict verify_lists(const Drawing& d, const Coloring& c, const ListAssignment& lists);

/// Parses "l <v> <c1> <c2> ..." lines (comments with '#'); vertices absent
/// from the text get empty lists.
ListAssignment parse_lists(std::string_view text, int n);
ListAssignment uniform_lists(int n, int colors);

class ListTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// No colour was found even after the fallbacks; the input is not
/// outer-1-planar or a rule is wrong.
class ExtensionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ColoringStats {
  int steps = 0;
  /// Reductions per kind, indexed by ReductionKind.
  std::array<int, 10> by_kind{};
  /// Steps whose rule left a vertex without a colour or failed local
  /// verification, and were finished by exhaustive search.
  int fallbacks = 0;
  /// G11 steps finished by one of the recolouring branches.
  int recolorings = 0;
};

/// Colours the deleted vertices of `s`. `c` holds a valid 3-dynamic
/// L-colouring of the other vertices of `d`, with kUncolored on the deleted
/// ones. Only deleted vertices change, except on the G11 recolouring
/// branches, which may also touch z, a, w, v.
Coloring extend_step(const Drawing& d, const ReductionStep& s, Coloring c,
                     const ListAssignment& lists, ColoringStats* stats = nullptr);

/// A 3-dynamic colouring with c(v) in L(v), by repeated reduction and
/// extension. Lists must hold at least 6 colours; the smallest allowed colour
/// is always taken.
Coloring color_list_3_dynamic(const Drawing& d, const ListAssignment& lists,
                              ColoringStats* stats = nullptr);

}  // namespace outer1
