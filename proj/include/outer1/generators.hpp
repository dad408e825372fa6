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

#include "outer1/drawing.hpp"

namespace outer1 {

/// Boundary cycle on n >= 3 vertices.
Drawing cycle(int n);

/// Seven-vertex drawing whose 3-dynamic chromatic number is 6. Checks its
/// own degree facts on construction.
Drawing sharp_example();

/// Witness drawing H_i, 2 <= i <= 17: contains G_i and no other G_j.
Drawing h_family(int i);

/// Boundary cycle plus chords tried in seeded random order, each kept iff
/// every crossing degree stays <= 1, until `density` of the n(n-3)/2
/// candidate chords has been accepted or the candidates run out.
Drawing random_outer_1_planar(int n, double density, std::uint64_t seed);

}  // namespace outer1
