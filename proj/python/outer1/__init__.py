# Copyright 2026 The outer1 Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Outer-1-plane drawings in convex position, local configurations and
list 3-dynamic colouring."""

from ._outer1 import (
    Drawing,
    DrawingError,
    ExtensionFailure,
    GuaranteeViolation,
    ListTooSmall,
    SizeLimitError,
    chromatic_r_dynamic,
    color,
    count_drawings,
    cycle,
    find_matches,
    find_reduction,
    find_structure,
    h_family,
    is_connected,
    is_maximal,
    is_outer_1_planar,
    light_edge,
    min_degree,
    random_drawing,
    sharp_example,
    verify,
)

__all__ = [
    "Drawing",
    "DrawingError",
    "ExtensionFailure",
    "GuaranteeViolation",
    "ListTooSmall",
    "SizeLimitError",
    "chromatic_r_dynamic",
    "color",
    "count_drawings",
    "cycle",
    "find_matches",
    "find_reduction",
    "find_structure",
    "h_family",
    "is_connected",
    "is_maximal",
    "is_outer_1_planar",
    "light_edge",
    "min_degree",
    "random_drawing",
    "sharp_example",
    "verify",
]
