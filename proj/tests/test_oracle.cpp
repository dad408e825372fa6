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

#include <gtest/gtest.h>

#include <random>

#include "outer1/generators.hpp"
#include "outer1/oracle.hpp"
#include "support/naive.hpp"

namespace outer1 {
namespace {

AbstractGraph complete(int n) {
  AbstractGraph g{n, {}};
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) g.edges.emplace_back(a, b);
  }
  return g;
}

AbstractGraph random_graph(int n, std::mt19937_64& rng) {
  AbstractGraph g{n, {}};
  const int density = static_cast<int>(rng() % 100);
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (static_cast<int>(rng() % 100) < density) g.edges.emplace_back(a, b);
    }
  }
  return g;
}

bool proper(const AbstractGraph& g, const std::vector<int>& c) {
  for (const Edge& e : g.edges) {
    if (c[e.u] == c[e.v]) return false;
  }
  return true;
}

int naive_chromatic(const AbstractGraph& g) {
  for (int k = 1; k <= std::max(g.n, 1); ++k) {
    std::vector<int> c(g.n + 1, 1);
    while (true) {
      if (proper(g, c)) return k;
      int i = 1;
      while (i <= g.n && c[i] == k) c[i++] = 1;
      if (i > g.n) break;
      ++c[i];
    }
  }
  return 1;
}

std::size_t naive_drawing_count(int n, EnumFilter filter) {
  std::vector<Edge> all;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) all.emplace_back(a, b);
  }
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask >> i & 1) edges.push_back(all[i]);
    }
    const auto deg = naive::crossing_degrees(edges);
    if (!deg.empty() && *std::max_element(deg.begin(), deg.end()) > 1) continue;
    if (filter != EnumFilter::All) {
      std::vector<int> comp(n + 1);
      std::iota(comp.begin(), comp.end(), 0);
      for (bool changed = true; changed;) {
        changed = false;
        for (const Edge& e : edges) {
          const int m = std::min(comp[e.u], comp[e.v]);
          if (comp[e.u] != m || comp[e.v] != m) {
            comp[e.u] = comp[e.v] = m;
            changed = true;
          }
        }
      }
      if (std::count(comp.begin() + 1, comp.end(), 1) != n) continue;
      if (filter == EnumFilter::ConnectedMinDeg2) {
        std::vector<int> d(n + 1, 0);
        for (const Edge& e : edges) ++d[e.u], ++d[e.v];
        if (*std::min_element(d.begin() + 1, d.end()) < 2) continue;
      }
    }
    ++count;
  }
  return count;
}

TEST(ChromaticRDynamic, Examples) {
  EXPECT_EQ(chromatic_r_dynamic(complete(3), 3, 6), 3);
  const Drawing c5 = cycle(5);
  EXPECT_EQ(naive::chi_r_dynamic(c5, 3), 5);
  EXPECT_EQ(chromatic_r_dynamic(AbstractGraph::of(c5), 3, 6), 5);
  EXPECT_EQ(chromatic_r_dynamic(AbstractGraph::of(c5), 3, 4), -1);
  EXPECT_EQ(chromatic_r_dynamic(AbstractGraph::of(sharp_example()), 3, 7), 6);
}

TEST(ChromaticRDynamic, AgreesWithNaiveOnSmallDrawings) {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 150; ++it) {
    const Drawing d = naive::random_drawing(1 + static_cast<int>(rng() % 6), rng);
    for (int r = 1; r <= 3; ++r) {
      ASSERT_EQ(chromatic_r_dynamic(AbstractGraph::of(d), r, d.n()), naive::chi_r_dynamic(d, r))
          << to_text(d) << "r=" << r;
    }
  }
}

TEST(ChromaticRDynamic, ROneIsChromaticNumber) {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 100; ++it) {
    const AbstractGraph g = random_graph(1 + static_cast<int>(rng() % 8), rng);
    const int chi = chromatic_number(g);
    ASSERT_EQ(chromatic_r_dynamic(g, 1, g.n), chi);
    ASSERT_EQ(chi, naive_chromatic(g));
  }
}

TEST(ChromaticRDynamic, SizeLimit) {
  EXPECT_THROW(chromatic_r_dynamic(AbstractGraph::of(cycle(13)), 3, 6), SizeLimitError);
  EXPECT_THROW(is_list_colorable(AbstractGraph::of(cycle(13)), {}, 3), SizeLimitError);
}

TEST(ListColorable, Examples) {
  const AbstractGraph c6 = AbstractGraph::of(cycle(6));
  EXPECT_TRUE(is_list_colorable(c6, ListAssignment(7, {1, 2, 3}), 3));
  const AbstractGraph c5 = AbstractGraph::of(cycle(5));
  EXPECT_FALSE(is_list_colorable(c5, ListAssignment(6, {1, 2, 3, 4}), 3));
  EXPECT_TRUE(is_list_colorable(AbstractGraph{0, {}}, ListAssignment(1), 3));
  EXPECT_TRUE(is_list_colorable(AbstractGraph{2, {}}, ListAssignment(3, {7}), 3));
}

TEST(Recognition, Examples) {
  EXPECT_TRUE(is_outer_1_planar(complete(4)));
  EXPECT_TRUE(is_outer_1_planar(AbstractGraph::of(cycle(6))));
  EXPECT_FALSE(is_outer_1_planar(complete(5)));
  EXPECT_THROW(is_outer_1_planar(AbstractGraph::of(cycle(10))), SizeLimitError);
}

TEST(Recognition, ParsedGraphsSkipCrossingCheck) {
  const AbstractGraph k5 = AbstractGraph::parse(
      "n 5\ne 1 2\ne 1 3\ne 1 4\ne 1 5\ne 2 3\ne 2 4\ne 2 5\ne 3 4\ne 3 5\ne 4 5\n");
  EXPECT_EQ(k5.edges.size(), 10u);
  EXPECT_FALSE(is_outer_1_planar(k5));
  // A relabelled sharp example is still recognised.
  const AbstractGraph g = AbstractGraph::parse(
      "n 7\ne 1 4\ne 2 4\ne 2 6\ne 3 6\ne 3 5\ne 5 7\ne 1 7\ne 2 3\ne 5 6\ne 4 7\n");
  EXPECT_TRUE(is_outer_1_planar(g));
}

TEST(Recognition, SoundOnEnumeratedDrawings) {
  for (int n = 1; n <= 6; ++n) {
    enumerate_drawings(n, EnumFilter::All, [&](const Drawing& d) {
      ASSERT_TRUE(is_outer_1_planar(AbstractGraph::of(d))) << to_text(d);
    });
  }
}

TEST(Maximal, Examples) {
  EXPECT_TRUE(is_maximal(cycle(3)));
  EXPECT_FALSE(is_maximal(cycle(6)));
  EXPECT_TRUE(is_maximal(parse_drawing("n 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\ne 1 3\ne 2 4\n")));
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_drawings(3, EnumFilter::ConnectedMinDeg2).size(), 1u);
  EXPECT_EQ(enumerate_drawings(3, EnumFilter::All).size(), 8u);
  EXPECT_EQ(naive_drawing_count(4, EnumFilter::ConnectedMinDeg2), 10u);
  EXPECT_EQ(enumerate_drawings(4, EnumFilter::ConnectedMinDeg2).size(), 10u);
}

TEST(Enumerate, AgreesWithNaiveCount) {
  for (int n = 1; n <= 6; ++n) {
    for (EnumFilter f : {EnumFilter::All, EnumFilter::Connected, EnumFilter::ConnectedMinDeg2}) {
      EXPECT_EQ(enumerate_drawings(n, f).size(), naive_drawing_count(n, f))
          << "n=" << n << " " << to_string(f);
    }
  }
}

TEST(Enumerate, NoDuplicatesAndValid) {
  const auto all = enumerate_drawings(6, EnumFilter::All);
  std::set<std::vector<Edge>> seen;
  for (const Drawing& d : all) {
    const std::vector<Edge> edges(d.edges().begin(), d.edges().end());
    ASSERT_TRUE(seen.insert(edges).second);
    ASSERT_NO_THROW(Drawing(d.n(), edges));
  }
  EXPECT_THROW(enumerate_drawings(9, EnumFilter::All), SizeLimitError);
}

TEST(Enumerate, FilterNames) {
  EXPECT_EQ(parse_filter("connected-min-deg-2"), EnumFilter::ConnectedMinDeg2);
  EXPECT_EQ(to_string(EnumFilter::Connected), "connected");
  EXPECT_THROW(parse_filter("everything"), std::invalid_argument);
}

TEST(CanonicalForm, InvariantUnderSymmetry) {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 200; ++it) {
    const Drawing d = naive::random_drawing(3 + static_cast<int>(rng() % 8), rng);
    const int n = d.n();
    const int shift = static_cast<int>(rng() % n);
    std::vector<Edge> rotated, reflected;
    for (const Edge& e : d.edges()) {
      rotated.emplace_back((e.u - 1 + shift) % n + 1, (e.v - 1 + shift) % n + 1);
      reflected.emplace_back(n + 1 - e.u, n + 1 - e.v);
    }
    ASSERT_EQ(canonical_form(d), canonical_form(Drawing(n, rotated)));
    ASSERT_EQ(canonical_form(d), canonical_form(Drawing(n, reflected)));
  }
  EXPECT_NE(canonical_form(cycle(5)), canonical_form(parse_drawing("n 5\ne 1 2\n")));
}

}  // namespace
}  // namespace outer1
