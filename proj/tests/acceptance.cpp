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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "outer1/catalog.hpp"
#include "outer1/coloring.hpp"
#include "outer1/generators.hpp"
#include "outer1/oracle.hpp"
#include "outer1/structure.hpp"
#include "support/naive.hpp"

#ifdef OUTER1_WITH_CLI
#include "cli.hpp"
#endif

namespace outer1 {
namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

template <typename... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Verdict sharp_bound() {
  const int chi = chromatic_r_dynamic(AbstractGraph::of(sharp_example()), 3, 7);
  return {chi == 6, fmt("chi_3^d(sharp) = %d, expected 6", chi)};
}

Verdict upper_bound_exhaustive() {
  long drawings = 0, classes = 0, bad = 0;
  for (int n = 1; n <= 7; ++n) {
    std::set<std::uint64_t> seen;
    enumerate_drawings(n, EnumFilter::Connected, [&](const Drawing& d) {
      ++drawings;
      if (!seen.insert(canonical_form(d)).second) return;
      ++classes;
      if (chromatic_r_dynamic(AbstractGraph::of(d), 3, 6) < 0) ++bad;
    });
  }
  return {bad == 0, fmt("%ld connected drawings (%ld up to symmetry), %ld need more than 6 colours",
                        drawings, classes, bad)};
}

Verdict list_version_sampled() {
  std::mt19937_64 rng(20260101);
  long runs = 0, bad = 0;
  for (int n = 1; n <= 6; ++n) {
    enumerate_drawings(n, EnumFilter::Connected, [&](const Drawing& d) {
      for (int k = 0; k < 25; ++k) {
        const auto lists = naive::random_lists(n, 6, 12, rng);
        ++runs;
        try {
          const Coloring c = color_list_3_dynamic(d, lists);
          if (!verify_dynamic(d, c, 3).valid() || !verify_lists(d, c, lists).valid() ||
              !naive::is_r_dynamic(d, c, 3)) {
            ++bad;
          }
        } catch (const std::exception&) {
          ++bad;
        }
      }
    });
  }
  return {bad == 0, fmt("%ld list colourings, %ld failures", runs, bad)};
}

template <typename F>
long over_min_deg2(F&& f) {
  long count = 0;
  for (int n = 3; n <= 7; ++n) {
    enumerate_drawings(n, EnumFilter::ConnectedMinDeg2, [&](const Drawing& d) {
      ++count;
      f(d);
    });
  }
  return count;
}

Verdict structure_exhaustive() {
  long bad = 0;
  std::vector<long> by_config(18, 0);
  const long total = over_min_deg2([&](const Drawing& d) {
    try {
      ++by_config[find_structure(d).pattern_id];
    } catch (const std::exception&) {
      ++bad;
    }
  });
  std::ostringstream hits;
  for (int i = 1; i <= 17; ++i) {
    if (by_config[i]) hits << " G" << i << ":" << by_config[i];
  }
  return {bad == 0, fmt("%ld drawings, %ld without a configuration; first hits", total, bad) +
                        hits.str()};
}

Verdict light_edges_exhaustive() {
  long bad = 0, maximal = 0, bad_maximal = 0;
  const long total = over_min_deg2([&](const Drawing& d) {
    try {
      if (find_light_edge(d).degree_sum > 9) ++bad;
      if (is_maximal(d)) {
        ++maximal;
        if (find_light_edge(d, true).degree_sum > 7) ++bad_maximal;
      }
    } catch (const std::exception&) {
      ++bad;
    }
  });
  return {bad == 0 && bad_maximal == 0,
          fmt("%ld drawings, %ld above 9; %ld maximal, %ld above 7", total, bad, maximal,
              bad_maximal)};
}

Verdict reducibility_exhaustive() {
  long total = 0, bad = 0;
  for (int n = 1; n <= 7; ++n) {
    enumerate_drawings(n, EnumFilter::All, [&](const Drawing& d) {
      ++total;
      try {
        const ReductionStep s = find_reduction(d);
        if (s.deleted.empty()) ++bad;
        delete_vertices(d, s.deleted);
      } catch (const std::exception&) {
        ++bad;
      }
    });
  }
  return {bad == 0, fmt("%ld drawings, %ld without a reducible configuration", total, bad)};
}

Verdict minimality() {
  long bad = 0;
  std::ostringstream notes;
  auto check = [&](const std::string& name, const Drawing& d, int own) {
    for (int j = 1; j <= 17; ++j) {
      if (first_match(d, pattern(j)).has_value() != (j == own)) {
        ++bad;
        notes << " " << name << "/G" << j;
      }
    }
  };
  for (int i = 2; i <= 17; ++i) check("H" + std::to_string(i), h_family(i), i);
  check("C12", cycle(12), 1);
  return {bad == 0, fmt("H2..H17 and C12 against all 17 configurations, %ld mismatches", bad) +
                        notes.str()};
}

bool solid(const VertexRole& r, int k) { return r.kind == RoleKind::Solid && r.drawn_degree == k; }

int cap(const VertexRole& r) {
  if (r.kind == RoleKind::Solid) return r.drawn_degree;
  if (r.kind == RoleKind::MarkedHollow) return *r.degree_cap;
  return 1 << 20;
}

Verdict catalog_consistency() {
  try {
    validate_catalog(load_catalog());
  } catch (const std::exception& e) {
    return {false, std::string("self-check: ") + e.what()};
  }
  int fails = 0;
  for (const ConfigPattern& p : load_catalog()) {
    bool a = false, b = false;
    for (auto [s, t] : p.edges) {
      const auto& rs = p.vertices[s].role;
      const auto& rt = p.vertices[t].role;
      a = a || (solid(rs, 2) && cap(rt) <= 7) || (solid(rt, 2) && cap(rs) <= 7);
      b = b || (solid(rs, 2) && cap(rt) <= 5) || (solid(rt, 2) && cap(rs) <= 5) ||
          (solid(rs, 3) && solid(rt, 3));
    }
    int marked = 0;
    bool marked_y = true;
    for (const auto& v : p.vertices) {
      if (v.role.kind == RoleKind::MarkedHollow) {
        ++marked;
        marked_y = marked_y && v.label == "y";
      }
    }
    const bool want_marked = p.id == 3 || p.id == 6 || p.id == 7 || p.id == 12;
    if (p.id != 6 && !a) ++fails;
    if (p.id != 3 && !b) ++fails;
    if ((marked == 1 && marked_y) != want_marked || marked > 1) ++fails;
  }
  return {fails == 0, fmt("17 patterns, facts (a) (b) (c): %d violations", fails)};
}

Verdict property_suites() {
  std::mt19937_64 rng(9);
  long disagreements = 0;
  for (int it = 0; it < 500; ++it) {
    const Drawing d = naive::random_drawing(1 + static_cast<int>(rng() % 8), rng);
    for (const ConfigPattern& p : load_catalog()) {
      std::set<std::vector<Vertex>> got;
      for (const Match& m : find_matches(d, p)) got.insert(m.assignment);
      if (got != naive::matches(d, p)) ++disagreements;
    }
  }
  long monotone_bad = 0;
  for (int it = 0; it < 500; ++it) {
    const Drawing d = naive::random_drawing(2 + static_cast<int>(rng() % 9), rng);
    Coloring c(d.n() + 1, kUncolored);
    for (Vertex v = 1; v <= d.n(); ++v) c[v] = 1 + static_cast<int>(rng() % 5);
    for (int r = 2; r <= 6; ++r) {
      if (verify_dynamic(d, c, r).valid() && !verify_dynamic(d, c, r - 1).valid()) ++monotone_bad;
    }
  }
  long nondeterministic = 0;
  for (int it = 0; it < 50; ++it) {
    const Drawing d = random_outer_1_planar(6 + it % 20, (it % 10) / 9.0, it);
    const auto lists = naive::random_lists(d.n(), 6, 12, rng);
    if (color_list_3_dynamic(d, lists) != color_list_3_dynamic(d, lists)) ++nondeterministic;
#ifdef OUTER1_WITH_CLI
    std::ostringstream o1, o2, e1, e2;
    std::istringstream i1(to_text(d)), i2(to_text(d));
    cli::run({"color"}, i1, o1, e1);
    cli::run({"color"}, i2, o2, e2);
    if (o1.str() != o2.str() || o1.str().empty()) ++nondeterministic;
#endif
  }
  return {disagreements == 0 && monotone_bad == 0 && nondeterministic == 0,
          fmt("matcher vs naive: %ld disagreements over 500 drawings; monotonicity: %ld "
              "breaks over 500 colourings; reruns: %ld differences",
              disagreements, monotone_bad, nondeterministic)};
}

}  // namespace
}  // namespace outer1

int main() {
  using namespace outer1;
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"sharp bound", sharp_bound},
      {"upper bound, exhaustive n<=7", upper_bound_exhaustive},
      {"list version, sampled n<=6", list_version_sampled},
      {"configuration search, exhaustive n<=7", structure_exhaustive},
      {"light edges, exhaustive n<=7", light_edges_exhaustive},
      {"reducibility, exhaustive n<=7", reducibility_exhaustive},
      {"minimality of H_i and C12", minimality},
      {"catalog consistency", catalog_consistency},
      {"property suites", property_suites},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu: %s  %s: %s (%.1fs)\n", i + 1, v.pass ? "PASS" : "FAIL",
                criteria[i].first, v.detail.c_str(), secs);
    std::fflush(stdout);
    failed += v.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
