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

#include "outer1/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace outer1 {

namespace {

std::vector<std::vector<Vertex>> adjacency(const AbstractGraph& g) {
  std::vector<std::vector<Vertex>> adj(g.n + 1);
  for (const Edge& e : g.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

void require_size(int n, int cap, const char* what) {
  if (n > cap) {
    throw SizeLimitError(std::string(what) + " is limited to n <= " + std::to_string(cap) +
                         " (got " + std::to_string(n) + ")");
  }
}

// Backtracking search for an r-dynamic colouring with per-vertex candidate
// colours. With `symmetric`, candidates are the palette 1..k and a vertex may
// open at most one new colour beyond those used so far.
class DynamicSearch {
 public:
  DynamicSearch(const AbstractGraph& g, int r) : g_(g), r_(r), adj_(adjacency(g)) {
    order_.resize(g.n);
    std::iota(order_.begin(), order_.end(), 1);
    // Degree-sorted, then grown so that each vertex tends to touch placed ones.
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return adj_[a].size() > adj_[b].size(); });
    color_.assign(g.n + 1, 0);
  }

  bool with_palette(int k) {
    k_ = k;
    lists_ = nullptr;
    return place(0, 0);
  }

  bool with_lists(const ListAssignment& lists) {
    lists_ = &lists;
    return place(0, 0);
  }

 private:
  bool feasible_around(Vertex v) const {
    auto ok_at = [&](Vertex w) {
      const int need = std::min<int>(r_, static_cast<int>(adj_[w].size()));
      int open = 0;
      int seen[64];
      int distinct = 0;
      for (Vertex x : adj_[w]) {
        const int c = color_[x];
        if (c == 0) {
          ++open;
          continue;
        }
        bool dup = false;
        for (int i = 0; i < distinct && !dup; ++i) dup = seen[i] == c;
        if (!dup && distinct < 64) seen[distinct++] = c;
      }
      return distinct + open >= need;
    };
    if (!ok_at(v)) return false;
    for (Vertex w : adj_[v]) {
      if (!ok_at(w)) return false;
    }
    return true;
  }

  bool try_color(std::size_t i, Vertex v, int c, int used) {
    for (Vertex w : adj_[v]) {
      if (color_[w] == c) return false;
    }
    color_[v] = c;
    if (feasible_around(v) && place(i + 1, std::max(used, c))) return true;
    color_[v] = 0;
    return false;
  }

  bool place(std::size_t i, int used) {
    if (i == order_.size()) return true;
    const Vertex v = order_[i];
    if (lists_ != nullptr) {
      for (int c : (*lists_)[v]) {
        if (try_color(i, v, c, used)) return true;
      }
      return false;
    }
    const int top = std::min(k_, used + 1);
    for (int c = 1; c <= top; ++c) {
      if (try_color(i, v, c, used)) return true;
    }
    return false;
  }

  const AbstractGraph& g_;
  int r_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Vertex> order_;
  std::vector<int> color_;
  int k_ = 0;
  const ListAssignment* lists_ = nullptr;
};

bool proper_colorable(const std::vector<std::vector<Vertex>>& adj, std::vector<int>& color,
                      Vertex v, int k, int used) {
  if (v == static_cast<int>(adj.size())) return true;
  for (int c = 1; c <= std::min(k, used + 1); ++c) {
    bool clash = false;
    for (Vertex w : adj[v]) clash = clash || (w < v && color[w] == c);
    if (clash) continue;
    color[v] = c;
    if (proper_colorable(adj, color, v + 1, k, std::max(used, c))) return true;
  }
  color[v] = 0;
  return false;
}

bool order_is_outer_1_plane(const std::vector<int>& pos, const std::vector<Edge>& edges,
                            std::vector<int>& cross) {
  std::fill(cross.begin(), cross.end(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge e(pos[edges[i].u], pos[edges[i].v]);
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge f(pos[edges[j].u], pos[edges[j].v]);
      if (!interleave(e, f)) continue;
      if (++cross[i] > 1 || ++cross[j] > 1) return false;
    }
  }
  return true;
}

}  // namespace

AbstractGraph AbstractGraph::of(const Drawing& d) {
  return AbstractGraph{d.n(), std::vector<Edge>(d.edges().begin(), d.edges().end())};
}

AbstractGraph AbstractGraph::parse(std::string_view text) {
  auto parsed = parse_edge_list(text);
  std::sort(parsed.edges.begin(), parsed.edges.end());
  return AbstractGraph{parsed.n, std::move(parsed.edges)};
}

int chromatic_r_dynamic(const AbstractGraph& g, int r, int k_max) {
  require_size(g.n, kMaxExactVertices, "chromatic_r_dynamic");
  if (g.n == 0) return 0;
  DynamicSearch search(g, r);
  for (int k = 1; k <= k_max; ++k) {
    if (search.with_palette(k)) return k;
  }
  return -1;
}

int chromatic_number(const AbstractGraph& g) {
  require_size(g.n, kMaxExactVertices, "chromatic_number");
  if (g.n == 0) return 0;
  auto adj = adjacency(g);
  for (int k = 1;; ++k) {
    std::vector<int> color(g.n + 1, 0);
    if (proper_colorable(adj, color, 1, k, 0)) return k;
  }
}

bool is_list_colorable(const AbstractGraph& g, const ListAssignment& lists, int r) {
  require_size(g.n, kMaxExactVertices, "is_list_colorable");
  if (g.n == 0) return true;
  if (static_cast<int>(lists.size()) < g.n + 1) {
    throw std::invalid_argument("list assignment does not cover every vertex");
  }
  return DynamicSearch(g, r).with_lists(lists);
}

bool is_outer_1_planar(const AbstractGraph& g) {
  require_size(g.n, kMaxRecognitionVertices, "is_outer_1_planar");
  if (g.n <= 3) return true;
  std::vector<Vertex> rest(g.n - 1);
  std::iota(rest.begin(), rest.end(), 2);
  std::vector<int> pos(g.n + 1);
  std::vector<int> cross(g.edges.size());
  pos[1] = 1;
  do {
    if (rest.front() > rest.back()) continue;  // reflections
    for (std::size_t i = 0; i < rest.size(); ++i) pos[rest[i]] = static_cast<int>(i) + 2;
    if (order_is_outer_1_plane(pos, g.edges, cross)) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

bool is_maximal(const Drawing& d) {
  require_size(d.n(), kMaxRecognitionVertices, "is_maximal");
  AbstractGraph g = AbstractGraph::of(d);
  std::vector<int> identity(d.n() + 1);
  std::iota(identity.begin(), identity.end(), 0);
  for (Vertex a = 1; a <= d.n(); ++a) {
    for (Vertex b = a + 1; b <= d.n(); ++b) {
      if (d.adjacent(a, b)) continue;
      AbstractGraph h = g;
      h.edges.emplace_back(a, b);
      std::vector<int> cross(h.edges.size());
      if (order_is_outer_1_plane(identity, h.edges, cross)) return false;
      if (is_outer_1_planar(h)) return false;
    }
  }
  return true;
}

EnumFilter parse_filter(std::string_view name) {
  if (name == "all") return EnumFilter::All;
  if (name == "connected") return EnumFilter::Connected;
  if (name == "connected-min-deg-2") return EnumFilter::ConnectedMinDeg2;
  throw std::invalid_argument("unknown filter '" + std::string(name) + "'");
}

std::string_view to_string(EnumFilter f) {
  switch (f) {
    case EnumFilter::All: return "all";
    case EnumFilter::Connected: return "connected";
    case EnumFilter::ConnectedMinDeg2: return "connected-min-deg-2";
  }
  return "all";
}

void enumerate_drawings(int n, EnumFilter filter, const std::function<void(const Drawing&)>& visit) {
  require_size(n, kMaxEnumerationVertices, "enumerate_drawings");
  if (n < 1) return;
  std::vector<Edge> chords;
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) chords.emplace_back(a, b);
  }
  const std::size_t m = chords.size();
  std::vector<std::vector<int>> crossing_with(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && interleave(chords[i], chords[j])) crossing_with[i].push_back(static_cast<int>(j));
    }
  }
  std::vector<char> chosen(m, 0);
  std::vector<int> cross(m, 0);
  std::vector<int> degree(n + 1, 0);
  std::vector<int> parent(n + 1);

  auto emit = [&] {
    if (filter == EnumFilter::ConnectedMinDeg2) {
      for (Vertex v = 1; v <= n; ++v) {
        if (degree[v] < 2) return;
      }
    }
    if (filter != EnumFilter::All) {
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
      };
      int parts = n;
      for (std::size_t i = 0; i < m; ++i) {
        if (!chosen[i]) continue;
        const int a = find(chords[i].u);
        const int b = find(chords[i].v);
        if (a != b) {
          parent[a] = b;
          --parts;
        }
      }
      if (parts != 1) return;
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < m; ++i) {
      if (chosen[i]) edges.push_back(chords[i]);
    }
    visit(Drawing(n, std::move(edges)));
  };

  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == m) {
      emit();
      return;
    }
    rec(i + 1);
    int hits = 0;
    for (int j : crossing_with[i]) {
      if (!chosen[j]) continue;
      if (cross[j] > 0 || ++hits > 1) return;
    }
    chosen[i] = 1;
    for (int j : crossing_with[i]) {
      if (chosen[j]) {
        ++cross[j];
        ++cross[i];
      }
    }
    ++degree[chords[i].u];
    ++degree[chords[i].v];
    rec(i + 1);
    --degree[chords[i].u];
    --degree[chords[i].v];
    for (int j : crossing_with[i]) {
      if (chosen[j]) {
        --cross[j];
        --cross[i];
      }
    }
    chosen[i] = 0;
  };
  rec(0);
}

std::vector<Drawing> enumerate_drawings(int n, EnumFilter filter) {
  std::vector<Drawing> out;
  enumerate_drawings(n, filter, [&](const Drawing& d) { out.push_back(d); });
  return out;
}

std::uint64_t canonical_form(const Drawing& d) {
  const int n = d.n();
  if (n > 11) throw SizeLimitError("canonical_form is limited to n <= 11");
  auto bit = [n](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    // Lexicographic index of chord (a,b) among all pairs of 1..n.
    const int before = (a - 1) * n - (a - 1) * a / 2;
    return before + (b - a - 1);
  };
  std::uint64_t best = ~std::uint64_t{0};
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (int shift = 0; shift < n; ++shift) {
      auto map = [&](Vertex v) {
        const int base = reflect ? n - v : v - 1;
        return (base + shift) % n + 1;
      };
      std::uint64_t mask = 0;
      for (const Edge& e : d.edges()) mask |= std::uint64_t{1} << bit(map(e.u), map(e.v));
      best = std::min(best, mask);
    }
  }
  return best;
}

}  // namespace outer1
