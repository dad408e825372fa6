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

#include "outer1/coloring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace outer1 {

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::Uncolored: return "uncolored";
    case ViolationKind::Improper: return "improper";
    case ViolationKind::TooFewColors: return "too-few-colors";
    case ViolationKind::NotInList: return "not-in-list";
  }
  return "?";
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << "vertex " << vertex << ": " << to_string(kind);
  if (kind == ViolationKind::Improper) os << " with " << other;
  if (kind == ViolationKind::TooFewColors) os << " (" << seen << " < " << required << ")";
  return os.str();
}

namespace {

void check_vertex(const Drawing& d, const Coloring& c, int r, Vertex v, DynamicVerdict& out) {
  if (c[v] == kUncolored) {
    out.violations.push_back({ViolationKind::Uncolored, v});
    return;
  }
  std::set<int> seen;
  for (Vertex w : d.neighbors(v)) {
    if (c[w] == kUncolored) continue;
    if (c[w] == c[v] && v < w) out.violations.push_back({ViolationKind::Improper, v, w});
    seen.insert(c[w]);
  }
  const int need = std::min(r, d.degree(v));
  if (static_cast<int>(seen.size()) < need) {
    out.violations.push_back(
        {ViolationKind::TooFewColors, v, 0, static_cast<int>(seen.size()), need});
  }
}

}  // namespace

DynamicVerdict verify_dynamic(const Drawing& d, const Coloring& c, int r,
                              std::span<const Vertex> only) {
  if (static_cast<int>(c.size()) < d.n() + 1) {
    throw std::invalid_argument("coloring does not cover every vertex");
  }
  DynamicVerdict out;
  if (only.empty()) {
    for (Vertex v = 1; v <= d.n(); ++v) check_vertex(d, c, r, v, out);
  } else {
    for (Vertex v : only) check_vertex(d, c, r, v, out);
  }
  return out;
}

DynamicVerdict verify_lists(const Drawing& d, const Coloring& c, const ListAssignment& lists) {
  DynamicVerdict out;
  for (Vertex v = 1; v <= d.n(); ++v) {
    if (c[v] == kUncolored) continue;
    const bool ok = v < static_cast<int>(lists.size()) &&
                    std::find(lists[v].begin(), lists[v].end(), c[v]) != lists[v].end();
    if (!ok) out.violations.push_back({ViolationKind::NotInList, v});
  }
  return out;
}

ListAssignment parse_lists(std::string_view text, int n) {
  ListAssignment lists(n + 1);
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag != "l") throw DrawingError("unknown line tag '" + tag + "'", lineno);
    long v = 0;
    if (!(ls >> v)) throw DrawingError("expected vertex", lineno);
    if (v < 1 || v > n) throw DrawingError("vertex out of range", lineno);
    if (!lists[v].empty()) throw DrawingError("duplicate list", lineno);
    std::string tok;
    while (ls >> tok) {
      if (tok.find_first_not_of("0123456789") != std::string::npos) {
        throw DrawingError("bad colour '" + tok + "'", lineno);
      }
      const int col = std::stoi(tok);
      if (std::find(lists[v].begin(), lists[v].end(), col) != lists[v].end()) {
        throw DrawingError("repeated colour", lineno);
      }
      lists[v].push_back(col);
    }
  }
  return lists;
}

ListAssignment uniform_lists(int n, int colors) {
  ListAssignment lists(n + 1);
  for (Vertex v = 1; v <= n; ++v) {
    for (int k = 1; k <= colors; ++k) lists[v].push_back(k);
  }
  return lists;
}

namespace {

// One vertex of a literal rule: colour `target` avoiding the colours of the
// `avoid` anchors and of the remaining neighbours of the `avoid_nbrs` ones.
struct Rule {
  const char* target;
  std::vector<const char*> avoid;
  std::vector<const char*> avoid_nbrs = {};
};

std::vector<Rule> literal_rules(const Drawing& d, const ReductionStep& s) {
  auto deg = [&](const char* label) { return d.degree(s.anchor(label)); };
  const bool x4 = s.has("x") && deg("x") >= 4;
  const bool y4 = s.has("y") && deg("y") >= 4;
  switch (s.kind) {
    case ReductionKind::P1Pendant:
      if (!s.has("v")) return {{"u", {}}};
      if (deg("v") >= 4) return {{"u", {"v"}}};
      return {{"u", {"v"}, {"v"}}};
    case ReductionKind::P2AdjacentDeg2:
      if (x4) {
        if (y4) return {{"u", {"x", "y"}}, {"v", {"x", "u", "y"}}};
        return {{"u", {"x", "y"}}, {"v", {"x", "u", "y"}, {"y"}}};
      }
      if (y4) return {{"v", {"x", "y"}}, {"u", {"y", "v", "x"}, {"x"}}};
      return {{"u", {"x", "y"}, {"x"}}, {"v", {"x", "y", "u"}, {"y"}}};
    case ReductionKind::P3TriangleDeg2:
      if (x4 && y4) return {{"u", {"x", "y"}}};
      if (x4) return {{"u", {"x", "y", "y1"}}};
      if (y4) return {{"u", {"x", "y", "x1"}}};
      return {{"u", {"x", "y", "x1", "y1"}}};
    case ReductionKind::P4G3:
      if (x4 && y4) return {{"u", {"x", "y"}}};
      if (x4) return {{"u", {"x", "y", "v", "y1"}}};
      if (y4) return {{"u", {"x", "y", "v", "x1"}}};
      return {{"u", {"x", "y", "x1", "y1", "v"}}};
    case ReductionKind::P5G6:
      if (x4 && y4) return {{"u", {"x", "y", "v"}}};
      if (x4) return {{"u", {"x", "y", "v", "y1"}}};
      if (y4) return {{"u", {"x", "y", "v", "x1"}}};
      return {{"u", {"x", "y", "x1", "y1", "v"}}};
    case ReductionKind::P6G7:
      if (x4 && y4) return {{"v", {"x", "y", "w"}}, {"u", {"x", "y", "w", "v"}}};
      if (x4) return {{"v", {"x", "y", "w", "y1"}}, {"u", {"x", "y", "w", "v"}}};
      if (y4) return {{"v", {"x", "y", "w", "x1"}}, {"u", {"x", "y", "w", "v"}}};
      return {{"v", {"x", "y", "x1", "y1", "w"}}, {"u", {"x", "y", "w", "v"}}};
    case ReductionKind::P7G8:
      if (x4 && y4) return {{"w", {"x", "y", "v"}}, {"u", {"x", "y", "w", "v"}}};
      if (x4) return {{"w", {"x", "y", "v", "y1"}}, {"u", {"x", "y", "w", "v"}}};
      if (y4) return {{"w", {"x", "y", "v"}}, {"u", {"x", "y", "w", "v", "x1"}}};
      return {{"w", {"x", "y", "v", "y1"}}, {"u", {"x", "y", "w", "v", "x1"}}};
    case ReductionKind::P8G9:
      if (x4 && y4) return {{"w", {"x", "y", "v", "z"}}, {"u", {"x", "y", "w", "v"}}};
      if (x4) return {{"w", {"x", "y", "v", "y1", "z"}}, {"u", {"x", "y", "w", "v"}}};
      if (y4) return {{"w", {"x", "y", "v", "z"}}, {"u", {"x", "y", "w", "v", "x1"}}};
      return {{"w", {"x", "y", "v", "z", "y1"}}, {"u", {"x", "y", "w", "v", "x1"}}};
    case ReductionKind::P9G10:
      if (y4) return {{"w", {"x", "y", "z", "v"}}, {"u", {"x", "y", "w", "v", "z"}}};
      return {{"w", {"x", "y", "z", "v", "y1"}}, {"u", {"x", "y", "w", "v", "z"}}};
    case ReductionKind::P10G11:
      if (x4 && y4) {
        return {{"u", {"x", "y", "z", "w"}},
                {"v", {"x", "y", "u", "w"}},
                {"a", {"x", "y", "u", "v"}}};
      }
      if (x4) {
        return {{"u", {"x", "y", "z", "w"}},
                {"a", {"w", "y", "y1", "u", "x"}},
                {"v", {"x", "y", "u", "w", "a"}}};
      }
      if (y4) {
        return {{"u", {"y", "x", "w", "z"}},
                {"v", {"z", "x", "x1", "u", "y"}},
                {"a", {"y", "x", "u", "z", "v"}}};
      }
      return {{"v", {"x", "x1", "z", "w", "y"}},
              {"a", {"v", "y", "y1", "w", "x"}},
              {"u", {"x", "z", "w", "v", "a", "y"}}};
  }
  return {};
}

class Extender {
 public:
  Extender(const Drawing& d, const ReductionStep& s, Coloring& c, const ListAssignment& lists)
      : d_(d), s_(s), c_(c), lists_(lists) {}

  bool run_rules() {
    for (const Rule& rule : literal_rules(d_, s_)) {
      const Vertex t = s_.anchor(rule.target);
      std::set<int> forbidden = safety_set(t);
      for (const char* label : rule.avoid) add_color(forbidden, label);
      for (const char* label : rule.avoid_nbrs) {
        if (!s_.has(label)) continue;
        for (Vertex q : d_.neighbors(s_.anchor(label))) {
          if (!is_deleted(q) && c_[q] != kUncolored) forbidden.insert(c_[q]);
        }
      }
      const int col = smallest_allowed(t, forbidden);
      if (col == kUncolored) return false;
      c_[t] = col;
    }
    return locally_valid(s_.deleted);
  }

  // Recolouring branches for G11 once v and a hold their colours.
  bool run_g11_branches() {
    const Coloring saved = c_;
    auto at = [&](const char* label) { return s_.anchor(label); };
    auto colour = [&](const char* label) {
      return s_.has(label) ? c_[at(label)] : kUncolored;
    };
    const Vertex u = at("u"), v = at("v"), a = at("a"), z = at("z"), w = at("w");
    if (c_[v] == kUncolored || c_[a] == kUncolored) return false;
    const int cx = colour("x"), cy = colour("y"), cz = c_[z], cw = c_[w], cv = c_[v],
              ca = c_[a];
    const std::vector<Vertex> touched = {u, v, a, z, w};

    if (in_list(u, cz)) {
      c_[u] = cz;
      c_[z] = smallest_allowed(z, {cx, cz, cw, cv, cy, colour("x1")});
      if (c_[z] != kUncolored && locally_valid(touched)) return true;
      c_ = saved;
    }
    if (in_list(u, ca)) {
      c_[u] = ca;
      c_[a] = smallest_allowed(a, {cx, cw, cv, ca, cy, colour("y1")});
      if (c_[a] != kUncolored && locally_valid(touched)) return true;
      c_ = saved;
    }
    if (in_list(z, cw) && in_list(a, cw)) {
      c_[z] = cw;
      c_[a] = cw;
      c_[w] = smallest_allowed(w, {cx, cw, cy, colour("y1")});
      if (c_[w] != kUncolored) {
        c_[v] = smallest_allowed(v, {cx, cw, cy, c_[w], colour("x1")});
        if (c_[v] != kUncolored) {
          c_[u] = smallest_allowed(u, {cx, cw, cy, c_[v], c_[w]});
          if (c_[u] != kUncolored && locally_valid(touched)) return true;
        }
      }
      c_ = saved;
    }
    return false;
  }

  // Tries every colouring of `free` from the lists, in lexicographic order
  // of the smallest-first list order.
  bool exhaustive(std::vector<Vertex> free) {
    std::sort(free.begin(), free.end());
    for (Vertex v : free) c_[v] = kUncolored;
    return search(free, 0);
  }

 private:
  bool is_deleted(Vertex v) const {
    return std::find(s_.deleted.begin(), s_.deleted.end(), v) != s_.deleted.end();
  }

  bool in_list(Vertex v, int col) const {
    return col != kUncolored &&
           std::find(lists_[v].begin(), lists_[v].end(), col) != lists_[v].end();
  }

  void add_color(std::set<int>& out, const char* label) const {
    if (s_.has(label) && c_[s_.anchor(label)] != kUncolored) out.insert(c_[s_.anchor(label)]);
  }

  // Colours that would make t clash with a neighbour, or leave a neighbour
  // short of distinct colours when t is its best chance to add one.
  std::set<int> safety_set(Vertex t) const {
    std::set<int> out;
    for (Vertex q : d_.neighbors(t)) {
      if (c_[q] != kUncolored) out.insert(c_[q]);
      std::set<int> seen;
      for (Vertex p : d_.neighbors(q)) {
        if (p != t && c_[p] != kUncolored) seen.insert(c_[p]);
      }
      if (static_cast<int>(seen.size()) < std::min(3, d_.degree(q))) {
        out.insert(seen.begin(), seen.end());
      }
    }
    return out;
  }

  int smallest_allowed(Vertex t, const std::set<int>& forbidden) const {
    int best = kUncolored;
    for (int col : lists_[t]) {
      if (forbidden.count(col) == 0 && (best == kUncolored || col < best)) best = col;
    }
    return best;
  }

  bool locally_valid(std::span<const Vertex> changed) const {
    std::set<Vertex> region;
    for (Vertex v : changed) {
      region.insert(v);
      for (Vertex w : d_.neighbors(v)) region.insert(w);
    }
    const std::vector<Vertex> only(region.begin(), region.end());
    if (!verify_dynamic(d_, c_, 3, only).valid()) return false;
    for (Vertex v : changed) {
      if (!in_list(v, c_[v])) return false;
    }
    return true;
  }

  bool search(const std::vector<Vertex>& free, std::size_t i) {
    if (i == free.size()) return locally_valid(free);
    const Vertex v = free[i];
    std::vector<int> options(lists_[v].begin(), lists_[v].end());
    std::sort(options.begin(), options.end());
    for (int col : options) {
      bool clash = false;
      for (Vertex w : d_.neighbors(v)) clash = clash || c_[w] == col;
      if (clash) continue;
      c_[v] = col;
      if (search(free, i + 1)) return true;
    }
    c_[v] = kUncolored;
    return false;
  }

  const Drawing& d_;
  const ReductionStep& s_;
  Coloring& c_;
  const ListAssignment& lists_;
};

}  // namespace

Coloring extend_step(const Drawing& d, const ReductionStep& s, Coloring c,
                     const ListAssignment& lists, ColoringStats* stats) {
  if (static_cast<int>(c.size()) != d.n() + 1) {
    throw std::invalid_argument("partial coloring has the wrong size");
  }
  if (static_cast<int>(lists.size()) < d.n() + 1) {
    throw std::invalid_argument("list assignment does not cover every vertex");
  }
  for (Vertex v : s.deleted) c[v] = kUncolored;
  if (stats) {
    ++stats->steps;
    ++stats->by_kind[static_cast<int>(s.kind)];
  }
  const Coloring start = c;
  Extender ext(d, s, c, lists);
  if (ext.run_rules()) return c;
  if (s.kind == ReductionKind::P10G11) {
    if (ext.run_g11_branches()) {
      if (stats) ++stats->recolorings;
      return c;
    }
  }
  c = start;
  std::vector<Vertex> free = s.deleted;
  if (s.kind == ReductionKind::P10G11) {
    free.push_back(s.anchor("z"));
    free.push_back(s.anchor("w"));
  }
  if (stats) ++stats->fallbacks;
  if (ext.exhaustive(free)) return c;
  throw ExtensionFailure("no extension for " + std::string(to_string(s.kind)) + " step");
}

Coloring color_list_3_dynamic(const Drawing& d, const ListAssignment& lists,
                              ColoringStats* stats) {
  if (static_cast<int>(lists.size()) < d.n() + 1) {
    throw ListTooSmall("list assignment does not cover every vertex");
  }
  for (Vertex v = 1; v <= d.n(); ++v) {
    const std::set<int> distinct(lists[v].begin(), lists[v].end());
    if (distinct.size() < 6) {
      throw ListTooSmall("list of vertex " + std::to_string(v) + " has fewer than 6 colours");
    }
  }

  struct Frame {
    Drawing drawing;
    ReductionStep step;
    std::vector<Vertex> original;  // child vertex -> this frame's vertex
    std::vector<Vertex> root;      // this frame's vertex -> input vertex
  };
  std::vector<Frame> frames;
  Drawing cur = d;
  std::vector<Vertex> root(d.n() + 1);
  for (Vertex v = 0; v <= d.n(); ++v) root[v] = v;
  while (cur.n() > 0) {
    ReductionStep step = find_reduction(cur);
    SubDrawing sub = induced_without(cur, step.deleted);
    std::vector<Vertex> child_root(sub.drawing.n() + 1, 0);
    for (Vertex i = 1; i <= sub.drawing.n(); ++i) child_root[i] = root[sub.original[i]];
    frames.push_back({std::move(cur), std::move(step), std::move(sub.original), std::move(root)});
    cur = std::move(sub.drawing);
    root = std::move(child_root);
  }

  Coloring c(1, kUncolored);
  for (auto it = frames.rbegin(); it != frames.rend(); ++it) {
    const int n = it->drawing.n();
    Coloring lifted(n + 1, kUncolored);
    for (Vertex i = 1; i < static_cast<int>(it->original.size()); ++i) {
      lifted[it->original[i]] = c[i];
    }
    ListAssignment local(n + 1);
    for (Vertex v = 1; v <= n; ++v) local[v] = lists[it->root[v]];
    c = extend_step(it->drawing, it->step, std::move(lifted), local, stats);
  }
  if (!verify_dynamic(d, c, 3).valid() || !verify_lists(d, c, lists).valid()) {
    throw ExtensionFailure("final coloring failed verification");
  }
  return c;
}

}  // namespace outer1
