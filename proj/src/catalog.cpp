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

#include "outer1/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "catalog_data.hpp"

namespace outer1 {

std::string_view to_string(RoleKind k) {
  switch (k) {
    case RoleKind::Solid: return "solid";
    case RoleKind::Hollow: return "hollow";
    case RoleKind::MarkedHollow: return "marked";
  }
  return "hollow";
}

int ConfigPattern::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (vertices[i].label == label) return i;
  }
  return -1;
}

bool ConfigPattern::has_edge(int a, int b) const {
  for (auto [x, y] : edges) {
    if ((x == a && y == b) || (x == b && y == a)) return true;
  }
  return false;
}

bool ConfigPattern::may_merge(int a, int b) const {
  for (auto [x, y] : merges) {
    if ((x == a && y == b) || (x == b && y == a)) return true;
  }
  return false;
}

Vertex Match::at(const ConfigPattern& p, std::string_view label) const {
  const int i = p.index_of(label);
  if (i < 0) throw std::out_of_range("no pattern label " + std::string(label));
  return assignment[i];
}

std::vector<ConfigPattern> parse_catalog(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<ConfigPattern> out;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> CatalogError {
    return CatalogError("catalog line " + std::to_string(lineno) + ": " + msg);
  };
  auto to_int = [&](const std::string& tok) {
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size()) throw fail("bad number '" + tok + "'");
    return value;
  };
  auto current = [&]() -> ConfigPattern& {
    if (out.empty()) throw fail("entry before any 'config' line");
    return out.back();
  };
  auto label = [&](const std::string& name) {
    const int i = current().index_of(name);
    if (i < 0) throw fail("unknown label '" + name + "'");
    return i;
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    const std::string& tag = tok[0];
    if (tag == "config" && tok.size() == 2) {
      out.emplace_back();
      out.back().id = to_int(tok[1]);
    } else if (tag == "v" && (tok.size() == 4 || tok.size() == 5)) {
      PatternVertex pv;
      pv.label = tok[1];
      if (current().index_of(pv.label) >= 0) throw fail("repeated label '" + pv.label + "'");
      if (tok[2] == "solid") {
        pv.role.kind = RoleKind::Solid;
      } else if (tok[2] == "hollow") {
        pv.role.kind = RoleKind::Hollow;
      } else if (tok[2] == "marked") {
        pv.role.kind = RoleKind::MarkedHollow;
      } else {
        throw fail("unknown role '" + tok[2] + "'");
      }
      pv.role.drawn_degree = to_int(tok[3]);
      if (tok.size() == 5) {
        if (pv.role.kind != RoleKind::MarkedHollow) throw fail("degree cap on unmarked vertex");
        pv.role.degree_cap = to_int(tok[4]);
      } else if (pv.role.kind == RoleKind::MarkedHollow) {
        throw fail("marked vertex without degree cap");
      }
      current().vertices.push_back(pv);
    } else if (tag == "pe" && tok.size() == 3) {
      const int a = label(tok[1]);
      const int b = label(tok[2]);
      if (a == b) throw fail("pattern loop");
      if (current().has_edge(a, b)) throw fail("repeated pattern edge");
      current().edges.emplace_back(a, b);
    } else if (tag == "x" && tok.size() == 3) {
      const int a = to_int(tok[1]);
      const int b = to_int(tok[2]);
      const int m = static_cast<int>(current().edges.size());
      if (a < 0 || b < 0 || a >= m || b >= m || a == b) throw fail("bad crossing edge index");
      current().crossings.emplace_back(a, b);
    } else if (tag == "anchor" && tok.size() == 3) {
      current().anchors[tok[1]] = label(tok[2]);
    } else if (tag == "d1" && tok.size() == 3) {
      current().d1_pair = std::make_pair(label(tok[1]), label(tok[2]));
    } else if (tag == "merge" && tok.size() == 3) {
      current().merges.emplace_back(label(tok[1]), label(tok[2]));
    } else {
      throw fail("unrecognised line");
    }
  }
  return out;
}

namespace {

// Cyclic-order interleaving of pattern edges by vertex index.
bool pattern_edges_interleave(std::pair<int, int> e, std::pair<int, int> f) {
  return interleave(Edge(e.first + 1, e.second + 1), Edge(f.first + 1, f.second + 1));
}

// Host-degree bound of an endpoint, "unbounded" as a large value.
int bound_of(const VertexRole& r) { return r.max_host_degree().value_or(1 << 20); }

bool solid_of(const VertexRole& r, int deg) {
  return r.kind == RoleKind::Solid && r.drawn_degree == deg;
}

bool has_light_pair(const ConfigPattern& p, int other_bound, bool allow_three_three) {
  for (auto [a, b] : p.edges) {
    const VertexRole& ra = p.vertices[a].role;
    const VertexRole& rb = p.vertices[b].role;
    if (solid_of(ra, 2) && bound_of(rb) <= other_bound) return true;
    if (solid_of(rb, 2) && bound_of(ra) <= other_bound) return true;
    if (allow_three_three && solid_of(ra, 3) && solid_of(rb, 3)) return true;
  }
  return false;
}

}  // namespace

void validate_catalog(const std::vector<ConfigPattern>& catalog) {
  if (catalog.size() != 17) {
    throw CatalogError("catalog must hold 17 configurations, found " +
                       std::to_string(catalog.size()));
  }
  for (std::size_t k = 0; k < catalog.size(); ++k) {
    const ConfigPattern& p = catalog[k];
    const std::string name = "G" + std::to_string(p.id);
    if (p.id != static_cast<int>(k) + 1) throw CatalogError("configurations out of order at " + name);
    std::vector<int> incidence(p.size(), 0);
    for (auto [a, b] : p.edges) {
      ++incidence[a];
      ++incidence[b];
    }
    for (int i = 0; i < p.size(); ++i) {
      if (incidence[i] != p.vertices[i].role.drawn_degree) {
        throw CatalogError(name + ": drawn degree of " + p.vertices[i].label +
                           " differs from its pattern incidence");
      }
    }
    for (auto [e, f] : p.crossings) {
      if (!pattern_edges_interleave(p.edges[e], p.edges[f])) {
        throw CatalogError(name + ": crossing edges do not interleave in the listed order");
      }
    }
    for (auto [a, b] : p.merges) {
      if (p.vertices[a].role.restricted() || p.vertices[b].role.restricted() || p.has_edge(a, b)) {
        throw CatalogError(name + ": merge pairs must be non-adjacent unmarked hollow vertices");
      }
    }
    // (a) light 2-vertex edge with partner degree <= 7, except G6.
    if (p.id != 6 && !has_light_pair(p, 7, false)) {
      throw CatalogError(name + " lacks an edge uv with d(u)=2 and d(v)<=7");
    }
    if (p.id == 6 && !has_light_pair(p, 0, true)) {
      throw CatalogError("G6 lacks an edge uv with d(u)=d(v)=3");
    }
    // (b) maximal-graph bound, all but G3.
    if (p.id != 3 && !has_light_pair(p, 5, true)) {
      throw CatalogError(name + " lacks an edge with d(u)=2, d(v)<=5 or d(u)=d(v)=3");
    }
    // (c) marked vertices.
    int marked = 0;
    for (const auto& v : p.vertices) {
      if (v.role.kind == RoleKind::MarkedHollow) {
        ++marked;
        if (v.label != "y") throw CatalogError(name + ": marked vertex must be labelled y");
      }
    }
    const bool should_mark = p.id == 3 || p.id == 6 || p.id == 7 || p.id == 12;
    if ((marked == 1) != should_mark || marked > 1) {
      throw CatalogError(name + ": marked-vertex placement violates the G3/G6/G7/G12 rule");
    }
  }
  if (!catalog[2].d1_pair) throw CatalogError("G3 must declare its D1 pair");
  // Marked caps are bounded above by the degree threshold used by the
  // structural argument (d <= 7 forces G3, G6, G7 or G12).
  for (int id : {3, 6, 7, 12}) {
    for (const auto& v : catalog[id - 1].vertices) {
      if (v.role.kind == RoleKind::MarkedHollow && v.role.degree_cap.value_or(0) < 7) {
        throw CatalogError("G" + std::to_string(id) + ": marked cap below 7");
      }
    }
  }
}

const std::vector<ConfigPattern>& load_catalog() {
  static const std::vector<ConfigPattern> catalog = [] {
    auto c = parse_catalog(detail::kCatalogText);
    validate_catalog(c);
    return c;
  }();
  return catalog;
}

const ConfigPattern& pattern(int id) {
  const auto& c = load_catalog();
  if (id < 1 || id > static_cast<int>(c.size())) {
    throw std::out_of_range("configuration id " + std::to_string(id) + " out of range");
  }
  return c[id - 1];
}

std::vector<std::vector<int>> automorphisms(const ConfigPattern& p) {
  std::vector<int> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < p.size() && ok; ++i) {
      const VertexRole& a = p.vertices[i].role;
      const VertexRole& b = p.vertices[perm[i]].role;
      ok = a.kind == b.kind && a.drawn_degree == b.drawn_degree && a.degree_cap == b.degree_cap;
    }
    for (auto [a, b] : p.edges) {
      if (!ok) break;
      ok = p.has_edge(perm[a], perm[b]);
    }
    for (auto [a, b] : p.merges) {
      if (!ok) break;
      ok = p.may_merge(perm[a], perm[b]);
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

const std::vector<std::vector<int>>& cached_automorphisms(const ConfigPattern& p) {
  static const std::vector<std::vector<std::vector<int>>> table = [] {
    std::vector<std::vector<std::vector<int>>> t;
    for (const auto& q : load_catalog()) t.push_back(automorphisms(q));
    return t;
  }();
  const auto& c = load_catalog();
  if (p.id >= 1 && p.id <= static_cast<int>(c.size()) && &c[p.id - 1] == &p) {
    return table[p.id - 1];
  }
  thread_local std::vector<std::vector<int>> scratch;
  scratch = automorphisms(p);
  return scratch;
}

bool is_canonical(const std::vector<Vertex>& a, const std::vector<std::vector<int>>& autos) {
  std::vector<Vertex> image(a.size());
  for (const auto& perm : autos) {
    // image[i] is the host vertex given to pattern vertex i after relabelling.
    for (std::size_t i = 0; i < a.size(); ++i) image[i] = a[perm[i]];
    if (image < a) return false;
  }
  return true;
}

bool cyclically_ordered(const std::vector<Vertex>& seq) {
  const std::size_t k = seq.size();
  if (k < 3) return true;
  int descents = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (seq[(i + 1) % k] < seq[i]) ++descents;
  }
  return descents == 1;
}

// Backtracking in pattern index order with ascending host candidates, so
// matches are produced in lexicographic order of the assignment.
class Matcher {
 public:
  Matcher(const Drawing& d, const ConfigPattern& p, bool check_d2)
      : d_(d), p_(p), check_d2_(check_d2 && p.id >= 6 && p.id <= 17),
        autos_(cached_automorphisms(p)), assign_(p.size(), 0) {
    earlier_nbrs_.resize(p.size());
    for (auto [a, b] : p.edges) {
      if (a < b) earlier_nbrs_[b].push_back(a);
      else earlier_nbrs_[a].push_back(b);
    }
  }

  // Calls `visit` for each canonical match; stops when it returns false.
  void run(const std::function<bool(const Match&)>& visit) {
    visit_ = &visit;
    stop_ = false;
    if (p_.size() == 0 || d_.n() == 0) return;
    extend(0);
  }

 private:
  void extend(int i) {
    if (stop_) return;
    if (i == p_.size()) {
      if (!is_canonical(assign_, autos_)) return;
      Match m{p_.id, assign_};
      if (check_d2_ && !orbit_realizes(m)) return;
      if (!(*visit_)(m)) stop_ = true;
      return;
    }
    const VertexRole& role = p_.vertices[i].role;
    for (Vertex h = 1; h <= d_.n() && !stop_; ++h) {
      if (!role.admits(d_.degree(h))) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (assign_[j] == h && !p_.may_merge(i, j)) ok = false;
      }
      for (int j : earlier_nbrs_[i]) {
        if (!ok) break;
        ok = d_.adjacent(assign_[j], h);
      }
      if (!ok) continue;
      assign_[i] = h;
      extend(i + 1);
    }
  }

  // The drawn order is not automorphism-invariant, so any orbit member may
  // witness the side-condition.
  bool orbit_realizes(const Match& m) const {
    Match image{m.pattern_id, m.assignment};
    for (const auto& perm : autos_) {
      for (std::size_t i = 0; i < image.assignment.size(); ++i) {
        image.assignment[i] = m.assignment[perm[i]];
      }
      if (realizes_drawing(d_, p_, image)) return true;
    }
    return false;
  }

  const Drawing& d_;
  const ConfigPattern& p_;
  bool check_d2_;
  const std::vector<std::vector<int>>& autos_;
  std::vector<Vertex> assign_;
  std::vector<std::vector<int>> earlier_nbrs_;
  const std::function<bool(const Match&)>* visit_ = nullptr;
  bool stop_ = false;
};

}  // namespace

bool realizes_drawing(const Drawing& d, const ConfigPattern& p, const Match& m) {
  for (auto [e, f] : p.crossings) {
    const Edge he(m.assignment[p.edges[e].first], m.assignment[p.edges[e].second]);
    const Edge hf(m.assignment[p.edges[f].first], m.assignment[p.edges[f].second]);
    const Edge* partner = d.crossing_partner(he);
    if (partner == nullptr || *partner != hf) return false;
  }
  std::vector<Vertex> seq = m.assignment;
  // Merged vertices make the order degenerate; the side-condition only
  // concerns G6..G17, which carry no merges.
  std::set<Vertex> distinct(seq.begin(), seq.end());
  if (distinct.size() != seq.size()) return false;
  if (cyclically_ordered(seq)) return true;
  std::reverse(seq.begin(), seq.end());
  return cyclically_ordered(seq);
}

std::vector<Match> find_matches(const Drawing& d, const ConfigPattern& p, bool check_d2) {
  std::vector<Match> out;
  Matcher(d, p, check_d2).run([&](const Match& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::optional<Match> first_match(const Drawing& d, const ConfigPattern& p, bool check_d2) {
  std::optional<Match> out;
  Matcher(d, p, check_d2).run([&](const Match& m) {
    out = m;
    return false;
  });
  return out;
}

bool properly_contains(const Drawing& d, const ConfigPattern& p, Vertex a, Vertex b) {
  bool found = false;
  Matcher(d, p, false).run([&](const Match& m) {
    for (int i = 0; i < p.size(); ++i) {
      if (p.vertices[i].role.restricted() && (m.assignment[i] == a || m.assignment[i] == b)) {
        return true;
      }
    }
    found = true;
    return false;
  });
  return found;
}

}  // namespace outer1
