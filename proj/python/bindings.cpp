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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "outer1/catalog.hpp"
#include "outer1/coloring.hpp"
#include "outer1/generators.hpp"
#include "outer1/oracle.hpp"
#include "outer1/structure.hpp"

namespace py = pybind11;
using namespace outer1;

namespace {

using EdgePair = std::pair<Vertex, Vertex>;

Drawing make_drawing(int n, const std::vector<EdgePair>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) es.emplace_back(u, v);
  return Drawing(n, std::move(es));
}

std::vector<EdgePair> edge_pairs(std::span<const Edge> edges) {
  std::vector<EdgePair> out;
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

// Python callers index colours and lists from vertex 1 without a padding slot.
Coloring padded(const Drawing& d, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != d.n()) {
    throw py::value_error("expected " + std::to_string(d.n()) + " colours");
  }
  Coloring c{kUncolored};
  c.insert(c.end(), colors.begin(), colors.end());
  return c;
}

ListAssignment padded_lists(const Drawing& d, const std::vector<std::vector<int>>& lists) {
  if (static_cast<int>(lists.size()) != d.n()) {
    throw py::value_error("expected " + std::to_string(d.n()) + " lists");
  }
  ListAssignment out{{}};
  out.insert(out.end(), lists.begin(), lists.end());
  return out;
}

py::dict match_dict(const Match& m) {
  const ConfigPattern& p = pattern(m.pattern_id);
  py::dict assignment;
  for (int i = 0; i < p.size(); ++i) assignment[py::str(p.vertices[i].label)] = m.assignment[i];
  py::dict out;
  out["config"] = m.pattern_id;
  out["name"] = "G" + std::to_string(m.pattern_id);
  out["assignment"] = assignment;
  return out;
}

py::list violations(const DynamicVerdict& v) {
  py::list out;
  for (const Violation& x : v.violations) {
    py::dict item;
    item["vertex"] = x.vertex;
    item["kind"] = std::string(to_string(x.kind));
    item["message"] = x.describe();
    out.append(item);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_outer1, m) {
  m.doc() = "Outer-1-plane drawings, local configurations and list 3-dynamic colouring.";

  py::register_exception<DrawingError>(m, "DrawingError", PyExc_ValueError);
  py::register_exception<GuaranteeViolation>(m, "GuaranteeViolation", PyExc_RuntimeError);
  py::register_exception<ExtensionFailure>(m, "ExtensionFailure", PyExc_RuntimeError);
  py::register_exception<ListTooSmall>(m, "ListTooSmall", PyExc_ValueError);
  py::register_exception<SizeLimitError>(m, "SizeLimitError", PyExc_ValueError);

  py::class_<Drawing>(m, "Drawing")
      .def(py::init(&make_drawing), py::arg("n"), py::arg("edges"))
      .def_static("parse", [](const std::string& text) { return parse_drawing(text); })
      .def_property_readonly("n", &Drawing::n)
      .def_property_readonly("edges", [](const Drawing& d) { return edge_pairs(d.edges()); })
      .def("degree", &Drawing::degree)
      .def("neighbors", [](const Drawing& d, Vertex v) {
        auto s = d.neighbors(v);
        return std::vector<Vertex>(s.begin(), s.end());
      })
      .def("adjacent", &Drawing::adjacent)
      .def("crossings", [](const Drawing& d) {
        std::vector<std::pair<EdgePair, EdgePair>> out;
        for (const auto& [e, f] : crossing_pairs(d)) out.push_back({{e.u, e.v}, {f.u, f.v}});
        return out;
      })
      .def("to_text", &to_text)
      .def("to_dot", &to_dot)
      .def("__eq__", [](const Drawing& a, const Drawing& b) { return a == b; })
      .def("__repr__", [](const Drawing& d) {
        return "<Drawing n=" + std::to_string(d.n()) + " edges=" + std::to_string(d.edge_count()) +
               ">";
      });

  m.def("min_degree", &min_degree);
  m.def("is_connected", &is_connected);

  m.def("find_structure", [](const Drawing& d, bool check_d2) {
    return match_dict(find_structure(d, check_d2));
  }, py::arg("drawing"), py::arg("check_d2") = false);
  m.def("find_matches", [](const Drawing& d, int id, bool check_d2) {
    py::list out;
    for (const Match& x : find_matches(d, pattern(id), check_d2)) out.append(match_dict(x));
    return out;
  }, py::arg("drawing"), py::arg("config"), py::arg("check_d2") = false);
  m.def("light_edge", [](const Drawing& d, bool maximal) {
    const LightEdge e = find_light_edge(d, maximal);
    py::dict out;
    out["edge"] = EdgePair{e.endpoints.u, e.endpoints.v};
    out["degree_sum"] = e.degree_sum;
    out["source"] = e.source_config ? "G" + std::to_string(e.source_config) : "scan";
    return out;
  }, py::arg("drawing"), py::arg("maximal") = false);
  m.def("find_reduction", [](const Drawing& d) {
    const ReductionStep s = find_reduction(d);
    py::dict out;
    out["kind"] = std::string(to_string(s.kind));
    out["deleted"] = s.deleted;
    out["anchors"] = s.anchors;
    return out;
  });

  m.def("color", [](const Drawing& d, std::optional<std::vector<std::vector<int>>> lists,
                    int palette) {
    const ListAssignment l = lists ? padded_lists(d, *lists) : uniform_lists(d.n(), palette);
    const Coloring c = color_list_3_dynamic(d, l);
    return std::vector<int>(c.begin() + 1, c.end());
  }, py::arg("drawing"), py::arg("lists") = py::none(), py::arg("palette") = 6);
  m.def("verify", [](const Drawing& d, const std::vector<int>& colors, int r,
                     std::optional<std::vector<std::vector<int>>> lists) {
    const Coloring c = padded(d, colors);
    DynamicVerdict v = verify_dynamic(d, c, r);
    if (lists) {
      const DynamicVerdict l = verify_lists(d, c, padded_lists(d, *lists));
      v.violations.insert(v.violations.end(), l.violations.begin(), l.violations.end());
    }
    py::dict out;
    out["valid"] = v.valid();
    out["r"] = r;
    out["violations"] = violations(v);
    return out;
  }, py::arg("drawing"), py::arg("colors"), py::arg("r") = 3, py::arg("lists") = py::none());

  m.def("chromatic_r_dynamic", [](const Drawing& d, int r, std::optional<int> k_max) {
    const int k = chromatic_r_dynamic(AbstractGraph::of(d), r, k_max.value_or(d.n()));
    return k < 0 ? std::optional<int>() : std::optional<int>(k);
  }, py::arg("drawing"), py::arg("r") = 3, py::arg("k_max") = py::none());
  m.def("is_outer_1_planar", [](int n, const std::vector<EdgePair>& edges) {
    AbstractGraph g{n, {}};
    for (auto [u, v] : edges) g.edges.emplace_back(u, v);
    return is_outer_1_planar(g);
  }, py::arg("n"), py::arg("edges"));
  m.def("is_maximal", &is_maximal);
  m.def("count_drawings", [](int n, const std::string& filter) {
    long count = 0;
    enumerate_drawings(n, parse_filter(filter), [&](const Drawing&) { ++count; });
    return count;
  }, py::arg("n"), py::arg("filter") = "all");

  m.def("cycle", &cycle);
  m.def("sharp_example", &sharp_example);
  m.def("h_family", &h_family);
  m.def("random_drawing", &random_outer_1_planar, py::arg("n"), py::arg("density") = 0.3,
        py::arg("seed") = 1);
}
