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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <set>
#include <sstream>
#include <thread>

#include "outer1/catalog.hpp"
#include "outer1/coloring.hpp"
#include "outer1/drawing.hpp"
#include "outer1/generators.hpp"
#include "outer1/oracle.hpp"
#include "outer1/structure.hpp"

namespace outer1::cli {
namespace {

using Json = nlohmann::ordered_json;

// Input error raised by the command layer itself.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Verdict-false outcome that still prints a payload.
struct Outcome {
  Json result;
  int code = kOk;
  std::string text;  // raw output (drawing text, DOT) instead of JSON
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot open " + path);
    buf << file.rdbuf();
  }
  return buf.str();
}

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

Json vertex_list(std::span<const Vertex> vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(v);
  return out;
}

Json match_json(const Match& m) {
  const ConfigPattern& p = pattern(m.pattern_id);
  Json assignment = Json::object();
  for (int i = 0; i < p.size(); ++i) assignment[p.vertices[i].label] = m.assignment[i];
  return Json{{"config", m.pattern_id}, {"name", "G" + std::to_string(m.pattern_id)},
              {"assignment", assignment}};
}

Json coloring_json(const Coloring& c) {
  Json colors = Json::object();
  for (std::size_t v = 1; v < c.size(); ++v) colors[std::to_string(v)] = c[v];
  return colors;
}

Coloring parse_coloring_json(const std::string& text, int n) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("coloring JSON: ") + e.what());
  }
  const Json& colors = j.contains("colors") ? j["colors"] : j;
  if (!colors.is_object()) throw InputError("coloring JSON needs a \"colors\" object");
  Coloring c(n + 1, kUncolored);
  for (const auto& [key, value] : colors.items()) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw InputError("coloring JSON: bad vertex key '" + key + "'");
    }
    if (v < 1 || v > n) throw InputError("coloring JSON: vertex " + key + " out of range");
    if (!value.is_number_integer() || value.get<int>() < 0) {
      throw InputError("coloring JSON: colour of vertex " + key + " must be a non-negative integer");
    }
    c[v] = value.get<int>();
  }
  return c;
}

int worker_count() {
  const char* env = std::getenv("OUTER1_WORKERS");
  if (env == nullptr) return 1;
  const int w = std::atoi(env);
  return std::clamp(w, 1, 64);
}

enum class Check { None, Structure, Light, Reduce, Chi };

Check parse_check(const std::string& name) {
  if (name.empty()) return Check::None;
  if (name == "structure") return Check::Structure;
  if (name == "light") return Check::Light;
  if (name == "reduce") return Check::Reduce;
  if (name == "chi") return Check::Chi;
  throw InputError("unknown check '" + name + "'");
}

// Empty string when `d` passes, else a failure note.
std::string run_check(Check check, const Drawing& d) {
  const bool core = d.n() > 0 && is_connected(d) && min_degree(d) >= 2;
  try {
    switch (check) {
      case Check::None: return "";
      case Check::Structure:
        if (core) find_structure(d);
        return "";
      case Check::Light:
        if (!core) return "";
        if (find_light_edge(d).degree_sum > 9) return "light edge above 9";
        if (d.n() <= kMaxRecognitionVertices && is_maximal(d) &&
            find_light_edge(d, true).degree_sum > 7) {
          return "maximal light edge above 7";
        }
        return "";
      case Check::Reduce:
        if (find_reduction(d).deleted.empty()) return "empty reduction";
        return "";
      case Check::Chi:
        if (chromatic_r_dynamic(AbstractGraph::of(d), 3, 6) < 0) return "needs more than 6 colours";
        return "";
    }
  } catch (const GuaranteeViolation& e) {
    return e.what();
  }
  return "";
}

Outcome cmd_validate(const std::string& text, bool dot) {
  Outcome o;
  try {
    const Drawing d = parse_drawing(text);
    if (dot) {
      o.text = to_dot(d);
      return o;
    }
    o.result = Json{{"valid", true},
                    {"n", d.n()},
                    {"edges", d.edge_count()},
                    {"crossings", crossing_pairs(d).size()},
                    {"min_degree", min_degree(d)},
                    {"connected", is_connected(d)}};
  } catch (const DrawingError& e) {
    o.result = Json{{"valid", false}, {"error", e.what()}};
    if (e.line() > 0) o.result["line"] = e.line();
    o.code = kVerdictFalse;
  }
  return o;
}

Outcome cmd_color(const Drawing& d, const std::optional<std::string>& lists_text, int palette,
                  std::ostream& err) {
  const ListAssignment lists =
      lists_text ? parse_lists(*lists_text, d.n()) : uniform_lists(d.n(), palette);
  ColoringStats stats;
  const Coloring c = color_list_3_dynamic(d, lists, &stats);
  err << "steps " << stats.steps << ", fallbacks " << stats.fallbacks << ", recolorings "
      << stats.recolorings << "\n";
  Outcome o;
  o.result = Json{{"colors", coloring_json(c)}, {"valid", verify_dynamic(d, c, 3).valid()},
                  {"r", 3}};
  return o;
}

Outcome cmd_verify(const Drawing& d, const Coloring& c, int r,
                   const std::optional<ListAssignment>& lists) {
  DynamicVerdict verdict = verify_dynamic(d, c, r);
  if (lists) {
    for (const Violation& v : verify_lists(d, c, *lists).violations) {
      verdict.violations.push_back(v);
    }
  }
  Json violations = Json::array();
  for (const Violation& v : verdict.violations) {
    Json item{{"vertex", v.vertex}, {"kind", std::string(to_string(v.kind))}};
    if (v.kind == ViolationKind::Improper) item["other"] = v.other;
    if (v.kind == ViolationKind::TooFewColors) {
      item["seen"] = v.seen;
      item["required"] = v.required;
    }
    item["message"] = v.describe();
    violations.push_back(item);
  }
  Outcome o;
  o.result = Json{{"valid", verdict.valid()}, {"r", r}, {"violations", violations}};
  o.code = verdict.valid() ? kOk : kVerdictFalse;
  return o;
}

Outcome cmd_enumerate(int n, const std::string& filter_name, const std::string& check_name,
                      std::ostream& err) {
  const EnumFilter filter = parse_filter(filter_name);
  const Check check = parse_check(check_name);
  std::vector<Drawing> all = enumerate_drawings(n, filter);
  const int workers = std::min<int>(worker_count(), std::max<std::size_t>(all.size(), 1));
  std::vector<std::vector<std::pair<std::size_t, std::string>>> failures(workers);
  std::vector<std::thread> pool;
  const std::size_t chunk = (all.size() + workers - 1) / std::max(workers, 1);
  auto work = [&](int w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(all.size(), lo + chunk);
    for (std::size_t i = lo; i < hi; ++i) {
      std::string note = run_check(check, all[i]);
      if (!note.empty()) failures[w].emplace_back(i, std::move(note));
    }
  };
  for (int w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();

  std::set<std::uint64_t> classes;
  for (const Drawing& d : all) classes.insert(canonical_form(d));

  Outcome o;
  o.result = Json{{"n", n},
                  {"filter", std::string(to_string(filter))},
                  {"count", all.size()},
                  {"classes", classes.size()}};
  if (check != Check::None) {
    std::size_t failed = 0;
    Json first = nullptr;
    for (const auto& list : failures) {
      for (const auto& [index, note] : list) {
        if (failed++ == 0) first = Json{{"drawing", to_text(all[index])}, {"reason", note}};
      }
    }
    o.result["check"] = check_name;
    o.result["failures"] = failed;
    if (failed > 0) {
      o.result["first_failure"] = first;
      o.code = kGuaranteeViolation;
      err << failed << " drawings failed the " << check_name << " check\n";
    }
  }
  return o;
}

Drawing generate(const std::string& what, const std::vector<int>& sizes, double density,
                 std::uint64_t seed) {
  auto need_n = [&]() {
    if (sizes.empty()) throw InputError("generate " + what + " needs a vertex count");
    return sizes.front();
  };
  if (what == "cycle") return cycle(need_n());
  if (what == "sharp") return sharp_example();
  if (what == "random") return random_outer_1_planar(need_n(), density, seed);
  if (what.size() >= 2 && what[0] == 'h') {
    try {
      std::size_t used = 0;
      const int i = std::stoi(what.substr(1), &used);
      if (used == what.size() - 1) return h_family(i);
    } catch (const std::invalid_argument&) {
    }
  }
  throw InputError("unknown generator '" + what + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"outer1: configurations, light edges and list 3-dynamic colourings of "
               "outer-1-plane drawings"};
  app.require_subcommand(1);
  bool report = false;
  app.add_flag("--report", report, "wrap output with command, input digest and elapsed time");

  std::string file = "-";
  std::string emit = "json";
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", file, "drawing file, '-' for stdin")->capture_default_str();
  };

  auto* validate = app.add_subcommand("validate", "check a drawing file");
  add_file(validate);
  validate->add_option("--emit", emit, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  bool check_d2 = false;
  auto* find_config = app.add_subcommand("find-config", "first configuration G1..G17");
  add_file(find_config);
  find_config->add_flag("--check-d2", check_d2, "require the match to realise the pattern drawing");

  bool maximal = false;
  auto* light = app.add_subcommand("light-edge", "edge of small degree sum");
  add_file(light);
  light->add_flag("--maximal", maximal, "the drawing is maximal: bound 7 instead of 9");

  auto* reduce = app.add_subcommand("reduce", "reducible configuration for colouring");
  add_file(reduce);

  std::string lists_file;
  int palette = 6;
  auto* color = app.add_subcommand("color", "list 3-dynamic colouring");
  add_file(color);
  auto* lists_opt = color->add_option("--lists", lists_file, "list assignment file");
  color->add_option("--palette", palette, "uniform palette 1..k")
      ->capture_default_str()
      ->excludes(lists_opt);

  std::string coloring_file;
  int r = 3;
  std::string verify_lists_file;
  auto* verify = app.add_subcommand("verify", "check an r-dynamic colouring");
  add_file(verify);
  verify->add_option("--coloring", coloring_file, "colouring JSON file")->required();
  verify->add_option("--r", r, "dynamic parameter")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--lists", verify_lists_file, "also check list membership");

  auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
  oracle->require_subcommand(1);
  int k_max = 0;
  auto* chi = oracle->add_subcommand("chi", "r-dynamic chromatic number");
  add_file(chi);
  chi->add_option("--r", r, "dynamic parameter")->capture_default_str()->check(CLI::PositiveNumber);
  chi->add_option("--k-max", k_max, "largest palette to try (default n)");
  auto* recognize = oracle->add_subcommand("recognize", "outer-1-planarity of a graph");
  add_file(recognize);
  auto* omax = oracle->add_subcommand("maximal", "maximality of a drawing's graph");
  add_file(omax);

  int enum_n = 0;
  std::string filter = "all";
  std::string check;
  auto* enumerate = app.add_subcommand("enumerate", "exhaustive drawings on n vertices");
  enumerate->add_option("--n", enum_n, "vertex count")->required()->check(CLI::Range(1, 8));
  enumerate->add_option("--filter", filter, "all, connected or connected-min-deg-2")
      ->capture_default_str();
  enumerate->add_option("--check", check, "structure, light, reduce or chi");

  std::string what;
  std::vector<int> sizes;
  double density = 0.3;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("generate", "emit a drawing: cycle <n>, sharp, h<i>, random <n>");
  gen->add_option("what", what, "generator")->required();
  gen->add_option("n", sizes, "vertex count");
  gen->add_option("--density", density, "random: fraction of candidate chords")
      ->capture_default_str();
  gen->add_option("--seed", seed, "random: seed")->capture_default_str();
  gen->add_option("--emit", emit, "text or dot")->check(CLI::IsMember({"json", "text", "dot"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  std::string command;
  std::string input;
  Outcome o;
  try {
    auto load = [&]() {
      input = read_source(file, in);
      return parse_drawing(input);
    };
    if (*validate) {
      command = "validate";
      input = read_source(file, in);
      o = cmd_validate(input, emit == "dot");
    } else if (*find_config) {
      command = "find-config";
      o.result = match_json(find_structure(load(), check_d2));
    } else if (*light) {
      command = "light-edge";
      const Drawing d = load();
      if (maximal && d.n() <= kMaxRecognitionVertices && !is_maximal(d)) {
        throw InputError("drawing is not maximal outer-1-planar");
      }
      const LightEdge e = find_light_edge(d, maximal);
      o.result = Json{{"edge", {e.endpoints.u, e.endpoints.v}},
                      {"degree_sum", e.degree_sum},
                      {"source", e.source_config ? "G" + std::to_string(e.source_config) : "scan"}};
    } else if (*reduce) {
      command = "reduce";
      const ReductionStep s = find_reduction(load());
      Json anchors = Json::object();
      for (const auto& [name, v] : s.anchors) anchors[name] = v;
      o.result = Json{{"kind", std::string(to_string(s.kind))},
                      {"deleted", vertex_list(s.deleted)},
                      {"anchors", anchors}};
    } else if (*color) {
      command = "color";
      const Drawing d = load();
      std::optional<std::string> lists_text;
      if (!lists_file.empty()) lists_text = read_source(lists_file, in);
      o = cmd_color(d, lists_text, palette, err);
    } else if (*verify) {
      command = "verify";
      const Drawing d = load();
      const Coloring c = parse_coloring_json(read_source(coloring_file, in), d.n());
      std::optional<ListAssignment> lists;
      if (!verify_lists_file.empty()) {
        lists = parse_lists(read_source(verify_lists_file, in), d.n());
      }
      o = cmd_verify(d, c, r, lists);
    } else if (*oracle) {
      if (*chi) {
        command = "oracle chi";
        input = read_source(file, in);
        const AbstractGraph g = AbstractGraph::parse(input);
        const int value = chromatic_r_dynamic(g, r, k_max > 0 ? k_max : std::max(g.n, 1));
        o.result = Json{{"chi", value < 0 ? Json(nullptr) : Json(value)}, {"r", r}};
        if (value < 0) o.code = kVerdictFalse;
      } else if (*recognize) {
        command = "oracle recognize";
        input = read_source(file, in);
        const bool yes = is_outer_1_planar(AbstractGraph::parse(input));
        o.result = Json{{"outer_1_planar", yes}};
        o.code = yes ? kOk : kVerdictFalse;
      } else {
        command = "oracle maximal";
        const bool yes = is_maximal(load());
        o.result = Json{{"maximal", yes}};
        o.code = yes ? kOk : kVerdictFalse;
      }
    } else if (*enumerate) {
      command = "enumerate";
      o = cmd_enumerate(enum_n, filter, check, err);
    } else if (*gen) {
      command = "generate";
      const Drawing d = generate(what, sizes, density, seed);
      o.text = emit == "dot" ? to_dot(d) : to_text(d);
    }
  } catch (const GuaranteeViolation& e) {
    err << "guarantee violated: " << e.what() << "\n";
    return kGuaranteeViolation;
  } catch (const ExtensionFailure& e) {
    err << "guarantee violated: " << e.what() << "\n";
    return kGuaranteeViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (!o.text.empty()) {
    out << o.text;
    return o.code;
  }
  if (report) {
    const auto elapsed = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - start);
    Json wrapped{{"command", command},
                 {"input_digest", fnv1a(input)},
                 {"result", o.result},
                 {"elapsed_ms", elapsed.count()}};
    out << wrapped.dump(2) << "\n";
  } else {
    out << o.result.dump(2) << "\n";
  }
  return o.code;
}

}  // namespace outer1::cli
