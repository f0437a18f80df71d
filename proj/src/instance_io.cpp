#include "pmat/instance_io.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pmat::io {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError(path + ": " + what);
}

Rational parse_rational_field(const json& value, const std::string& path) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const InputError& err) {
      fail(path, err.what());
    }
  }
  if (value.is_number_integer()) return Rational(value.get<long long>());
  fail(path, "expected a rational string or integer");
}

VectorXr parse_rational_vector(const json& value, const std::string& path,
                               int expected_size) {
  if (!value.is_array()) fail(path, "expected an array");
  if (expected_size >= 0 && static_cast<int>(value.size()) != expected_size)
    fail(path, "expected " + std::to_string(expected_size) + " entries, got " +
                   std::to_string(value.size()));
  VectorXr out(static_cast<Eigen::Index>(value.size()));
  for (std::size_t i = 0; i < value.size(); ++i)
    out[static_cast<Eigen::Index>(i)] =
        parse_rational_field(value[i], path + "[" + std::to_string(i) + "]");
  return out;
}

Matroid parse_matroid(const json& doc, int& m_out) {
  if (!doc.is_object()) fail("matroid", "expected an object");
  std::string kind = doc.value("kind", std::string());
  if (kind == "graphic") {
    if (!doc.contains("nodes") || !doc["nodes"].is_number_integer())
      fail("matroid.nodes", "expected an integer");
    if (!doc.contains("edges") || !doc["edges"].is_array())
      fail("matroid.edges", "expected an array of endpoint pairs");
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
      const json& e = doc["edges"][i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        fail("matroid.edges[" + std::to_string(i) + "]", "expected [u, v]");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    m_out = static_cast<int>(edges.size());
    return Matroid::graphic(doc["nodes"].get<int>(), std::move(edges));
  }
  if (kind == "uniform") {
    if (!doc.contains("rank") || !doc["rank"].is_number_integer())
      fail("matroid.rank", "expected an integer");
    if (!doc.contains("m") || !doc["m"].is_number_integer())
      fail("matroid.m", "expected the element count");
    m_out = doc["m"].get<int>();
    return Matroid::uniform(doc["rank"].get<int>(), m_out);
  }
  if (kind == "linear") {
    if (!doc.contains("columns") || !doc["columns"].is_array() ||
        doc["columns"].empty())
      fail("matroid.columns", "expected a nonempty array of rational columns");
    const int rows = static_cast<int>(doc["columns"][0].size());
    MatrixXr columns(rows, static_cast<Eigen::Index>(doc["columns"].size()));
    for (std::size_t j = 0; j < doc["columns"].size(); ++j)
      columns.col(static_cast<Eigen::Index>(j)) = parse_rational_vector(
          doc["columns"][j], "matroid.columns[" + std::to_string(j) + "]", rows);
    m_out = static_cast<int>(doc["columns"].size());
    return Matroid::linear(std::move(columns));
  }
  fail("matroid.kind", "expected one of graphic, uniform, linear");
}

json rational_json(const Rational& value) { return to_string(value); }

json vector_json(const VectorXr& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(rational_json(v[i]));
  return out;
}

json affine_json(const AffineValue& value) {
  return json{{"a", rational_json(value.a)}, {"b", vector_json(value.b)}};
}

json interval_json(const ParameterBox& box) {
  json lower = json::array(), upper = json::array();
  for (int i = 0; i < box.dim(); ++i) {
    lower.push_back(box.lower[i] ? rational_json(*box.lower[i]) : json("-inf"));
    upper.push_back(box.upper[i] ? rational_json(*box.upper[i]) : json("inf"));
  }
  return json{{"lower", lower}, {"upper", upper}};
}

json hyperplane_json(const Hyperplane& h, int index) {
  json out{{"index", index},
           {"normal", vector_json(h.normal)},
           {"offset", rational_json(h.offset)}};
  if (h.boundary_index >= 0)
    out["boundary"] = h.boundary_index;
  else
    out["pair"] = json::array({h.elem_a, h.elem_b});
  return out;
}

// Closure constraints of a cell as implied by its sign vector.
json cell_json(const Arrangement& arrangement, const Cell& cell) {
  json constraints = json::array();
  for (std::size_t h = 0; h < arrangement.hyperplanes.size(); ++h)
    constraints.push_back(
        json{{"normal", vector_json(arrangement.hyperplanes[h].normal)},
             {"offset", rational_json(arrangement.hyperplanes[h].offset)},
             {"rel", cell.sign[h] > 0 ? ">=" : "<="}});
  return json{{"id", cell.id}, {"constraints", constraints}};
}

json stats_json(const SolveStats& stats) {
  return json{{"cells", stats.cells},
              {"regions", stats.regions},
              {"oracle_calls", stats.oracle_calls},
              {"hyperplanes", stats.hyperplanes}};
}

json labels_json(const InstanceDocument& instance) {
  json out = json::array();
  for (const std::string& label : instance.labels) out.push_back(label);
  return out;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

void append_segment_rows(std::ostringstream& out, int region_id,
                         const Hyperplane& plane,
                         const std::vector<lp::Constraint>& clipped_by,
                         const Rational& clip) {
  const int d = plane.dim();
  if (d == 1) {
    double x = to_double(plane.offset / plane.normal[0]);
    out << region_id << "," << x << "," << 0.0 << "," << x << "," << 0.0 << "\n";
    return;
  }
  // Parameterize the line through x0 along the perpendicular direction and
  // intersect every closed constraint's t-interval.
  Eigen::Index j = plane.normal[0] != 0 ? 0 : 1;
  VectorXr x0 = VectorXr::Zero(2);
  x0[j] = plane.offset / plane.normal[j];
  VectorXr dir(2);
  dir[0] = -plane.normal[1];
  dir[1] = plane.normal[0];

  Rational t_lo = -clip * 4, t_hi = clip * 4;  // overwritten by clip rows below
  bool empty = false;
  auto narrow = [&](const VectorXr& normal, const Rational& rhs) {
    Rational value = normal.dot(x0) - rhs;
    Rational slope = normal.dot(dir);
    if (slope == 0) {
      if (value < 0) empty = true;
    } else if (slope > 0) {
      Rational bound = -value / slope;
      if (bound > t_lo) t_lo = bound;
    } else {
      Rational bound = -value / slope;
      if (bound < t_hi) t_hi = bound;
    }
  };
  for (const lp::Constraint& c : clipped_by) narrow(c.normal, c.rhs);
  for (int i = 0; i < 2; ++i) {
    VectorXr unit = VectorXr::Zero(2);
    unit[i] = 1;
    narrow(unit, -clip);
    narrow(-unit, -clip);
  }
  if (empty || t_lo >= t_hi) return;  // no 1-dimensional facet on this line
  VectorXr a = x0 + t_lo * dir, b = x0 + t_hi * dir;
  out << region_id << "," << to_double(a[0]) << "," << to_double(a[1]) << ","
      << to_double(b[0]) << "," << to_double(b[1]) << "\n";
}

std::string arrangement_boundary_csv(const Arrangement& arrangement,
                                     const std::vector<int>& cell_group) {
  if (arrangement.dim() > 2)
    throw InputError("plot export supports decompositions of dimension <= 2");
  std::ostringstream out;
  out << "region_id,x1,y1,x2,y2\n";
  out.precision(17);
  std::vector<lp::Constraint> box_rows = box_constraints(arrangement.box);
  for (const AdjacencyEdge& edge : arrangement.adjacency) {
    int ga = cell_group[edge.cell_a], gb = cell_group[edge.cell_b];
    if (ga == gb) continue;
    int region_id = ga < 0 ? gb : (gb < 0 ? ga : std::min(ga, gb));
    if (region_id < 0) continue;
    const Cell& cell = arrangement.cells[edge.cell_a];
    std::vector<lp::Constraint> rows;
    for (std::size_t h = 0; h < arrangement.hyperplanes.size(); ++h) {
      if (static_cast<int>(h) == edge.hyperplane) continue;
      const Hyperplane& plane = arrangement.hyperplanes[h];
      if (cell.sign[h] > 0)
        rows.push_back({plane.normal, plane.offset, false});
      else
        rows.push_back({-plane.normal, -plane.offset, false});
    }
    rows.insert(rows.end(), box_rows.begin(), box_rows.end());
    append_segment_rows(out, region_id, arrangement.hyperplanes[edge.hyperplane],
                        rows, arrangement.clip_half_width);
  }
  return out.str();
}

}  // namespace

InstanceDocument parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw InputError(std::string("invalid JSON: ") + err.what());
  }
  if (!doc.is_object()) fail("$", "expected a JSON object");
  if (!doc.contains("matroid")) fail("matroid", "missing");
  if (!doc.contains("p") || !doc["p"].is_number_integer())
    fail("p", "expected an integer");
  const int p = doc["p"].get<int>();
  if (p < 1) fail("p", "must be at least 1");

  int m = 0;
  Matroid matroid = parse_matroid(doc["matroid"], m);

  WeightVector weights;
  if (doc.contains("weights")) {
    if (!doc["weights"].is_array() || static_cast<int>(doc["weights"].size()) != m)
      fail("weights", "expected one {a, b} entry per element");
    for (int e = 0; e < m; ++e) {
      const json& w = doc["weights"][e];
      const std::string path = "weights[" + std::to_string(e) + "]";
      if (!w.is_object() || !w.contains("a") || !w.contains("b"))
        fail(path, "expected {a, b}");
      ParametricWeight weight;
      weight.a = parse_rational_field(w["a"], path + ".a");
      weight.b = parse_rational_vector(w["b"], path + ".b", p);
      weights.push_back(std::move(weight));
    }
  }

  std::vector<VectorXr> costs;
  if (doc.contains("costs")) {
    if (!doc["costs"].is_array() || static_cast<int>(doc["costs"].size()) != m)
      fail("costs", "expected one cost vector per element");
    for (int e = 0; e < m; ++e)
      costs.push_back(parse_rational_vector(
          doc["costs"][e], "costs[" + std::to_string(e) + "]", p));
  }

  ParameterBox box = ParameterBox::unbounded(p);
  if (doc.contains("interval")) {
    const json& interval = doc["interval"];
    if (!interval.is_object() || !interval.contains("lower") ||
        !interval.contains("upper"))
      fail("interval", "expected {lower, upper}");
    auto parse_bounds = [&](const json& list, const std::string& path, bool is_lower) {
      if (!list.is_array() || static_cast<int>(list.size()) != p)
        fail(path, "expected " + std::to_string(p) + " entries");
      for (int i = 0; i < p; ++i) {
        const json& entry = list[i];
        const std::string entry_path = path + "[" + std::to_string(i) + "]";
        auto& slot = is_lower ? box.lower[i] : box.upper[i];
        if (entry.is_string() &&
            (entry == (is_lower ? "-inf" : "inf")))
          slot.reset();
        else
          slot = parse_rational_field(entry, entry_path);
      }
    };
    parse_bounds(interval["lower"], "interval.lower", true);
    parse_bounds(interval["upper"], "interval.upper", false);
    try {
      box.validate();
    } catch (const InputError& err) {
      fail("interval", err.what());
    }
  }

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array() || static_cast<int>(doc["labels"].size()) != m)
      fail("labels", "expected one label per element");
    std::set<std::string> seen;
    for (int e = 0; e < m; ++e) {
      if (!doc["labels"][e].is_string())
        fail("labels[" + std::to_string(e) + "]", "expected a string");
      std::string label = doc["labels"][e].get<std::string>();
      if (!seen.insert(label).second)
        fail("labels[" + std::to_string(e) + "]", "duplicate label '" + label + "'");
      labels.push_back(std::move(label));
    }
  }

  return InstanceDocument{std::move(matroid), p,    std::move(weights),
                          std::move(costs),   box, std::move(labels)};
}

json solution_to_json(const ParametricSolution& solution,
                      const InstanceDocument& instance) {
  const Arrangement& arr = solution.arrangement;
  json hyperplanes = json::array();
  for (std::size_t h = 0; h < arr.hyperplanes.size(); ++h)
    hyperplanes.push_back(hyperplane_json(arr.hyperplanes[h], static_cast<int>(h)));

  json regions = json::array();
  for (const Region& region : solution.regions) {
    json cells = json::array();
    for (int c : region.cell_ids) cells.push_back(cell_json(arr, arr.cells[c]));
    regions.push_back(json{{"basis", region.basis},
                           {"value", affine_json(region.value)},
                           {"representative", vector_json(region.representative)},
                           {"cell_ids", region.cell_ids},
                           {"cells", cells}});
  }
  return json{{"type", "parametric"},
              {"p", instance.p},
              {"interval", interval_json(arr.box)},
              {"labels", labels_json(instance)},
              {"hyperplanes", hyperplanes},
              {"regions", regions},
              {"stats", stats_json(solution.stats)}};
}

json wsd_to_json(const WsdSolution& solution, const InstanceDocument& instance) {
  const Arrangement& arr = solution.arrangement;
  json hyperplanes = json::array();
  for (std::size_t h = 0; h < arr.hyperplanes.size(); ++h)
    hyperplanes.push_back(hyperplane_json(arr.hyperplanes[h], static_cast<int>(h)));

  json points = json::array();
  for (const ImagePoint& point : solution.extreme_points)
    points.push_back(json{{"image", vector_json(point.y)},
                          {"witness", point.witness}});

  json components = json::array();
  for (const WeightSetComponent& component : solution.components) {
    json cells = json::array();
    for (int c : component.cell_ids) cells.push_back(cell_json(arr, arr.cells[c]));
    components.push_back(
        json{{"image", vector_json(component.image.y)},
             {"witness", component.image.witness},
             {"representative_weight", vector_json(component.representative_weight)},
             {"cell_ids", component.cell_ids},
             {"cells", cells}});
  }
  return json{{"type", "wsd"},
              {"p", solution.p},
              {"labels", labels_json(instance)},
              {"projected_hyperplanes", hyperplanes},
              {"extreme_points", points},
              {"components", components},
              {"stats", stats_json(solution.stats)}};
}

json interdiction_to_json(const InterdictionSolution& solution,
                          const InstanceDocument& instance) {
  json pieces = json::array();
  for (const InterdictionPiece& piece : solution.pieces) {
    json chunks = json::array();
    for (const InterdictionChunk& chunk : piece.chunks) {
      json constraints = json::array();
      for (const lp::Constraint& c : chunk.constraints)
        constraints.push_back(json{{"normal", vector_json(c.normal)},
                                   {"offset", rational_json(c.rhs)},
                                   {"rel", ">="}});
      chunks.push_back(json{{"primary_cell", chunk.primary_cell},
                            {"constraints", constraints},
                            {"representative", vector_json(chunk.representative)}});
    }
    pieces.push_back(json{{"most_vital", piece.most_vital},
                          {"value", affine_json(piece.value)},
                          {"representative", vector_json(piece.representative)},
                          {"chunks", chunks}});
  }

  json per_element = json::array();
  for (const DeletionValueFunction& f : solution.per_element) {
    json entry{{"element", f.element}, {"infinite", f.infinite}};
    if (!f.infinite) {
      // Group cells by basis for a compact map.
      std::map<Basis, std::vector<int>> groups;
      for (std::size_t c = 0; c < f.cell_bases.size(); ++c)
        groups[f.cell_bases[c]].push_back(static_cast<int>(c));
      std::vector<const std::pair<const Basis, std::vector<int>>*> ordered;
      for (const auto& g : groups) ordered.push_back(&g);
      std::sort(ordered.begin(), ordered.end(),
                [](auto* lhs, auto* rhs) {
                  return lhs->second.front() < rhs->second.front();
                });
      json regions = json::array();
      for (auto* g : ordered)
        regions.push_back(
            json{{"basis", g->first},
                 {"value", affine_json(f.cell_values[g->second.front()])},
                 {"cell_ids", g->second}});
      entry["regions"] = regions;
    }
    per_element.push_back(std::move(entry));
  }

  json out{{"type", "interdiction"},
           {"p", instance.p},
           {"labels", labels_json(instance)},
           {"interval", interval_json(solution.arrangement.box)},
           {"pieces", pieces},
           {"per_element", per_element},
           {"stats", stats_json(solution.stats)}};
  out["infinite_everywhere"] = solution.infinite_everywhere
                                   ? json(*solution.infinite_everywhere)
                                   : json(nullptr);
  return out;
}

std::string canonical_dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string plot_csv(const ParametricSolution& solution) {
  return arrangement_boundary_csv(solution.arrangement, solution.cell_to_region);
}

std::string plot_csv(const WsdSolution& solution) {
  return arrangement_boundary_csv(solution.arrangement, solution.cell_to_component);
}

std::string plot_csv(const InterdictionSolution& solution) {
  if (solution.arrangement.dim() > 2)
    throw InputError("plot export supports decompositions of dimension <= 2");
  if (solution.infinite_everywhere)
    throw InputError("interdiction value is infinite everywhere; nothing to plot");
  std::ostringstream out;
  out << "region_id,x1,y1,x2,y2\n";
  out.precision(17);
  for (std::size_t piece_id = 0; piece_id < solution.pieces.size(); ++piece_id) {
    for (const InterdictionChunk& chunk : solution.pieces[piece_id].chunks) {
      for (std::size_t i = 0; i < chunk.constraints.size(); ++i) {
        const lp::Constraint& facet = chunk.constraints[i];
        Hyperplane plane;
        plane.normal = facet.normal;
        plane.offset = facet.rhs;
        std::vector<lp::Constraint> rows;
        for (std::size_t j = 0; j < chunk.constraints.size(); ++j)
          if (j != i) rows.push_back(chunk.constraints[j]);
        for (const lp::Constraint& c : box_constraints(solution.arrangement.box))
          rows.push_back(c);
        append_segment_rows(out, static_cast<int>(piece_id), plane, rows,
                            solution.arrangement.clip_half_width);
      }
    }
  }
  return out.str();
}

}  // namespace pmat::io
