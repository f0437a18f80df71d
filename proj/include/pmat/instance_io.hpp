#ifndef PMAT_INSTANCE_IO_HPP
#define PMAT_INSTANCE_IO_HPP

#include "pmat/interdiction.hpp"
#include "pmat/param_solver.hpp"
#include "pmat/wsd.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace pmat::io {

/// Parsed instance file: matroid, parameter dimension, weights and/or
/// costs, parameter interval, optional element labels.
struct InstanceDocument {
  Matroid matroid;
  int p = 0;
  WeightVector weights;        // empty when the file has none
  std::vector<VectorXr> costs; // empty when the file has none
  ParameterBox box;
  std::vector<std::string> labels;

  bool has_weights() const { return !weights.empty(); }
  bool has_costs() const { return !costs.empty(); }
  std::string label(int e) const {
    return labels.empty() ? std::to_string(e) : labels[e];
  }
};

/// Parses and validates an instance; InputError messages carry the
/// offending field path. Rationals are exact strings ("num", "num/den",
/// "2^-20") or JSON integers; interval bounds also accept "-inf"/"inf".
InstanceDocument parse_instance(const std::string& text);

nlohmann::json solution_to_json(const ParametricSolution& solution,
                                const InstanceDocument& instance);
nlohmann::json wsd_to_json(const WsdSolution& solution,
                           const InstanceDocument& instance);
nlohmann::json interdiction_to_json(const InterdictionSolution& solution,
                                    const InstanceDocument& instance);

/// Canonical text form: sorted keys, two-space indent, trailing newline;
/// reruns on identical input are byte-identical.
std::string canonical_dump(const nlohmann::json& doc);

/// Region/component/piece boundary segments as CSV with columns
/// region_id,x1,y1,x2,y2 for decompositions of dimension at most 2.
std::string plot_csv(const ParametricSolution& solution);
std::string plot_csv(const WsdSolution& solution);
std::string plot_csv(const InterdictionSolution& solution);

}  // namespace pmat::io

#endif  // PMAT_INSTANCE_IO_HPP
