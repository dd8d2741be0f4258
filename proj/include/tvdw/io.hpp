#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tvdw/lipschitz.hpp"
#include "tvdw/nets.hpp"
#include "tvdw/porosity.hpp"
#include "tvdw/theorems.hpp"

namespace tvdw::io {

using json = nlohmann::ordered_json;

// Shortest round-trip decimal for a double (deterministic full precision).
std::string fmt(double v);

// Space specification objects, e.g.
//   {"kind":"interval","lo":0.0,"hi":1.0,"resolution":1e-4}
//   {"kind":"cantor","level":8}
//   {"kind":"finite_matrix","table":[[0,1],[1,0]]}
// Schema violations raise domain_error naming the offending field.
MetricSpace parse_space_spec(const std::string& text);
MetricSpace space_from_json(const json& j);
json space_to_json(const MetricSpace& space);

// Net export/import: {"epsilon":...,"points":[...]} or
// {"epsilon":...,"implicit_lattice":{"scale":...,"base":...,"level":...}}.
json net_to_json(const Net& net);
Net net_from_json(const json& j, SpacePtr space);

json point_to_json(const PointRef& p);
json estimate_to_json(const lip::Estimate& e);
json hermeticity_to_json(const por::HermeticityReport& rep);
json witness_to_json(const thm::WitnessRecord& rec);

// CSV with a versioned header line ("# tvdw v1").
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> columns);
  void add_row(const std::vector<std::string>& cells);
  std::string str() const;

 private:
  std::vector<std::string> columns_;
  std::string body_;
};

}  // namespace tvdw::io
