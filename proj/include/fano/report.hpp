#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "fano/points.hpp"

namespace fano {

using Json = nlohmann::ordered_json;

struct PointRecord {
  unsigned residue_degree = 1;
  std::string field;
  std::vector<std::string> coords;
  std::size_t jacobian_rank = 0;
  bool reduced = false;  // Jacobian of full rank at the point
};

// A predicted value next to the computed one.
struct Check {
  std::string name;
  std::string predicted;
  std::string computed;
  bool ok = false;
};

struct VarietyReport {
  std::string pipeline;
  std::map<std::string, std::string> parameters;
  std::string field;
  std::size_t ambient = 0;
  std::vector<std::string> generators;
  int dimension = -1;
  std::int64_t degree = 0;
  bool complete_intersection = false;
  std::string point_method;
  std::vector<PointRecord> solutions;
  std::vector<PointRecord> singular_points;
  bool smooth = true;
  std::vector<Check> checks;
  std::vector<std::string> flags;
  std::vector<std::string> attempts;
  Json certificates = Json::array();
  Json extra = Json::object();

  void check(std::string name, const std::string& predicted, const std::string& computed);
  void check(std::string name, std::int64_t predicted, std::int64_t computed);
  void check(std::string name, bool holds);

  bool all_ok() const;
  Json to_json() const;
};

PointRecord record_point(const GeometricPoint& y,
                         const std::vector<std::vector<Polynomial<PrimeField>>>& jac,
                         std::size_t full_rank);

// Dimension, degree and complete-intersection flag of a homogeneous ideal,
// plus its generators as text (default names x0, x1, ... unless given).
void describe_ideal(VarietyReport& report, const Ideal<PrimeField>& ideal,
                    const GroebnerOptions& options = {}, const std::vector<std::string>& names = {});

}  // namespace fano
