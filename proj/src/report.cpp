#include "fano/report.hpp"

namespace fano {

void VarietyReport::check(std::string name, const std::string& predicted, const std::string& computed) {
  checks.push_back({std::move(name), predicted, computed, predicted == computed});
}

void VarietyReport::check(std::string name, std::int64_t predicted, std::int64_t computed) {
  check(std::move(name), std::to_string(predicted), std::to_string(computed));
}

void VarietyReport::check(std::string name, bool holds) {
  check(std::move(name), std::string("true"), std::string(holds ? "true" : "false"));
}

bool VarietyReport::all_ok() const {
  if (checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

namespace {

Json point_json(const PointRecord& p) {
  Json j;
  j["coords"] = p.coords;
  j["field"] = p.field;
  j["residue_degree"] = std::to_string(p.residue_degree);
  j["jacobian_rank"] = std::to_string(p.jacobian_rank);
  j["reduced"] = p.reduced;
  return j;
}

}  // namespace

Json VarietyReport::to_json() const {
  Json j;
  j["pipeline"] = pipeline;
  Json params = Json::object();
  for (const auto& [k, v] : parameters) params[k] = v;
  j["parameters"] = params;
  j["field"] = field;
  j["ambient_dimension"] = std::to_string(ambient);
  j["generators"] = generators;
  j["dimension"] = dimension < 0 ? std::string("empty") : std::to_string(dimension);
  j["degree"] = std::to_string(degree);
  j["is_complete_intersection"] = complete_intersection;
  if (!point_method.empty()) j["point_method"] = point_method;
  Json sols = Json::array();
  for (const auto& p : solutions) sols.push_back(point_json(p));
  j["solutions"] = sols;
  Json sing = Json::array();
  for (const auto& p : singular_points) sing.push_back(point_json(p));
  j["singular_points"] = sing;
  j["smooth"] = smooth;
  Json predicted = Json::array();
  for (const auto& c : checks)
    predicted.push_back({{"name", c.name}, {"predicted", c.predicted}, {"computed", c.computed}, {"ok", c.ok}});
  j["predicted"] = predicted;
  j["flags"] = flags;
  j["attempts"] = attempts;
  if (!certificates.empty()) j["certificates"] = certificates;
  for (const auto& [k, v] : extra.items()) j[k] = v;
  j["ok"] = all_ok();
  return j;
}

PointRecord record_point(const GeometricPoint& y,
                         const std::vector<std::vector<Polynomial<PrimeField>>>& jac,
                         std::size_t full_rank) {
  PointRecord r;
  r.residue_degree = residue_degree(y);
  r.field = config_of(y.field()).describe();
  r.coords = y.to_strings();
  r.jacobian_rank = jacobian_rank_at(jac, y);
  r.reduced = r.jacobian_rank == full_rank;
  return r;
}

void describe_ideal(VarietyReport& report, const Ideal<PrimeField>& ideal, const GroebnerOptions& options,
                    const std::vector<std::string>& names) {
  report.field = config_of(ideal.field()).describe();
  report.ambient = ideal.ambient_dimension();
  report.generators.clear();
  for (const auto& g : ideal.generators()) report.generators.push_back(to_string(g, names));
  const auto hd = hilbert_data(ideal, options);
  report.dimension = hd.dimension;
  report.degree = hd.degree;
  report.complete_intersection =
      hd.dimension >= 0 && static_cast<std::size_t>(static_cast<int>(ideal.ambient_dimension()) - hd.dimension) ==
                               ideal.nonzero_generator_count();
}

}  // namespace fano
