#include "gwwedge/json_io.hpp"

#include "gwwedge/errors.hpp"

namespace gwwedge {

Json rational_json(const Rational& q) { return to_string(q); }

Json series_json(const Series& s) {
  Json out = Json::array();
  for (const auto& [e, c] : s.terms()) out.push_back({{"exponents", e}, {"coeff", to_string(c)}});
  return out;
}

Json diagram_json(const InteractionDiagram& J) {
  Json edges = Json::array();
  for (const auto& [a, b] : J.edges) edges.push_back({a, b});
  return {{"vertices", J.vertices}, {"edges", edges}};
}

Json criterion_json(const CriterionResult& r) {
  Json j{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"checks", r.checks}, {"failures", r.failures}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

namespace {

std::vector<int> int_array(const Json& j, const char* key) {
  if (!j.contains(key)) return {};
  const Json& a = j.at(key);
  if (!a.is_array()) throw ConfigError(std::string(key) + " must be an array");
  std::vector<int> out;
  for (const auto& x : a) {
    if (!x.is_number_integer()) throw ConfigError(std::string(key) + " entries must be integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

ContactData contact_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("contact data must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (key != "mu0" && key != "muInf" && key != "insertions") throw ConfigError("unknown key '" + key + "'");
  ContactData cd;
  cd.mu0 = int_array(j, "mu0");
  cd.tube = j.contains("muInf");
  cd.mu_inf = int_array(j, "muInf");
  if (j.contains("insertions")) {
    if (!j.at("insertions").is_array()) throw ConfigError("insertions must be an array");
    for (const auto& ins : j.at("insertions")) {
      if (!ins.is_object() || !ins.contains("k") || !ins.at("k").is_number_integer())
        throw ConfigError("insertion needs an integer k");
      const std::string cls = ins.value("class", std::string("omega"));
      if (cls != "omega") throw ConfigError("only stationary omega insertions are supported, got '" + cls + "'");
      cd.insertions.push_back(ins.at("k").get<int>());
    }
  }
  return cd;
}

Json contact_json(const ContactData& cd) {
  Json ins = Json::array();
  for (int k : cd.insertions) ins.push_back({{"k", k}, {"class", "omega"}});
  Json j{{"mu0", cd.mu0}, {"insertions", ins}};
  if (cd.tube) j["muInf"] = cd.mu_inf;
  return j;
}

}  // namespace gwwedge
