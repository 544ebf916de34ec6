#include "liftcut/problems.hpp"

#include <stdexcept>

namespace liftcut {

nlohmann::json EumInstance::to_json() const {
  return {{"type", "eum"}, {"n", n},   {"m", m},   {"lambda", lambda},
          {"a", a},        {"pi", pi}, {"v", v},   {"seed", seed}};
}

EumInstance EumInstance::from_json(const nlohmann::json& j) {
  EumInstance e;
  e.n = j.at("n").get<int>();
  e.m = j.at("m").get<int>();
  e.lambda = j.at("lambda").get<double>();
  e.a = j.at("a").get<std::vector<double>>();
  e.pi = j.at("pi").get<std::vector<double>>();
  e.v = j.at("v").get<std::vector<std::vector<double>>>();
  e.seed = j.value("seed", 0ULL);
  return e;
}

nlohmann::json WtaInstance::to_json() const {
  return {{"type", "wta"}, {"n", n}, {"m", m},           {"rho", rho}, {"mu", mu},
          {"V", value},    {"p", p}, {"a", a},           {"seed", seed}};
}

WtaInstance WtaInstance::from_json(const nlohmann::json& j) {
  WtaInstance w;
  w.n = j.at("n").get<int>();
  w.m = j.at("m").get<int>();
  w.rho = j.value("rho", 0.0);
  w.mu = j.at("mu").get<std::vector<int>>();
  w.value = j.at("V").get<std::vector<double>>();
  w.p = j.at("p").get<std::vector<std::vector<double>>>();
  w.a = j.at("a").get<std::vector<std::vector<double>>>();
  w.seed = j.value("seed", 0ULL);
  return w;
}

nlohmann::json RawXProblem::to_json() const {
  nlohmann::json j = inst.to_json();
  j["type"] = "raw_x";
  return j;
}

RawXProblem RawXProblem::from_json(const nlohmann::json& j) {
  return RawXProblem{InstanceX::from_json(j)};
}

nlohmann::json problem_to_json(const Problem& p) {
  if (const auto* e = std::get_if<EumInstance>(&p)) return e->to_json();
  if (const auto* w = std::get_if<WtaInstance>(&p)) return w->to_json();
  return std::get<RawXProblem>(p).to_json();
}

Problem problem_from_json(const nlohmann::json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "eum") return EumInstance::from_json(j);
  if (type == "wta") return WtaInstance::from_json(j);
  if (type == "raw_x") return RawXProblem::from_json(j);
  throw std::invalid_argument("problem_from_json: unknown type '" + type + "'");
}

}  // namespace liftcut
