#include "liftcut/cut.hpp"

namespace liftcut {

nlohmann::json Cut::to_json() const {
  nlohmann::json meta;
  meta["family"] = family;
  if (!context.is_null()) meta["context"] = context;
  if (is_bound) meta["is_bound"] = true;
  return {{"alpha0", alpha0}, {"alpha", alpha}, {"meta", meta}};
}

Cut Cut::from_json(const nlohmann::json& j) {
  Cut c;
  c.alpha0 = j.at("alpha0").get<double>();
  c.alpha = j.at("alpha").get<std::vector<double>>();
  if (j.contains("meta")) {
    const auto& meta = j.at("meta");
    if (meta.contains("family")) c.family = meta.at("family").get<std::string>();
    if (meta.contains("context")) c.context = meta.at("context");
    if (meta.contains("is_bound")) c.is_bound = meta.at("is_bound").get<bool>();
  }
  return c;
}

}  // namespace liftcut
