#include "profile_json.hpp"

#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "reinhardt/errors.hpp"

namespace reinhardt::cli {
namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ParseError(where + " must be a JSON object");
  for (const auto& item : obj.items())
    if (!allowed.count(item.key())) throw ParseError("unknown key '" + item.key() + "' in " + where);
}

double number(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ParseError("missing '" + key + "' in " + where);
  if (!obj.at(key).is_number()) throw ParseError("'" + key + "' in " + where + " must be a number");
  return obj.at(key).get<double>();
}

MultiIndex parse_multi_index(const std::string& key, int dim) {
  MultiIndex index;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw ParseError("bad multi-index '" + key + "'");
    }
    if (used != part.size() || e < 0) throw ParseError("bad multi-index '" + key + "'");
    index.push_back(e);
  }
  if (static_cast<int>(index.size()) != dim)
    throw ParseError("multi-index '" + key + "' does not have dim entries");
  return index;
}

std::string multi_index_key(const MultiIndex& index) {
  std::string key;
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (k) key += ',';
    key += std::to_string(index[k]);
  }
  return key;
}

}  // namespace

RadialProfile profile_from_json(const json& doc) {
  reject_unknown(doc, {"dim", "family", "params", "derivative_mode", "h_fd", "h_hess"}, "profile");
  if (!doc.contains("dim") || !doc.at("dim").is_number_integer())
    throw ParseError("profile needs an integer 'dim'");
  if (!doc.contains("family") || !doc.at("family").is_string())
    throw ParseError("profile needs a string 'family'");
  const int dim = doc.at("dim").get<int>();
  const std::string family = doc.at("family").get<std::string>();
  const json params = doc.value("params", json::object());

  DerivativeMode mode = DerivativeMode::analytic;
  if (doc.contains("derivative_mode")) {
    const std::string m = doc.at("derivative_mode").get<std::string>();
    if (m == "finite_difference") mode = DerivativeMode::finite_difference;
    else if (m != "analytic") throw ParseError("unknown derivative_mode '" + m + "'");
  }
  FiniteDifferenceSteps steps;
  if (doc.contains("h_fd")) steps.gradient_step = number(doc, "h_fd", "profile");
  if (doc.contains("h_hess")) steps.hessian_step = number(doc, "h_hess", "profile");

  try {
    if (family == "sphere") {
      reject_unknown(params, {"radius"}, "sphere params");
      return RadialProfile(dim, Sphere{number(params, "radius", "sphere params")}, mode, steps);
    }
    if (family == "ellipsoid") {
      reject_unknown(params, {"semiaxes"}, "ellipsoid params");
      if (!params.contains("semiaxes") || !params.at("semiaxes").is_array())
        throw ParseError("ellipsoid params need an array 'semiaxes'");
      std::vector<double> axes;
      for (const json& a : params.at("semiaxes")) {
        if (!a.is_number()) throw ParseError("semiaxes must be numbers");
        axes.push_back(a.get<double>());
      }
      return RadialProfile(dim, Ellipsoid{axes}, mode, steps);
    }
    if (family == "cylinder") {
      reject_unknown(params, {"radius", "fixed_index"}, "cylinder params");
      int index = 1;
      if (params.contains("fixed_index")) {
        if (!params.at("fixed_index").is_number_integer()) throw ParseError("fixed_index must be an integer");
        index = params.at("fixed_index").get<int>();
      }
      return RadialProfile(dim, Cylinder{number(params, "radius", "cylinder params"), index - 1}, mode, steps);
    }
    if (family == "polynomial") {
      if (!params.is_object()) throw ParseError("polynomial params must be an object");
      std::map<MultiIndex, double> terms;
      for (const auto& item : params.items()) {
        if (!item.value().is_number()) throw ParseError("polynomial coefficients must be numbers");
        terms[parse_multi_index(item.key(), dim)] += item.value().get<double>();
      }
      return RadialProfile(dim, Polynomial{terms}, mode, steps);
    }
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid profile: ") + e.what());
  }
  throw ParseError("unknown profile family '" + family + "'");
}

RadialProfile profile_from_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed profile JSON: ") + e.what());
  }
  try {
    return profile_from_json(doc);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid profile JSON: ") + e.what());
  }
}

RadialProfile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open profile file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return profile_from_text(buffer.str());
}

json profile_to_json(const RadialProfile& profile) {
  json doc;
  doc["dim"] = profile.dim();
  doc["family"] = profile.family_name();
  json params = json::object();
  if (const auto* s = std::get_if<Sphere>(&profile.family())) {
    params["radius"] = s->radius;
  } else if (const auto* e = std::get_if<Ellipsoid>(&profile.family())) {
    params["semiaxes"] = e->semiaxes;
  } else if (const auto* c = std::get_if<Cylinder>(&profile.family())) {
    params["radius"] = c->radius;
    params["fixed_index"] = c->fixed_index + 1;
  } else if (const auto* p = std::get_if<Polynomial>(&profile.family())) {
    for (const auto& [index, coeff] : p->terms) params[multi_index_key(index)] = coeff;
  }
  doc["params"] = params;
  if (profile.mode() == DerivativeMode::finite_difference) {
    doc["derivative_mode"] = "finite_difference";
    doc["h_fd"] = profile.steps().gradient_step;
    doc["h_hess"] = profile.steps().hessian_step;
  }
  return doc;
}

std::string profile_hash(const RadialProfile& profile) {
  const std::string canonical = profile_to_json(profile).dump();
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", hash);
}

}  // namespace reinhardt::cli
