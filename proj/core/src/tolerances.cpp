#include "reinhardt/tolerances.hpp"

#include "reinhardt/errors.hpp"

namespace reinhardt {
namespace {

template <class Fn>
void for_each_field(Tolerances& tol, Fn&& fn) {
  fn("surface_tol", tol.surface_tol);
  fn("grad_tol", tol.grad_tol);
  fn("tangent_tol", tol.tangent_tol);
  fn("report_tol", tol.report_tol);
  fn("critical_tol", tol.critical_tol);
  fn("parallel_tol", tol.parallel_tol);
  fn("constancy_tol", tol.constancy_tol);
  fn("radius_tol", tol.radius_tol);
  fn("torus_tol", tol.torus_tol);
  fn("dedup_tol", tol.dedup_tol);
}

}  // namespace

void set_tolerance(Tolerances& tol, const std::string& key, double value) {
  bool found = false;
  for_each_field(tol, [&](const char* name, double& field) {
    if (key == name) {
      field = value;
      found = true;
    }
  });
  if (!found) throw ParseError("unknown tolerance key '" + key + "'");
  if (!(value > 0.0)) throw ParseError("tolerance '" + key + "' must be positive");
}

std::map<std::string, double> tolerance_map(const Tolerances& tol) {
  std::map<std::string, double> out;
  Tolerances copy = tol;
  for_each_field(copy, [&](const char* name, double& field) { out[name] = field; });
  return out;
}

}  // namespace reinhardt
