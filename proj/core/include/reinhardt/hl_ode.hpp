#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "reinhardt/errors.hpp"

namespace reinhardt {

/// State of s f f″ = s f′² − k (f + s f′²)^{3/2} − f f′, the ODE for the profile
/// F(r_1, r_2) = f(r_2²) − r_1² of a constant-Levi-curvature Reinhardt domain in ℂ².
struct OdeState {
  double s = 0.0;   // squared-radius variable
  double f = 0.0;
  double fp = 0.0;  // f′
  double k = 0.0;   // curvature constant
};

/// Integration failure (singular point or domain violation); carries the last
/// accepted state.
class OdeError : public Error {
 public:
  OdeError(const std::string& what, OdeState last_valid) : Error(what), last_valid_(last_valid) {}
  const OdeState& last_valid() const { return last_valid_; }

 private:
  OdeState last_valid_;
};

/// f″; throws DomainError if s·f = 0 or f + s f′² < 0.
double ode_rhs(const OdeState& state);

struct StepControl {
  double rtol = 1e-9;
  double atol = 1e-12;
  double initial_step = 1e-4;
  double crossing_tol = 1e-10;
  double closure_tol = 1e-8;  // f below this at a singular stop counts as closure
  std::size_t max_steps = 1000000;
};

enum class ProfileEnd { reached_s_max, crossed_zero, touched_zero };

struct OdeProfile {
  std::vector<OdeState> states;  // accepted steps, ending at s_max or the crossing
  ProfileEnd end = ProfileEnd::reached_s_max;
  std::optional<double> crossing;  // s where f = 0, when the profile closes
};

/// Adaptive Dormand–Prince integration from (s0, f0, f′0) until s_max or
/// until f crosses zero; the crossing is bisected on the dense output. A stop at
/// the singular set with f ≤ closure_tol ends as touched_zero at the last
/// accepted state; other singular stops throw OdeError.
OdeProfile integrate_profile(double k, double s0, double f0, double fp0, double s_max,
                             const StepControl& control = {});

/// max over sample_count points s ∈ (0, R²) of the ODE residual
/// |s f f″ − (s f′² − k(f + s f′²)^{3/2} − f f′)| for the linear profile f = R² − s.
double sphere_residual(double k, double radius, int sample_count);

}  // namespace reinhardt
