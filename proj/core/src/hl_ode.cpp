#include "reinhardt/hl_ode.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include <boost/numeric/odeint.hpp>

namespace reinhardt {
namespace {

using State = std::array<double, 2>;  // (f, f′)
namespace odeint = boost::numeric::odeint;

}  // namespace

double ode_rhs(const OdeState& st) {
  const double denom = st.s * st.f;
  if (denom == 0.0) throw DomainError("ODE is singular where s*f = 0");
  const double base = st.f + st.s * st.fp * st.fp;
  if (base < 0.0) throw DomainError("f + s*f'^2 is negative");
  return (st.s * st.fp * st.fp - st.k * std::pow(base, 1.5) - st.f * st.fp) / denom;
}

OdeProfile integrate_profile(double k, double s0, double f0, double fp0, double s_max,
                             const StepControl& control) {
  if (!(s0 > 0.0)) throw DomainError("s0 must be positive");
  if (!(f0 > 0.0)) throw DomainError("f0 must be positive");
  if (f0 + s0 * fp0 * fp0 < 0.0) throw DomainError("initial data violate f + s*f'^2 >= 0");
  if (!(s_max > s0)) throw DomainError("s_max must exceed s0");

  auto system = [k](const State& x, State& dxdt, double s) {
    dxdt[0] = x[1];
    dxdt[1] = ode_rhs({s, x[0], x[1], k});
  };

  OdeProfile out;
  out.states.push_back({s0, f0, fp0, k});
  auto stepper = odeint::make_dense_output(control.atol, control.rtol, odeint::runge_kutta_dopri5<State>());
  stepper.initialize(State{f0, fp0}, s0, control.initial_step);

  auto last = [&] { return out.states.back(); };
  // f reached zero tangentially: the singular set s·f = 0 is hit before a sign change
  auto closes = [&] {
    if (last().f > control.closure_tol) return false;
    out.end = ProfileEnd::touched_zero;
    out.crossing = last().s;
    return true;
  };
  for (std::size_t step = 0; step < control.max_steps; ++step) {
    try {
      stepper.do_step(system);
    } catch (const DomainError& e) {
      if (closes()) return out;
      throw OdeError(std::string("integration stopped: ") + e.what(), last());
    }
    const double s = stepper.current_time();
    const State& x = stepper.current_state();
    if (!std::isfinite(x[0]) || !std::isfinite(x[1]))
      throw OdeError("integration produced a non-finite state", last());

    if (x[0] <= 0.0) {
      double lo = stepper.previous_time();
      double hi = std::min(s, s_max);
      State probe{};
      stepper.calc_state(hi, probe);
      if (probe[0] <= 0.0) {
        while (hi - lo > control.crossing_tol) {
          const double mid = 0.5 * (lo + hi);
          stepper.calc_state(mid, probe);
          if (probe[0] > 0.0) lo = mid;
          else hi = mid;
        }
        const double crossing = 0.5 * (lo + hi);
        stepper.calc_state(crossing, probe);
        out.states.push_back({crossing, probe[0], probe[1], k});
        out.end = ProfileEnd::crossed_zero;
        out.crossing = crossing;
        return out;
      }
    }
    if (s >= s_max) {
      State final_state{};
      stepper.calc_state(s_max, final_state);
      out.states.push_back({s_max, final_state[0], final_state[1], k});
      out.end = ProfileEnd::reached_s_max;
      return out;
    }
    if (x[0] + s * x[1] * x[1] < 0.0) {
      if (closes()) return out;
      throw OdeError("f + s*f'^2 became negative", last());
    }
    out.states.push_back({s, x[0], x[1], k});
  }
  throw OdeError("step budget exhausted before reaching s_max", last());
}

double sphere_residual(double k, double radius, int sample_count) {
  if (!(k > 0.0) || !(radius > 0.0)) throw DomainError("k and R must be positive");
  if (sample_count < 1) throw DomainError("sample_count must be positive");
  const double r2 = radius * radius;
  double worst = 0.0;
  for (int i = 1; i <= sample_count; ++i) {
    const double s = r2 * i / (sample_count + 1.0);
    const double f = r2 - s;
    const double fp = -1.0;
    const double fpp = 0.0;
    const double lhs = s * f * fpp;
    const double rhs = s * fp * fp - k * std::pow(f + s * fp * fp, 1.5) - f * fp;
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

}  // namespace reinhardt
