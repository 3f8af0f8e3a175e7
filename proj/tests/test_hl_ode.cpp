#include <doctest.h>

#include <array>
#include <cmath>

#include "reinhardt/errors.hpp"
#include "reinhardt/hl_ode.hpp"

using namespace reinhardt;

namespace {

// f″ written out from s f f″ = s f′² − k (f + s f′²)^{3/2} − f f′
double fpp(double k, double s, double f, double fp) {
  return (s * fp * fp - k * std::pow(f + s * fp * fp, 1.5) - f * fp) / (s * f);
}

// fixed-step classical RK4 on (f, f′) up to s_end
std::array<double, 2> reference_rk4(double k, double s0, double f0, double fp0, double s_end, int steps) {
  const double h = (s_end - s0) / steps;
  double s = s0, f = f0, g = fp0;
  for (int i = 0; i < steps; ++i) {
    const double k1f = g, k1g = fpp(k, s, f, g);
    const double k2f = g + 0.5 * h * k1g, k2g = fpp(k, s + 0.5 * h, f + 0.5 * h * k1f, g + 0.5 * h * k1g);
    const double k3f = g + 0.5 * h * k2g, k3g = fpp(k, s + 0.5 * h, f + 0.5 * h * k2f, g + 0.5 * h * k2g);
    const double k4f = g + h * k3g, k4g = fpp(k, s + h, f + h * k3f, g + h * k3g);
    f += h / 6 * (k1f + 2 * k2f + 2 * k3f + k4f);
    g += h / 6 * (k1g + 2 * k2g + 2 * k3g + k4g);
    s += h;
  }
  return {f, g};
}

// dense-enough evaluation of an OdeProfile at s by cubic Hermite interpolation
double interpolate_f(const OdeProfile& prof, double s) {
  for (std::size_t i = 1; i < prof.states.size(); ++i) {
    const OdeState& a = prof.states[i - 1];
    const OdeState& b = prof.states[i];
    if (s > b.s) continue;
    const double h = b.s - a.s, t = (s - a.s) / h;
    const double h00 = 2 * t * t * t - 3 * t * t + 1, h10 = t * t * t - 2 * t * t + t;
    const double h01 = -2 * t * t * t + 3 * t * t, h11 = t * t * t - t * t;
    return h00 * a.f + h10 * h * a.fp + h01 * b.f + h11 * h * b.fp;
  }
  return prof.states.back().f;
}

}  // namespace

TEST_CASE("right-hand side") {
  CHECK(ode_rhs({0.5, 0.5, -1.0, 1.0}) == doctest::Approx(fpp(1.0, 0.5, 0.5, -1.0)));
  CHECK(ode_rhs({0.5, 0.5, -1.0, 1.0}) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK_THROWS_AS(ode_rhs({0.0, 1.0, -1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(ode_rhs({0.5, 0.0, -1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(ode_rhs({1.0, -2.0, 0.5, 1.0}), DomainError);
}

TEST_CASE("sphere witness residual") {
  for (double R : {0.5, 1.0, 2.0}) CHECK(sphere_residual(1.0 / R, R, 200) <= 1e-12);
  // off the witness: |R² − k R³| for every s
  CHECK(sphere_residual(1.0, 2.0, 50) == doctest::Approx(4.0));
  CHECK_THROWS_AS(sphere_residual(-1.0, 1.0, 10), DomainError);
}

TEST_CASE("sphere data stay linear up to the crossing") {
  for (double R : {0.5, 1.0, 2.0}) {
    const double s0 = 1e-3;
    const OdeProfile prof = integrate_profile(1.0 / R, s0, R * R - s0, -1.0, 2 * R * R);
    REQUIRE(prof.end == ProfileEnd::crossed_zero);
    REQUIRE(prof.crossing);
    CHECK(std::abs(*prof.crossing - R * R) <= 1e-6);
    for (const OdeState& st : prof.states) {
      CHECK(std::abs(st.f - (R * R - st.s)) <= 1e-6);
      CHECK(std::abs(st.fp + 1.0) <= 1e-6);
    }
    CHECK(prof.states.front().s == s0);
    CHECK(prof.states.back().s == doctest::Approx(*prof.crossing));
  }
}

TEST_CASE("agrees with a reference RK4 off the sphere branch") {
  const double k = 0.8, s0 = 0.05, f0 = 1.2, fp0 = -0.7, s_end = 0.6;
  const OdeProfile prof = integrate_profile(k, s0, f0, fp0, s_end);
  REQUIRE(prof.end == ProfileEnd::reached_s_max);
  const auto ref = reference_rk4(k, s0, f0, fp0, s_end, 20000);
  CHECK(std::abs(prof.states.back().s - s_end) <= 1e-12);
  CHECK(std::abs(prof.states.back().f - ref[0]) <= 1e-7);
  CHECK(std::abs(prof.states.back().fp - ref[1]) <= 1e-6);
  const auto mid = reference_rk4(k, s0, f0, fp0, 0.3, 20000);
  CHECK(std::abs(interpolate_f(prof, 0.3) - mid[0]) <= 1e-6);
}

TEST_CASE("crossing is stable under step-control halving") {
  // sign-change crossings occur on the sphere branch; perturbed starts close
  // tangentially or blow up instead
  StepControl coarse;
  coarse.rtol = 1e-8;
  coarse.atol = 1e-10;
  StepControl fine = coarse;
  fine.rtol /= 2;
  fine.atol /= 2;
  for (double R : {0.5, 1.0, 2.0}) {
    const double s0 = 0.01 * R * R;
    const OdeProfile a = integrate_profile(1 / R, s0, R * R - s0, -1.0, 3 * R * R, coarse);
    const OdeProfile b = integrate_profile(1 / R, s0, R * R - s0, -1.0, 3 * R * R, fine);
    REQUIRE(a.end == ProfileEnd::crossed_zero);
    REQUIRE(b.end == ProfileEnd::crossed_zero);
    CHECK(std::abs(*a.crossing - *b.crossing) <= coarse.rtol);
  }
}

TEST_CASE("domain guard along perturbed starts") {
  for (double fp0 : {-0.9, -1.1, -0.5, 0.2})
    for (double k : {0.5, 1.0, 2.0}) {
      try {
        const OdeProfile prof = integrate_profile(k, 0.01, 0.99, fp0, 2.0);
        for (const OdeState& st : prof.states) CHECK(st.f + st.s * st.fp * st.fp >= -1e-12);
      } catch (const OdeError& e) {
        const OdeState& st = e.last_valid();
        CHECK(st.f + st.s * st.fp * st.fp >= -1e-12);
      }
    }
}

TEST_CASE("invalid initial data") {
  CHECK_THROWS_AS(integrate_profile(1.0, 0.1, -0.5, -1.0, 2.0), DomainError);
  CHECK_THROWS_AS(integrate_profile(1.0, 0.0, 0.5, -1.0, 2.0), DomainError);
  CHECK_THROWS_AS(integrate_profile(1.0, 0.5, 0.5, -1.0, 0.2), DomainError);
}

TEST_CASE("tangential closure off the sphere branch") {
  const OdeProfile prof = integrate_profile(0.9, 0.1, 0.9, -1.0, 10.0);
  REQUIRE(prof.end == ProfileEnd::touched_zero);
  REQUIRE(prof.crossing);
  CHECK(prof.states.back().f <= StepControl{}.closure_tol);
  CHECK(*prof.crossing == prof.states.back().s);
  // f decreases monotonically toward the closure
  for (std::size_t i = 1; i < prof.states.size(); ++i) CHECK(prof.states[i].f < prof.states[i - 1].f);
}
