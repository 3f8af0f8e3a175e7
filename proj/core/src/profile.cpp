#include "reinhardt/profile.hpp"

#include <cmath>
#include <sstream>

#include "reinhardt/errors.hpp"

namespace reinhardt {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double pow_int(double base, int exponent) {
  double out = 1.0;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

void validate(int dim, const Family& family) {
  if (dim < 2) throw DomainError("profile dimension must be at least 2 (n >= 1)");
  std::visit(
      Overloaded{
          [](const Sphere& s) {
            if (!(s.radius > 0.0)) throw DomainError("sphere radius must be positive");
          },
          [dim](const Ellipsoid& e) {
            if (static_cast<int>(e.semiaxes.size()) != dim)
              throw DomainError("ellipsoid needs one semiaxis per complex coordinate");
            for (double a : e.semiaxes)
              if (!(a > 0.0)) throw DomainError("ellipsoid semiaxes must be positive");
          },
          [dim](const Cylinder& c) {
            if (!(c.radius > 0.0)) throw DomainError("cylinder radius must be positive");
            if (c.fixed_index < 0 || c.fixed_index >= dim)
              throw DomainError("cylinder fixed_index out of range");
          },
          [dim](const Polynomial& p) {
            if (p.terms.empty()) throw DomainError("polynomial profile has no terms");
            for (const auto& [index, coeff] : p.terms) {
              if (static_cast<int>(index.size()) != dim)
                throw DomainError("polynomial multi-index has wrong length");
              for (int e : index)
                if (e < 0) throw DomainError("polynomial exponents must be nonnegative");
              if (!std::isfinite(coeff)) throw DomainError("polynomial coefficient is not finite");
            }
          },
      },
      family);
}

}  // namespace

RadialProfile::RadialProfile(int dim, Family family, DerivativeMode mode,
                             FiniteDifferenceSteps steps)
    : dim_(dim), family_(std::move(family)), mode_(mode), steps_(steps) {
  validate(dim_, family_);
  if (!(steps_.gradient_step > 0.0) || !(steps_.hessian_step > 0.0))
    throw DomainError("finite-difference steps must be positive");
}

RadialProfile RadialProfile::sphere(int dim, double radius) {
  return RadialProfile(dim, Sphere{radius});
}

RadialProfile RadialProfile::ellipsoid(std::vector<double> semiaxes) {
  const int dim = static_cast<int>(semiaxes.size());
  return RadialProfile(dim, Ellipsoid{std::move(semiaxes)});
}

RadialProfile RadialProfile::cylinder(int dim, double radius, int fixed_index) {
  return RadialProfile(dim, Cylinder{radius, fixed_index});
}

RadialProfile RadialProfile::polynomial(int dim, std::map<MultiIndex, double> terms) {
  return RadialProfile(dim, Polynomial{std::move(terms)});
}

std::string RadialProfile::family_name() const {
  return std::visit(Overloaded{
                        [](const Sphere&) { return std::string("sphere"); },
                        [](const Ellipsoid&) { return std::string("ellipsoid"); },
                        [](const Cylinder&) { return std::string("cylinder"); },
                        [](const Polynomial&) { return std::string("polynomial"); },
                    },
                    family_);
}

RadialProfile RadialProfile::with_mode(DerivativeMode mode, FiniteDifferenceSteps steps) const {
  return RadialProfile(dim_, family_, mode, steps);
}

void RadialProfile::check_radii(const RealVector& r) const {
  if (r.size() != dim_) throw DomainError("radius vector has wrong dimension");
  for (Eigen::Index k = 0; k < r.size(); ++k) {
    if (!(r[k] >= 0.0)) {
      std::ostringstream msg;
      msg << "radius r_" << (k + 1) << " = " << r[k] << " is negative";
      throw DomainError(msg.str());
    }
  }
}

double RadialProfile::value(const RealVector& r) const {
  check_radii(r);
  return analytic_value(r);
}

ProfileJet RadialProfile::jet(const RealVector& r) const {
  check_radii(r);
  return mode_ == DerivativeMode::analytic ? analytic_jet(r) : finite_difference_jet(r);
}

double RadialProfile::analytic_value(const RealVector& r) const {
  return std::visit(Overloaded{
                        [&](const Sphere& s) { return r.sum() - s.radius * s.radius; },
                        [&](const Ellipsoid& e) {
                          double g = -1.0;
                          for (int k = 0; k < dim_; ++k)
                            g += r[k] / (e.semiaxes[k] * e.semiaxes[k]);
                          return g;
                        },
                        [&](const Cylinder& c) { return r[c.fixed_index] - c.radius * c.radius; },
                        [&](const Polynomial& p) {
                          double g = 0.0;
                          for (const auto& [index, coeff] : p.terms) {
                            double term = coeff;
                            for (int k = 0; k < dim_; ++k) term *= pow_int(r[k], index[k]);
                            g += term;
                          }
                          return g;
                        },
                    },
                    family_);
}

ProfileJet RadialProfile::analytic_jet(const RealVector& r) const {
  ProfileJet jet;
  jet.value = analytic_value(r);
  jet.grad = RealVector::Zero(dim_);
  jet.hess = RealMatrix::Zero(dim_, dim_);
  std::visit(Overloaded{
                 [&](const Sphere&) { jet.grad.setOnes(); },
                 [&](const Ellipsoid& e) {
                   for (int k = 0; k < dim_; ++k)
                     jet.grad[k] = 1.0 / (e.semiaxes[k] * e.semiaxes[k]);
                 },
                 [&](const Cylinder& c) { jet.grad[c.fixed_index] = 1.0; },
                 [&](const Polynomial& p) {
                   // d/dr_k of r^e is e_k r^{e - e_k}; exponents are small so the
                   // products are formed directly.
                   for (const auto& [index, coeff] : p.terms) {
                     for (int k = 0; k < dim_; ++k) {
                       if (index[k] == 0) continue;
                       double dk = coeff * index[k];
                       for (int l = 0; l < dim_; ++l)
                         dk *= pow_int(r[l], l == k ? index[l] - 1 : index[l]);
                       jet.grad[k] += dk;
                       for (int j = k; j < dim_; ++j) {
                         const int ej = j == k ? index[j] - 1 : index[j];
                         if (ej == 0) continue;
                         double djk = coeff * index[k] * ej;
                         for (int l = 0; l < dim_; ++l) {
                           int e = index[l];
                           if (l == k) --e;
                           if (l == j) --e;
                           djk *= pow_int(r[l], e);
                         }
                         jet.hess(j, k) += djk;
                         if (j != k) jet.hess(k, j) += djk;
                       }
                     }
                   }
                 },
             },
             family_);
  return jet;
}

namespace {

// Three-point first-derivative stencil along one axis: offsets in units of h
// and weights (to be divided by h).
struct Stencil {
  std::vector<int> offsets;
  std::vector<double> weights;
};

Stencil first_derivative_stencil(double rk, double h) {
  if (rk >= h) return {{-1, 1}, {-0.5, 0.5}};
  return {{0, 1, 2}, {-1.5, 2.0, -0.5}};
}

Stencil second_derivative_stencil(double rk, double h) {
  if (rk >= h) return {{-1, 0, 1}, {1.0, -2.0, 1.0}};
  return {{0, 1, 2, 3}, {2.0, -5.0, 4.0, -1.0}};
}

}  // namespace

ProfileJet RadialProfile::finite_difference_jet(const RealVector& r) const {
  ProfileJet jet;
  jet.value = analytic_value(r);
  jet.grad = RealVector::Zero(dim_);
  jet.hess = RealMatrix::Zero(dim_, dim_);

  const double h = steps_.gradient_step;
  RealVector probe = r;
  for (int k = 0; k < dim_; ++k) {
    const Stencil s = first_derivative_stencil(r[k], h);
    double acc = 0.0;
    for (std::size_t i = 0; i < s.offsets.size(); ++i) {
      probe[k] = r[k] + s.offsets[i] * h;
      acc += s.weights[i] * analytic_value(probe);
    }
    probe[k] = r[k];
    jet.grad[k] = acc / h;
  }

  const double hh = steps_.hessian_step;
  for (int k = 0; k < dim_; ++k) {
    const Stencil s = second_derivative_stencil(r[k], hh);
    double acc = 0.0;
    for (std::size_t i = 0; i < s.offsets.size(); ++i) {
      probe[k] = r[k] + s.offsets[i] * hh;
      acc += s.weights[i] * analytic_value(probe);
    }
    probe[k] = r[k];
    jet.hess(k, k) = acc / (hh * hh);
  }
  for (int j = 0; j < dim_; ++j) {
    const Stencil sj = first_derivative_stencil(r[j], hh);
    for (int k = j + 1; k < dim_; ++k) {
      const Stencil sk = first_derivative_stencil(r[k], hh);
      double acc = 0.0;
      for (std::size_t a = 0; a < sj.offsets.size(); ++a) {
        for (std::size_t b = 0; b < sk.offsets.size(); ++b) {
          probe[j] = r[j] + sj.offsets[a] * hh;
          probe[k] = r[k] + sk.offsets[b] * hh;
          acc += sj.weights[a] * sk.weights[b] * analytic_value(probe);
        }
      }
      probe[j] = r[j];
      probe[k] = r[k];
      jet.hess(j, k) = jet.hess(k, j) = acc / (hh * hh);
    }
  }
  return jet;
}

RealVector eval_radii(const ComplexVector& z) {
  RealVector r(z.size());
  for (Eigen::Index k = 0; k < z.size(); ++k) {
    const double x = z[k].real();
    const double y = z[k].imag();
    r[k] = x * x + y * y;
  }
  return r;
}

double complex_gradient_norm(const RealVector& r, const RealVector& grad) {
  double acc = 0.0;
  for (Eigen::Index k = 0; k < r.size(); ++k) acc += r[k] * grad[k] * grad[k];
  return std::sqrt(acc);
}

SurfacePoint make_surface_point(const RadialProfile& profile, const ComplexVector& z) {
  if (z.size() != profile.dim()) throw DomainError("point has wrong dimension");
  SurfacePoint q;
  q.z = z;
  q.r = eval_radii(z);
  const ProfileJet jet = profile.jet(q.r);
  q.residual = std::abs(jet.value);
  q.grad_norm_complex = complex_gradient_norm(q.r, jet.grad);
  return q;
}

RealVector real_gradient(const ProfileJet& jet, const ComplexVector& z) {
  const Eigen::Index m = z.size();
  RealVector u(2 * m);
  for (Eigen::Index k = 0; k < m; ++k) {
    u[k] = 2.0 * z[k].real() * jet.grad[k];
    u[m + k] = 2.0 * z[k].imag() * jet.grad[k];
  }
  return u;
}

RealVector real_gradient(const RadialProfile& profile, const ComplexVector& z,
                         const Tolerances& tol) {
  const RealVector u = real_gradient(profile.jet(eval_radii(z)), z);
  if (u.norm() < tol.grad_tol) throw DegenerateGradientError("defining-function gradient vanishes");
  return u;
}

RealMatrix real_hessian(const ProfileJet& jet, const ComplexVector& z) {
  const Eigen::Index m = z.size();
  const RealVector p = to_real(z);
  RealMatrix hess(2 * m, 2 * m);
  for (Eigen::Index a = 0; a < 2 * m; ++a) {
    for (Eigen::Index b = 0; b < 2 * m; ++b) {
      hess(a, b) = 4.0 * p[a] * p[b] * jet.hess(a % m, b % m);
    }
    hess(a, a) += 2.0 * jet.grad[a % m];
  }
  return hess;
}

ComplexMatrix complex_hessian(const ProfileJet& jet, const ComplexVector& z) {
  const Eigen::Index m = z.size();
  ComplexMatrix out(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = 0; k < m; ++k) {
      out(j, k) = std::conj(z[j]) * z[k] * jet.hess(j, k);
    }
    out(j, j) += jet.grad[j];
  }
  return out;
}

Complex complex_hessian_entry(const RadialProfile& profile, const ComplexVector& z, int j, int k) {
  if (j < 0 || k < 0 || j >= profile.dim() || k >= profile.dim())
    throw DomainError("complex Hessian index out of range");
  const ProfileJet jet = profile.jet(eval_radii(z));
  Complex entry = std::conj(z[j]) * z[k] * jet.hess(j, k);
  if (j == k) entry += jet.grad[j];
  return entry;
}

SurfacePoint project_to_surface(const RadialProfile& profile, const ComplexVector& guess,
                                const ProjectionOptions& options) {
  if (guess.size() != profile.dim()) throw DomainError("point has wrong dimension");
  const RealVector r0 = eval_radii(guess);
  if (r0.sum() == 0.0) throw ConvergenceError("cannot project the origin radially");

  double t = 1.0;
  for (int iter = 0; iter < options.max_iter; ++iter) {
    const ProfileJet jet = profile.jet(t * r0);
    if (std::abs(jet.value) <= 1e-3 * options.surface_tol) break;
    const double slope = r0.dot(jet.grad);
    double next = slope != 0.0 ? t - jet.value / slope : 0.0;
    if (!(next > 0.0) || !std::isfinite(next)) next = 0.5 * t;
    const bool converged = std::abs(next - t) <= 1e-15 * t;
    t = next;
    if (converged) break;
  }
  SurfacePoint q = make_surface_point(profile, guess * std::sqrt(t));
  if (!(q.residual <= options.surface_tol)) {
    std::ostringstream msg;
    msg << "radial projection did not converge (residual " << q.residual << ")";
    throw ConvergenceError(msg.str());
  }
  return q;
}

}  // namespace reinhardt
