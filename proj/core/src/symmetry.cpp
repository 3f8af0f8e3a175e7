#include "reinhardt/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include "reinhardt/errors.hpp"
#include "reinhardt/geometry.hpp"
#include "reinhardt/linalg.hpp"

namespace reinhardt {
namespace {

struct FaceSolution {
  RealVector r;
  double multiplier;
};

// Newton on F(r_S, μ) = (g_S(r) − μ·1, g(r)) with the minimum-norm step, which
// also handles the sphere's continuum of solutions.
std::optional<FaceSolution> solve_face(const RadialProfile& profile, const std::vector<int>& face,
                                       RealVector r, int max_iter) {
  const int s = static_cast<int>(face.size());
  auto residual = [&](const RealVector& radii, double mu, ProfileJet& jet) {
    jet = profile.jet(radii);
    RealVector out(s + 1);
    for (int a = 0; a < s; ++a) out[a] = jet.grad[face[a]] - mu;
    out[s] = jet.value;
    return out;
  };

  ProfileJet jet = profile.jet(r);
  double mu = 0.0;
  for (int k : face) mu += jet.grad[k];
  mu /= s;
  RealVector res = residual(r, mu, jet);

  for (int iter = 0; iter < max_iter; ++iter) {
    const double scale = std::max({1.0, std::abs(mu), jet.grad.cwiseAbs().maxCoeff()});
    if (res.cwiseAbs().maxCoeff() <= 1e-13 * scale) {
      for (int k : face)
        if (!(r[k] > 1e-12 * std::max(1.0, r.maxCoeff()))) return std::nullopt;
      if (!(std::abs(mu) > 0.0)) return std::nullopt;
      return FaceSolution{r, mu};
    }
    RealMatrix jac = RealMatrix::Zero(s + 1, s + 1);
    for (int a = 0; a < s; ++a) {
      for (int b = 0; b < s; ++b) jac(a, b) = jet.hess(face[a], face[b]);
      jac(a, s) = -1.0;
      jac(s, a) = jet.grad[face[a]];
    }
    const RealVector step = jac.completeOrthogonalDecomposition().solve(-res);
    if (!step.allFinite()) return std::nullopt;

    double alpha = 1.0;
    bool accepted = false;
    for (int shrink = 0; shrink < 40; ++shrink, alpha *= 0.5) {
      RealVector trial = r;
      bool positive = true;
      for (int a = 0; a < s; ++a) {
        trial[face[a]] += alpha * step[a];
        if (!(trial[face[a]] > 0.0)) positive = false;
      }
      if (!positive) continue;
      ProfileJet trial_jet;
      const double trial_mu = mu + alpha * step[s];
      const RealVector trial_res = residual(trial, trial_mu, trial_jet);
      if (trial_res.norm() < res.norm() || shrink == 39 || res.norm() == 0.0) {
        r = trial;
        mu = trial_mu;
        jet = trial_jet;
        res = trial_res;
        accepted = true;
        break;
      }
    }
    if (!accepted) return std::nullopt;
  }
  return std::nullopt;
}

CriticalKind classify(const RadialProfile& profile, const std::vector<int>& face, const FaceSolution& sol) {
  const int m = profile.dim();
  const int s = static_cast<int>(face.size());
  const ProfileJet jet = profile.jet(sol.r);
  std::vector<double> curvatures;

  // Leaving the face: moving r_k off zero changes φ at first order in r_k.
  for (int k = 0; k < m; ++k) {
    if (std::find(face.begin(), face.end(), k) != face.end()) continue;
    curvatures.push_back(1.0 - jet.grad[k] / sol.multiplier);
  }
  // Within the face: Lagrangian Hessian −H_SS/μ on the tangent space of g = 0.
  if (s >= 2) {
    RealVector normal(s);
    RealMatrix hess(s, s);
    for (int a = 0; a < s; ++a) {
      normal[a] = jet.grad[face[a]];
      for (int b = 0; b < s; ++b) hess(a, b) = jet.hess(face[a], face[b]);
    }
    Eigen::FullPivLU<RealMatrix> lu(normal.transpose());
    RealMatrix basis = lu.kernel();
    basis = Eigen::HouseholderQR<RealMatrix>(basis).householderQ() * RealMatrix::Identity(s, basis.cols());
    const RealMatrix reduced = basis.transpose() * (-hess / sol.multiplier) * basis;
    const RealVector eig = linalg::hermitian_eigenvalues(reduced.cast<Complex>());
    for (Eigen::Index i = 0; i < eig.size(); ++i) curvatures.push_back(eig[i]);
  }
  if (curvatures.empty()) return CriticalKind::undetermined;

  const double eps = 1e-9;
  const bool any_pos = std::any_of(curvatures.begin(), curvatures.end(), [&](double c) { return c > eps; });
  const bool any_neg = std::any_of(curvatures.begin(), curvatures.end(), [&](double c) { return c < -eps; });
  const bool any_flat =
      std::any_of(curvatures.begin(), curvatures.end(), [&](double c) { return std::abs(c) <= eps; });
  if (any_pos && any_neg) return CriticalKind::saddle;
  if (any_flat) return CriticalKind::undetermined;
  return any_pos ? CriticalKind::min : CriticalKind::max;
}

}  // namespace

double distance_half_sq(const SurfacePoint& q) { return 0.5 * eval_radii(q.z).sum(); }

double check_lemma(const RadialProfile& profile, const SurfacePoint& q, const Tolerances& tol) {
  return std::abs(to_real(q.z).dot(characteristic_direction(profile, q, tol)));
}

RealVector horizontal_distance_derivatives(const RadialProfile& profile, const SurfacePoint& q,
                                           const Tolerances& tol) {
  const Frame fr = frame(profile, q, tol);
  const RealVector p = to_real(q.z);
  const Eigen::Index n = static_cast<Eigen::Index>(fr.x.size());
  RealVector out(2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out[k] = p.dot(fr.x[k]);
    out[n + k] = p.dot(fr.y[k]);
  }
  return out;
}

const char* to_string(CriticalKind kind) {
  switch (kind) {
    case CriticalKind::max: return "max";
    case CriticalKind::min: return "min";
    case CriticalKind::saddle: return "saddle";
    case CriticalKind::undetermined: return "undetermined";
  }
  return "undetermined";
}

std::vector<CriticalPointResult> find_critical_points(const RadialProfile& profile,
                                                      const CriticalSearchOptions& options,
                                                      const Tolerances& tol) {
  const int m = profile.dim();
  const double search_radius =
      options.search_radius > 0.0 ? options.search_radius : default_search_radius(profile);
  const BoundednessVerdict bounded = is_bounded(profile, search_radius);
  if (bounded.kind != Boundedness::bounded)
    throw PreconditionError(std::string("critical-point search needs a bounded profile (") +
                            to_string(bounded.kind) + ")");
  const double t_max = search_radius * search_radius;

  std::vector<CriticalPointResult> results;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> face;
    for (int k = 0; k < m; ++k)
      if (mask & (1u << k)) face.push_back(k);

    std::mt19937_64 rng(options.seed ^ (0x9e3779b97f4a7c15ULL * mask));
    std::uniform_real_distribution<double> unit(0.05, 1.0);
    for (int start = 0; start < options.starts_per_face; ++start) {
      RealVector d = RealVector::Zero(m);
      for (int k : face) d[k] = start == 0 ? 1.0 : unit(rng);
      const auto t = ray_root(profile, d, t_max);
      if (!t) continue;
      const auto sol = solve_face(profile, face, *t * d, options.max_newton_iter);
      if (!sol) continue;

      const bool duplicate = std::any_of(results.begin(), results.end(), [&](const CriticalPointResult& cp) {
        return (cp.p_hat.r - sol->r).norm() <= tol.dedup_tol;
      });
      if (duplicate) continue;

      ComplexVector z(m);
      for (int k = 0; k < m; ++k) z[k] = std::sqrt(sol->r[k]);
      CriticalPointResult cp;
      cp.p_hat = make_surface_point(profile, z);
      cp.norm = std::sqrt(cp.p_hat.r.sum());
      const LocalData local = local_data(profile, cp.p_hat, tol);
      cp.h_TT_at = characteristic_curvature_radial(local);
      cp.rigidity_residual = std::abs(1.0 - cp.norm * cp.h_TT_at);
      const RealVector normal = -local.gradient / local.gradient_norm;
      cp.parallel_residual = (to_real(z) + cp.norm * normal).norm();
      cp.multiplier = sol->multiplier;
      cp.active_set = face;
      cp.kind = classify(profile, face, *sol);
      results.push_back(std::move(cp));
    }
  }
  if (results.empty()) throw ConvergenceError("no critical point converged within the multi-start budget");

  std::sort(results.begin(), results.end(), [](const CriticalPointResult& a, const CriticalPointResult& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return std::lexicographical_compare(a.p_hat.r.begin(), a.p_hat.r.end(), b.p_hat.r.begin(), b.p_hat.r.end());
  });
  return results;
}

double check_critical_relation(const RadialProfile& profile, const CriticalPointResult& cp, const Tolerances& tol) {
  const double norm = std::sqrt(eval_radii(cp.p_hat.z).sum());
  return std::abs(1.0 - norm * characteristic_curvature_radial(profile, cp.p_hat, tol));
}

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::sphere: return "sphere";
    case VerdictKind::not_sphere: return "not_sphere";
    case VerdictKind::precondition_failed: return "precondition_failed";
  }
  return "precondition_failed";
}

SymmetryVerdict verify_symmetry(const RadialProfile& profile, std::size_t sample_count, std::uint64_t seed,
                                const Tolerances& tol, const VerifyOptions& options) {
  const double search_radius =
      options.search_radius > 0.0 ? options.search_radius : default_search_radius(profile);

  SymmetryVerdict verdict;
  verdict.sample_count = sample_count;
  verdict.seed = seed;
  verdict.constancy_tol = tol.constancy_tol;
  verdict.radius_tol = tol.radius_tol;
  verdict.bounded = is_bounded(profile, search_radius);

  SamplingOptions sampling;
  sampling.box_radius = search_radius;
  sampling.projection.surface_tol = tol.surface_tol;
  const std::vector<SurfacePoint> samples = sample_surface(profile, sample_count, seed, sampling);

  std::vector<double> h(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i)
    h[i] = characteristic_curvature_radial(profile, samples[i], tol);
  const auto [lo, hi] = std::minmax_element(h.begin(), h.end());
  double mean = 0.0;
  for (double v : h) mean += v;
  mean /= static_cast<double>(h.size());

  verdict.h_TT_mean = mean;
  verdict.h_TT_spread = mean != 0.0 ? (*hi - *lo) / std::abs(mean) : (*hi - *lo);
  verdict.is_constant = verdict.h_TT_spread <= tol.constancy_tol;
  verdict.witness = {samples[lo - h.begin()], samples[hi - h.begin()], *lo, *hi};
  for (const SurfacePoint& q : samples)
    verdict.radius_check = std::max(verdict.radius_check, std::abs(std::sqrt(q.r.sum()) - 1.0 / mean));

  if (verdict.bounded.kind != Boundedness::bounded) {
    verdict.kind = VerdictKind::precondition_failed;
    verdict.reason = verdict.bounded.kind == Boundedness::unbounded ? "unbounded" : "boundedness_inconclusive";
  } else if (!verdict.is_constant) {
    verdict.kind = VerdictKind::not_sphere;
  } else if (verdict.radius_check <= tol.radius_tol) {
    verdict.kind = VerdictKind::sphere;
    verdict.radius = 1.0 / mean;
  } else {
    verdict.kind = VerdictKind::precondition_failed;
    verdict.reason = "radius_mismatch";
  }
  return verdict;
}

}  // namespace reinhardt
