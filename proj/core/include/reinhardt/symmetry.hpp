#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reinhardt/profile.hpp"
#include "reinhardt/sampling.hpp"
#include "reinhardt/tolerances.hpp"

namespace reinhardt {

/// φ(p) = |p|²/2 = (Σ r_k)/2.
double distance_half_sq(const SurfacePoint& q);

/// |⟨p, T_p⟩| for the position vector p of q; vanishes on every Reinhardt boundary.
double check_lemma(const RadialProfile& profile, const SurfacePoint& q, const Tolerances& tol = {});

/// (X_1(φ)..X_n(φ), Y_1(φ)..Y_n(φ)) = (⟨p, X_k⟩, ⟨p, Y_k⟩) on the horizontal frame.
RealVector horizontal_distance_derivatives(const RadialProfile& profile, const SurfacePoint& q,
                                           const Tolerances& tol = {});

enum class CriticalKind { max, min, saddle, undetermined };
const char* to_string(CriticalKind kind);

struct CriticalPointResult {
  SurfacePoint p_hat;          // representative of the critical torus (real, nonnegative z_k)
  double norm = 0.0;           // |p̂|
  double h_TT_at = 0.0;
  double rigidity_residual = 0.0;  // |1 − |p̂| h_TT|
  double parallel_residual = 0.0;  // ‖p̂ + |p̂| N‖
  double multiplier = 0.0;         // common value of g_k on the active set
  std::vector<int> active_set;     // coordinates with r_k > 0 (0-based)
  CriticalKind kind = CriticalKind::undetermined;
};

struct CriticalSearchOptions {
  int starts_per_face = 20;
  int max_newton_iter = 100;
  double search_radius = 0.0;  // 0 selects default_search_radius()
  std::uint64_t seed = 42;
};

/// Stationary points of Σ r_k on {g(r) = 0, r ≥ 0}: on every face {r_k = 0, k ∉ S}
/// a multi-start projected Newton solves g_k = μ (k ∈ S), g = 0. Results are
/// deduplicated by radii and sorted by norm, then lexicographically by radii.
/// Throws PreconditionError for unbounded profiles and ConvergenceError when no
/// start converges.
std::vector<CriticalPointResult> find_critical_points(const RadialProfile& profile,
                                                      const CriticalSearchOptions& options = {},
                                                      const Tolerances& tol = {});

/// |1 − |p̂|·h_{p̂}(T, T)|, recomputed from the stored point.
double check_critical_relation(const RadialProfile& profile, const CriticalPointResult& cp,
                               const Tolerances& tol = {});

enum class VerdictKind { sphere, not_sphere, precondition_failed };
const char* to_string(VerdictKind kind);

struct WitnessPair {
  SurfacePoint first;
  SurfacePoint second;
  double h_first = 0.0;
  double h_second = 0.0;
};

/// The numerical verdict is an assertion at the stated sample size and
/// tolerances, not a proof.
struct SymmetryVerdict {
  VerdictKind kind = VerdictKind::precondition_failed;
  double radius = 0.0;  // 1/h_TT_mean when kind == sphere
  double h_TT_mean = 0.0;
  double h_TT_spread = 0.0;  // (max − min)/|mean|
  bool is_constant = false;
  BoundednessVerdict bounded;
  double radius_check = 0.0;  // max | |p| − 1/h_TT_mean |
  WitnessPair witness;        // extreme h_TT samples
  std::string reason;         // set when kind == precondition_failed
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;
  double constancy_tol = 0.0;
  double radius_tol = 0.0;
};

struct VerifyOptions {
  double search_radius = 0.0;  // 0 selects default_search_radius()
};

SymmetryVerdict verify_symmetry(const RadialProfile& profile, std::size_t sample_count, std::uint64_t seed,
                                const Tolerances& tol = {}, const VerifyOptions& options = {});

}  // namespace reinhardt
