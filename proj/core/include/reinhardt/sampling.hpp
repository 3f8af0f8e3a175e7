#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "reinhardt/profile.hpp"

namespace reinhardt {

/// First t ∈ (0, t_max] with g(t·d) = 0 along a ray in the positive orthant of
/// r-space, located by a sign-change scan then bisection and Newton polishing.
std::optional<double> ray_root(const RadialProfile& profile, const RealVector& direction,
                               double t_max);

/// A box size (in |z| units) comfortably containing the radius section found
/// along coordinate axes and the diagonal.
double default_search_radius(const RadialProfile& profile);

struct SamplingOptions {
  double box_radius = 0.0;           // 0 selects default_search_radius()
  double degenerate_fraction = 0.25; // share of directions with zeroed components
  bool include_axis_points = true;
  int attempts_per_sample = 50;
  ProjectionOptions projection{};
};

/// Deterministic (for a fixed seed) samples of M: random radii on the section
/// {g = 0} plus uniformly random phases, including axis points and points with
/// vanishing components.
std::vector<SurfacePoint> sample_surface(const RadialProfile& profile, std::size_t count,
                                         std::uint64_t seed, const SamplingOptions& options = {});

enum class Boundedness { bounded, unbounded, inconclusive };

struct BoundednessVerdict {
  Boundedness kind = Boundedness::inconclusive;
  RealVector witness;  // radii with g ≤ 0 and max r_k = search_radius² (unbounded only)
  double search_radius = 0.0;
  int grid = 0;
};

/// Grid scan of the faces max_k r_k = search_radius² of the radii box. This
/// flags unbounded profiles; it does not certify boundedness.
BoundednessVerdict is_bounded(const RadialProfile& profile, double search_radius, int grid = 0);

const char* to_string(Boundedness b);

}  // namespace reinhardt
