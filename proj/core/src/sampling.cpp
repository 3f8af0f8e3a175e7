#include "reinhardt/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "reinhardt/errors.hpp"

namespace reinhardt {
namespace {

constexpr int kRayScanSteps = 512;
constexpr double kMaxSearchRadius = 1e3;

double ray_value(const RadialProfile& profile, const RealVector& d, double t) {
  return profile.value(t * d);
}

}  // namespace

std::optional<double> ray_root(const RadialProfile& profile, const RealVector& direction,
                               double t_max) {
  // Scan uniformly in √t (i.e. in |z|) so small sections are resolved as well
  // as large ones.
  const double s_max = std::sqrt(t_max);
  double s_prev = 0.0;
  double g_prev = ray_value(profile, direction, 0.0);
  for (int i = 1; i <= kRayScanSteps; ++i) {
    const double s = s_max * i / kRayScanSteps;
    const double g = ray_value(profile, direction, s * s);
    if (g == 0.0) return s * s;
    if ((g_prev < 0.0) != (g < 0.0) && g_prev != 0.0) {
      double lo = s_prev, hi = s;
      for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gm = ray_value(profile, direction, mid * mid);
        if ((gm < 0.0) == (g_prev < 0.0)) lo = mid;
        else hi = mid;
      }
      double t = 0.25 * (lo + hi) * (lo + hi);
      for (int it = 0; it < 3; ++it) {
        const ProfileJet jet = profile.jet(t * direction);
        const double slope = direction.dot(jet.grad);
        if (slope == 0.0) break;
        const double next = t - jet.value / slope;
        if (!(next >= lo * lo && next <= hi * hi)) break;
        t = next;
      }
      return t;
    }
    s_prev = s;
    g_prev = g;
  }
  return std::nullopt;
}

double default_search_radius(const RadialProfile& profile) {
  const int m = profile.dim();
  const double t_max = kMaxSearchRadius * kMaxSearchRadius;
  double largest = 0.0;
  bool escaped = false;
  auto probe = [&](const RealVector& d) {
    if (const auto t = ray_root(profile, d, t_max)) {
      largest = std::max(largest, std::sqrt(*t * d.sum()));
    } else if (profile.value(t_max * d) <= 0.0) {
      escaped = true;
    }
  };
  for (int k = 0; k < m; ++k) probe(RealVector::Unit(m, k));
  probe(RealVector::Ones(m));
  if (escaped && largest == 0.0) return kMaxSearchRadius;
  if (largest == 0.0) return 1.0;
  return std::min(4.0 * largest, kMaxSearchRadius);
}

std::vector<SurfacePoint> sample_surface(const RadialProfile& profile, std::size_t count,
                                         std::uint64_t seed, const SamplingOptions& options) {
  const int m = profile.dim();
  const double box = options.box_radius > 0.0 ? options.box_radius : default_search_radius(profile);
  const double t_max = box * box;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

  std::vector<SurfacePoint> out;
  out.reserve(count);

  auto lift = [&](const RealVector& r) -> std::optional<SurfacePoint> {
    ComplexVector z(m);
    for (int k = 0; k < m; ++k) z[k] = std::polar(std::sqrt(r[k]), angle(rng));
    try {
      return project_to_surface(profile, z, options.projection);
    } catch (const ConvergenceError&) {
      return std::nullopt;
    }
  };

  if (options.include_axis_points) {
    for (int k = 0; k < m && out.size() < count; ++k) {
      const RealVector d = RealVector::Unit(m, k);
      if (const auto t = ray_root(profile, d, t_max)) {
        if (auto q = lift(*t * d)) out.push_back(std::move(*q));
      }
    }
  }

  const std::size_t max_attempts =
      std::max<std::size_t>(count, 1) * static_cast<std::size_t>(options.attempts_per_sample);
  std::size_t attempts = 0;
  while (out.size() < count && attempts < max_attempts) {
    ++attempts;
    RealVector d(m);
    for (int k = 0; k < m; ++k) d[k] = unit(rng);
    if (unit(rng) < options.degenerate_fraction) {
      // Zero a random proper subset, keeping one random coordinate alive.
      const int keep = static_cast<int>(unit(rng) * m) % m;
      for (int k = 0; k < m; ++k)
        if (k != keep && unit(rng) < 0.5) d[k] = 0.0;
    }
    const double peak = d.maxCoeff();
    if (!(peak > 0.0)) continue;
    d /= peak;
    const auto t = ray_root(profile, d, t_max);
    if (!t) continue;
    if (auto q = lift(*t * d)) out.push_back(std::move(*q));
  }

  if (out.empty()) throw EmptySurfaceError("no point of the radius section found in the search box");
  if (out.size() < count)
    throw EmptySurfaceError("radius section too sparse: sampling budget exhausted");
  return out;
}

BoundednessVerdict is_bounded(const RadialProfile& profile, double search_radius, int grid) {
  if (!(search_radius > 0.0)) throw DomainError("search_radius must be positive");
  const int m = profile.dim();
  if (grid <= 0) {
    const double budget = 2e5 / m;
    grid = static_cast<int>(std::floor(std::pow(budget, 1.0 / (m - 1))));
    grid = std::clamp(grid, 3, 41);
  }

  BoundednessVerdict verdict;
  verdict.search_radius = search_radius;
  verdict.grid = grid;
  const double face = search_radius * search_radius;

  double min_face = std::numeric_limits<double>::infinity();
  bool found_sublevel = profile.value(RealVector::Zero(m)) <= 0.0;

  std::vector<int> counter(m - 1, 0);
  RealVector r(m);
  for (int fixed = 0; fixed < m; ++fixed) {
    std::fill(counter.begin(), counter.end(), 0);
    for (;;) {
      for (int k = 0, c = 0; k < m; ++k) {
        r[k] = k == fixed ? face : face * counter[c++] / (grid - 1);
      }
      const double g = profile.value(r);
      if (g <= 0.0) {
        verdict.kind = Boundedness::unbounded;
        verdict.witness = r;
        return verdict;
      }
      min_face = std::min(min_face, g);
      // The same lattice scaled into the interior looks for the sublevel set.
      if (!found_sublevel) {
        for (int shrink = 1; shrink <= 8 && !found_sublevel; ++shrink) {
          found_sublevel = profile.value(r * (shrink / 9.0)) <= 0.0;
        }
      }
      int c = 0;
      while (c < m - 1 && ++counter[c] == grid) counter[c++] = 0;
      if (c == m - 1) break;
    }
  }

  verdict.kind = (found_sublevel && min_face > 0.0) ? Boundedness::bounded : Boundedness::inconclusive;
  return verdict;
}

const char* to_string(Boundedness b) {
  switch (b) {
    case Boundedness::bounded: return "bounded";
    case Boundedness::unbounded: return "unbounded";
    case Boundedness::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace reinhardt
