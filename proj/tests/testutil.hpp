#pragma once

#include <cmath>
#include <random>

#include "bitensor/bitension.hpp"

namespace testutil {

using namespace bitensor;

inline double urand(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Independent central-difference oracle for warp derivatives.
inline double fd_first(const WarpFunction& w, double t, double h) {
  return (w(t + h).w - w(t - h).w) / (2 * h);
}
inline double fd_second(const WarpFunction& w, double t, double h) {
  return (w(t + h).w - 2 * w(t).w + w(t - h).w) / (h * h);
}

// The grouped form of the biharmonicity system (the equivalent regrouping of
// the residual equations), hand-coded as an independent algebraic route.
inline BitensionResidual grouped_system(const WarpedSurface& domain,
                                        const WarpedSurface& target,
                                        const LinearMap& map, double r, double th) {
  const TauPartials p = tau_partials(domain, target, map, r, th);
  const WarpJet s = warp_jet(domain.warp, r);
  const WarpJet w = warp_jet(target.warp, map.rho(r, th));
  const double a = map.a, b = map.b, m = map.m, n = map.n;
  const double inv_s2 = 1.0 / (s.w * s.w);
  const double M2 = m * m + n * n * inv_s2;
  const double AB = a * m + b * n * inv_s2;
  const double A = w.w * w.w1;
  const double Ap = w.w1 * w.w1 + w.w * w.w2;
  const double B = w.w1 / w.w;

  const double eq1 = p.x_rr + p.x_tt * inv_s2 + (s.w1 / s.w) * p.x_r -
                     M2 * Ap * p.x - 2 * m * A * p.y_r -
                     (2 * n * A * inv_s2) * p.y_t -
                     (m * s.w1 * A / s.w + 2 * AB * w.w1 * w.w1) * p.y;
  const double eq2 = p.y_rr + p.y_tt * inv_s2 +
                     (s.w1 / s.w + 2 * a * B) * p.y_r +
                     (2 * b * B * inv_s2) * p.y_t +
                     (a * s.w1 * B / s.w - M2 * w.w1 * w.w1) * p.y +
                     2 * m * B * p.x_r + (2 * n * B * inv_s2) * p.x_t +
                     (m * s.w1 * B / s.w + 2 * AB * w.w2 / w.w) * p.x;
  return {eq1, eq2};
}

}  // namespace testutil
