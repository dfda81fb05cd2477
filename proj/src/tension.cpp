#include "bitensor/tension.hpp"

#include <cmath>

namespace bitensor {

double TensionVector::norm() const { return std::hypot(t1, t2); }

TensionVector tension_linear(const WarpedSurface& domain,
                             const WarpedSurface& target, const LinearMap& map,
                             double r, double theta) {
  const WarpEval s = domain.warp(r);
  if (std::abs(s.w) < kPoleTol) throw PoleError("tension_linear: domain pole");
  const double rho = map.rho(r, theta);
  const WarpEval w = target.warp(rho);
  if (std::abs(w.w) < kPoleTol) throw PoleError("tension_linear: target pole");

  const double inv_s2 = 1.0 / (s.w * s.w);
  const double m2 = map.m * map.m + map.n * map.n * inv_s2;
  const double ab = map.a * map.m + map.b * map.n * inv_s2;
  return {map.a * s.w1 / s.w - m2 * w.w * w.w1,
          map.m * s.w1 / s.w + 2.0 * ab * w.w1 / w.w};
}

TensionVector tension_generic(const WarpedSurface& domain,
                              const WarpedSurface& target, const SmoothMap& map,
                              double r, double theta) {
  const WarpEval s = domain.warp(r);
  if (std::abs(s.w) < kPoleTol) throw PoleError("tension_generic: domain pole");
  const Jet2 j1 = map.jet1(r, theta);
  const Jet2 j2 = map.jet2(r, theta);
  const WarpEval w = target.warp(j1.f);
  if (std::abs(w.w) < kPoleTol) throw PoleError("tension_generic: target pole");

  const double inv_s2 = 1.0 / (s.w * s.w);
  // Laplacian of a scalar on dt^2 + s^2 ds^2: u_rr + u_tt/s^2 + (s'/s) u_r.
  const double lap1 = j1.frr + j1.ftt * inv_s2 + (s.w1 / s.w) * j1.fr;
  const double lap2 = j2.frr + j2.ftt * inv_s2 + (s.w1 / s.w) * j2.fr;
  // g(grad phi^a, grad phi^b) for the diagonal domain metric.
  const double g22 = j2.fr * j2.fr + j2.ft * j2.ft * inv_s2;
  const double g12 = j1.fr * j2.fr + j1.ft * j2.ft * inv_s2;

  return {lap1 - w.w * w.w1 * g22, lap2 + 2.0 * (w.w1 / w.w) * g12};
}

double max_tension_residual(const WarpedSurface& domain,
                            const WarpedSurface& target, const LinearMap& map,
                            const GridSpec& grid) {
  grid.validate();
  const double pr = domain.period_t.value_or(2 * M_PI);
  const double ps = domain.period_s.value_or(2 * M_PI);
  const double dr = pr / grid.nr, dt = ps / grid.ntheta;

  double worst = 0.0;
  std::size_t used = 0;
  for (int i = 0; i < grid.nr; ++i) {
    const double r = (i + 0.5) * dr;
    const WarpEval s = domain.warp(r);
    if (std::abs(s.w) < grid.pole_margin) continue;
    for (int j = 0; j < grid.ntheta; ++j) {
      const double t = (j + 0.5) * dt;
      const WarpEval w = target.warp(map.rho(r, t));
      if (std::abs(w.w) < grid.pole_margin) continue;
      const double inv_s2 = 1.0 / (s.w * s.w);
      const double m2 = map.m * map.m + map.n * map.n * inv_s2;
      const double ab = map.a * map.m + map.b * map.n * inv_s2;
      const double t1 = map.a * s.w1 / s.w - m2 * w.w * w.w1;
      const double t2 = map.m * s.w1 / s.w + 2.0 * ab * w.w1 / w.w;
      const double nrm = std::hypot(t1, t2);
      if (nrm > worst) worst = nrm;
      ++used;
    }
  }
  if (used == 0) throw EmptyGridError("tension scan: pole exclusion removed all points");
  return worst;
}

bool is_harmonic(const WarpedSurface& domain, const WarpedSurface& target,
                 const LinearMap& map, const GridSpec& grid) {
  return max_tension_residual(domain, target, map, grid) < grid.tolerance_harmonic;
}

}  // namespace bitensor
