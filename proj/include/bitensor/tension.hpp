#pragma once

#include "bitensor/geometry.hpp"
#include "bitensor/grid.hpp"
#include "bitensor/maps.hpp"

namespace bitensor {

/// Components of the tension field in the target coordinate frame
/// (d/d_rho, d/d_phi). Both vanish everywhere iff the map is harmonic.
struct TensionVector {
  double t1 = 0, t2 = 0;

  double norm() const;
};

/// Closed form for coordinate-linear maps:
///   tau^1 = a s'/s - (m^2 + n^2/s^2) w w'(rho)
///   tau^2 = m s'/s + 2 (a m + b n/s^2) w'(rho)/w
/// with s the domain warp at r and w the target warp at rho = a r + b th + c.
TensionVector tension_linear(const WarpedSurface& domain,
                             const WarpedSurface& target, const LinearMap& map,
                             double r, double theta);

/// General harmonic-map operator tau^s = g^ij (phi^s_ij - G^k_ij phi^s_k
/// + Gbar^s_ab phi^a_i phi^b_j), with map partials from the map's derivative
/// mode and connection coefficients from geometry.
TensionVector tension_generic(const WarpedSurface& domain,
                              const WarpedSurface& target, const SmoothMap& map,
                              double r, double theta);

/// Max tension norm over the grid (pole-margin points skipped).
/// Throws EmptyGridError if exclusion removes every point.
double max_tension_residual(const WarpedSurface& domain,
                            const WarpedSurface& target, const LinearMap& map,
                            const GridSpec& grid);

bool is_harmonic(const WarpedSurface& domain, const WarpedSurface& target,
                 const LinearMap& map, const GridSpec& grid);

}  // namespace bitensor
