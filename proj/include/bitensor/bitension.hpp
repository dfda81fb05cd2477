#pragma once

#include <utility>

#include "bitensor/tension.hpp"

namespace bitensor {

/// Left-hand sides of the two biharmonicity equations for a warped-product
/// pair. Both vanish at every non-pole point iff the map is biharmonic there.
struct BitensionResidual {
  double r1 = 0, r2 = 0;

  double norm() const;
};

// Warp value with derivatives up to third order; the analytic residual path
// needs one order more than geometry exposes through WarpEval.
struct WarpJet {
  double w, w1, w2, w3;
};

WarpJet warp_jet(const WarpFunction& warp, double t);

/// Partial derivatives of x = tau^1, y = tau^2 for a coordinate-linear map,
/// obtained by differentiating the closed forms (valid for any warped pair
/// whose warps carry third derivatives).
struct TauPartials {
  double x, y;
  double x_r, x_t, x_rr, x_tt;
  double y_r, y_t, y_rr, y_tt;
};

TauPartials tau_partials(const WarpJet& s, const WarpJet& w, const LinearMap& map);
TauPartials tau_partials(const WarpedSurface& domain, const WarpedSurface& target,
                         const LinearMap& map, double r, double theta);

/// Analytic biharmonicity residual (the warped-product system, first and
/// second equations) for a coordinate-linear map.
BitensionResidual bitension_residual_linear(const WarpedSurface& domain,
                                            const WarpedSurface& target,
                                            const LinearMap& map, double r,
                                            double theta);

// Same, from precomputed warp jets (hot path for lattice scans).
BitensionResidual bitension_residual_at(const WarpJet& s, const WarpJet& w,
                                        const LinearMap& map);

/// Independent route: assembles the general fourth-order operator term by
/// term — Laplacian of tau, gradient couplings, tau * Laplacian(phi)
/// couplings, connection-derivative/product terms, curvature term — with tau
/// evaluated on a central finite-difference stencil of step h.
BitensionResidual bitension_generic(const WarpedSurface& domain,
                                    const WarpedSurface& target,
                                    const SmoothMap& map, double r,
                                    double theta, double h);

/// Flat-torus-to-sphere reduced conditions
///   g1 = [4(m^2+n^2)(a^2+b^2) + (m^2+n^2)^2 cos 2rho + 4(am+bn)^2] cos rho
///   g2 = 4 (m^2+n^2)(am+bn) cos rho cos 2rho
/// whose simultaneous vanishing is equivalent to the residual vanishing.
std::pair<double, double> flat_condition_residual(const LinearMap& map, double rho);

/// One pass over the grid computing both residual maxima.
struct ResidualScan {
  double max_tension = 0.0;
  double max_bitension = 0.0;
  std::size_t points = 0;
};

ResidualScan scan_residuals(const WarpedSurface& domain,
                            const WarpedSurface& target, const LinearMap& map,
                            const GridSpec& grid);

double max_bitension_residual(const WarpedSurface& domain,
                              const WarpedSurface& target, const LinearMap& map,
                              const GridSpec& grid);

bool is_biharmonic(const WarpedSurface& domain, const WarpedSurface& target,
                   const LinearMap& map, const GridSpec& grid);

}  // namespace bitensor
