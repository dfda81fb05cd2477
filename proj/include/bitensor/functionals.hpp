#pragma once

#include "bitensor/bitension.hpp"

namespace bitensor {

/// Vector field along a map in target coordinates (d/d_rho, d/d_phi frame),
/// doubly periodic with the domain periods.
struct Variation {
  ScalarField v1, v2;
};

/// The map shifted by t * V in target coordinates (no retraction; coordinates
/// are global away from poles). Stays analytic when map and V both are.
SmoothMap perturb(const SmoothMap& map, const Variation& v, double t);

/// Energy E = 1/2 int |dphi|^2 s dr dtheta over one period square, by the
/// midpoint rule (spectrally accurate for periodic integrands).
/// Throws PoleOnDomainError if any grid node sits within pole_margin.
double energy(const WarpedSurface& domain, const WarpedSurface& target,
              const SmoothMap& map, const GridSpec& grid);
double energy(const WarpedSurface& domain, const WarpedSurface& target,
              const LinearMap& map, const GridSpec& grid);

/// Bienergy E2 = 1/2 int (tau1^2 + w^2 tau2^2) s dr dtheta.
double bienergy(const WarpedSurface& domain, const WarpedSurface& target,
                const SmoothMap& map, const GridSpec& grid);
double bienergy(const WarpedSurface& domain, const WarpedSurface& target,
                const LinearMap& map, const GridSpec& grid);

struct VariationPair {
  double lhs = 0;  // central difference of the functional in t at eps
  double rhs = 0;  // the matching integral pairing
};

/// lhs = d/dt E(phi + tV) (central, step eps); rhs = -int <tau, V>_h v_g.
VariationPair first_variation_energy(const WarpedSurface& domain,
                                     const WarpedSurface& target,
                                     const SmoothMap& map, const Variation& v,
                                     double eps, const GridSpec& grid);
VariationPair first_variation_energy(const WarpedSurface& domain,
                                     const WarpedSurface& target,
                                     const LinearMap& map, const Variation& v,
                                     double eps, const GridSpec& grid);

/// lhs = d/dt E2(phi + tV); rhs = -int <tau_2, V>_h v_g. The sign of tau_2
/// relative to the residual system is fixed by this very identity: the
/// validated convention is tau_2 = -(residual components), so
/// rhs = +int <residual, V>_h v_g.
VariationPair first_variation_bienergy(const WarpedSurface& domain,
                                       const WarpedSurface& target,
                                       const SmoothMap& map, const Variation& v,
                                       double eps, const GridSpec& grid);
VariationPair first_variation_bienergy(const WarpedSurface& domain,
                                       const WarpedSurface& target,
                                       const LinearMap& map, const Variation& v,
                                       double eps, const GridSpec& grid);

/// Mapping degree (1/4pi) int w(rho) (rho_r phi_theta - rho_theta phi_r),
/// the normalized pullback of the target area form. Returns the raw real;
/// close to an integer for maps that descend to the torus.
double degree(const WarpedSurface& domain, const WarpedSurface& target,
              const SmoothMap& map, const GridSpec& grid);
double degree(const WarpedSurface& domain, const WarpedSurface& target,
              const LinearMap& map, const GridSpec& grid);

}  // namespace bitensor
