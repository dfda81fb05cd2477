#include "bitensor/functionals.hpp"

#include <cmath>
#include <utility>

namespace bitensor {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

struct QuadGrid {
  double dr, dt, weight;
  int nr, nt;
};

QuadGrid quad_grid(const WarpedSurface& domain, const GridSpec& grid) {
  grid.validate();
  const double pr = domain.period_t.value_or(kTwoPi);
  const double ps = domain.period_s.value_or(kTwoPi);
  return {pr / grid.nr, ps / grid.ntheta, (pr / grid.nr) * (ps / grid.ntheta),
          grid.nr, grid.ntheta};
}

ScalarField shift_field(const ScalarField& f, const ScalarField& v, double t) {
  using Fn = ScalarField::Fn;
  Fn value = [fv = f.fn_value(), vv = v.fn_value(), t](double r, double th) {
    return fv(r, th) + t * vv(r, th);
  };
  if (f.analytic() && v.analytic()) {
    auto add = [t](const Fn& p, const Fn& q) -> Fn {
      return [p, q, t](double r, double th) { return p(r, th) + t * q(r, th); };
    };
    return ScalarField(std::move(value), add(f.fn_fr(), v.fn_fr()),
                       add(f.fn_ft(), v.fn_ft()), add(f.fn_frr(), v.fn_frr()),
                       add(f.fn_ftt(), v.fn_ftt()));
  }
  return ScalarField(std::move(value));
}

// Midpoint quadrature of node(r, theta) * s(r) over one period square, with
// pole-margin enforcement on the domain warp.
template <typename Node>
double integrate(const WarpedSurface& domain, const GridSpec& grid, Node node) {
  const QuadGrid q = quad_grid(domain, grid);
  double sum = 0.0;
  for (int i = 0; i < q.nr; ++i) {
    const double r = (i + 0.5) * q.dr;
    const WarpEval s = domain.warp(r);
    if (std::abs(s.w) < grid.pole_margin) {
      throw PoleOnDomainError("quadrature: domain pole on grid");
    }
    for (int j = 0; j < q.nt; ++j) {
      const double t = (j + 0.5) * q.dt;
      sum += node(r, t) * s.w;
    }
  }
  return sum * q.weight;
}

double target_warp_checked(const WarpedSurface& target, double rho,
                           const GridSpec& grid) {
  const WarpEval w = target.warp(rho);
  if (std::abs(w.w) < grid.pole_margin) {
    throw PoleOnDomainError("quadrature: target pole on grid");
  }
  return w.w;
}

}  // namespace

SmoothMap perturb(const SmoothMap& map, const Variation& v, double t) {
  if (!v.v1.valid() || !v.v2.valid()) {
    throw InvalidParameter("perturb: variation needs both components");
  }
  ScalarField f1 = shift_field(map.f1(), v.v1, t);
  ScalarField f2 = shift_field(map.f2(), v.v2, t);
  if (map.mode() == DerivativeMode::Analytic && f1.analytic() && f2.analytic()) {
    return SmoothMap(std::move(f1), std::move(f2));
  }
  return SmoothMap(std::move(f1), std::move(f2), map.steps());
}

double energy(const WarpedSurface& domain, const WarpedSurface& target,
              const SmoothMap& map, const GridSpec& grid) {
  return integrate(domain, grid, [&](double r, double t) {
    const Jet2 j1 = map.jet1(r, t);
    const Jet2 j2 = map.jet2(r, t);
    const double lam = target_warp_checked(target, j1.f, grid);
    const double inv_s2 = 1.0 / std::pow(domain.warp(r).w, 2);
    const double lam2 = lam * lam;
    return 0.5 * (j1.fr * j1.fr + lam2 * j2.fr * j2.fr +
                  (j1.ft * j1.ft + lam2 * j2.ft * j2.ft) * inv_s2);
  });
}

double energy(const WarpedSurface& domain, const WarpedSurface& target,
              const LinearMap& map, const GridSpec& grid) {
  return integrate(domain, grid, [&](double r, double t) {
    const double lam = target_warp_checked(target, map.rho(r, t), grid);
    const double sw = domain.warp(r).w;
    const double lam2 = lam * lam;
    return 0.5 * (map.a * map.a + lam2 * map.m * map.m +
                  (map.b * map.b + lam2 * map.n * map.n) / (sw * sw));
  });
}

double bienergy(const WarpedSurface& domain, const WarpedSurface& target,
                const SmoothMap& map, const GridSpec& grid) {
  return integrate(domain, grid, [&](double r, double t) {
    const double lam = target_warp_checked(target, map.rho(r, t), grid);
    const TensionVector tv = tension_generic(domain, target, map, r, t);
    return 0.5 * (tv.t1 * tv.t1 + lam * lam * tv.t2 * tv.t2);
  });
}

double bienergy(const WarpedSurface& domain, const WarpedSurface& target,
                const LinearMap& map, const GridSpec& grid) {
  return integrate(domain, grid, [&](double r, double t) {
    const double lam = target_warp_checked(target, map.rho(r, t), grid);
    const TensionVector tv = tension_linear(domain, target, map, r, t);
    return 0.5 * (tv.t1 * tv.t1 + lam * lam * tv.t2 * tv.t2);
  });
}

VariationPair first_variation_energy(const WarpedSurface& domain,
                                     const WarpedSurface& target,
                                     const SmoothMap& map, const Variation& v,
                                     double eps, const GridSpec& grid) {
  if (!(eps > 0.0)) throw InvalidParameter("first_variation_energy: eps > 0");
  VariationPair out;
  out.lhs = (energy(domain, target, perturb(map, v, eps), grid) -
             energy(domain, target, perturb(map, v, -eps), grid)) /
            (2 * eps);
  out.rhs = -integrate(domain, grid, [&](double r, double t) {
    const double lam = target_warp_checked(target, map.rho(r, t), grid);
    const TensionVector tv = tension_generic(domain, target, map, r, t);
    return v.v1(r, t) * tv.t1 + lam * lam * v.v2(r, t) * tv.t2;
  });
  return out;
}

VariationPair first_variation_energy(const WarpedSurface& domain,
                                     const WarpedSurface& target,
                                     const LinearMap& map, const Variation& v,
                                     double eps, const GridSpec& grid) {
  if (!(eps > 0.0)) throw InvalidParameter("first_variation_energy: eps > 0");
  const SmoothMap lifted = lift(map);
  VariationPair out;
  out.lhs = (energy(domain, target, perturb(lifted, v, eps), grid) -
             energy(domain, target, perturb(lifted, v, -eps), grid)) /
            (2 * eps);
  out.rhs = -integrate(domain, grid, [&](double r, double t) {
    const double lam = target_warp_checked(target, map.rho(r, t), grid);
    const TensionVector tv = tension_linear(domain, target, map, r, t);
    return v.v1(r, t) * tv.t1 + lam * lam * v.v2(r, t) * tv.t2;
  });
  return out;
}

// tau_2 = -(residual system LHS); the identity d/dt E2 = -int<tau_2, V> fixes
// this sign and is what the variation tests pin down. Hence rhs below adds
// +<residual, V>.
VariationPair first_variation_bienergy(const WarpedSurface& domain,
                                       const WarpedSurface& target,
                                       const SmoothMap& map, const Variation& v,
                                       double eps, const GridSpec& grid) {
  if (!(eps > 0.0)) throw InvalidParameter("first_variation_bienergy: eps > 0");
  VariationPair out;
  out.lhs = (bienergy(domain, target, perturb(map, v, eps), grid) -
             bienergy(domain, target, perturb(map, v, -eps), grid)) /
            (2 * eps);
  const double h_tau = 1e-3;
  out.rhs = integrate(domain, grid, [&](double r, double t) {
    const double lam = target_warp_checked(target, map.rho(r, t), grid);
    const BitensionResidual res = bitension_generic(domain, target, map, r, t, h_tau);
    return v.v1(r, t) * res.r1 + lam * lam * v.v2(r, t) * res.r2;
  });
  return out;
}

VariationPair first_variation_bienergy(const WarpedSurface& domain,
                                       const WarpedSurface& target,
                                       const LinearMap& map, const Variation& v,
                                       double eps, const GridSpec& grid) {
  if (!(eps > 0.0)) throw InvalidParameter("first_variation_bienergy: eps > 0");
  const SmoothMap lifted = lift(map);
  VariationPair out;
  out.lhs = (bienergy(domain, target, perturb(lifted, v, eps), grid) -
             bienergy(domain, target, perturb(lifted, v, -eps), grid)) /
            (2 * eps);
  out.rhs = integrate(domain, grid, [&](double r, double t) {
    const double lam = target_warp_checked(target, map.rho(r, t), grid);
    const BitensionResidual res = bitension_residual_linear(domain, target, map, r, t);
    return v.v1(r, t) * res.r1 + lam * lam * v.v2(r, t) * res.r2;
  });
  return out;
}

double degree(const WarpedSurface& domain, const WarpedSurface& target,
              const SmoothMap& map, const GridSpec& grid) {
  const QuadGrid q = quad_grid(domain, grid);
  double sum = 0.0;
  for (int i = 0; i < q.nr; ++i) {
    const double r = (i + 0.5) * q.dr;
    for (int j = 0; j < q.nt; ++j) {
      const double t = (j + 0.5) * q.dt;
      const Jet2 j1 = map.jet1(r, t);
      const Jet2 j2 = map.jet2(r, t);
      sum += target.warp(j1.f).w * (j1.fr * j2.ft - j1.ft * j2.fr);
    }
  }
  return sum * q.weight / (4 * M_PI);
}

double degree(const WarpedSurface& domain, const WarpedSurface& target,
              const LinearMap& map, const GridSpec& grid) {
  const QuadGrid q = quad_grid(domain, grid);
  const double jac = map.a * map.n - map.b * map.m;
  double sum = 0.0;
  for (int i = 0; i < q.nr; ++i) {
    const double r = (i + 0.5) * q.dr;
    for (int j = 0; j < q.nt; ++j) {
      sum += target.warp(map.rho(r, (j + 0.5) * q.dt)).w;
    }
  }
  return sum * jac * q.weight / (4 * M_PI);
}

}  // namespace bitensor
