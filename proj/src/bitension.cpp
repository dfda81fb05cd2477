#include "bitensor/bitension.hpp"

#include <array>
#include <cmath>

namespace bitensor {

double BitensionResidual::norm() const { return std::hypot(r1, r2); }

WarpJet warp_jet(const WarpFunction& warp, double t) {
  // fused path: one sincos covers all four derivatives of the trig kinds
  switch (warp.kind()) {
    case WarpKind::Unit:
      return {1.0, 0.0, 0.0, 0.0};
    case WarpKind::Sine: {
      const double s = std::sin(t), c = std::cos(t);
      return {s, c, -s, -c};
    }
    case WarpKind::Cosine: {
      const double s = std::sin(t), c = std::cos(t);
      return {c, -s, -c, s};
    }
    case WarpKind::OffsetCosine: {
      const double s = std::sin(t), c = std::cos(t);
      return {warp.offset() + c, -s, -c, s};
    }
    case WarpKind::Custom:
      break;
  }
  const WarpEval e = warp(t);
  return {e.w, e.w1, e.w2, warp.third(t)};
}

// x = a S - M2 A, y = m S + 2 AB B with
//   S = s'/s, Q = 1/s^2, A = w w'(rho), B = w'(rho)/w,
//   M2 = m^2 + n^2 Q, AB = a m + b n Q, rho = a r + b th + c.
// The partials below differentiate these factorizations directly; they were
// checked against finite differences of the closed-form tension components.
TauPartials tau_partials(const WarpJet& s, const WarpJet& w, const LinearMap& map) {
  const double a = map.a, b = map.b, m = map.m, n = map.n;

  const double S = s.w1 / s.w;
  const double Sp = (s.w2 * s.w - s.w1 * s.w1) / (s.w * s.w);
  const double Spp =
      (s.w3 * s.w * s.w - 3.0 * s.w * s.w1 * s.w2 + 2.0 * s.w1 * s.w1 * s.w1) /
      (s.w * s.w * s.w);
  const double Q = 1.0 / (s.w * s.w);
  const double Qp = -2.0 * s.w1 * Q / s.w;
  const double Qpp = (-2.0 * s.w2 * s.w + 6.0 * s.w1 * s.w1) * Q * Q;

  const double A = w.w * w.w1;
  const double Ap = w.w1 * w.w1 + w.w * w.w2;
  const double App = 3.0 * w.w1 * w.w2 + w.w * w.w3;
  const double B = w.w1 / w.w;
  const double Bp = (w.w2 * w.w - w.w1 * w.w1) / (w.w * w.w);
  const double Bpp = w.w3 / w.w - 3.0 * w.w1 * w.w2 / (w.w * w.w) +
                     2.0 * w.w1 * w.w1 * w.w1 / (w.w * w.w * w.w);

  const double M2 = m * m + n * n * Q;
  const double AB = a * m + b * n * Q;

  TauPartials p;
  p.x = a * S - M2 * A;
  p.y = m * S + 2.0 * AB * B;
  p.x_r = a * Sp - n * n * Qp * A - M2 * Ap * a;
  p.x_t = -M2 * Ap * b;
  p.x_rr = a * Spp - n * n * Qpp * A - 2.0 * a * n * n * Qp * Ap - M2 * App * a * a;
  p.x_tt = -M2 * App * b * b;
  p.y_r = m * Sp + 2.0 * b * n * Qp * B + 2.0 * AB * Bp * a;
  p.y_t = 2.0 * AB * Bp * b;
  p.y_rr = m * Spp + 2.0 * b * n * Qpp * B + 4.0 * a * b * n * Qp * Bp +
           2.0 * AB * Bpp * a * a;
  p.y_tt = 2.0 * AB * Bpp * b * b;
  return p;
}

TauPartials tau_partials(const WarpedSurface& domain, const WarpedSurface& target,
                         const LinearMap& map, double r, double theta) {
  const WarpJet s = warp_jet(domain.warp, r);
  if (std::abs(s.w) < kPoleTol) throw PoleError("tau_partials: domain pole");
  const WarpJet w = warp_jet(target.warp, map.rho(r, theta));
  if (std::abs(w.w) < kPoleTol) throw PoleError("tau_partials: target pole");
  return tau_partials(s, w, map);
}

BitensionResidual bitension_residual_at(const WarpJet& s, const WarpJet& w,
                                        const LinearMap& map) {
  const TauPartials p = tau_partials(s, w, map);
  const double a = map.a, b = map.b, m = map.m, n = map.n;
  const double inv_s2 = 1.0 / (s.w * s.w);
  const double M2 = m * m + n * n * inv_s2;
  const double AB = a * m + b * n * inv_s2;
  const double A = w.w * w.w1;
  const double Ap = w.w1 * w.w1 + w.w * w.w2;

  const double eq1 = p.x_tt * inv_s2 + p.x_rr + (s.w1 / s.w) * p.x_r -
                     M2 * Ap * p.x -
                     (2.0 * m * p.y_r + 2.0 * n * inv_s2 * p.y_t + p.y * p.y) * A;
  const double eq2 =
      p.y_tt * inv_s2 + p.y_rr + (s.w1 / s.w) * p.y_r +
      2.0 * (a * p.y_r + m * p.x_r + (b * p.y_t + n * p.x_t) * inv_s2) *
          (w.w1 / w.w) +
      2.0 * (m * s.w1 * w.w1 / (s.w * w.w) + AB * Ap / (w.w * w.w)) * p.x;
  return {eq1, eq2};
}

BitensionResidual bitension_residual_linear(const WarpedSurface& domain,
                                            const WarpedSurface& target,
                                            const LinearMap& map, double r,
                                            double theta) {
  const WarpJet s = warp_jet(domain.warp, r);
  if (std::abs(s.w) < kPoleTol) throw PoleError("bitension: domain pole");
  const WarpJet w = warp_jet(target.warp, map.rho(r, theta));
  if (std::abs(w.w) < kPoleTol) throw PoleError("bitension: target pole");
  return bitension_residual_at(s, w, map);
}

BitensionResidual bitension_generic(const WarpedSurface& domain,
                                    const WarpedSurface& target,
                                    const SmoothMap& map, double r, double theta,
                                    double h) {
  if (!(h > 0.0)) throw InvalidParameter("bitension_generic: step must be positive");

  // tau on the 5-point stencil; a pole anywhere under the stencil is fatal.
  auto tau_at = [&](double rr, double tt) {
    try {
      return tension_generic(domain, target, map, rr, tt);
    } catch (const PoleError&) {
      throw StencilError("bitension_generic: stencil crosses a pole");
    }
  };
  const TensionVector t0 = tau_at(r, theta);
  const TensionVector tpr = tau_at(r + h, theta), tmr = tau_at(r - h, theta);
  const TensionVector tpt = tau_at(r, theta + h), tmt = tau_at(r, theta - h);

  const std::array<double, 2> tau = {t0.t1, t0.t2};
  const std::array<double, 2> tau_r = {(tpr.t1 - tmr.t1) / (2 * h),
                                       (tpr.t2 - tmr.t2) / (2 * h)};
  const std::array<double, 2> tau_t = {(tpt.t1 - tmt.t1) / (2 * h),
                                       (tpt.t2 - tmt.t2) / (2 * h)};
  const std::array<double, 2> tau_rr = {(tpr.t1 - 2 * t0.t1 + tmr.t1) / (h * h),
                                        (tpr.t2 - 2 * t0.t2 + tmr.t2) / (h * h)};
  const std::array<double, 2> tau_tt = {(tpt.t1 - 2 * t0.t1 + tmt.t1) / (h * h),
                                        (tpt.t2 - 2 * t0.t2 + tmt.t2) / (h * h)};

  const WarpEval s = domain.warp(r);
  const Jet2 j1 = map.jet1(r, theta);
  const Jet2 j2 = map.jet2(r, theta);
  const WarpEval w = target.warp(j1.f);
  if (std::abs(w.w) < kPoleTol) throw PoleError("bitension_generic: target pole");
  const double inv_s2 = 1.0 / (s.w * s.w);

  auto lap = [&](double urr, double utt, double ur) {
    return urr + utt * inv_s2 + (s.w1 / s.w) * ur;
  };
  const std::array<double, 2> lap_tau = {lap(tau_rr[0], tau_tt[0], tau_r[0]),
                                         lap(tau_rr[1], tau_tt[1], tau_r[1])};
  const std::array<double, 2> lap_phi = {lap(j1.frr, j1.ftt, j1.fr),
                                         lap(j2.frr, j2.ftt, j2.fr)};
  const std::array<double, 2> phi_r = {j1.fr, j2.fr};
  const std::array<double, 2> phi_t = {j1.ft, j2.ft};
  auto gdot = [&](double ur, double ut, double vr, double vt) {
    return ur * vr + ut * vt * inv_s2;
  };

  // Target connection and curvature at rho = phi^1(point). Nonzero entries:
  //   Gbar^1_22 = -w w',  Gbar^2_12 = Gbar^2_21 = w'/w,
  //   Rbar^1_221 = -Rbar^1_212 = w w'',  Rbar^2_112 = -Rbar^2_121 = w''/w.
  // Gbar depends only on the first target coordinate, so d_2 Gbar = 0.
  double gam[2][2][2] = {};
  double dgam[2][2][2] = {};
  gam[0][1][1] = -w.w * w.w1;
  gam[1][0][1] = gam[1][1][0] = w.w1 / w.w;
  dgam[0][1][1] = -(w.w1 * w.w1 + w.w * w.w2);
  dgam[1][0][1] = dgam[1][1][0] = (w.w2 * w.w - w.w1 * w.w1) / (w.w * w.w);
  double riem[2][2][2][2] = {};  // riem[s][b][a][v] = Rbar^s_{b a v}
  riem[0][1][1][0] = w.w * w.w2;
  riem[0][1][0][1] = -w.w * w.w2;
  riem[1][0][0][1] = w.w2 / w.w;
  riem[1][0][1][0] = -w.w2 / w.w;

  BitensionResidual out;
  for (int sg = 0; sg < 2; ++sg) {
    double val = lap_tau[sg];
    for (int al = 0; al < 2; ++al) {
      for (int be = 0; be < 2; ++be) {
        const double G = gam[sg][al][be];
        if (G != 0.0) {
          val += 2.0 * gdot(tau_r[al], tau_t[al], phi_r[be], phi_t[be]) * G;
          val += tau[al] * lap_phi[be] * G;
        }
        for (int rh = 0; rh < 2; ++rh) {
          double coef = (rh == 0) ? dgam[sg][al][be] : 0.0;
          for (int nu = 0; nu < 2; ++nu) coef += gam[nu][al][be] * gam[sg][nu][rh];
          if (coef != 0.0) {
            val += tau[al] * gdot(phi_r[be], phi_t[be], phi_r[rh], phi_t[rh]) * coef;
          }
        }
      }
    }
    for (int nu = 0; nu < 2; ++nu) {
      for (int al = 0; al < 2; ++al) {
        for (int be = 0; be < 2; ++be) {
          const double R = riem[sg][be][al][nu];
          if (R != 0.0) {
            val -= tau[nu] * gdot(phi_r[al], phi_t[al], phi_r[be], phi_t[be]) * R;
          }
        }
      }
    }
    (sg == 0 ? out.r1 : out.r2) = val;
  }
  return out;
}

std::pair<double, double> flat_condition_residual(const LinearMap& map, double rho) {
  const double srho = std::sin(rho);
  if (std::abs(srho) < kPoleTol) throw PoleError("flat_condition_residual: sin(rho) = 0");
  const double a = map.a, b = map.b, m = map.m, n = map.n;
  const double m2 = m * m + n * n;
  const double ab = a * m + b * n;
  const double crho = std::cos(rho), c2 = std::cos(2 * rho);
  const double g1 = (4.0 * m2 * (a * a + b * b) + m2 * m2 * c2 + 4.0 * ab * ab) * crho;
  const double g2 = 4.0 * m2 * ab * crho * c2;
  return {g1, g2};
}

ResidualScan scan_residuals(const WarpedSurface& domain,
                            const WarpedSurface& target, const LinearMap& map,
                            const GridSpec& grid) {
  grid.validate();
  const double pr = domain.period_t.value_or(2 * M_PI);
  const double ps = domain.period_s.value_or(2 * M_PI);
  const double dr = pr / grid.nr, dt = ps / grid.ntheta;

  ResidualScan scan;
  for (int i = 0; i < grid.nr; ++i) {
    const double r = (i + 0.5) * dr;
    const WarpJet s = warp_jet(domain.warp, r);
    if (std::abs(s.w) < grid.pole_margin) continue;
    for (int j = 0; j < grid.ntheta; ++j) {
      const double t = (j + 0.5) * dt;
      const WarpJet w = warp_jet(target.warp, map.rho(r, t));
      if (std::abs(w.w) < grid.pole_margin) continue;
      const TauPartials p = tau_partials(s, w, map);
      const double tn = std::hypot(p.x, p.y);
      if (tn > scan.max_tension) scan.max_tension = tn;

      const double inv_s2 = 1.0 / (s.w * s.w);
      const double M2 = map.m * map.m + map.n * map.n * inv_s2;
      const double AB = map.a * map.m + map.b * map.n * inv_s2;
      const double A = w.w * w.w1;
      const double Ap = w.w1 * w.w1 + w.w * w.w2;
      const double eq1 =
          p.x_tt * inv_s2 + p.x_rr + (s.w1 / s.w) * p.x_r - M2 * Ap * p.x -
          (2.0 * map.m * p.y_r + 2.0 * map.n * inv_s2 * p.y_t + p.y * p.y) * A;
      const double eq2 =
          p.y_tt * inv_s2 + p.y_rr + (s.w1 / s.w) * p.y_r +
          2.0 * (map.a * p.y_r + map.m * p.x_r +
                 (map.b * p.y_t + map.n * p.x_t) * inv_s2) *
              (w.w1 / w.w) +
          2.0 * (map.m * s.w1 * w.w1 / (s.w * w.w) + AB * Ap / (w.w * w.w)) * p.x;
      const double bn = std::hypot(eq1, eq2);
      if (bn > scan.max_bitension) scan.max_bitension = bn;
      ++scan.points;
    }
  }
  if (scan.points == 0) {
    throw EmptyGridError("residual scan: pole exclusion removed all points");
  }
  return scan;
}

double max_bitension_residual(const WarpedSurface& domain,
                              const WarpedSurface& target, const LinearMap& map,
                              const GridSpec& grid) {
  return scan_residuals(domain, target, map, grid).max_bitension;
}

bool is_biharmonic(const WarpedSurface& domain, const WarpedSurface& target,
                   const LinearMap& map, const GridSpec& grid) {
  return max_bitension_residual(domain, target, map, grid) < grid.tolerance_biharmonic;
}

}  // namespace bitensor
