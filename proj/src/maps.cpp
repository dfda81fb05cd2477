#include "bitensor/maps.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace bitensor {

ScalarField ScalarField::constant(double v) {
  auto zero = [](double, double) { return 0.0; };
  return ScalarField([v](double, double) { return v; }, zero, zero, zero, zero);
}

Jet2 ScalarField::jet(double r, double t, const FdSteps& steps) const {
  if (analytic()) {
    return {value_(r, t), fr_(r, t), ft_(r, t), frr_(r, t), ftt_(r, t)};
  }
  const double h1 = steps.h1, h2 = steps.h2;
  const double f0 = value_(r, t);
  const double fp1 = value_(r + h1, t), fm1 = value_(r - h1, t);
  const double gp1 = value_(r, t + h1), gm1 = value_(r, t - h1);
  const double fp2 = value_(r + h2, t), fm2 = value_(r - h2, t);
  const double gp2 = value_(r, t + h2), gm2 = value_(r, t - h2);
  return {f0,
          (fp1 - fm1) / (2 * h1),
          (gp1 - gm1) / (2 * h1),
          (fp2 - 2 * f0 + fm2) / (h2 * h2),
          (gp2 - 2 * f0 + gm2) / (h2 * h2)};
}

SmoothMap::SmoothMap(ScalarField f1, ScalarField f2)
    : f1_(std::move(f1)), f2_(std::move(f2)), mode_(DerivativeMode::Analytic) {
  if (!f1_.valid() || !f2_.valid()) {
    throw InvalidParameter("smooth map needs two coordinate functions");
  }
  if (!f1_.analytic() || !f2_.analytic()) {
    throw InvalidParameter(
        "analytic mode requires partials up to order 2 for both coordinates");
  }
}

SmoothMap::SmoothMap(ScalarField f1, ScalarField f2, FdSteps steps)
    : f1_(std::move(f1)),
      f2_(std::move(f2)),
      mode_(DerivativeMode::FiniteDifference),
      steps_(steps) {
  if (!f1_.valid() || !f2_.valid()) {
    throw InvalidParameter("smooth map needs two coordinate functions");
  }
  if (!(steps_.h1 > 0.0) || !(steps_.h2 > 0.0)) {
    throw InvalidParameter("finite-difference steps must be positive");
  }
}

SmoothMap lift(const LinearMap& map) {
  const double a = map.a, b = map.b, c = map.c;
  const double m = map.m, n = map.n, l = map.l;
  auto zero = [](double, double) { return 0.0; };
  ScalarField f1([a, b, c](double r, double t) { return a * r + b * t + c; },
                 [a](double, double) { return a; },
                 [b](double, double) { return b; }, zero, zero);
  ScalarField f2([m, n, l](double r, double t) { return m * r + n * t + l; },
                 [m](double, double) { return m; },
                 [n](double, double) { return n; }, zero, zero);
  return SmoothMap(std::move(f1), std::move(f2));
}

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

bool multiple_of_two_pi(double x) {
  const double q = x / kTwoPi;
  return std::abs(q - std::round(q)) < 1e-9;
}
}  // namespace

DescentCheck descent_check(const WarpedSurface& domain, const LinearMap& map) {
  const double pr = domain.period_t.value_or(kTwoPi);
  const double ps = domain.period_s.value_or(kTwoPi);
  DescentCheck out;
  out.rho_descends = multiple_of_two_pi(map.a * pr) && multiple_of_two_pi(map.b * ps);
  out.phi_descends = multiple_of_two_pi(map.m * pr) && multiple_of_two_pi(map.n * ps);
  if (!out.descends()) {
    std::ostringstream os;
    os << "map does not close up over one period square:";
    if (!out.rho_descends) os << " rho component";
    if (!out.phi_descends) os << " phi component";
    out.note = os.str();
  }
  return out;
}

}  // namespace bitensor
