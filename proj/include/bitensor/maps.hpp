#pragma once

#include <functional>
#include <string>

#include "bitensor/geometry.hpp"

namespace bitensor {

/// Coordinate-linear map phi(r, theta) = (a r + b theta + c, m r + n theta + l).
struct LinearMap {
  double a = 0, b = 0, c = 0, m = 0, n = 0, l = 0;

  double rho(double r, double theta) const { return a * r + b * theta + c; }
  double phi(double r, double theta) const { return m * r + n * theta + l; }
};

// Value and partial derivatives of one coordinate function at a point.
// No mixed partial: the warped metrics are diagonal, so nothing here needs it.
struct Jet2 {
  double f, fr, ft, frr, ftt;
};

// Default central-difference steps: first partials at h1, second at h2.
struct FdSteps {
  double h1 = 1e-4;
  double h2 = 1e-3;
};

/// A scalar function of (r, theta), optionally with analytic partials.
class ScalarField {
 public:
  using Fn = std::function<double(double, double)>;

  ScalarField() = default;
  explicit ScalarField(Fn value) : value_(std::move(value)) {}
  ScalarField(Fn value, Fn fr, Fn ft, Fn frr, Fn ftt)
      : value_(std::move(value)),
        fr_(std::move(fr)),
        ft_(std::move(ft)),
        frr_(std::move(frr)),
        ftt_(std::move(ftt)) {}

  static ScalarField constant(double v);

  bool analytic() const { return fr_ && ft_ && frr_ && ftt_; }
  bool valid() const { return static_cast<bool>(value_); }

  double operator()(double r, double t) const { return value_(r, t); }

  // Analytic partials if present, central differences otherwise.
  Jet2 jet(double r, double t, const FdSteps& steps) const;

  // Component functions (empty unless analytic); used to compose fields
  // without falling back to finite differences.
  const Fn& fn_value() const { return value_; }
  const Fn& fn_fr() const { return fr_; }
  const Fn& fn_ft() const { return ft_; }
  const Fn& fn_frr() const { return frr_; }
  const Fn& fn_ftt() const { return ftt_; }

 private:
  Fn value_, fr_, ft_, frr_, ftt_;
};

enum class DerivativeMode { Analytic, FiniteDifference };

/// General smooth map (f1, f2) between warped surfaces, with partials up to
/// second order either supplied analytically or taken by central differences.
class SmoothMap {
 public:
  // Analytic mode; both fields must carry analytic partials.
  SmoothMap(ScalarField f1, ScalarField f2);
  // Finite-difference mode with the given steps.
  SmoothMap(ScalarField f1, ScalarField f2, FdSteps steps);

  DerivativeMode mode() const { return mode_; }
  const FdSteps& steps() const { return steps_; }

  double rho(double r, double t) const { return f1_(r, t); }
  double phi(double r, double t) const { return f2_(r, t); }
  Jet2 jet1(double r, double t) const { return f1_.jet(r, t, steps_); }
  Jet2 jet2(double r, double t) const { return f2_.jet(r, t, steps_); }

  const ScalarField& f1() const { return f1_; }
  const ScalarField& f2() const { return f2_; }

 private:
  ScalarField f1_, f2_;
  DerivativeMode mode_;
  FdSteps steps_;
};

/// Lift a LinearMap to an analytic SmoothMap (constant partials).
SmoothMap lift(const LinearMap& map);

/// Advisory descent diagnostic: whether the map's coefficients are compatible
/// with descending from the universal cover to the torus (profile and fiber
/// components both close up modulo 2*pi). Never blocks evaluation.
struct DescentCheck {
  bool rho_descends = true;
  bool phi_descends = true;
  std::string note;

  bool descends() const { return rho_descends && phi_descends; }
};

DescentCheck descent_check(const WarpedSurface& domain, const LinearMap& map);

}  // namespace bitensor
