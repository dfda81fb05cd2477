#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bitensor/errors.hpp"

namespace bitensor {

// Points with |w(t)| below this are treated as metric poles.
inline constexpr double kPoleTol = 1e-9;

enum class WarpKind { Unit, Sine, Cosine, OffsetCosine, Custom };

struct WarpEval {
  double w, w1, w2;  // value, first and second derivative
};

/// One-dimensional warp profile w(t) of a metric dt^2 + w(t)^2 ds^2.
///
/// Built-in kinds carry exact trigonometric derivatives. Custom profiles must
/// supply analytic derivatives; nothing in this module differentiates a warp
/// numerically (the finite-difference oracles live in tension/bitension).
class WarpFunction {
 public:
  using EvalFn = std::function<WarpEval(double)>;
  using ThirdFn = std::function<double(double)>;

  static WarpFunction unit();
  static WarpFunction sine();
  static WarpFunction cosine();
  static WarpFunction offset_cosine(double k);
  static WarpFunction custom(EvalFn eval, ThirdFn third = nullptr);

  WarpEval operator()(double t) const;

  // w'''(t); needed by the analytic bitension path. Throws InvalidParameter
  // for a Custom warp constructed without one.
  double third(double t) const;
  bool has_third() const;

  WarpKind kind() const { return kind_; }
  double offset() const { return k_; }

 private:
  WarpFunction(WarpKind kind, double k) : kind_(kind), k_(k) {}

  WarpKind kind_;
  double k_ = 0.0;
  EvalFn eval_;
  ThirdFn third_;
};

/// Coordinate patch with metric dt^2 + w(t)^2 ds^2.
/// First coordinate is the profile coordinate (r or rho), second the fiber
/// coordinate (theta or phi).
struct WarpedSurface {
  WarpFunction warp;
  std::optional<double> period_t;
  std::optional<double> period_s;
  std::vector<double> pole_zeros;  // zeros of w within one period, if any

  static WarpedSurface flat_torus();
  static WarpedSurface nonflat_torus(double k);  // w = k + cos t, requires k > 1
  static WarpedSurface sine_sphere();            // w = sin t, t in (0, pi)
  static WarpedSurface cosine_sphere();          // w = cos t, t in (-pi/2, pi/2)
};

// The six Gamma^i_jk of a 2-D warped metric in (t, s) coordinates.
// Only g122 = -w w' and g212 = w'/w are nonzero.
struct ChristoffelSymbols {
  double g111, g112, g122, g211, g212, g222;
};

// Nonzero curvature components: r1_221 = -r1_212 = w w'',
// r2_112 = -r2_121 = w''/w. All others vanish.
struct CurvatureComponents {
  double r1_221, r1_212, r2_112, r2_121;

  double gauss() const { return -r2_112; }  // K = -w''/w
};

ChristoffelSymbols christoffel(const WarpedSurface& surface, double t);
CurvatureComponents curvature(const WarpedSurface& surface, double t);

}  // namespace bitensor
