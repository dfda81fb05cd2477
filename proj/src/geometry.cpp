#include "bitensor/geometry.hpp"

#include <cmath>
#include <utility>

namespace bitensor {

WarpFunction WarpFunction::unit() { return WarpFunction(WarpKind::Unit, 0.0); }
WarpFunction WarpFunction::sine() { return WarpFunction(WarpKind::Sine, 0.0); }
WarpFunction WarpFunction::cosine() { return WarpFunction(WarpKind::Cosine, 0.0); }

WarpFunction WarpFunction::offset_cosine(double k) {
  return WarpFunction(WarpKind::OffsetCosine, k);
}

WarpFunction WarpFunction::custom(EvalFn eval, ThirdFn third) {
  if (!eval) throw InvalidParameter("custom warp needs an eval function");
  WarpFunction w(WarpKind::Custom, 0.0);
  w.eval_ = std::move(eval);
  w.third_ = std::move(third);
  return w;
}

WarpEval WarpFunction::operator()(double t) const {
  switch (kind_) {
    case WarpKind::Unit:
      return {1.0, 0.0, 0.0};
    case WarpKind::Sine: {
      const double s = std::sin(t), c = std::cos(t);
      return {s, c, -s};
    }
    case WarpKind::Cosine: {
      const double s = std::sin(t), c = std::cos(t);
      return {c, -s, -c};
    }
    case WarpKind::OffsetCosine: {
      const double s = std::sin(t), c = std::cos(t);
      return {k_ + c, -s, -c};
    }
    case WarpKind::Custom:
      return eval_(t);
  }
  throw InvalidParameter("unknown warp kind");
}

double WarpFunction::third(double t) const {
  switch (kind_) {
    case WarpKind::Unit:
      return 0.0;
    case WarpKind::Sine:
      return -std::cos(t);
    case WarpKind::Cosine:
    case WarpKind::OffsetCosine:
      return std::sin(t);
    case WarpKind::Custom:
      if (!third_) {
        throw InvalidParameter(
            "custom warp has no third derivative; the analytic bitension path "
            "needs one");
      }
      return third_(t);
  }
  throw InvalidParameter("unknown warp kind");
}

bool WarpFunction::has_third() const {
  return kind_ != WarpKind::Custom || static_cast<bool>(third_);
}

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kPi = 3.1415926535897932384626433832795;
}  // namespace

WarpedSurface WarpedSurface::flat_torus() {
  return {WarpFunction::unit(), kTwoPi, kTwoPi, {}};
}

WarpedSurface WarpedSurface::nonflat_torus(double k) {
  if (!(k > 1.0)) {
    throw InvalidParameter("nonflat torus warp k + cos t needs k > 1");
  }
  return {WarpFunction::offset_cosine(k), kTwoPi, kTwoPi, {}};
}

WarpedSurface WarpedSurface::sine_sphere() {
  return {WarpFunction::sine(), std::nullopt, kTwoPi, {0.0, kPi}};
}

WarpedSurface WarpedSurface::cosine_sphere() {
  return {WarpFunction::cosine(), std::nullopt, kTwoPi, {-kPi / 2, kPi / 2}};
}

ChristoffelSymbols christoffel(const WarpedSurface& surface, double t) {
  const WarpEval e = surface.warp(t);
  if (std::abs(e.w) < kPoleTol) {
    throw PoleError("christoffel: warp vanishes at t");
  }
  return {0.0, 0.0, -e.w * e.w1, 0.0, e.w1 / e.w, 0.0};
}

CurvatureComponents curvature(const WarpedSurface& surface, double t) {
  const WarpEval e = surface.warp(t);
  if (std::abs(e.w) < kPoleTol) {
    throw PoleError("curvature: warp vanishes at t");
  }
  const double ww2 = e.w * e.w2;
  const double w2ow = e.w2 / e.w;
  return {ww2, -ww2, w2ow, -w2ow};
}

}  // namespace bitensor
