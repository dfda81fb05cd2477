#include "bitensor/atlas.hpp"

#include <cmath>

namespace bitensor {

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;

double get_param(const std::map<std::string, double>& params, const std::string& name) {
  auto it = params.find(name);
  if (it == params.end()) {
    throw InvalidParameter("example_map: missing parameter '" + name + "'");
  }
  return it->second;
}

double get_param_or(const std::map<std::string, double>& params,
                    const std::string& name, double fallback) {
  auto it = params.find(name);
  return it == params.end() ? fallback : it->second;
}
}  // namespace

Eigen::Vector3d hopf(double z1re, double z1im, double z2re, double z2im) {
  const double nz = z1re * z1re + z1im * z1im;
  const double nw = z2re * z2re + z2im * z2im;
  if (std::abs(nz + nw - 1.0) > 1e-9) {
    throw NotOnSphereError("hopf: |z|^2 + |w|^2 must be 1");
  }
  // 2 z conj(w)
  return {nz - nw, 2.0 * (z1re * z2re + z1im * z2im),
          2.0 * (z1im * z2re - z1re * z2im)};
}

Eigen::Vector3d radial_projection(const Eigen::Vector3d& x) {
  const double n = x.norm();
  if (n < 1e-150) throw ZeroVectorError("radial_projection: zero vector");
  return x / n;
}

Eigen::Vector3d torus_embedding(double a, double b, double r, double theta) {
  const double ring = b + a * std::cos(r);
  return {a * std::sin(r), ring * std::cos(theta), ring * std::sin(theta)};
}

std::pair<double, double> gauss_map_torus(double a, double b, double r,
                                          double theta) {
  if (!(b > a && a > 0)) throw InvalidParameter("gauss_map_torus: need b > a > 0");
  return {r, theta};
}

Eigen::Vector3d sine_model_point(double rho, double phi) {
  return {std::cos(rho), std::sin(rho) * std::cos(phi), std::sin(rho) * std::sin(phi)};
}

Eigen::Vector3d cosine_model_point(double rho, double phi) {
  return {std::sin(rho), std::cos(rho) * std::cos(phi), std::cos(rho) * std::sin(phi)};
}

double radial_profile(double a, double b, double r, bool raw) {
  if (!(b > a && a > 0)) throw InvalidParameter("radial_profile: need b > a > 0");
  const double height = a * std::sin(r) / std::sqrt(a * a + b * b + 2 * a * b * std::cos(r));
  return raw ? std::cos(height) : std::acos(height);
}

MapSpec example_map(int id, const std::map<std::string, double>& params) {
  switch (id) {
    case 1: {
      const double k = get_param(params, "k");
      const double m = get_param(params, "m");
      const double n = get_param(params, "n");
      return {WarpedSurface::flat_torus(), WarpedSurface::sine_sphere(),
              LinearMap{2 * k, 0, 0, 0, m - n, 0}, "lawson-hopf", params};
    }
    case 2: {
      const double s = get_param(params, "s");
      return {WarpedSurface::flat_torus(), WarpedSurface::sine_sphere(),
              LinearMap{0, 0, 2 * s, 1, -1, 0}, "clifford-hopf", params};
    }
    case 3: {
      const double a0 = get_param(params, "alpha0");
      const double a1 = get_param(params, "alpha1");
      auto zero = [](double, double) { return 0.0; };
      ScalarField f1([a0, a1](double r, double) { return 2 * (a0 + a1 * r); },
                     [a1](double, double) { return 2 * a1; }, zero, zero, zero);
      ScalarField f2([](double r, double t) { return r - t; },
                     [](double, double) { return 1.0; },
                     [](double, double) { return -1.0; }, zero, zero);
      return {WarpedSurface::flat_torus(), WarpedSurface::sine_sphere(),
              SmoothMap(std::move(f1), std::move(f2)), "brendle-hopf", params};
    }
    case 4: {
      // The paper's composition has no additive constant; c0 places the
      // evaluation window relative to the target poles.
      const double c0 = get_param_or(params, "c0", kPi);
      std::map<std::string, double> p = params;
      p["c0"] = c0;
      return {WarpedSurface::flat_torus(), WarpedSurface::sine_sphere(),
              LinearMap{-1, -1, c0, 0, 1, 0}, "ou-hopf", p};
    }
    case 5: {
      const double a = get_param(params, "a");
      const double b = get_param(params, "b");
      if (!(b > a && a > 0)) throw InvalidParameter("example_map 5: need b > a > 0");
      // a^2 dr^2 + (b + a cos r)^2 dtheta^2 is homothetic to the warp
      // (b/a) + cos r; verdicts are unchanged by the rescaling.
      return {WarpedSurface::nonflat_torus(b / a), WarpedSurface::cosine_sphere(),
              LinearMap{1, 0, 0, 0, 1, 0}, "gauss", params};
    }
    case 6: {
      const double a = get_param(params, "a");
      const double b = get_param(params, "b");
      const bool raw = get_param_or(params, "raw", 0.0) != 0.0;
      if (!(b > a && a > 0)) throw InvalidParameter("example_map 6: need b > a > 0");
      ScalarField f1([a, b, raw](double r, double) { return radial_profile(a, b, r, raw); });
      ScalarField f2([](double, double t) { return t; });
      return {WarpedSurface::nonflat_torus(b / a), WarpedSurface::sine_sphere(),
              SmoothMap(std::move(f1), std::move(f2), FdSteps{}), "radial", params};
    }
    default:
      throw InvalidParameter("example_map: id must be 1..6");
  }
}

int example_id_from_label(const std::string& label) {
  if (label == "lawson-hopf") return 1;
  if (label == "clifford-hopf") return 2;
  if (label == "brendle-hopf") return 3;
  if (label == "ou-hopf") return 4;
  if (label == "gauss") return 5;
  if (label == "radial") return 6;
  throw InvalidParameter("unknown example label '" + label + "'");
}

}  // namespace bitensor
