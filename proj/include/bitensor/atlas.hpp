#pragma once

#include <Eigen/Core>
#include <map>
#include <string>
#include <variant>

#include "bitensor/maps.hpp"

namespace bitensor {

/// A map wired to its metric pair. All atlas targets are sphere models.
struct MapSpec {
  WarpedSurface domain;
  WarpedSurface target;
  std::variant<LinearMap, SmoothMap> map;
  std::string label;
  std::map<std::string, double> params;

  bool linear() const { return std::holds_alternative<LinearMap>(map); }
};

/// Hopf construction H(z, w) = (|z|^2 - |w|^2, 2 z conj(w)) restricted to the
/// unit 3-sphere. Returns (x, Re y, Im y); the image is a unit vector.
Eigen::Vector3d hopf(double z1re, double z1im, double z2re, double z2im);

/// Radial projection x -> x/|x| onto the unit sphere.
Eigen::Vector3d radial_projection(const Eigen::Vector3d& x);

/// Standard torus embedding
///   X(r, theta) = (a sin r, (b + a cos r) cos theta, (b + a cos r) sin theta).
Eigen::Vector3d torus_embedding(double a, double b, double r, double theta);

/// Gauss map of the embedded torus in latitude coordinates: (rho, phi) = (r, theta)
/// in the cosine sphere model, whose point is (sin rho, cos rho cos phi,
/// cos rho sin phi). Requires b > a > 0.
std::pair<double, double> gauss_map_torus(double a, double b, double r, double theta);

// Sphere-model embeddings used throughout the atlas and its tests.
Eigen::Vector3d sine_model_point(double rho, double phi);    // (cos, sin*cos, sin*sin)
Eigen::Vector3d cosine_model_point(double rho, double phi);  // (sin, cos*cos, cos*sin)

/// Radial-projection profile of the embedded torus: cos(alpha(r)) equals the
/// normalized first embedding coordinate a sin r / sqrt(a^2 + b^2 + 2ab cos r).
/// With raw = true, returns the literal alternative reading
/// alpha = cos(a sin r / sqrt(...)) instead.
double radial_profile(double a, double b, double r, bool raw = false);

/// The six example families:
///   1 (lawson-hopf):   rho = 2k r, phi = (m - n) theta; flat -> sine model.
///      params: k, m, n
///   2 (clifford-hopf): rho = 2s, phi = r - theta; flat -> sine model.
///      params: s
///   3 (brendle-hopf):  rho = 2 alpha(r), phi = r - theta with an affine
///      profile alpha(r) = alpha0 + alpha1 r; flat -> sine model.
///      params: alpha0, alpha1
///   4 (ou-hopf):       rho = -r - theta + c0, phi = theta; flat -> sine model.
///      params: c0 (default pi)
///   5 (gauss):         rho = r, phi = theta on the rescaled embedded-torus
///      metric (warp b/a + cos r) -> cosine model. params: a, b with b > a > 0
///   6 (radial):        rho = alpha(r) from radial_profile, phi = theta,
///      same domain as 5 -> sine model. params: a, b, raw (0/1)
MapSpec example_map(int id, const std::map<std::string, double>& params);

/// Label lookup for the CLI ("lawson-hopf", "clifford-hopf", ...).
int example_id_from_label(const std::string& label);

}  // namespace bitensor
