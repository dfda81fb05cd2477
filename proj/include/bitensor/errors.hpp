#pragma once

#include <stdexcept>
#include <string>

namespace bitensor {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A metric warp factor vanishes (or is below tolerance) where a value is needed.
struct PoleError : Error {
  using Error::Error;
};

// A finite-difference stencil reaches across a metric pole.
struct StencilError : Error {
  using Error::Error;
};

// Pole exclusion removed every grid point.
struct EmptyGridError : Error {
  using Error::Error;
};

struct InvalidParameter : Error {
  using Error::Error;
};

// Input to the Hopf map is not on the unit 3-sphere.
struct NotOnSphereError : Error {
  using Error::Error;
};

struct ZeroVectorError : Error {
  using Error::Error;
};

// A functional that needs the whole torus met a pole on the grid.
struct PoleOnDomainError : Error {
  using Error::Error;
};

}  // namespace bitensor
