#pragma once

#include "bitensor/errors.hpp"

namespace bitensor {

/// Uniform evaluation grid over one period square, with pole exclusion and
/// the residual tolerances used by the is_harmonic / is_biharmonic verdicts.
struct GridSpec {
  int nr = 128;
  int ntheta = 128;
  double pole_margin = 1e-3;          // exclude points with |warp| below this
  double tolerance_harmonic = 1e-9;   // analytic tension path
  double tolerance_biharmonic = 1e-8; // analytic bitension path

  void validate() const {
    if (nr < 8 || ntheta < 8) throw InvalidParameter("grid needs nr, ntheta >= 8");
    if (!(pole_margin > 0.0)) throw InvalidParameter("grid needs pole_margin > 0");
  }
};

}  // namespace bitensor
