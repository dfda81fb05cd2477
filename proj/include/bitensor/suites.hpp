#pragma once

#include <map>
#include <string>
#include <vector>

#include "bitensor/classify.hpp"
#include "bitensor/functionals.hpp"

namespace bitensor {

struct SuiteFailure {
  std::string input, expected, got;
  double residual = 0.0;
};

struct SuiteReport {
  std::string suite;
  std::size_t cases = 0;
  std::vector<SuiteFailure> failures;
  double max_residual = 0.0;
  std::map<std::string, double> metrics;

  bool passed() const { return failures.empty(); }
};

// Deterministic desk-scale verification suites. Each returns a report whose
// empty failure list is the pass condition; tolerances are fixed here, not
// calibrated later.

/// Flat-theorem lattice: a,b in {0,±0.5,±1,±2}, c in {k pi/16}, m,n in
/// {0,±1,±2}; classification vs 64x64 grid verdicts, plus the expected
/// proper-biharmonic hit set.
SuiteReport theorem_flat_suite();

/// Non-flat lattice: a in {0,±1/4,...,±2} plus the like-term values
/// {±j, ±(2j-1)/2, ±(2j-1)/4}, b,m,n in {0,±1,±2}, c in {0.2k}, k in
/// {1.5,2,3}; no tuple may be biharmonic-but-not-harmonic, and non-harmonic
/// tuples must keep a tension residual >= 1e-3.
SuiteReport theorem_nonflat_suite(const std::vector<double>& ks = {1.5, 2.0, 3.0});

/// Path equivalence: finite-difference bitension vs the analytic residual on
/// random linear maps, 3-point h-refinement (1e-2, 5e-3, 2.5e-3); empirical
/// order must land in [1.7, 2.3] for both metric families.
SuiteReport oracle_suite(unsigned seed = 1, int maps_per_family = 200);

/// Trig-expansion identity: expansion_check < 1e-8 on random (a,m,n,c,r,k)
/// tuples with b = 0, parameters in [-3,3], k in (1,4].
SuiteReport expansion_suite(unsigned seed = 7, int samples = 256);

/// Variation identities: |dE + <tau,V>| < 1e-5 and |dE2 + <tau_2,V>| < 1e-4
/// for random (map, variation) pairs per family, eps = 1e-3, 128x128 grid.
SuiteReport variation_suite(unsigned seed = 3, int pairs_per_family = 20);

/// Frozen functional values: bienergy of (0,0,pi/4,1,0,0) equals pi^2/2 to
/// 1e-10 and the embedded-torus Gauss map has degree 0 to 1e-9.
SuiteReport functional_values_suite();

/// The phi_s family sweep: refined residual minima that are proper (tension
/// bounded away from zero) sit exactly at s = pi/8 and 3pi/8.
SuiteReport sweep_phi_s_suite();

/// Harmonic maps are biharmonic: random draws from the harmonic families show
/// bitension residual < 1e-8 whenever the tension residual is < 1e-9.
SuiteReport harmonic_implies_biharmonic_suite(unsigned seed = 5, int samples = 200);

/// Runs a suite by CLI name ("theorem-flat", "theorem-nonflat", "oracle",
/// "expansion", "variation", "functional-values", "sweep-phi-s",
/// "harmonic-biharmonic"). Throws InvalidParameter for unknown names.
SuiteReport run_suite_by_name(const std::string& name, unsigned seed, int samples,
                              double k);

std::vector<std::string> suite_names();

// Parameter sweeps backing the CLI `sweep` subcommand and the sweep suite.
struct SweepRow {
  double param = 0;
  double max_residual_biharmonic = 0;
  double max_residual_harmonic = 0;
  double energy = 0;
  double bienergy = 0;
};

/// Maps (0, 0, 2s, 1, -1, 0), flat torus -> sine sphere, s in [from, to].
std::vector<SweepRow> sweep_phi_s(double from, double to, int steps,
                                  const GridSpec& grid);

/// Maps (a, b, c, m, n, 0) with c swept over [from, to].
std::vector<SweepRow> sweep_c(double a, double b, double m, double n, double from,
                              double to, int steps, const GridSpec& grid);

std::string format_map(const LinearMap& map);

}  // namespace bitensor
