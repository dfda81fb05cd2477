#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "bitensor/bitension.hpp"

namespace bitensor {

enum class Verdict { Harmonic, ProperBiharmonic, NotBiharmonic };
enum class CaseTag { A, B, C, NonFlatHarmonic, None };

const char* to_string(Verdict v);
const char* to_string(CaseTag c);

struct ClassificationResult {
  Verdict verdict = Verdict::NotBiharmonic;
  CaseTag case_tag = CaseTag::None;
  std::string witness;  // which condition fired
};

/// Exact case classification for the flat torus into the sine-model sphere:
///   A: a = b = 0, c = pi/2            -> harmonic
///   B: m = n = 0                      -> harmonic
///   C: a = b = 0, m^2+n^2 != 0, c in {pi/4, 3pi/4} -> proper biharmonic
/// everything else is not biharmonic. Case boundaries match to 1e-12.
ClassificationResult classify_flat(const LinearMap& map);

/// Non-flat torus (warp k + cos r, k > 1) into the cosine-model sphere:
/// biharmonic iff harmonic, so the verdict reduces to a dense-grid test of
/// the closed-form tension. Never returns ProperBiharmonic.
ClassificationResult classify_nonflat(const LinearMap& map, double k);

/// Coefficients of the degree-4 trigonometric expansion of
/// (k + cos r)^4 * (first reduced equation), for maps with b = 0.
struct TrigCoefficients {
  double a0, a1, a2, a3, a4;
  double b1, b2, b3, b4;
  double c0, c1, c2, c3, c4;
  double d1, d2, d3, d4;
};

TrigCoefficients trig_coefficients(const LinearMap& map, double k);

/// |reconstruction from TrigCoefficients - direct pointwise evaluation| at r.
/// The direct side is (k + cos r)^4 times the first residual equation, an
/// independent code path; the difference stays below 1e-8 for parameters in
/// [-3, 3].
double expansion_check(const LinearMap& map, double k, double r);

enum class TheoremFamily { Flat, NonFlat };

/// Parameter lattice for a theorem verification run. For Flat the k list is
/// ignored. l is fixed at 0 (verdicts never depend on it).
struct Lattice {
  std::vector<double> a, b, c, m, n;
  std::vector<double> k;
  GridSpec grid;

  std::size_t size(TheoremFamily family) const;
};

struct TheoremDisagreement {
  LinearMap map;
  double k = 0.0;
  std::string expected, got;
  double residual = 0.0;
};

struct TheoremReport {
  TheoremFamily family = TheoremFamily::Flat;
  std::size_t lattice_size = 0;
  std::size_t evaluated = 0;
  std::vector<TheoremDisagreement> failures;
  std::vector<LinearMap> proper_biharmonic_hits;
  // residual extremes across the lattice
  double max_residual_harmonic_maps = 0.0;     // bitension residual on harmonic maps
  double min_residual_nonharmonic =
      std::numeric_limits<double>::infinity();  // tension floor off the harmonic set
  double min_residual_nonbiharmonic =
      std::numeric_limits<double>::infinity();  // bitension floor off the biharmonic set

  bool passed() const { return failures.empty(); }
};

/// Checks every lattice tuple: the exact classification must agree with the
/// grid-evaluated is_harmonic / is_biharmonic verdicts (Flat), and no tuple
/// may be biharmonic-but-not-harmonic (NonFlat). The report lists every
/// disagreement; an empty list is a pass.
TheoremReport verify_theorem(TheoremFamily family, const Lattice& lattice);

}  // namespace bitensor
