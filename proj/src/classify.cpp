#include "bitensor/classify.hpp"

#include <cmath>
#include <sstream>

#include "bitensor/parallel.hpp"

namespace bitensor {

namespace {
constexpr double kCaseTol = 1e-12;  // case-boundary match for user-given constants

bool near(double x, double y) { return std::abs(x - y) < kCaseTol; }
}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Harmonic: return "Harmonic";
    case Verdict::ProperBiharmonic: return "ProperBiharmonic";
    case Verdict::NotBiharmonic: return "NotBiharmonic";
  }
  return "?";
}

const char* to_string(CaseTag c) {
  switch (c) {
    case CaseTag::A: return "A";
    case CaseTag::B: return "B";
    case CaseTag::C: return "C";
    case CaseTag::NonFlatHarmonic: return "NonFlatHarmonic";
    case CaseTag::None: return "None";
  }
  return "?";
}

ClassificationResult classify_flat(const LinearMap& map) {
  const bool const_rho = near(map.a, 0.0) && near(map.b, 0.0);
  const bool const_phi = near(map.m, 0.0) && near(map.n, 0.0);

  if (const_rho && near(map.c, M_PI / 2)) {
    return {Verdict::Harmonic, CaseTag::A, "a=b=0, c=pi/2: cos(rho)=0 and tau=0"};
  }
  if (const_phi) {
    return {Verdict::Harmonic, CaseTag::B, "m=n=0: tau vanishes identically"};
  }
  if (const_rho && (near(map.c, M_PI / 4) || near(map.c, 3 * M_PI / 4))) {
    return {Verdict::ProperBiharmonic, CaseTag::C,
            "a=b=0, cos(2c)=0, m^2+n^2!=0: tau^1 = -(m^2+n^2)/2 != 0"};
  }
  // Remaining cases trace the reduction chain: with m^2+n^2 != 0, either
  // am+bn != 0 (no solution) or am+bn = 0 with a^2+b^2 != 0 (cos 2rho would
  // have to be a nonzero constant on the cover), or a = b = 0 with cos 2c != 0.
  std::string why;
  if (std::abs(map.a * map.m + map.b * map.n) > kCaseTol) {
    why = "am+bn != 0: reduced equation has no solution";
  } else if (!const_rho) {
    why = "am+bn = 0 but a^2+b^2 != 0: cos(2rho) cannot be constant";
  } else {
    why = "a=b=0 with cos(2c) != 0 and c != pi/2";
  }
  return {Verdict::NotBiharmonic, CaseTag::None, why};
}

ClassificationResult classify_nonflat(const LinearMap& map, double k) {
  if (!(k > 1.0)) throw InvalidParameter("classify_nonflat: k must be > 1");
  const WarpedSurface domain = WarpedSurface::nonflat_torus(k);
  const WarpedSurface target = WarpedSurface::cosine_sphere();

  // tau components are low-degree trig polynomials in r; 256 samples in r
  // (64 in theta for b != 0) decide harmonicity.
  GridSpec grid;
  grid.nr = 256;
  grid.ntheta = 64;
  const double res = max_tension_residual(domain, target, map, grid);
  std::ostringstream os;
  if (res < grid.tolerance_harmonic) {
    os << "tension vanishes on grid (max " << res << ")";
    return {Verdict::Harmonic, CaseTag::NonFlatHarmonic, os.str()};
  }
  os << "non-harmonic (max tension residual " << res
     << "); biharmonic iff harmonic for this family";
  return {Verdict::NotBiharmonic, CaseTag::None, os.str()};
}

TrigCoefficients trig_coefficients(const LinearMap& map, double k) {
  if (map.b != 0.0) throw InvalidParameter("trig_coefficients: requires b = 0");
  if (!(k > 1.0)) throw InvalidParameter("trig_coefficients: k must be > 1");
  const double a = map.a, m = map.m, n = map.n;
  const double a2 = a * a, m2 = m * m, n2 = n * n;
  const double m4 = m2 * m2, n4 = n2 * n2;
  const double k2 = k * k, k3 = k2 * k, k4 = k2 * k2;

  TrigCoefficients t;
  t.a0 = -7 * m2 * k2 / 4 - 2 * a2 * n2 * k2 - a2 * n2 - 7 * m2 / 16 -
         4 * a2 * m2 * k4 - 12 * a2 * m2 * k2 - 1.5 * a2 * m2 + 1.5 * n2;
  t.a1 = -2.5 * m2 * k - m2 * k3 - 4 * a2 * n2 * k - 16 * a2 * m2 * k3 -
         12 * a2 * m2 * k + n2 * k;
  t.a2 = -1.25 * m2 * k2 - a2 * n2 - 0.5 * m2 - 12 * a2 * m2 * k2 -
         2 * a2 * m2 - 0.5 * n2;
  t.a3 = -0.5 * m2 * k - 4 * a2 * m2 * k;
  t.a4 = -m2 / 16 - 0.5 * a2 * m2;
  t.b1 = -4 * a * m2 * k3 - 3 * a * m2 * k + 2 * a * n2 * k;
  t.b2 = -6 * a * m2 * k2 - a * m2 + a * n2;
  t.b3 = -3 * a * m2 * k;
  t.b4 = -0.5 * a * m2;
  t.c0 = m4 * k4 / 4 + 3 * m4 * k2 / 4 + 3 * m4 / 32 + m2 * n2 * k2 / 2 +
         m2 * n2 / 4 + n4 / 4;
  t.c1 = m4 * k3 + 3 * m4 * k / 4 + m2 * n2 * k;
  t.c2 = 3 * m4 * k2 / 4 + m2 * n2 / 4 + m4 / 8;
  t.c3 = m4 * k / 4;
  t.c4 = m4 / 32;
  t.d1 = a * (k2 - 1) * k + a * m2 * (2 * k3 + 1.5 * k);
  t.d2 = a * (k2 - 1) / 2 + a * m2 * (3 * k2 + 0.5);
  t.d3 = 1.5 * a * m2 * k;
  t.d4 = a * m2 / 4;
  return t;
}

double expansion_check(const LinearMap& map, double k, double r) {
  const TrigCoefficients t = trig_coefficients(map, k);
  const double a = map.a, c = map.c;

  double expanded = t.a0 * std::sin(2 * a * r + 2 * c);
  const double as[4] = {t.a1, t.a2, t.a3, t.a4};
  const double bs[4] = {t.b1, t.b2, t.b3, t.b4};
  const double cs[4] = {t.c1, t.c2, t.c3, t.c4};
  for (int i = 1; i <= 4; ++i) {
    expanded += 0.5 * (as[i - 1] + bs[i - 1]) * std::sin((2 * a + i) * r + 2 * c);
    expanded += 0.5 * (as[i - 1] - bs[i - 1]) * std::sin((2 * a - i) * r + 2 * c);
  }
  expanded += t.c0 * std::sin(4 * a * r + 4 * c);
  for (int i = 1; i <= 4; ++i) {
    expanded += 0.5 * cs[i - 1] *
                (std::sin((4 * a + i) * r + 4 * c) + std::sin((4 * a - i) * r + 4 * c));
  }
  expanded += t.d1 * std::sin(r) + t.d2 * std::sin(2 * r) + t.d3 * std::sin(3 * r) +
              t.d4 * std::sin(4 * r);

  // Direct side: sigma^4 times the first residual equation, evaluated through
  // the generic analytic path (theta is irrelevant since b = 0).
  const double rho = map.rho(r, 0.0);
  if (std::abs(std::cos(rho)) < kPoleTol) throw PoleError("expansion_check: target pole");
  const WarpedSurface domain = WarpedSurface::nonflat_torus(k);
  const WarpedSurface target = WarpedSurface::cosine_sphere();
  const BitensionResidual res = bitension_residual_linear(domain, target, map, r, 0.0);
  const double sig = k + std::cos(r);
  const double direct = sig * sig * sig * sig * res.r1;
  return std::abs(expanded - direct);
}

std::size_t Lattice::size(TheoremFamily family) const {
  std::size_t s = a.size() * b.size() * c.size() * m.size() * n.size();
  if (family == TheoremFamily::NonFlat) s *= k.size();
  return s;
}

namespace {

struct TupleOutcome {
  bool failed = false;
  TheoremDisagreement dis;
  bool proper_hit = false;
  LinearMap map;
  double bitension_on_harmonic = 0.0;
  double tension_floor = std::numeric_limits<double>::infinity();
  double bitension_floor = std::numeric_limits<double>::infinity();
};

std::string verdict_pair(bool harmonic, bool biharmonic) {
  std::ostringstream os;
  os << "grid{harmonic=" << (harmonic ? "yes" : "no")
     << ", biharmonic=" << (biharmonic ? "yes" : "no") << "}";
  return os.str();
}

TupleOutcome check_flat_tuple(const WarpedSurface& dom, const WarpedSurface& tgt,
                              const LinearMap& map, const GridSpec& grid) {
  TupleOutcome out;
  out.map = map;
  const ClassificationResult cls = classify_flat(map);
  const ResidualScan scan = scan_residuals(dom, tgt, map, grid);
  const bool gh = scan.max_tension < grid.tolerance_harmonic;
  const bool gb = scan.max_bitension < grid.tolerance_biharmonic;

  const bool ch = cls.verdict == Verdict::Harmonic;
  const bool cb = cls.verdict != Verdict::NotBiharmonic;
  if (ch != gh || cb != gb) {
    out.failed = true;
    out.dis = {map, 0.0, std::string(to_string(cls.verdict)) + " (classified)",
               verdict_pair(gh, gb), std::max(scan.max_tension, scan.max_bitension)};
  }
  if (cls.verdict == Verdict::ProperBiharmonic) out.proper_hit = true;
  if (gh) out.bitension_on_harmonic = scan.max_bitension;
  if (!gh) out.tension_floor = scan.max_tension;
  if (!gb) out.bitension_floor = scan.max_bitension;
  return out;
}

TupleOutcome check_nonflat_tuple(const LinearMap& map, double k, const GridSpec& grid) {
  TupleOutcome out;
  out.map = map;
  const WarpedSurface dom = WarpedSurface::nonflat_torus(k);
  const WarpedSurface tgt = WarpedSurface::cosine_sphere();
  const ClassificationResult cls = classify_nonflat(map, k);
  const ResidualScan scan = scan_residuals(dom, tgt, map, grid);
  const bool gh = scan.max_tension < grid.tolerance_harmonic;
  const bool gb = scan.max_bitension < grid.tolerance_biharmonic;

  if (gb && !gh) {
    out.failed = true;
    out.dis = {map, k, "no proper biharmonic map (biharmonic iff harmonic)",
               verdict_pair(gh, gb), scan.max_tension};
    out.proper_hit = true;
  } else if ((cls.verdict == Verdict::Harmonic) != gh) {
    out.failed = true;
    out.dis = {map, k, std::string(to_string(cls.verdict)) + " (classified)",
               verdict_pair(gh, gb), scan.max_tension};
  }
  if (gh) out.bitension_on_harmonic = scan.max_bitension;
  if (!gh) out.tension_floor = scan.max_tension;
  if (!gb) out.bitension_floor = scan.max_bitension;
  return out;
}

}  // namespace

TheoremReport verify_theorem(TheoremFamily family, const Lattice& lattice) {
  lattice.grid.validate();
  TheoremReport report;
  report.family = family;
  report.lattice_size = lattice.size(family);
  if (report.lattice_size == 0) return report;  // empty lattice passes trivially

  const std::vector<double> ks =
      family == TheoremFamily::Flat ? std::vector<double>{0.0} : lattice.k;

  // Flatten the lattice so tuples can be checked independently.
  struct Tuple { LinearMap map; double k; };
  std::vector<Tuple> tuples;
  tuples.reserve(report.lattice_size);
  for (double k : ks)
    for (double a : lattice.a)
      for (double b : lattice.b)
        for (double c : lattice.c)
          for (double m : lattice.m)
            for (double n : lattice.n)
              tuples.push_back({LinearMap{a, b, c, m, n, 0.0}, k});

  const WarpedSurface flat_dom = WarpedSurface::flat_torus();
  const WarpedSurface sine_tgt = WarpedSurface::sine_sphere();

  std::vector<TupleOutcome> outcomes(tuples.size());
  parallel_for(tuples.size(), [&](std::size_t i) {
    outcomes[i] = family == TheoremFamily::Flat
                      ? check_flat_tuple(flat_dom, sine_tgt, tuples[i].map, lattice.grid)
                      : check_nonflat_tuple(tuples[i].map, tuples[i].k, lattice.grid);
  });

  for (const TupleOutcome& o : outcomes) {
    ++report.evaluated;
    if (o.failed) report.failures.push_back(o.dis);
    if (o.proper_hit) report.proper_biharmonic_hits.push_back(o.map);
    report.max_residual_harmonic_maps =
        std::max(report.max_residual_harmonic_maps, o.bitension_on_harmonic);
    report.min_residual_nonharmonic =
        std::min(report.min_residual_nonharmonic, o.tension_floor);
    report.min_residual_nonbiharmonic =
        std::min(report.min_residual_nonbiharmonic, o.bitension_floor);
  }
  return report;
}

}  // namespace bitensor
