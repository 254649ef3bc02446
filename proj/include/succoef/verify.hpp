#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "succoef/bounds.hpp"
#include "succoef/classes.hpp"

namespace succoef {

struct FunctionalSpec {
  ClassParams params;
  Functional which = Functional::d2;
};

/// |a3| - |a2| (D2) or |a2| - |a1| (D1) of the class member whose Caratheodory
/// data is c1 = c >= 0, c2 = (c^2 + (4 - c^2) x)/2. Throws domain_error for
/// c outside [0, 2] or |x| > 1.
double functional_value(const FunctionalSpec& spec, double c, complex x);

struct GridSize {
  int n_c = 201;
  int n_r = 101;
  int n_theta = 256;
};

/// Point (c, r, theta) with x = r e^{i theta}.
struct SearchPoint {
  double c = 0.0;
  double r = 0.0;
  double theta = 0.0;
};

struct VerifyReport {
  BoundInterval analytic;
  double grid_min = 0.0;  // before refinement
  double grid_max = 0.0;
  double numeric_min = 0.0;
  double numeric_max = 0.0;
  SearchPoint argmin;
  SearchPoint argmax;
  double residual_min = 0.0;  // |numeric_min - analytic.lower|
  double residual_max = 0.0;  // |numeric_max - analytic.upper|
  double tolerance = 0.0;
  bool passed = false;
  GridSize grid;
  double runtime_seconds = 0.0;
};

inline constexpr int default_refine_iterations = 40;

/// Exhaustive scan of c in [0, 2], r in [0, 1], theta in [0, 2 pi) followed by a
/// shrinking-step stencil search (step halved refine_iterations times) from the
/// best cell for each of the minimum and the maximum. Grid ties resolve to the
/// lexicographically smallest (c, r, theta). Mathematical mismatch is reported,
/// never thrown.
VerifyReport grid_optimize(const FunctionalSpec& spec, GridSize grid = {}, double tolerance = 0.001,
                           int refine_iterations = default_refine_iterations);

struct SampleExtreme {
  double value = 0.0;
  double margin = 0.0;  // distance inside the interval, negative on violation
  int sample = -1;
};

struct FunctionalSampleStats {
  BoundInterval analytic;
  SampleExtreme lowest;   // sample closest to (or beyond) the lower endpoint
  SampleExtreme highest;  // sample closest to (or beyond) the upper endpoint
  int violations = 0;
};

struct SampleReport {
  ClassParams params;
  int n_samples = 0;
  int construction_failures = 0;
  FunctionalSampleStats d1;
  FunctionalSampleStats d2;
  std::vector<std::string> failure_messages;

  bool passed() const noexcept { return d1.violations == 0 && d2.violations == 0 && construction_failures == 0; }
};

/// Random Caratheodory reps with 1..n_atoms_max atoms, turned into class members
/// through the series constructors; |a2| - |a1| and |a3| - |a2| read from the
/// series are checked against the bound intervals with tol::bound_slack.
SampleReport sample_no_violation(const ClassParams& params, int n_samples, int n_atoms_max, std::uint64_t seed,
                                 std::size_t order = default_order);

enum class Monotonicity { increasing, decreasing };

/// One-dimensional minorant from a case analysis of the lower bound.
struct MinorantCheck {
  std::string label;
  double from = 0.0;
  double to = 0.0;
  Monotonicity expected = Monotonicity::increasing;
  double worst_step = 0.0;  // most negative signed step against the expected direction
  bool passed = false;
};

struct CaseBoundaryReport {
  FunctionalSpec spec;
  std::vector<MinorantCheck> minorants;
  double analytic_argmin_c = 0.0;
  double numeric_argmin_c = 0.0;
  double c_resolution = 0.0;
  bool argmin_passed = false;
  std::string note;

  bool passed() const noexcept;
};

inline constexpr int monotonicity_points = 1000;

/// Finite-difference sign checks of the case-analysis minorants on their
/// intervals, and agreement of the optimizer's argmin c with the analytic c*
/// (2/sqrt(1 + T), 3/(2 - lambda) or 2) within one grid cell.
CaseBoundaryReport case_boundary_check(const FunctionalSpec& spec, GridSize grid = {});

/// c* of the lower D2 bound.
double analytic_argmin_c(const ClassParams& params);

}  // namespace succoef
