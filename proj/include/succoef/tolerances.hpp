#pragma once

// Numerical tolerances shared by every module.

namespace succoef::tol {

// |f(0) - expected| accepted by the series preconditions (log, pow, kernel).
inline constexpr double constant_term = 1e-12;

// Unit-circle and weight-sum checks on atomic Herglotz representations.
inline constexpr double atom = 1e-12;

// Slack on the ranges c in [0, 2] and |x|, |y| <= 1.
inline constexpr double range = 1e-12;

// Moment residual accepted by the two-atom solver.
inline constexpr double two_atom_residual = 1e-10;

// Lower limit on |f(z)| and |f'(z)| before a sampled quotient is rejected.
inline constexpr double vanishing = 1e-14;

// Margin below which a membership sample counts as a violation.
inline constexpr double membership = -1e-9;

// Slack on sampled class members against a bound interval.
inline constexpr double bound_slack = 1e-9;

// Extremal attainment residual against the interval endpoint.
inline constexpr double attainment = 1e-9;

// Default residual tolerance of the grid optimizer.
inline constexpr double optimizer = 1e-3;

// Accepted finite-difference backstep when checking monotonicity.
inline constexpr double monotone = 1e-12;

}  // namespace succoef::tol
