#include "succoef/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "succoef/caratheodory.hpp"
#include "succoef/errors.hpp"
#include "succoef/tolerances.hpp"

namespace succoef {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// D2 = scale (|a c^2 + (4 - c^2) x| - k c);  D1 = slope c - 1.
struct Evaluator {
  Functional which;
  double scale;
  complex a;
  double k;
  double slope;

  explicit Evaluator(const FunctionalSpec& spec) : which(spec.which) {
    const ClassParams& p = spec.params;
    p.validate();
    switch (p.family) {
      case Family::spirallike:
      case Family::convex_gamma: {
        const double m = (1.0 - p.alpha) * std::cos(p.gamma);
        const complex w = (1.0 - p.alpha) * Mu::from_gamma(p.gamma).value;
        const bool spiral = p.family == Family::spirallike;
        scale = spiral ? m / 4.0 : m / 12.0;
        a = 1.0 + 2.0 * w;
        k = spiral ? 4.0 : 6.0;
        slope = spiral ? m : m / 2.0;
        break;
      }
      case Family::ozaki_g:
        scale = p.lambda / 24.0;
        a = 1.0 - p.lambda;
        k = 6.0;
        slope = p.lambda / 4.0;
        break;
    }
  }

  double operator()(double c, complex x) const noexcept {
    if (which == Functional::d1) return slope * c - 1.0;
    const double c2 = c * c;
    return scale * (std::abs(a * c2 + (4.0 - c2) * x) - k * c);
  }

  double operator()(const SearchPoint& p) const noexcept { return (*this)(p.c, std::polar(p.r, p.theta)); }
};

SearchPoint clamp_point(SearchPoint p) {
  p.c = std::clamp(p.c, 0.0, 2.0);
  p.r = std::clamp(p.r, 0.0, 1.0);
  p.theta = std::fmod(p.theta, two_pi);
  if (p.theta < 0.0) p.theta += two_pi;
  return p;
}

// Minimizes sign * eval with a full (2m+1)^3 stencil whose step halves every
// iteration. The stencil rather than single-axis moves lets the search follow
// the kinked valleys where |.| vanishes.
SearchPoint refine(const Evaluator& eval, SearchPoint start, std::array<double, 3> step, double sign,
                   int iterations) {
  constexpr int m = 3;
  constexpr int max_moves = 8;
  SearchPoint best = start;
  double best_value = sign * eval(best);
  for (int it = 0; it < iterations; ++it) {
    for (int move = 0; move < max_moves; ++move) {
      SearchPoint candidate = best;
      double candidate_value = best_value;
      for (int dc = -m; dc <= m; ++dc) {
        for (int dr = -m; dr <= m; ++dr) {
          for (int dt = -m; dt <= m; ++dt) {
            const SearchPoint p = clamp_point(
                {best.c + dc * step[0], best.r + dr * step[1], best.theta + dt * step[2]});
            const double v = sign * eval(p);
            if (v < candidate_value) {
              candidate = p;
              candidate_value = v;
            }
          }
        }
      }
      if (!(candidate_value < best_value)) break;
      best = candidate;
      best_value = candidate_value;
    }
    for (auto& s : step) s /= 2.0;
  }
  return best;
}

double profile(double s, double k, double c, bool plus) {
  return plus ? c * c * s - 4.0 - k * c : -c * c * s + 4.0 - k * c;
}

MinorantCheck check_minorant(std::string label, double from, double to, Monotonicity expected, double s, double k,
                             bool plus) {
  MinorantCheck check{std::move(label), from, to, expected, 0.0, true};
  const double direction = expected == Monotonicity::increasing ? 1.0 : -1.0;
  double prev = profile(s, k, from, plus);
  for (int i = 1; i < monotonicity_points; ++i) {
    const double c = from + (to - from) * i / (monotonicity_points - 1);
    const double cur = profile(s, k, c, plus);
    check.worst_step = std::min(check.worst_step, direction * (cur - prev));
    prev = cur;
  }
  check.passed = check.worst_step >= -tol::monotone;
  return check;
}

}  // namespace

double functional_value(const FunctionalSpec& spec, double c, complex x) {
  if (!(c >= 0.0 && c <= 2.0)) throw domain_error("functional_value: c must lie in [0, 2]");
  if (!(std::abs(x) <= 1.0 + tol::range)) throw domain_error("functional_value: |x| must not exceed 1");
  return Evaluator(spec)(c, x);
}

VerifyReport grid_optimize(const FunctionalSpec& spec, GridSize grid, double tolerance, int refine_iterations) {
  const auto t0 = std::chrono::steady_clock::now();
  if (grid.n_c < 2 || grid.n_r < 2 || grid.n_theta < 2) throw domain_error("grid_optimize: grid sizes must be >= 2");
  const Evaluator eval(spec);

  std::vector<complex> unit(static_cast<std::size_t>(grid.n_theta));
  for (int k = 0; k < grid.n_theta; ++k) unit[k] = std::polar(1.0, two_pi * k / grid.n_theta);

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  SearchPoint arg_lo;
  SearchPoint arg_hi;
  for (int i = 0; i < grid.n_c; ++i) {
    const double c = 2.0 * i / (grid.n_c - 1);
    for (int j = 0; j < grid.n_r; ++j) {
      const double r = static_cast<double>(j) / (grid.n_r - 1);
      for (int k = 0; k < grid.n_theta; ++k) {
        const double v = eval(c, r * unit[k]);
        if (v < lo) {
          lo = v;
          arg_lo = {c, r, two_pi * k / grid.n_theta};
        }
        if (v > hi) {
          hi = v;
          arg_hi = {c, r, two_pi * k / grid.n_theta};
        }
      }
    }
  }

  const std::array<double, 3> step{2.0 / (grid.n_c - 1), 1.0 / (grid.n_r - 1), two_pi / grid.n_theta};
  VerifyReport report;
  report.analytic = bound(spec.params, spec.which);
  report.grid = grid;
  report.grid_min = lo;
  report.grid_max = hi;
  report.argmin = refine(eval, arg_lo, step, 1.0, refine_iterations);
  report.argmax = refine(eval, arg_hi, step, -1.0, refine_iterations);
  report.numeric_min = eval(report.argmin);
  report.numeric_max = eval(report.argmax);
  report.residual_min = std::abs(report.numeric_min - report.analytic.lower);
  report.residual_max = std::abs(report.numeric_max - report.analytic.upper);
  report.tolerance = tolerance;
  report.passed = report.residual_min <= tolerance && report.residual_max <= tolerance;
  report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

SampleReport sample_no_violation(const ClassParams& params, int n_samples, int n_atoms_max, std::uint64_t seed,
                                 std::size_t order) {
  if (n_samples < 1) throw domain_error("sample_no_violation: n_samples must be at least 1");
  if (n_atoms_max < 1) throw domain_error("sample_no_violation: n_atoms_max must be at least 1");
  if (order < 4) throw domain_error("sample_no_violation: order must be at least 4");

  SampleReport report;
  report.params = params;
  report.n_samples = n_samples;
  report.d1.analytic = bound_d1(params);
  report.d2.analytic = bound_d2(params);
  for (auto* stats : {&report.d1, &report.d2}) {
    stats->lowest.margin = std::numeric_limits<double>::infinity();
    stats->highest.margin = std::numeric_limits<double>::infinity();
  }

  std::mt19937_64 master(seed);
  for (int i = 0; i < n_samples; ++i) {
    const int n_atoms = 1 + static_cast<int>(master() % static_cast<std::uint64_t>(n_atoms_max));
    const std::uint64_t rep_seed = master();
    try {
      const TruncatedSeries f = member_from_p(params, to_series(random_rep(n_atoms, rep_seed), order));
      for (auto [stats, which] : {std::pair{&report.d1, Functional::d1}, std::pair{&report.d2, Functional::d2}}) {
        const double v = functional_of(f, which);
        const double below = v - stats->analytic.lower;
        const double above = stats->analytic.upper - v;
        if (below < stats->lowest.margin) stats->lowest = {v, below, i};
        if (above < stats->highest.margin) stats->highest = {v, above, i};
        if (below < -tol::bound_slack || above < -tol::bound_slack) ++stats->violations;
      }
    } catch (const std::exception& e) {
      ++report.construction_failures;
      report.failure_messages.push_back("sample " + std::to_string(i) + ": " + e.what());
    }
  }
  return report;
}

double analytic_argmin_c(const ClassParams& params) { return lower_d2_target(params).c; }

bool CaseBoundaryReport::passed() const noexcept {
  if (!argmin_passed || minorants.empty()) return false;
  return std::all_of(minorants.begin(), minorants.end(), [](const MinorantCheck& m) { return m.passed; });
}

CaseBoundaryReport case_boundary_check(const FunctionalSpec& spec, GridSize grid) {
  CaseBoundaryReport report;
  report.spec = spec;
  if (spec.which != Functional::d2) {
    report.note = "case analysis exists only for |a3| - |a2|";
    return report;
  }
  const ClassParams& p = spec.params;
  p.validate();
  report.analytic_argmin_c = analytic_argmin_c(p);

  switch (p.family) {
    case Family::spirallike:
    case Family::convex_gamma: {
      const double s = t_factor(p.alpha, p.gamma) + 1.0;
      const double k = p.family == Family::spirallike ? 4.0 : 6.0;
      const double c_star = 2.0 / std::sqrt(s);
      report.minorants.push_back(
          check_minorant("case 2: -c^2(T+1)+4-kc", 0.0, c_star, Monotonicity::decreasing, s, k, false));
      report.minorants.push_back(
          check_minorant("case 1: c^2(T+1)-4-kc", c_star, 2.0, Monotonicity::increasing, s, k, true));
      break;
    }
    case Family::ozaki_g: {
      const double l = p.lambda;
      const double s = 2.0 - l;
      const double c0 = 2.0 / std::sqrt(s);
      const double vertex = 3.0 / s;
      report.minorants.push_back(
          check_minorant("case 1: -c^2(2-l)+4-6c", 0.0, c0, Monotonicity::decreasing, s, 6.0, false));
      report.minorants.push_back(check_minorant("case 2: c^2(2-l)-4-6c", c0, std::min(vertex, 2.0),
                                                Monotonicity::decreasing, s, 6.0, true));
      if (l <= 0.5 && vertex < 2.0) {
        report.minorants.push_back(
            check_minorant("case 2(a): c^2(2-l)-4-6c", vertex, 2.0, Monotonicity::increasing, s, 6.0, true));
      }
      if (l >= 0.5) {
        report.minorants.push_back(
            check_minorant("case 2(b): c^2(2-l)-4-6c", c0, 2.0, Monotonicity::decreasing, s, 6.0, true));
      }
      break;
    }
  }

  const VerifyReport opt = grid_optimize(spec, grid);
  report.numeric_argmin_c = opt.argmin.c;
  report.c_resolution = 2.0 / (grid.n_c - 1);
  report.argmin_passed = std::abs(report.numeric_argmin_c - report.analytic_argmin_c) <= report.c_resolution;
  return report;
}

}  // namespace succoef
