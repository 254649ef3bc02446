#include "succoef/classes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "succoef/errors.hpp"
#include "succoef/tolerances.hpp"

namespace succoef {

namespace {

// Necessary conditions for p to be Caratheodory: |c_k| <= 2 and Re p > 0 on
// |z| = 1/4, where the truncation tail is below the Harnack margin 3/5.
void validate_caratheodory(const TruncatedSeries& p, const char* op) {
  if (std::abs(p[0] - 1.0) > tol::constant_term) {
    throw domain_error(std::string(op) + ": p(0) must be 1");
  }
  for (std::size_t k = 1; k <= p.order(); ++k) {
    if (std::abs(p[k]) > 2.0 + 1e-9) {
      throw domain_error(std::string(op) + ": |c_" + std::to_string(k) + "| exceeds 2");
    }
  }
  constexpr int n = 32;
  for (int j = 0; j < n; ++j) {
    const complex z = std::polar(0.25, 2.0 * std::numbers::pi * j / n);
    if (!(eval(p, z).real() > 0.0)) throw domain_error(std::string(op) + ": Re p is not positive");
  }
}

void check_alpha_gamma(double alpha, double gamma) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw domain_error("alpha must lie in [0, 1)");
  if (!(std::abs(gamma) < std::numbers::pi / 2)) throw domain_error("gamma must lie in (-pi/2, pi/2)");
}

void check_lambda(double lambda) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw domain_error("lambda must lie in (0, 1]");
}

}  // namespace

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::spirallike: return "spirallike";
    case Family::convex_gamma: return "convex";
    case Family::ozaki_g: return "ozaki";
  }
  return "unknown";
}

ClassParams ClassParams::spirallike(double alpha, double gamma) {
  ClassParams p{Family::spirallike, alpha, gamma, 1.0};
  p.validate();
  return p;
}

ClassParams ClassParams::convex(double alpha, double gamma) {
  ClassParams p{Family::convex_gamma, alpha, gamma, 1.0};
  p.validate();
  return p;
}

ClassParams ClassParams::ozaki(double lambda) {
  ClassParams p{Family::ozaki_g, 0.0, 0.0, lambda};
  p.validate();
  return p;
}

void ClassParams::validate() const {
  switch (family) {
    case Family::spirallike:
    case Family::convex_gamma: check_alpha_gamma(alpha, gamma); return;
    case Family::ozaki_g: check_lambda(lambda); return;
  }
  throw domain_error("unknown family");
}

Mu Mu::from_gamma(double gamma) { return {std::polar(std::cos(gamma), gamma)}; }

TruncatedSeries spirallike_from_p(const TruncatedSeries& p, double alpha, double gamma) {
  check_alpha_gamma(alpha, gamma);
  validate_caratheodory(p, "spirallike_from_p");
  const complex w = (1.0 - alpha) * Mu::from_gamma(gamma).value;
  return shift_up(exp_series(w * integrate_kernel(p)));
}

TruncatedSeries convex_from_p(const TruncatedSeries& p, double alpha, double gamma) {
  return alexander_inverse(spirallike_from_p(p, alpha, gamma));
}

TruncatedSeries gclass_from_p(const TruncatedSeries& p, double lambda) {
  check_lambda(lambda);
  validate_caratheodory(p, "gclass_from_p");
  return antiderivative(exp_series(-lambda / 2.0 * integrate_kernel(p)));
}

TruncatedSeries member_from_p(const ClassParams& params, const TruncatedSeries& p) {
  switch (params.family) {
    case Family::spirallike: return spirallike_from_p(p, params.alpha, params.gamma);
    case Family::convex_gamma: return convex_from_p(p, params.alpha, params.gamma);
    case Family::ozaki_g: return gclass_from_p(p, params.lambda);
  }
  throw domain_error("member_from_p: unknown family");
}

TruncatedSeries alexander_inverse(const TruncatedSeries& g) {
  std::vector<complex> out(g.order() + 1);
  for (std::size_t n = 1; n < out.size(); ++n) out[n] = g[n] / static_cast<double>(n);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries rotate(const TruncatedSeries& f, double theta) {
  std::vector<complex> out(f.order() + 1);
  for (std::size_t n = 0; n < out.size(); ++n) {
    out[n] = f[n] * std::polar(1.0, (static_cast<double>(n) - 1.0) * theta);
  }
  return TruncatedSeries(std::move(out));
}

CoeffTriple coeffs_from_c(const ClassParams& params, complex c1, complex c2) {
  if (std::abs(c1) > 2.0 + tol::range || std::abs(c2) > 2.0 + tol::range) {
    throw domain_error("coeffs_from_c: |c1| and |c2| must not exceed 2");
  }
  params.validate();
  switch (params.family) {
    case Family::spirallike: {
      const complex w = (1.0 - params.alpha) * Mu::from_gamma(params.gamma).value;
      return {1.0, w * c1, (w * w * c1 * c1 + w * c2) / 2.0};
    }
    case Family::convex_gamma: {
      const complex w = (1.0 - params.alpha) * Mu::from_gamma(params.gamma).value;
      return {1.0, w * c1 / 2.0, (w * w * c1 * c1 + w * c2) / 6.0};
    }
    case Family::ozaki_g: {
      const double l = params.lambda;
      return {1.0, -l * c1 / 4.0, (l * l * c1 * c1 - 2.0 * l * c2) / 24.0};
    }
  }
  throw domain_error("coeffs_from_c: unknown family");
}

CoeffTriple extract_coeffs(const TruncatedSeries& f) { return {f[1], f[2], f[3]}; }

MembershipResult membership_check(const TruncatedSeries& f, const ClassParams& params,
                                  std::span<const double> radii, int n_angles) {
  params.validate();
  if (std::abs(f[0]) > tol::constant_term || std::abs(f[1] - 1.0) > tol::constant_term) {
    throw domain_error("membership_check: f must satisfy f(0) = 0, f'(0) = 1");
  }
  if (n_angles < 1) throw domain_error("membership_check: n_angles must be positive");
  for (double r : radii) {
    if (!(r > 0.0 && r < 1.0)) throw domain_error("membership_check: radii must lie in (0, 1)");
  }

  const complex rot = std::polar(1.0, -params.gamma);
  const double cos_gamma = std::cos(params.gamma);
  MembershipResult result{true, std::numeric_limits<double>::infinity(), {}};
  for (double r : radii) {
    for (int j = 0; j < n_angles; ++j) {
      const complex z = std::polar(r, 2.0 * std::numbers::pi * j / n_angles);
      const complex fp = eval_derivative(f, z);
      if (std::abs(fp) < tol::vanishing) throw evaluation_error("membership_check: f' vanishes at a sample point");
      double margin = 0.0;
      switch (params.family) {
        case Family::spirallike: {
          const complex fz = eval(f, z);
          if (std::abs(fz) < tol::vanishing) throw evaluation_error("membership_check: f vanishes at a sample point");
          margin = (rot * z * fp / fz).real() - params.alpha * cos_gamma;
          break;
        }
        case Family::convex_gamma: {
          const complex q = 1.0 + z * eval_second_derivative(f, z) / fp;
          margin = (rot * q).real() - params.alpha * cos_gamma;
          break;
        }
        case Family::ozaki_g: {
          const complex q = 1.0 + z * eval_second_derivative(f, z) / fp;
          margin = 1.0 + params.lambda / 2.0 - q.real();
          break;
        }
      }
      if (margin < result.worst_margin) {
        result.worst_margin = margin;
        result.worst_point = z;
      }
    }
  }
  result.passed = result.worst_margin > tol::membership;
  return result;
}

}  // namespace succoef
