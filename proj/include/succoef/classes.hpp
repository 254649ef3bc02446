#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "succoef/series.hpp"

namespace succoef {

enum class Family {
  spirallike,    // S_gamma(alpha): Re(e^{-i gamma} z f'/f) > alpha cos gamma
  convex_gamma,  // C_gamma(alpha): Re(e^{-i gamma}(1 + z f''/f')) > alpha cos gamma
  ozaki_g,       // G(lambda): Re(1 + z f''/f') < 1 + lambda/2
};

std::string_view to_string(Family family) noexcept;

/// Family tag with its parameters. alpha in [0, 1) and gamma in (-pi/2, pi/2)
/// apply to the spirallike and convex families; lambda in (0, 1] to G(lambda).
struct ClassParams {
  Family family = Family::spirallike;
  double alpha = 0.0;
  double gamma = 0.0;
  double lambda = 1.0;

  static ClassParams spirallike(double alpha, double gamma);
  static ClassParams convex(double alpha, double gamma);
  static ClassParams ozaki(double lambda);

  /// Throws domain_error when a range is violated.
  void validate() const;
};

/// mu = e^{i gamma} cos gamma.
struct Mu {
  complex value;

  static Mu from_gamma(double gamma);
};

struct CoeffTriple {
  complex a1{1.0, 0.0};
  complex a2;
  complex a3;
};

/// f(z) = z exp{(1 - alpha) mu Int_0^z (p(t) - 1)/t dt}.
TruncatedSeries spirallike_from_p(const TruncatedSeries& p, double alpha, double gamma);

/// f with z f' = spirallike_from_p(p, alpha, gamma).
TruncatedSeries convex_from_p(const TruncatedSeries& p, double alpha, double gamma);

/// f' = exp{-(lambda/2) Int_0^z (p(t) - 1)/t dt}, f(0) = 0.
///
/// The sign matches p = (lambda - 2 z f''/f')/lambda, so a2 = -lambda c1 / 4.
TruncatedSeries gclass_from_p(const TruncatedSeries& p, double lambda);

/// Class member built from Caratheodory data according to params.family.
TruncatedSeries member_from_p(const ClassParams& params, const TruncatedSeries& p);

/// f with z f' = g, i.e. a_n(f) = a_n(g)/n.
TruncatedSeries alexander_inverse(const TruncatedSeries& g);

/// e^{-i theta} f(e^{i theta} z); every |a_n| is unchanged.
TruncatedSeries rotate(const TruncatedSeries& f, double theta);

/// (a2, a3) as polynomials in (c1, c2) for the family.
CoeffTriple coeffs_from_c(const ClassParams& params, complex c1, complex c2);

/// (a1, a2, a3) read off a series; a1 is taken as stored.
CoeffTriple extract_coeffs(const TruncatedSeries& f);

struct MembershipResult {
  bool passed = true;
  double worst_margin = 0.0;
  complex worst_point;
};

/// Default sampling radii.
inline constexpr double default_radii[] = {0.3, 0.6, 0.9};
inline constexpr int default_angles = 64;

/// Samples the defining real-part condition of the class on a polar grid.
///
/// The margin is the slack of the strict inequality (positive inside the
/// class); passed means every margin exceeds tol::membership. Evaluation
/// uses the truncated polynomial, so the order of f must be high enough for
/// the largest radius (tail ~ r^N). Throws evaluation_error if f or f'
/// vanishes at a sample point and domain_error if f is not normalized.
MembershipResult membership_check(const TruncatedSeries& f, const ClassParams& params,
                                  std::span<const double> radii = default_radii,
                                  int n_angles = default_angles);

}  // namespace succoef
