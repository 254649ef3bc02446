#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "succoef/caratheodory.hpp"
#include "succoef/classes.hpp"
#include "succoef/series.hpp"

namespace succoef {

/// D1 = |a2| - |a1|, D2 = |a3| - |a2|.
enum class Functional { d1, d2 };

std::string_view to_string(Functional which) noexcept;

enum class ExtremalName {
  k,         // z/(1 - z)^{2(1-alpha)mu}
  h,         // z/(1 - z^2)^{(1-alpha)mu}
  l,         // z l' = k
  q,         // z q' = h
  f_spiral,  // z/[(1 - e1 z)^{g1}(1 - e2 z)^{g2}]^{2(1-alpha)mu}
  g_convex,  // z g' = f_spiral
  g_ozaki,   // ((1 + z)^{1+lambda} - 1)/(1 + lambda)
  h_ozaki,   // Int_0^z (1 - t^2)^{lambda/2} dt
  f_ozaki,   // Int_0^z [(1 - e1 t)^{g1}(1 - e2 t)^{g2}]^lambda dt
};

std::string_view to_string(ExtremalName name) noexcept;

/// Names a class member attaining one endpoint of a sharp bound. The
/// two-atom extremals carry the Herglotz representation of their p.
struct ExtremalDescriptor {
  ExtremalName name;
  ClassParams params;
  std::optional<AtomicHerglotzRep> rep;
};

struct BoundInterval {
  double lower;
  double upper;
  ExtremalDescriptor lower_extremal;
  ExtremalDescriptor upper_extremal;
};

/// Parameters (c, x) of the Libera-Zlotkiewicz representation at which the lower
/// D2 bound is attained.
struct TwoAtomTarget {
  double c;
  complex x;
};

/// T(alpha, gamma) = sqrt(1 + 4(1 - alpha)(2 - alpha) cos^2 gamma), in (1, 3].
double t_factor(double alpha, double gamma);

/// Sharp interval for |a2| - |a1|.
BoundInterval bound_d1(const ClassParams& params);

/// Sharp interval for |a3| - |a2|. Builds the two-atom lower extremal.
BoundInterval bound_d2(const ClassParams& params);

BoundInterval bound(const ClassParams& params, Functional which);

/// (c*, x*) of the lower D2 extremal:
///   spirallike/convex: c = 2/sqrt(1 + T), x = -(1 + 2(1-alpha)cos^2 gamma + i(1-alpha) sin 2 gamma)/T
///   ozaki: x = -1, c = 3/(2 - lambda) for lambda <= 1/2 and c = 2 above.
TwoAtomTarget lower_d2_target(const ClassParams& params);

/// Representation for the target: the two-atom solve, or the single atom at 1 when c = 2.
AtomicHerglotzRep lower_d2_rep(const ClassParams& params);

/// Descriptor with its representation filled in when the name needs one.
ExtremalDescriptor make_extremal(ExtremalName name, const ClassParams& params);

/// Every extremal relevant to the family, in catalog order.
std::vector<ExtremalDescriptor> catalog(const ClassParams& params);

/// Taylor series of the extremal function (order >= 4).
TruncatedSeries extremal_series(const ExtremalDescriptor& desc, std::size_t order);

/// |a2| - |a1| or |a3| - |a2| of a normalized series.
double functional_of(const TruncatedSeries& f, Functional which);

/// Functional value of the extremal's series at the given order.
double attainment(const ExtremalDescriptor& desc, Functional which, std::size_t order = 8);

/// Interval endpoint an extremal is meant to attain for `which`, if any.
std::optional<double> target_endpoint(const ExtremalDescriptor& desc, Functional which);

}  // namespace succoef
