#include "succoef/bounds.hpp"

#include <cmath>
#include <utility>

#include "succoef/errors.hpp"
#include "succoef/tolerances.hpp"

namespace succoef {

namespace {

struct Endpoints {
  double lower;
  double upper;
};

Endpoints d1_endpoints(const ClassParams& p) {
  switch (p.family) {
    case Family::spirallike: return {-1.0, 2.0 * (1.0 - p.alpha) * std::cos(p.gamma) - 1.0};
    case Family::convex_gamma: return {-1.0, (1.0 - p.alpha) * std::cos(p.gamma) - 1.0};
    case Family::ozaki_g: return {-1.0, p.lambda / 2.0 - 1.0};
  }
  throw domain_error("bound_d1: unknown family");
}

Endpoints d2_endpoints(const ClassParams& p) {
  switch (p.family) {
    case Family::spirallike: {
      const double scale = (1.0 - p.alpha) * std::cos(p.gamma);
      return {-2.0 * scale / std::sqrt(1.0 + t_factor(p.alpha, p.gamma)), scale};
    }
    case Family::convex_gamma: {
      const double scale = (1.0 - p.alpha) * std::cos(p.gamma);
      return {-scale / std::sqrt(1.0 + t_factor(p.alpha, p.gamma)), scale / 3.0};
    }
    case Family::ozaki_g: {
      const double l = p.lambda;
      const double lower = l <= 0.5 ? l * (4.0 * l - 17.0) / (24.0 * (2.0 - l)) : -l * (l + 2.0) / 6.0;
      return {lower, l / 6.0};
    }
  }
  throw domain_error("bound_d2: unknown family");
}

bool needs_rep(ExtremalName name) {
  return name == ExtremalName::f_spiral || name == ExtremalName::g_convex || name == ExtremalName::f_ozaki;
}

complex spiral_weight(const ClassParams& p) { return (1.0 - p.alpha) * Mu::from_gamma(p.gamma).value; }

// prod_j (1 - e_j z)^{exponent * weight_j}
TruncatedSeries atom_product(const AtomicHerglotzRep& rep, complex exponent, std::size_t order) {
  TruncatedSeries out = TruncatedSeries::constant(1.0, order);
  for (const auto& a : rep.atoms()) {
    std::vector<complex> base(order + 1);
    base[0] = 1.0;
    base[1] = -a.point;
    out = out * pow_complex(TruncatedSeries(std::move(base)), exponent * a.weight);
  }
  return out;
}

TruncatedSeries binomial(complex sign_coeff, std::size_t power, std::size_t order) {
  // 1 + sign_coeff z^power
  std::vector<complex> base(order + 1);
  base[0] = 1.0;
  if (power <= order) base[power] = sign_coeff;
  return TruncatedSeries(std::move(base));
}

void require_family(const ClassParams& p, Family family, ExtremalName name) {
  if (p.family != family) {
    throw domain_error(std::string("extremal ") + std::string(to_string(name)) + " does not belong to family " +
                       std::string(to_string(p.family)));
  }
}

}  // namespace

std::string_view to_string(Functional which) noexcept { return which == Functional::d1 ? "D1" : "D2"; }

std::string_view to_string(ExtremalName name) noexcept {
  switch (name) {
    case ExtremalName::k: return "K";
    case ExtremalName::h: return "H";
    case ExtremalName::l: return "L";
    case ExtremalName::q: return "Q";
    case ExtremalName::f_spiral: return "F_SPIRAL";
    case ExtremalName::g_convex: return "G_CONVEX";
    case ExtremalName::g_ozaki: return "G_OZAKI";
    case ExtremalName::h_ozaki: return "H_OZAKI";
    case ExtremalName::f_ozaki: return "F_OZAKI";
  }
  return "?";
}

double t_factor(double alpha, double gamma) {
  const double cg = std::cos(gamma);
  return std::sqrt(1.0 + 4.0 * (1.0 - alpha) * (2.0 - alpha) * cg * cg);
}

BoundInterval bound_d1(const ClassParams& params) {
  params.validate();
  const auto [lo, hi] = d1_endpoints(params);
  switch (params.family) {
    case Family::spirallike:
      return {lo, hi, make_extremal(ExtremalName::h, params), make_extremal(ExtremalName::k, params)};
    case Family::convex_gamma:
      return {lo, hi, make_extremal(ExtremalName::q, params), make_extremal(ExtremalName::l, params)};
    case Family::ozaki_g:
      return {lo, hi, make_extremal(ExtremalName::h_ozaki, params), make_extremal(ExtremalName::g_ozaki, params)};
  }
  throw domain_error("bound_d1: unknown family");
}

BoundInterval bound_d2(const ClassParams& params) {
  params.validate();
  const auto [lo, hi] = d2_endpoints(params);
  switch (params.family) {
    case Family::spirallike:
      return {lo, hi, make_extremal(ExtremalName::f_spiral, params), make_extremal(ExtremalName::h, params)};
    case Family::convex_gamma:
      return {lo, hi, make_extremal(ExtremalName::g_convex, params), make_extremal(ExtremalName::q, params)};
    case Family::ozaki_g:
      return {lo, hi, make_extremal(ExtremalName::f_ozaki, params), make_extremal(ExtremalName::h_ozaki, params)};
  }
  throw domain_error("bound_d2: unknown family");
}

BoundInterval bound(const ClassParams& params, Functional which) {
  return which == Functional::d1 ? bound_d1(params) : bound_d2(params);
}

TwoAtomTarget lower_d2_target(const ClassParams& params) {
  params.validate();
  switch (params.family) {
    case Family::spirallike:
    case Family::convex_gamma: {
      const double t = t_factor(params.alpha, params.gamma);
      const double a = 1.0 - params.alpha;
      const double cg = std::cos(params.gamma);
      const complex x = -complex(1.0 + 2.0 * a * cg * cg, a * std::sin(2.0 * params.gamma)) / t;
      return {2.0 / std::sqrt(t + 1.0), x};
    }
    case Family::ozaki_g: {
      const double l = params.lambda;
      return {l <= 0.5 ? 3.0 / (2.0 - l) : 2.0, -1.0};
    }
  }
  throw domain_error("lower_d2_target: unknown family");
}

AtomicHerglotzRep lower_d2_rep(const ClassParams& params) {
  const TwoAtomTarget t = lower_d2_target(params);
  if (t.c >= 2.0 - tol::range) return AtomicHerglotzRep({{1.0, 1.0}});
  return solve_two_atom(t.c, t.x);
}

ExtremalDescriptor make_extremal(ExtremalName name, const ClassParams& params) {
  params.validate();
  ExtremalDescriptor desc{name, params, std::nullopt};
  if (needs_rep(name)) desc.rep = lower_d2_rep(params);
  return desc;
}

std::vector<ExtremalDescriptor> catalog(const ClassParams& params) {
  switch (params.family) {
    case Family::spirallike:
      return {make_extremal(ExtremalName::k, params), make_extremal(ExtremalName::h, params),
              make_extremal(ExtremalName::f_spiral, params)};
    case Family::convex_gamma:
      return {make_extremal(ExtremalName::l, params), make_extremal(ExtremalName::q, params),
              make_extremal(ExtremalName::g_convex, params)};
    case Family::ozaki_g:
      return {make_extremal(ExtremalName::g_ozaki, params), make_extremal(ExtremalName::h_ozaki, params),
              make_extremal(ExtremalName::f_ozaki, params)};
  }
  throw domain_error("catalog: unknown family");
}

TruncatedSeries extremal_series(const ExtremalDescriptor& desc, std::size_t order) {
  if (order < 4) throw domain_error("extremal_series: order must be at least 4");
  const ClassParams& p = desc.params;
  p.validate();
  if (needs_rep(desc.name) && !desc.rep) throw domain_error("extremal_series: missing representation");

  switch (desc.name) {
    case ExtremalName::k:
      require_family(p, Family::spirallike, desc.name);
      return shift_up(pow_complex(binomial(-1.0, 1, order), -2.0 * spiral_weight(p)));
    case ExtremalName::h:
      require_family(p, Family::spirallike, desc.name);
      return shift_up(pow_complex(binomial(-1.0, 2, order), -spiral_weight(p)));
    case ExtremalName::f_spiral:
      require_family(p, Family::spirallike, desc.name);
      return shift_up(atom_product(*desc.rep, -2.0 * spiral_weight(p), order));
    case ExtremalName::l: {
      require_family(p, Family::convex_gamma, desc.name);
      const ClassParams sp{Family::spirallike, p.alpha, p.gamma, p.lambda};
      return alexander_inverse(extremal_series({ExtremalName::k, sp, std::nullopt}, order));
    }
    case ExtremalName::q: {
      require_family(p, Family::convex_gamma, desc.name);
      const ClassParams sp{Family::spirallike, p.alpha, p.gamma, p.lambda};
      return alexander_inverse(extremal_series({ExtremalName::h, sp, std::nullopt}, order));
    }
    case ExtremalName::g_convex: {
      require_family(p, Family::convex_gamma, desc.name);
      const ClassParams sp{Family::spirallike, p.alpha, p.gamma, p.lambda};
      return alexander_inverse(extremal_series({ExtremalName::f_spiral, sp, desc.rep}, order));
    }
    case ExtremalName::g_ozaki:
      require_family(p, Family::ozaki_g, desc.name);
      return antiderivative(pow_complex(binomial(1.0, 1, order), p.lambda));
    case ExtremalName::h_ozaki:
      require_family(p, Family::ozaki_g, desc.name);
      return antiderivative(pow_complex(binomial(-1.0, 2, order), p.lambda / 2.0));
    case ExtremalName::f_ozaki:
      require_family(p, Family::ozaki_g, desc.name);
      return antiderivative(atom_product(*desc.rep, p.lambda, order));
  }
  throw domain_error("extremal_series: unsupported extremal");
}

double functional_of(const TruncatedSeries& f, Functional which) {
  return which == Functional::d1 ? std::abs(f[2]) - std::abs(f[1]) : std::abs(f[3]) - std::abs(f[2]);
}

double attainment(const ExtremalDescriptor& desc, Functional which, std::size_t order) {
  return functional_of(extremal_series(desc, order), which);
}

std::optional<double> target_endpoint(const ExtremalDescriptor& desc, Functional which) {
  const ClassParams& p = desc.params;
  if (which == Functional::d1) {
    const auto [lo, hi] = d1_endpoints(p);
    switch (desc.name) {
      case ExtremalName::k:
      case ExtremalName::l:
      case ExtremalName::g_ozaki: return hi;
      case ExtremalName::h:
      case ExtremalName::q:
      case ExtremalName::h_ozaki: return lo;
      default: return std::nullopt;
    }
  }
  const auto [lo, hi] = d2_endpoints(p);
  switch (desc.name) {
    case ExtremalName::h:
    case ExtremalName::q:
    case ExtremalName::h_ozaki: return hi;
    case ExtremalName::f_spiral:
    case ExtremalName::g_convex:
    case ExtremalName::f_ozaki: return lo;
    default: return std::nullopt;
  }
}

}  // namespace succoef
