#include "succoef/caratheodory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "succoef/errors.hpp"
#include "succoef/tolerances.hpp"

namespace succoef {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void check_c(double c, const char* op) {
  if (!(c >= -tol::range && c <= 2.0 + tol::range)) {
    throw domain_error(std::string(op) + ": c must lie in [0, 2]");
  }
}

void check_disk(complex v, const char* name, const char* op) {
  if (!(std::abs(v) <= 1.0 + tol::range)) {
    throw domain_error(std::string(op) + ": |" + name + "| must not exceed 1");
  }
}

double principal_arg(complex z) {
  double a = std::arg(z);
  if (a < 0) a += two_pi;
  if (a >= two_pi) a -= two_pi;
  return a;
}

// Unknowns (theta1, theta2, g): atoms g e^{i theta1} and (1 - g) e^{i theta2}.
struct TwoAtomState {
  double theta1;
  double theta2;
  double g;
};

Eigen::Vector4d residual_vector(const TwoAtomState& s, complex m1, complex m2) {
  const complex e1 = std::polar(1.0, s.theta1);
  const complex e2 = std::polar(1.0, s.theta2);
  const complex r1 = s.g * e1 + (1.0 - s.g) * e2 - m1;
  const complex r2 = s.g * e1 * e1 + (1.0 - s.g) * e2 * e2 - m2;
  return {r1.real(), r1.imag(), r2.real(), r2.imag()};
}

Eigen::Matrix<double, 4, 3> jacobian(const TwoAtomState& s) {
  const complex i{0.0, 1.0};
  const complex e1 = std::polar(1.0, s.theta1);
  const complex e2 = std::polar(1.0, s.theta2);
  const std::array<complex, 3> d1{s.g * i * e1, (1.0 - s.g) * i * e2, e1 - e2};
  const std::array<complex, 3> d2{2.0 * s.g * i * e1 * e1, 2.0 * (1.0 - s.g) * i * e2 * e2,
                                  e1 * e1 - e2 * e2};
  Eigen::Matrix<double, 4, 3> j;
  for (int col = 0; col < 3; ++col) {
    j(0, col) = d1[col].real();
    j(1, col) = d1[col].imag();
    j(2, col) = d2[col].real();
    j(3, col) = d2[col].imag();
  }
  return j;
}

// Levenberg-Marquardt on the four real moment equations in three unknowns.
TwoAtomState levenberg_marquardt(TwoAtomState s, complex m1, complex m2) {
  double damping = 1e-3;
  Eigen::Vector4d r = residual_vector(s, m1, m2);
  double cost = r.squaredNorm();
  for (int iter = 0; iter < 200 && cost > 1e-32; ++iter) {
    const auto j = jacobian(s);
    const Eigen::Matrix3d jtj = j.transpose() * j;
    const Eigen::Vector3d grad = j.transpose() * r;
    bool improved = false;
    for (int attempt = 0; attempt < 30; ++attempt) {
      Eigen::Matrix3d lhs = jtj;
      lhs.diagonal() += damping * (jtj.diagonal().array() + 1e-12).matrix();
      const Eigen::Vector3d step = lhs.ldlt().solve(-grad);
      TwoAtomState trial{s.theta1 + step(0), s.theta2 + step(1), std::clamp(s.g + step(2), 0.0, 1.0)};
      const Eigen::Vector4d r_trial = residual_vector(trial, m1, m2);
      const double cost_trial = r_trial.squaredNorm();
      if (cost_trial < cost) {
        s = trial;
        r = r_trial;
        cost = cost_trial;
        damping = std::max(damping * 0.3, 1e-15);
        improved = true;
        break;
      }
      damping *= 10.0;
    }
    if (!improved) break;
  }
  return s;
}

// Closed-form candidate: for a two-point measure the points are the roots of
// z^2 - s z + q with q = (m1^2 - m2)/(1 - |m1|^2) and s = m1 + q conj(m1).
bool prony_start(complex m1, complex m2, TwoAtomState& out) {
  const double denom = 1.0 - std::norm(m1);
  if (denom <= 1e-14) return false;
  const complex q = (m1 * m1 - m2) / denom;
  const complex s = m1 + q * std::conj(m1);
  const complex disc = std::sqrt(s * s - 4.0 * q);
  const complex e1 = (s + disc) / 2.0;
  const complex e2 = (s - disc) / 2.0;
  if (std::abs(e1 - e2) < 1e-12) return false;
  const double g = ((m1 - e2) / (e1 - e2)).real();
  out = {std::arg(e1), std::arg(e2), std::clamp(g, 0.0, 1.0)};
  return true;
}

}  // namespace

AtomicHerglotzRep::AtomicHerglotzRep(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw domain_error("AtomicHerglotzRep: no atoms");
  double total = 0.0;
  for (const auto& a : atoms_) {
    if (!(a.weight > 0.0 && a.weight <= 1.0 + tol::atom)) {
      throw domain_error("AtomicHerglotzRep: weight outside (0, 1]");
    }
    if (!(std::abs(std::abs(a.point) - 1.0) <= tol::atom)) {
      throw domain_error("AtomicHerglotzRep: point off the unit circle");
    }
    total += a.weight;
  }
  if (std::abs(total - 1.0) > tol::atom) throw domain_error("AtomicHerglotzRep: weights do not sum to 1");
}

AtomicHerglotzRep AtomicHerglotzRep::rotated(double angle) const {
  std::vector<Atom> out = atoms_;
  const complex factor = std::polar(1.0, angle);
  for (auto& a : out) a.point *= factor;
  return AtomicHerglotzRep(std::move(out));
}

complex lz_c2(double c, complex x) {
  check_c(c, "lz_c2");
  check_disk(x, "x", "lz_c2");
  return (c * c + (4.0 - c * c) * x) / 2.0;
}

complex lz_c3(double c, complex x, complex y) {
  check_c(c, "lz_c3");
  check_disk(x, "x", "lz_c3");
  check_disk(y, "y", "lz_c3");
  const double w = 4.0 - c * c;
  return (c * c * c + 2.0 * w * c * x - w * c * x * x + 2.0 * w * (1.0 - std::norm(x)) * y) / 4.0;
}

LZParams lz_invert(double c, complex c2, complex c3) {
  check_c(c, "lz_invert");
  const double w = 4.0 - c * c;
  if (w <= tol::range) throw degenerate_error("lz_invert: c = 2 leaves x undetermined");
  complex x = (2.0 * c2 - c * c) / w;
  // Rounding in c2 is amplified by 1/(4 - c^2); the excess allowed here keeps
  // the implied c2 error near 1e-9.
  if (std::abs(x) > 1.0 + 1e-9 * std::max(1.0, 4.0 / w)) {
    throw domain_error("lz_invert: (c, c2) is not Caratheodory data");
  }
  if (std::abs(x) > 1.0) x /= std::abs(x);
  const double slack = 1.0 - std::norm(x);
  complex y{};
  if (slack > 1e-9) {
    y = (4.0 * c3 - c * c * c - 2.0 * w * c * x + w * c * x * x) / (2.0 * w * slack);
    if (std::abs(y) > 1.0) y /= std::abs(y);
  }
  return {c, x, y};
}

std::vector<complex> moments(const AtomicHerglotzRep& rep, int k_max) {
  std::vector<complex> out(static_cast<std::size_t>(std::max(k_max, 0)));
  for (const auto& a : rep.atoms()) {
    complex power = 1.0;
    for (auto& ck : out) {
      power *= a.point;
      ck += 2.0 * a.weight * power;
    }
  }
  return out;
}

TruncatedSeries to_series(const AtomicHerglotzRep& rep, std::size_t order) {
  const auto c = moments(rep, static_cast<int>(order));
  std::vector<complex> coeffs(order + 1);
  coeffs[0] = 1.0;
  std::copy(c.begin(), c.end(), coeffs.begin() + 1);
  return TruncatedSeries(std::move(coeffs));
}

double two_atom_residual(const AtomicHerglotzRep& rep, double c, complex x) {
  const complex m1_target = c / 2.0;
  const complex m2_target = (c * c + (4.0 - c * c) * x) / 4.0;
  complex m1{};
  complex m2{};
  for (const auto& a : rep.atoms()) {
    m1 += a.weight * a.point;
    m2 += a.weight * a.point * a.point;
  }
  return std::max(std::abs(m1 - m1_target), std::abs(m2 - m2_target));
}

AtomicHerglotzRep solve_two_atom(double c, complex x) {
  check_c(c, "solve_two_atom");
  check_disk(x, "x", "solve_two_atom");
  if (c >= 2.0 - tol::range) throw degenerate_error("solve_two_atom: c = 2 is the single atom at 1");

  const complex m1 = c / 2.0;
  const complex m2 = (c * c + (4.0 - c * c) * x) / 4.0;

  std::vector<TwoAtomState> starts;
  if (TwoAtomState s{}; prony_start(m1, m2, s)) starts.push_back(s);
  for (int a = 0; a < 8; ++a) {
    for (int b = 1; b < 4; ++b) {
      const double t1 = a * two_pi / 8.0;
      starts.push_back({t1, t1 + b * two_pi / 4.0, 0.5});
    }
  }

  double best_res = std::numeric_limits<double>::infinity();
  std::optional<AtomicHerglotzRep> best;
  for (const auto& start : starts) {
    const TwoAtomState s = levenberg_marquardt(start, m1, m2);
    if (!(s.g > 0.0 && s.g < 1.0)) continue;
    const complex e1 = std::polar(1.0, s.theta1);
    const complex e2 = std::polar(1.0, s.theta2);
    if (std::abs(e1 - e2) < 1e-9) continue;
    std::vector<Atom> atoms{{s.g, e1}, {1.0 - s.g, e2}};
    std::sort(atoms.begin(), atoms.end(),
              [](const Atom& l, const Atom& r) { return principal_arg(l.point) < principal_arg(r.point); });
    AtomicHerglotzRep rep(std::move(atoms));
    const double res = two_atom_residual(rep, c, x);
    if (res < best_res) {
      best_res = res;
      best = std::move(rep);
    }
    if (best_res < 1e-14) break;
  }
  if (!best || best_res >= tol::two_atom_residual) {
    throw infeasible_error("solve_two_atom: no two-atom representation (|x| must be 1), residual " +
                           std::to_string(best_res));
  }
  return *best;
}

AtomicHerglotzRep random_rep(int n_atoms, std::uint64_t seed) {
  if (n_atoms < 1) throw domain_error("random_rep: n_atoms must be at least 1");
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> weight_dist(1.0);
  std::uniform_real_distribution<double> angle_dist(0.0, two_pi);
  std::vector<Atom> atoms(static_cast<std::size_t>(n_atoms));
  double total = 0.0;
  for (auto& a : atoms) {
    do {
      a.weight = weight_dist(rng);
    } while (!(a.weight > 0.0));
    total += a.weight;
    a.point = std::polar(1.0, angle_dist(rng));
  }
  for (auto& a : atoms) a.weight /= total;
  return AtomicHerglotzRep(std::move(atoms));
}

}  // namespace succoef
