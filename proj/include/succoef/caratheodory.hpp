#pragma once

#include <cstdint>
#include <vector>

#include "succoef/series.hpp"

namespace succoef {

/// One Herglotz kernel weight(1 + point z)/(1 - point z) with |point| = 1.
struct Atom {
  double weight;
  complex point;
};

/// Finite convex combination of Herglotz kernels,
///   p(z) = sum_j weight_j (1 + point_j z)/(1 - point_j z),
/// the canonical representation of a Caratheodory function with atomic measure.
/// Weights lie in (0, 1] and sum to 1; points are unimodular.
class AtomicHerglotzRep {
 public:
  explicit AtomicHerglotzRep(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }

  /// The rotated function p(e^{i angle} z): every point multiplied by e^{i angle}.
  AtomicHerglotzRep rotated(double angle) const;

 private:
  std::vector<Atom> atoms_;
};

/// Libera-Zlotkiewicz parameters of (c1, c2, c3) with c1 = c rotated onto [0, 2].
struct LZParams {
  double c;
  complex x;
  complex y;
};

/// c2 = (c^2 + (4 - c^2) x) / 2.
complex lz_c2(double c, complex x);

/// c3 = (c^3 + 2(4 - c^2) c x - (4 - c^2) c x^2 + 2(4 - c^2)(1 - |x|^2) y) / 4.
complex lz_c3(double c, complex x, complex y);

/// Recover (x, y) from (c, c2, c3) with c in [0, 2).
///
/// y is free whenever |x| = 1 (the y term drops out); it is reported as 0 there.
/// x and y are projected onto the closed disk against rounding; |x| beyond
/// 1 + 1e-9 max(1, 4/(4 - c^2)) throws domain_error.
LZParams lz_invert(double c, complex c2, complex c3);

/// c_1 .. c_{k_max} with c_k = 2 sum_j weight_j point_j^k.
std::vector<complex> moments(const AtomicHerglotzRep& rep, int k_max);

/// 1 + sum_k c_k z^k up to the given order.
TruncatedSeries to_series(const AtomicHerglotzRep& rep, std::size_t order);

/// Two-atom representation with moments c1 = c and c2 = (c^2 + (4 - c^2) x) / 2.
///
/// Exists exactly on the Toeplitz boundary |x| = 1 with 0 <= c < 2. Throws
/// degenerate_error for c = 2 (a single atom at 1) and infeasible_error when no
/// two atoms reproduce the moments to tol::two_atom_residual. Atoms are returned
/// sorted by argument in [0, 2 pi).
AtomicHerglotzRep solve_two_atom(double c, complex x);

/// Largest moment residual max(|m1 - c/2|, |m2 - (c^2 + (4 - c^2)x)/4|) of a rep.
double two_atom_residual(const AtomicHerglotzRep& rep, double c, complex x);

/// Seeded random rep: Dirichlet(1) weights, points uniform on the circle.
AtomicHerglotzRep random_rep(int n_atoms, std::uint64_t seed);

}  // namespace succoef
