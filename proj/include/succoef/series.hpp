#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace succoef {

using complex = std::complex<double>;

/// Default truncation order for function constructions.
inline constexpr std::size_t default_order = 12;

/// Taylor jet a_0 + a_1 z + ... + a_N z^N of a function analytic on the unit disk.
///
/// Products and compositions drop every coefficient above N; that is ordinary
/// jet arithmetic and never reported as an error. Coefficients are always
/// finite; constructing or producing a NaN/Inf raises succoef::domain_error.
class TruncatedSeries {
 public:
  /// Zero series of the given order (order >= 1).
  explicit TruncatedSeries(std::size_t order);

  /// Series with coeffs[k] the coefficient of z^k; order = coeffs.size() - 1.
  explicit TruncatedSeries(std::vector<complex> coeffs);

  static TruncatedSeries constant(complex value, std::size_t order);

  /// The identity function z.
  static TruncatedSeries identity(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const complex> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of z^k; zero for k > order.
  complex operator[](std::size_t k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : complex{};
  }

  TruncatedSeries& operator*=(complex scalar);
  TruncatedSeries operator-() const;

  friend TruncatedSeries operator*(complex scalar, TruncatedSeries f) {
    f *= scalar;
    return f;
  }
  friend TruncatedSeries operator*(TruncatedSeries f, complex scalar) {
    f *= scalar;
    return f;
  }

 private:
  std::vector<complex> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g);

/// Cauchy product truncated at the common order.
TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g);

inline TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) { return add(f, g); }
inline TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) { return sub(f, g); }
inline TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) { return mul(f, g); }

/// exp(f) for f(0) = 0, from (exp f)' = f' exp f.
TruncatedSeries exp_series(const TruncatedSeries& f);

/// Principal log(f) for f(0) = 1, from (log f)' = f'/f.
TruncatedSeries log_series(const TruncatedSeries& f);

/// f^w = exp(w log f) on the principal branch; requires f(0) = 1.
TruncatedSeries pow_complex(const TruncatedSeries& f, complex w);

/// Integral from 0 to z of (p(t) - 1)/t dt; requires p(0) = 1.
TruncatedSeries integrate_kernel(const TruncatedSeries& p);

/// g with g(0) = 0 and g' = f. The top coefficient f_N falls off the jet.
TruncatedSeries antiderivative(const TruncatedSeries& f);

/// f'. The result keeps order N with a zero top coefficient.
TruncatedSeries derivative(const TruncatedSeries& f);

/// z * f, truncated.
TruncatedSeries shift_up(const TruncatedSeries& f);

/// Same function at a different truncation order (zero padded or truncated).
TruncatedSeries with_order(const TruncatedSeries& f, std::size_t order);

/// Horner evaluation of the truncated polynomial.
complex eval(const TruncatedSeries& f, complex z) noexcept;

/// f'(z) evaluated directly from the coefficients.
complex eval_derivative(const TruncatedSeries& f, complex z) noexcept;

/// f''(z) evaluated directly from the coefficients.
complex eval_second_derivative(const TruncatedSeries& f, complex z) noexcept;

}  // namespace succoef
