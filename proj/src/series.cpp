#include "succoef/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "succoef/errors.hpp"
#include "succoef/tolerances.hpp"

namespace succoef {

namespace {

bool is_finite(complex v) noexcept { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

void require_same_order(const TruncatedSeries& f, const TruncatedSeries& g, const char* op) {
  if (f.order() != g.order()) {
    throw order_mismatch(std::string(op) + ": truncation orders differ (" + std::to_string(f.order()) +
                         " vs " + std::to_string(g.order()) + ")");
  }
}

void require_constant_term(const TruncatedSeries& f, complex expected, const char* op) {
  if (std::abs(f[0] - expected) > tol::constant_term) {
    throw domain_error(std::string(op) + ": constant term must be " +
                       (expected == complex{} ? "0" : "1"));
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {
  if (order == 0) throw domain_error("TruncatedSeries: order must be positive");
}

TruncatedSeries::TruncatedSeries(std::vector<complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw domain_error("TruncatedSeries: order must be positive");
  if (!std::all_of(coeffs_.begin(), coeffs_.end(), is_finite)) {
    throw domain_error("TruncatedSeries: non-finite coefficient");
  }
}

TruncatedSeries TruncatedSeries::constant(complex value, std::size_t order) {
  TruncatedSeries f(order);
  f.coeffs_[0] = value;
  if (!is_finite(value)) throw domain_error("TruncatedSeries: non-finite coefficient");
  return f;
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
  TruncatedSeries f(order);
  f.coeffs_[1] = 1.0;
  return f;
}

TruncatedSeries& TruncatedSeries::operator*=(complex scalar) {
  for (auto& a : coeffs_) a *= scalar;
  if (!std::all_of(coeffs_.begin(), coeffs_.end(), is_finite)) {
    throw domain_error("TruncatedSeries: non-finite coefficient");
  }
  return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries f = *this;
  for (auto& a : f.coeffs_) a = -a;
  return f;
}

TruncatedSeries add(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_order(f, g, "add");
  std::vector<complex> out(f.order() + 1);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = f[k] + g[k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries sub(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_order(f, g, "sub");
  std::vector<complex> out(f.order() + 1);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = f[k] - g[k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries mul(const TruncatedSeries& f, const TruncatedSeries& g) {
  require_same_order(f, g, "mul");
  const std::size_t n = f.order();
  std::vector<complex> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    complex acc{};
    for (std::size_t j = 0; j <= k; ++j) acc += f[j] * g[k - j];
    out[k] = acc;
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries exp_series(const TruncatedSeries& f) {
  require_constant_term(f, 0.0, "exp_series");
  const std::size_t n = f.order();
  std::vector<complex> g(n + 1);
  g[0] = 1.0;
  // k g_k = sum_{j=1}^{k} j f_j g_{k-j}
  for (std::size_t k = 1; k <= n; ++k) {
    complex acc{};
    for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * f[j] * g[k - j];
    g[k] = acc / static_cast<double>(k);
  }
  return TruncatedSeries(std::move(g));
}

TruncatedSeries log_series(const TruncatedSeries& f) {
  require_constant_term(f, 1.0, "log_series");
  const std::size_t n = f.order();
  const complex f0 = f[0];
  std::vector<complex> h(n + 1);
  // f h' = f'  =>  k h_k f_0 = k f_k - sum_{j=1}^{k-1} j h_j f_{k-j}
  for (std::size_t k = 1; k <= n; ++k) {
    complex acc = static_cast<double>(k) * f[k];
    for (std::size_t j = 1; j < k; ++j) acc -= static_cast<double>(j) * h[j] * f[k - j];
    h[k] = acc / (static_cast<double>(k) * f0);
  }
  return TruncatedSeries(std::move(h));
}

TruncatedSeries pow_complex(const TruncatedSeries& f, complex w) {
  require_constant_term(f, 1.0, "pow_complex");
  return exp_series(w * log_series(f));
}

TruncatedSeries integrate_kernel(const TruncatedSeries& p) {
  require_constant_term(p, 1.0, "integrate_kernel");
  std::vector<complex> out(p.order() + 1);
  for (std::size_t k = 1; k < out.size(); ++k) out[k] = p[k] / static_cast<double>(k);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries antiderivative(const TruncatedSeries& f) {
  std::vector<complex> out(f.order() + 1);
  for (std::size_t k = 1; k < out.size(); ++k) out[k] = f[k - 1] / static_cast<double>(k);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries derivative(const TruncatedSeries& f) {
  std::vector<complex> out(f.order() + 1);
  for (std::size_t k = 0; k < f.order(); ++k) out[k] = static_cast<double>(k + 1) * f[k + 1];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries shift_up(const TruncatedSeries& f) {
  std::vector<complex> out(f.order() + 1);
  for (std::size_t k = 1; k < out.size(); ++k) out[k] = f[k - 1];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries with_order(const TruncatedSeries& f, std::size_t order) {
  std::vector<complex> out(order + 1);
  for (std::size_t k = 0; k <= order; ++k) out[k] = f[k];
  return TruncatedSeries(std::move(out));
}

complex eval(const TruncatedSeries& f, complex z) noexcept {
  const auto a = f.coeffs();
  complex acc{};
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
  return acc;
}

complex eval_derivative(const TruncatedSeries& f, complex z) noexcept {
  const auto a = f.coeffs();
  complex acc{};
  for (std::size_t k = a.size() - 1; k >= 1; --k) acc = acc * z + static_cast<double>(k) * a[k];
  return acc;
}

complex eval_second_derivative(const TruncatedSeries& f, complex z) noexcept {
  const auto a = f.coeffs();
  complex acc{};
  for (std::size_t k = a.size() - 1; k >= 2; --k) {
    acc = acc * z + static_cast<double>(k * (k - 1)) * a[k];
  }
  return acc;
}

}  // namespace succoef
