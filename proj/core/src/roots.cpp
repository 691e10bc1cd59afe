#include "discstab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "discstab/errors.hpp"

namespace discstab {

namespace {

template <typename T>
using Cx = std::complex<T>;

// p'(z)/p(z) together with |p(z)|, switching to the reversed polynomial
// outside the unit disc so large roots do not overflow.
template <typename T>
struct NewtonRatio {
  Cx<T> ratio;  // p / p'
  bool exact_zero = false;
  T residual = 0;
  T residual_bound = 0;
};

template <typename T>
NewtonRatio<T> newton_ratio(std::span<const T> a, Cx<T> z) {
  const std::size_t n = a.size() - 1;
  NewtonRatio<T> out;
  if (std::abs(z) <= T(1)) {
    Cx<T> p = a[n], dp = 0;
    T scale = std::abs(a[n]);
    const T mz = std::abs(z);
    for (std::size_t k = n; k-- > 0;) {
      dp = dp * z + p;
      p = p * z + a[k];
      scale = scale * mz + std::abs(a[k]);
    }
    out.residual = std::abs(p);
    out.residual_bound = scale;
    if (p == Cx<T>(0)) {
      out.exact_zero = true;
      return out;
    }
    out.ratio = p / dp;
    return out;
  }
  const Cx<T> w = T(1) / z;
  Cx<T> q = a[0], dq = 0;
  T scale = std::abs(a[0]);
  const T mw = std::abs(w);
  for (std::size_t k = 1; k <= n; ++k) {
    dq = dq * w + q;
    q = q * w + a[k];
    scale = scale * mw + std::abs(a[k]);
  }
  out.residual = std::abs(q);
  out.residual_bound = scale;
  if (q == Cx<T>(0)) {
    out.exact_zero = true;
    return out;
  }
  // p'/p = w (n - w q'/q)
  const Cx<T> log_deriv = w * (static_cast<T>(n) - w * dq / q);
  out.ratio = T(1) / log_deriv;
  return out;
}

template <typename T>
void initial_ring(std::span<const T> a, std::vector<Cx<T>>& z) {
  const std::size_t n = a.size() - 1;
  T radius = std::pow(std::abs(a[0] / a[n]), T(1) / static_cast<T>(n));
  if (!(radius > 0) || !std::isfinite(static_cast<double>(radius))) radius = 1;
  z.resize(n);
  const T pi = std::numbers::pi_v<T>;
  for (std::size_t k = 0; k < n; ++k) {
    // Offset angle: an exactly conjugate-symmetric start cannot split into
    // distinct real roots.
    const T theta = T(2) * pi * static_cast<T>(k) / static_cast<T>(n) + T(0.4);
    z[k] = std::polar(radius, theta);
  }
}

// Jacobi-style sweep: all corrections come from the same iterate.
template <typename T>
bool aberth_impl(std::span<const T> a, std::vector<Cx<T>>& z, int max_iterations, T rel_tol) {
  const std::size_t n = a.size() - 1;
  std::vector<bool> done(n, false);
  std::vector<Cx<T>> next(n);
  for (int it = 0; it < max_iterations; ++it) {
    bool all_done = true;
    for (std::size_t k = 0; k < n; ++k) {
      next[k] = z[k];
      if (done[k]) continue;
      auto nr = newton_ratio<T>(a, z[k]);
      if (nr.exact_zero) {
        done[k] = true;
        continue;
      }
      Cx<T> sum = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) sum += T(1) / (z[k] - z[j]);
      }
      const Cx<T> w = nr.ratio;
      const Cx<T> step = w / (T(1) - w * sum);
      next[k] = z[k] - step;
      const T scale = std::max(std::abs(z[k]), std::numeric_limits<T>::min() * T(1e10));
      if (std::abs(step) <= rel_tol * scale ||
          nr.residual <= T(4) * static_cast<T>(n) * std::numeric_limits<T>::epsilon() * nr.residual_bound) {
        done[k] = true;
      } else {
        all_done = false;
      }
    }
    z.swap(next);
    if (all_done) return true;
  }
  return std::all_of(done.begin(), done.end(), [](bool b) { return b; });
}

void pair_conjugates(std::vector<ComplexVal>& z) {
  const std::size_t n = z.size();
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) continue;
    const ComplexVal target = std::conj(z[i]);
    std::size_t best = n;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || used[j]) continue;
      const double d = std::abs(z[j] - target);
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    used[i] = true;
    if (best == n || 2.0 * std::abs(z[i].imag()) <= best_dist) {
      z[i] = {z[i].real(), 0.0};
      continue;
    }
    used[best] = true;
    ComplexVal upper = z[i].imag() >= 0 ? z[i] : z[best];
    ComplexVal lower = z[i].imag() >= 0 ? z[best] : z[i];
    ComplexVal avg = 0.5 * (upper + std::conj(lower));
    z[i] = avg;
    z[best] = std::conj(avg);
  }
}

// Inclusion radius n |q(r)| / |a_n prod (r - r_j)| with a rounding allowance.
std::vector<double> inclusion_radii(const RealPoly& q, const std::vector<ComplexVal>& z) {
  const std::size_t n = z.size();
  std::vector<double> radii(n, 0.0);
  const auto coeffs = q.to_double();
  const double lead = std::abs(coeffs.back());
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t i = 0; i < n; ++i) {
    const auto val = q.eval_long({z[i].real(), z[i].imag()});
    double scale = 0.0;
    const double m = std::abs(z[i]);
    for (std::size_t k = coeffs.size(); k-- > 0;) scale = scale * m + std::abs(coeffs[k]);
    const double residual = static_cast<double>(std::abs(val)) + (2.0 * static_cast<double>(n) + 4.0) * eps * scale;
    long double denom = lead;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) denom *= std::abs(std::complex<long double>(z[i].real() - z[j].real(), z[i].imag() - z[j].imag()));
    }
    radii[i] = denom > 0 ? static_cast<double>(static_cast<long double>(n) * residual / denom)
                         : std::numeric_limits<double>::infinity();
  }
  return radii;
}

std::vector<ComplexVal> simple_roots(const RealPoly& q, double tol) {
  const int n = q.degree();
  if (n == 1) return {ComplexVal(-Rational(q.coeff(0) / q.coeff(1)).get_d(), 0.0)};
  if (n == 2) {
    // Closed form with the numerically stable branch.
    const double a = q.coeff(2).get_d(), b = q.coeff(1).get_d(), c = q.coeff(0).get_d();
    const double disc = b * b - 4 * a * c;
    if (disc >= 0) {
      const double s = std::sqrt(disc);
      const double t = -0.5 * (b + (b >= 0 ? s : -s));
      if (t == 0) return {ComplexVal(0, 0), ComplexVal(0, 0)};
      return {ComplexVal(t / a, 0), ComplexVal(c / t, 0)};
    }
    const double re = -b / (2 * a), im = std::sqrt(-disc) / (2 * std::abs(a));
    return {ComplexVal(re, im), ComplexVal(re, -im)};
  }
  std::vector<long double> a;
  for (const auto& c : q.coeffs()) a.push_back(static_cast<long double>(c.get_d()));
  // Scale so the leading coefficient is one.
  const long double lead = a.back();
  for (auto& c : a) c /= lead;
  std::vector<Cx<long double>> z;
  initial_ring<long double>(a, z);
  const bool ok = aberth_impl<long double>(a, z, 600, 1e-17L);
  std::vector<ComplexVal> out;
  out.reserve(z.size());
  for (const auto& r : z) out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
  if (!ok) {
    const double bound = tol * (1.0 + q.abs_coeff_sum());
    for (const auto& r : out) {
      if (std::abs(q(r)) > bound) {
        throw Error(ErrorKind::NoConvergence, "Aberth iteration did not converge");
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Root> roots(const RealPoly& p, double tol) {
  if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "roots of the zero polynomial");
  if (p.degree() > kMaxRootDegree) {
    throw Error(ErrorKind::InvalidArgument, "degree exceeds the root finder cap of 64");
  }
  std::vector<Root> out;
  for (const auto& [factor, mult] : squarefree_factors(p)) {
    auto z = simple_roots(factor, tol);
    pair_conjugates(z);
    const auto radii = inclusion_radii(factor, z);
    for (std::size_t i = 0; i < z.size(); ++i) out.push_back({z[i], mult, radii[i]});
  }
  std::sort(out.begin(), out.end(), [](const Root& x, const Root& y) {
    const double mx = std::abs(x.value), my = std::abs(y.value);
    if (mx != my) return mx < my;
    return std::arg(x.value) < std::arg(y.value);
  });
  return out;
}

bool aberth(std::span<const double> coeffs, std::vector<ComplexVal>& estimates, int max_iterations) {
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == 0.0) --n;
  if (n <= 1) {
    estimates.clear();
    return true;
  }
  std::span<const double> a = coeffs.first(n);
  if (estimates.size() != n - 1) initial_ring<double>(a, estimates);
  return aberth_impl<double>(a, estimates, max_iterations, 1e-14);
}

}  // namespace discstab
