#include "unit_interpolation.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>

#include "discstab/roots.hpp"

namespace discstab::detail {

namespace {

using Evaluator = std::function<ComplexVal(ComplexVal)>;

ComplexVal horner(const std::vector<double>& c, ComplexVal z) {
  ComplexVal acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
  return acc;
}

// Newton form through (x_i, y_i).
struct NewtonInterpolant {
  std::vector<ComplexVal> x;
  std::vector<ComplexVal> c;

  NewtonInterpolant(std::vector<ComplexVal> nodes, std::vector<ComplexVal> values)
      : x(std::move(nodes)), c(std::move(values)) {
    const std::size_t n = x.size();
    for (std::size_t k = 1; k < n; ++k) {
      for (std::size_t i = n - 1; i >= k; --i) c[i] = (c[i] - c[i - 1]) / (x[i] - x[i - k]);
    }
  }

  ComplexVal operator()(ComplexVal z) const {
    if (c.empty()) return 0.0;
    ComplexVal acc = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * (z - x[i]) + c[i];
    return acc;
  }

  // Real parts of the monomial coefficients.
  std::vector<double> monomial() const {
    if (c.empty()) return {};
    std::vector<ComplexVal> lc{c.back()};
    for (std::size_t i = c.size() - 1; i-- > 0;) {
      std::vector<ComplexVal> next(lc.size() + 1, 0.0);
      for (std::size_t k = 0; k < lc.size(); ++k) {
        next[k + 1] += lc[k];
        next[k] -= lc[k] * x[i];
      }
      next[0] += c[i];
      lc.swap(next);
    }
    std::vector<double> out(lc.size());
    for (std::size_t k = 0; k < lc.size(); ++k) out[k] = lc[k].real();
    return out;
  }
};

struct Fit {
  std::vector<double> t;
  double residual = 0.0;
};

enum class LogModel { Polynomial, Szego, SzegoExtended };

class TargetFamily {
 public:
  TargetFamily(const RealPoly& a, const RealPoly& b, const RealPoly& pin, int dim, bool absorb_outer_zeros)
      : a_(a.to_double()), b_(b.to_double()), p_(pin.to_double()), dim_(dim) {
    if (absorb_outer_zeros && a.degree() > 0) {
      for (const auto& r : roots(a)) {
        if (std::abs(r.value) <= 1.0 + 1e-6) continue;
        for (int k = 0; k < r.multiplicity; ++k) outer_.push_back(r.value);
      }
    }
    // Upper member of each pair immediately followed by its conjugate.
    for (const auto& r : roots(pin)) {
      if (r.value.imag() < 0) continue;
      nodes_.push_back(r.value);
      if (r.value.imag() > 0) nodes_.push_back(std::conj(r.value));
    }
    choose_signs();
    for (const auto& z : nodes_) {
      ComplexVal w = std::log(static_cast<double>(sigma_) * value(z) / pi_at(z));
      if (z.imag() == 0.0) w = w.real();
      logs_.push_back(w);
    }
    const int samples = std::max(128, 8 * (dim + pin.degree()));
    for (int s = 0; s < samples; ++s) {
      circle_.push_back(std::polar(1.0, 2.0 * std::numbers::pi * (s + 0.5) / samples));
    }
  }

  bool valid() const {
    return !nodes_.empty() && std::all_of(logs_.begin(), logs_.end(), [](ComplexVal w) {
      return std::isfinite(w.real()) && std::isfinite(w.imag());
    });
  }

  int pair_count() const {
    return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(), [](auto z) { return z.imag() > 0; }));
  }

  std::optional<Fit> fit(const std::vector<int>& shifts, LogModel model, int smoothing) const {
    std::vector<ComplexVal> w = logs_;
    std::size_t pair = 0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (nodes_[i].imag() > 0) {
        const ComplexVal jump(0.0, 2.0 * std::numbers::pi * shifts[pair++]);
        w[i] += jump;
        w[i + 1] -= jump;
      }
    }
    std::optional<Evaluator> v;
    switch (model) {
      case LogModel::Polynomial: v = polynomial_log(w, smoothing); break;
      case LogModel::Szego: v = szego_log(w, false); break;
      case LogModel::SzegoExtended: v = szego_log(w, true); break;
    }
    if (!v) return std::nullopt;
    return least_squares(*v);
  }

 private:
  ComplexVal value(ComplexVal z) const { return horner(a_, z) / (horner(b_, z) * outer_at(z)); }

  ComplexVal outer_at(ComplexVal z) const {
    ComplexVal acc = 1.0;
    for (const auto& r : outer_) acc *= 1.0 - z / r;
    return acc;
  }

  ComplexVal pi_at(ComplexVal z) const {
    ComplexVal acc = 1.0;
    for (double rho : flips_) acc *= 1.0 - z / rho;
    return acc;
  }

  static bool interior(ComplexVal z) { return std::abs(z) < 1.0 - 1e-6; }

  void choose_signs() {
    int pos = 0, neg = 0;
    for (const auto& z : nodes_) {
      if (z.imag() != 0.0 || std::abs(z.real()) > 1.0) continue;
      (value(z).real() > 0 ? pos : neg) += 1;
    }
    sigma_ = neg > pos ? -1 : 1;
    for (int side : {1, -1}) {
      std::vector<double> outside;
      for (const auto& z : nodes_) {
        if (z.imag() == 0.0 && side * z.real() > 1.0) outside.push_back(side * z.real());
      }
      std::sort(outside.begin(), outside.end());
      double prev = 1.0;
      int current = 1;
      for (double r : outside) {
        const int need = sigma_ * value(ComplexVal(side * r, 0.0)).real() > 0 ? 1 : -1;
        if (need != current) {
          flips_.push_back(side * 0.5 * (prev + r));
          current = need;
        }
        prev = r;
      }
    }
  }

  // Interpolant through every node; smoothing >= 0 adds P q with deg q =
  // smoothing chosen to keep the interpolant small on the circle.
  std::optional<Evaluator> polynomial_log(const std::vector<ComplexVal>& w, int smoothing) const {
    std::vector<double> l = NewtonInterpolant(nodes_, w).monomial();
    if (smoothing >= 0) {
      const int samples = static_cast<int>(circle_.size());
      const int qd = smoothing + 1;
      Eigen::MatrixXd m(2 * samples, qd);
      Eigen::VectorXd rhs(2 * samples);
      for (int s = 0; s < samples; ++s) {
        const ComplexVal z = circle_[s];
        const ComplexVal pz = horner(p_, z);
        ComplexVal zj = 1.0;
        for (int j = 0; j < qd; ++j) {
          m(2 * s, j) = (zj * pz).real();
          m(2 * s + 1, j) = (zj * pz).imag();
          zj *= z;
        }
        const ComplexVal lz = horner(l, z);
        rhs(2 * s) = -lz.real();
        rhs(2 * s + 1) = -lz.imag();
      }
      Eigen::VectorXd q = m.colPivHouseholderQr().solve(rhs);
      l.resize(std::max(l.size(), p_.size() + qd - 1), 0.0);
      for (int i = 0; i < qd; ++i) {
        for (std::size_t j = 0; j < p_.size(); ++j) l[i + j] += q(i) * p_[j];
      }
    }
    return Evaluator([l](ComplexVal z) { return horner(l, z); });
  }

  // Minimal Hardy-norm interpolant of the interior nodes,
  // V = sum c_j / (1 - z conj(z_j)); optionally extended by
  // prod_in(z) * W(z) with W a polynomial fixing the exterior nodes.
  std::optional<Evaluator> szego_log(const std::vector<ComplexVal>& w, bool extend) const {
    std::vector<ComplexVal> in, in_w, out, out_w;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      (interior(nodes_[i]) ? in : out).push_back(nodes_[i]);
      (interior(nodes_[i]) ? in_w : out_w).push_back(w[i]);
    }
    if (in.empty() || (extend && out.empty())) return std::nullopt;
    const auto k = static_cast<Eigen::Index>(in.size());
    Eigen::MatrixXcd gram(k, k);
    Eigen::VectorXcd rhs(k);
    for (Eigen::Index i = 0; i < k; ++i) {
      rhs(i) = in_w[i];
      for (Eigen::Index j = 0; j < k; ++j) gram(i, j) = 1.0 / (1.0 - in[i] * std::conj(in[j]));
    }
    Eigen::VectorXcd c = gram.colPivHouseholderQr().solve(rhs);
    std::vector<ComplexVal> coef(c.data(), c.data() + k);
    auto base = [in, coef](ComplexVal z) {
      ComplexVal acc = 0.0;
      for (std::size_t j = 0; j < in.size(); ++j) acc += coef[j] / (1.0 - z * std::conj(in[j]));
      return acc;
    };
    if (!extend) return Evaluator(base);
    auto prod_in = [in](ComplexVal z) {
      ComplexVal acc = 1.0;
      for (const auto& x : in) acc *= z - x;
      return acc;
    };
    std::vector<ComplexVal> corr;
    for (std::size_t i = 0; i < out.size(); ++i) corr.push_back((out_w[i] - base(out[i])) / prod_in(out[i]));
    NewtonInterpolant wpoly(out, corr);
    return Evaluator([base, prod_in, wpoly](ComplexVal z) { return base(z) + prod_in(z) * wpoly(z); });
  }

  std::optional<Fit> least_squares(const Evaluator& v) const {
    const int samples = static_cast<int>(circle_.size());
    Eigen::MatrixXd m(2 * samples, dim_);
    Eigen::VectorXd rhs(2 * samples);
    std::vector<ComplexVal> cols(static_cast<std::size_t>(samples) * dim_);
    std::vector<ComplexVal> offsets(samples);
    for (int s = 0; s < samples; ++s) {
      const ComplexVal z = circle_[s];
      const ComplexVal g = static_cast<double>(sigma_) * horner(b_, z) * outer_at(z) * pi_at(z) * std::exp(v(z));
      if (!std::isfinite(std::abs(g)) || std::abs(g) == 0.0) return std::nullopt;
      const ComplexVal base = horner(p_, z) / g;
      ComplexVal zj = 1.0;
      for (int j = 0; j < dim_; ++j) {
        const ComplexVal col = zj * base;
        cols[static_cast<std::size_t>(s) * dim_ + j] = col;
        m(2 * s, j) = col.real();
        m(2 * s + 1, j) = col.imag();
        zj *= z;
      }
      offsets[s] = (horner(a_, z) - g) / g;
      rhs(2 * s) = -offsets[s].real();
      rhs(2 * s + 1) = -offsets[s].imag();
    }
    Eigen::VectorXd t = m.colPivHouseholderQr().solve(rhs);
    Fit out;
    out.t.assign(t.data(), t.data() + dim_);
    if (!std::all_of(out.t.begin(), out.t.end(), [](double x) { return std::isfinite(x); })) return std::nullopt;
    for (int s = 0; s < samples; ++s) {
      ComplexVal r = offsets[s];
      for (int j = 0; j < dim_; ++j) r += cols[static_cast<std::size_t>(s) * dim_ + j] * out.t[j];
      out.residual = std::max(out.residual, std::abs(r));
    }
    return out;
  }

  std::vector<double> a_, b_, p_;
  int dim_;
  int sigma_ = 1;
  std::vector<double> flips_;
  std::vector<ComplexVal> outer_;
  std::vector<ComplexVal> nodes_;
  std::vector<ComplexVal> logs_;
  std::vector<ComplexVal> circle_;
};

std::vector<std::vector<int>> branch_choices(int pairs) {
  std::vector<std::vector<int>> out;
  if (pairs > 5) {
    for (int s : {0, 1, -1}) out.emplace_back(pairs, s);
    return out;
  }
  int total = 1;
  for (int i = 0; i < pairs; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    std::vector<int> sh(pairs);
    int c = code;
    for (int i = 0; i < pairs; ++i, c /= 3) sh[i] = (c % 3 == 2) ? -1 : c % 3;
    out.push_back(std::move(sh));
  }
  return out;
}

}  // namespace

std::vector<std::vector<double>> unit_interpolation_starts(const RealPoly& a, const RealPoly& b, const RealPoly& pin,
                                                           int dim, std::size_t keep) {
  std::vector<Fit> fits;
  for (bool absorb : {false, true}) {
    TargetFamily family(a, b, pin, dim, absorb);
    if (!family.valid()) continue;
    for (const auto& shifts : branch_choices(family.pair_count())) {
      for (int smoothing : {-1, 0, 2, 4}) {
        if (auto f = family.fit(shifts, LogModel::Polynomial, smoothing)) fits.push_back(std::move(*f));
      }
      for (LogModel model : {LogModel::Szego, LogModel::SzegoExtended}) {
        if (auto f = family.fit(shifts, model, 0)) fits.push_back(std::move(*f));
      }
    }
  }
  std::stable_sort(fits.begin(), fits.end(), [](const Fit& x, const Fit& y) { return x.residual < y.residual; });
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i < fits.size() && out.size() < keep; ++i) out.push_back(std::move(fits[i].t));
  return out;
}

}  // namespace discstab::detail
